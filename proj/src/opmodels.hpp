#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dualpair.hpp"
#include "gf.hpp"
#include "jordan.hpp"
#include "liemodel.hpp"

namespace albert {

// An explicit finite domain over a prime field. Points are stored as residue
// keys; point(i) materializes the scalar vector on demand.
class FiniteFunctionSpace {
public:
    FiniteFunctionSpace(const Field& f, std::vector<std::vector<long>> keys);

    const Field& field() const { return *fld_; }
    long size() const { return static_cast<long>(keys_.size()); }
    const std::vector<long>& key(long i) const { return keys_[static_cast<size_t>(i)]; }
    Vec point(long i) const;
    long index_of(const std::vector<long>& key) const;  // -1 when absent

private:
    const Field* fld_;
    std::vector<std::vector<long>> keys_;
    mutable std::map<std::vector<long>, long> index_;  // built on first lookup
};

// A partial operator (op f)(pt) = multiplier(pt) * f(map(pt)) on functions on
// a FiniteFunctionSpace, stored extensionally. Every multiplier in this module
// is a p-th root of unity, so multipliers are kept as exponents of zeta_p and
// materialized into cyclotomic integers on demand. Composition is
// (A * B) f = A (B f): defined where A is defined and A's point map lands in
// B's locus; multipliers multiply along the point map.
class ModelOperator {
public:
    static ModelOperator identity(const FiniteFunctionSpace& space, long p,
                                  const std::string& name = "id");
    // Assemble from a locus predicate, point map and phase (the exponent e of
    // the multiplier zeta_p^e, as a scalar of the prime field). The point map
    // must send the locus into the space.
    static ModelOperator from_action(const FiniteFunctionSpace& space, long p, std::string name,
                                     const std::function<bool(const Vec&)>& locus,
                                     const std::function<Vec(const Vec&)>& point_map,
                                     const std::function<Scalar(const Vec&)>& phase);
    // assembled form: per-point locus flag, target index and phase exponent
    static ModelOperator from_table(const FiniteFunctionSpace& space, long p, std::string name,
                                    std::vector<char> defined, std::vector<long> target,
                                    std::vector<long> exp);

    const FiniteFunctionSpace& space() const { return *space_; }
    const std::string& name() const { return name_; }
    long prime() const { return p_; }

    bool defined_at(long i) const { return defined_[static_cast<size_t>(i)] != 0; }
    long target(long i) const { return target_[static_cast<size_t>(i)]; }
    long phase_exponent(long i) const { return exp_[static_cast<size_t>(i)]; }
    CyclotomicInt multiplier(long i) const;
    long locus_size() const;

    ModelOperator operator*(const ModelOperator& o) const;

    // first point of the common locus where the actions differ
    std::optional<long> first_difference(const ModelOperator& o) const;
    bool same_locus(const ModelOperator& o) const { return defined_ == o.defined_; }
    bool operator==(const ModelOperator& o) const;
    bool operator!=(const ModelOperator& o) const { return !(*this == o); }

    // value table of (op f); slots outside the locus are set to 0
    std::vector<CyclotomicInt> apply(const std::vector<CyclotomicInt>& values) const;

private:
    ModelOperator(const FiniteFunctionSpace& space, long p, std::string name);
    const FiniteFunctionSpace* space_;
    long p_;
    std::string name_;
    std::vector<char> defined_;
    std::vector<long> target_;
    std::vector<long> exp_;
};

// The oscillator action of the Siegel parabolic of Sp(V (x) W) times the
// isometry group of V, realized on functions on Hom_D(E, V) for a polarized
// partner space W = E + F: n(X) acts by the moment-map phase, m(A) by
// right translation, and the isometries of V by inverse left translation
// (modulus normalizations are 1 over a finite field).
class ClassicalSchrodingerModel {
public:
    ClassicalSchrodingerModel(const HermitianSpace& V, const HermitianSpace& W,
                              const Polarization& pol, const AdditiveCharacter& psi,
                              long max_points = 1000000);

    const FiniteFunctionSpace& space() const { return *space_; }
    const SiegelData& siegel() const { return siegel_; }
    const HermitianSpace& target_space() const { return V_; }
    long q() const { return p_; }

    ModelOperator n_operator(const DMatrix& X) const;  // X in the unipotent radical
    ModelOperator m_operator(const DMatrix& A) const;  // A invertible in End(E)
    ModelOperator g_operator(const DMatrix& g) const;  // g an isometry of V

    DMatrix point_map(long i) const;  // the i-th domain point as a D-matrix
    DMatrix moment_of(long i) const;

private:
    HermitianSpace V_;
    SiegelData siegel_;
    AdditiveCharacter psi_;
    long p_;
    std::unique_ptr<FiniteFunctionSpace> space_;
};

// The mixed model of the minimal representation, realized on functions on
// k^x + R + k with coordinates (t, x, a): the Weyl reflection w_beta, the
// one-parameter family u_{-beta}(b), and the characters u_{beta0}(z),
// u_{beta0-beta}(y) of the rest of the unipotent radical. w_beta and
// u_{-beta} are partial: w_beta needs a != 0, u_{-beta}(b) needs ab != t^2.
class MixedMinrepModel {
public:
    MixedMinrepModel(const CubicNormStructure& R, const AdditiveCharacter& psi,
                     long max_points = 1000000);

    const FiniteFunctionSpace& space() const { return *space_; }
    long q() const { return p_; }
    int r_dim() const { return r_dim_; }

    ModelOperator weyl_operator() const;
    // same multiplier but with the sign of the third slot of the point map
    // flipped; breaks the order-4 law, kept for the mutation checks
    ModelOperator weyl_operator_corrupted() const;
    ModelOperator u_minus_beta(const Scalar& b) const;
    ModelOperator center_character(const Scalar& z) const;  // u_{beta0}(z)
    ModelOperator corner_character(const Scalar& y) const;  // u_{beta0-beta}(y)
    ModelOperator negate_t() const;  // reference point map (t,x,a) -> (-t,x,a)

    const Scalar& norm_at(long x_code) const { return norms_[static_cast<size_t>(x_code)]; }

private:
    ModelOperator weyl_impl(bool corrupted, const std::string& name) const;
    long index_of(long t_idx, long x_code, long a_idx) const;
    long p_;
    int r_dim_;
    AdditiveCharacter psi_;
    std::vector<Scalar> norms_;  // indexed by x_code
    std::unique_ptr<FiniteFunctionSpace> space_;
};

// The Schrodinger model of the minimal representation for the dim-9 member of
// the uniform family: the abelian unipotent radical acts on functions on the
// minimal cone Omega inside the opposite graded piece by the characters
// psi(kappa(a, chi)), and Levi one-parameter elements exp(c ad N) act
// geometrically. The cone is held as a predicate (it has ~q^11 points), with
// membership decided by the rank profile of ad: rank(ad chi)^2 drops to 1
// exactly on the nonzero cone points.
class E6SchrodingerModel {
public:
    explicit E6SchrodingerModel(long p);

    const LieModel& model() const { return *model_; }
    long q() const { return p_; }
    const Vec& grading_element() const { return h_; }
    const std::vector<Vec>& radical_basis() const { return radical_; }  // degree +1
    const std::vector<Vec>& spinor_basis() const { return spinor_; }    // degree -1
    const std::vector<Vec>& levi_root_vectors() const { return levi_nilp_; }

    bool in_domain(const Vec& chi) const;  // chi in Omega \ {0}
    Vec base_point() const;                // one cone point (a root vector)

    Scalar pairing(const Vec& u, const Vec& chi) const;
    CyclotomicInt character_value(const Vec& u, const Vec& chi) const;

    // exp(c ad n); requires ad n nilpotent of degree < p
    ExactMatrix levi_exponential(const Vec& n, const Scalar& c) const;

private:
    long p_;
    std::unique_ptr<LieModel> model_;
    AdditiveCharacter psi_;
    Vec h_;
    std::vector<Vec> radical_, spinor_, levi_nilp_, base_candidates_;
    ExactMatrix killing_;
    BasisSolver spinor_span_;
};

ClassicalSchrodingerModel build_classical_schrodinger(const HermitianSpace& V,
                                                      const HermitianSpace& W,
                                                      const Polarization& pol,
                                                      const AdditiveCharacter& psi);
MixedMinrepModel build_minrep_mixed(const CubicNormStructure& R, const AdditiveCharacter& psi);
E6SchrodingerModel build_minrep_schrodinger_e6(long q);

struct OperatorCheck {
    std::string name;
    bool ok = false;
    std::string witness;  // empty on pass
};

struct OperatorRelationReport {
    std::string suite;
    long q = 0;
    std::vector<OperatorCheck> checks;
    bool all_ok() const;
};

struct OperatorSuiteDescriptor {
    std::string suite;        // "classical" | "mixed" | "e6-schrodinger"
    long q = 5;
    std::string cubic = "E";  // mixed-model coefficient structure: k, E, J(k), J(K)
    bool corrupt_weyl = false;
    uint64_t seed = 1;
    int samples = 20;
    long max_points = 1000000;
};

// Runs the identity list of the selected model family and reports one
// pass/fail entry per identity, with a witness point on failure.
OperatorRelationReport verify_operator_relations(const OperatorSuiteDescriptor& d);

}  // namespace albert
