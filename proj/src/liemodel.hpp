#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "matrix.hpp"

namespace albert {

// A finite-dimensional Lie algebra presented by sparse structure constants on
// a labeled basis, together with a designated Cartan subalgebra. Brackets are
// stored for index pairs i < j only; antisymmetry is implied by the storage.
struct BasisLabel {
    std::string tag;    // one of sl3 / m / short:<slot>:<index> / coshort:<slot>:<index>,
                        // or free-form for imported models
    std::string label;  // human-readable name
};

class LieModel {
public:
    LieModel(const Field& f, std::vector<BasisLabel> basis_labels, std::vector<int> cartan);

    const Field& field() const { return *fld_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    const std::vector<int>& cartan() const { return cartan_; }

    // accumulate c into the structure constant [b_i, b_j] -> b_k (i != j; the
    // pair is folded to i < j with the sign of the swap)
    void add_structure_constant(int i, int j, int k, const Scalar& c);
    const SparseRow& pair_row(int i, int j) const;  // requires i < j

    // [u, v] for dense coordinate vectors
    Vec bracket(const Vec& u, const Vec& v) const;
    // ad(u) as a dim x dim matrix
    ExactMatrix ad(const Vec& u) const;
    ExactMatrix killing_form() const;

    // named normalization constants recorded by the construction
    std::map<std::string, Scalar> constants;

    void strip_zero_entries();

private:
    const Field* fld_;
    std::vector<BasisLabel> basis_;
    std::vector<int> cartan_;
    std::vector<SparseRow> rows_;  // triangular, pair (i, j) with i < j
    size_t pair_index(int i, int j) const;
};

struct JacobiReport {
    bool ok;
    long triples_checked;
    std::array<int, 3> witness;  // first violating (i, j, k) when !ok
};

// Exhaustive Jacobi check over all basis triples i < j < k.
JacobiReport jacobi_verify(const LieModel& L);

struct WeightSpace {
    Vec weight;                  // value of each torus element, in torus order
    std::vector<Vec> vectors;    // basis of the weight space (model coordinates)
};

struct WeightDecomposition {
    std::vector<WeightSpace> spaces;  // includes the zero-weight space
    int zero_index;                   // position of the zero weight in spaces
};

// Simultaneous eigenspace decomposition of ad over the given subset of the
// designated Cartan (basis indices). Throws if some element does not act
// diagonalizably over the field.
WeightDecomposition weight_decomposition(const LieModel& L, const std::vector<int>& torus);

struct GradedDecomposition {
    std::vector<long> degrees;         // sorted
    std::vector<std::vector<Vec>> pieces;
};

// Eigenspace grading by ad(h); requires an integer spectrum, and checks
// [s[i], s[j]] <= s[i+j]. h is a dense coordinate vector.
GradedDecomposition grade_by_cocharacter(const LieModel& L, const Vec& h);

struct SiegelGrading {
    Vec h;            // coordinate vector of the grading element
    int dim_plus;     // dimension of the +1 piece
    bool abelian;     // [s[1], s[1]] = 0
};

// All Cartan elements (up to sign and exact duplicates) whose root values all
// lie in {-1, 0, 1}, with the +1 piece checked for abelianness. Empty result
// when no such grading exists.
std::vector<SiegelGrading> find_siegel_grading(const LieModel& L);

// Bracket closure of the generators and its centralizer in L; both returned
// as lists of coordinate vectors.
struct SubalgebraPair {
    std::vector<Vec> closure;
    std::vector<Vec> centralizer;
};
SubalgebraPair subalgebra_generated_and_commutant(const LieModel& L,
                                                  const std::vector<Vec>& generators);

// JSON export/import; the document owns every structure constant as a string
// scalar. Import validates shape, index ranges and duplicate entries.
std::string export_model(const LieModel& L);
LieModel import_model(const std::string& json_text);

// The same model with every constant reduced mod p; throws std::domain_error
// when p divides a denominator.
LieModel reduce_model(const LieModel& L, long p);

}  // namespace albert
