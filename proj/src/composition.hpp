#pragma once

#include <iosfwd>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace albert {

// Composition algebras over an exact field: the base field itself, a quadratic
// algebra k[u]/(u^2 - d), a quaternion algebra with symbol (a,b), and the split
// octonions in Zorn's vector-matrix model.
//
// Octonion coordinates are laid out as (a, v1, v2, v3, v1', v2', v3', b): the
// Zorn matrix [[a, v], [v', b]] with v a vector and v' a covector.

enum class CompKind { Base, Quadratic, Quaternion, SplitOctonion };

class CompositionElement;

class CompositionAlgebra {
public:
    static CompositionAlgebra base(const Field& f);
    static CompositionAlgebra quadratic(const Field& f, const Scalar& d);
    static CompositionAlgebra quaternion(const Field& f, const Scalar& a, const Scalar& b);
    static CompositionAlgebra split_octonions(const Field& f);

    CompKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const Field& field() const { return *fld_; }
    // Symbol parameters: d for quadratic, (a,b) for quaternion.
    const Scalar& param_a() const { return params_.at(0); }
    const Scalar& param_b() const { return params_.at(1); }

    bool operator==(const CompositionAlgebra& o) const;
    bool operator!=(const CompositionAlgebra& o) const { return !(*this == o); }

    CompositionElement zero() const;
    CompositionElement one() const;
    CompositionElement element(Vec coords) const;
    CompositionElement basis_element(int i) const;
    CompositionElement scalar_multiple_of_one(const Scalar& c) const;

private:
    CompositionAlgebra(CompKind k, const Field& f, std::vector<Scalar> params);

    CompKind kind_;
    int dim_;
    const Field* fld_;
    std::vector<Scalar> params_;
};

class CompositionElement {
public:
    const CompositionAlgebra& algebra() const { return alg_; }
    const Vec& coords() const { return c_; }
    const Scalar& coord(int i) const { return c_.at(i); }
    bool is_zero() const { return vec_is_zero(c_); }

    CompositionElement operator+(const CompositionElement& o) const;
    CompositionElement operator-(const CompositionElement& o) const;
    CompositionElement operator-() const;
    CompositionElement scaled(const Scalar& c) const;
    bool operator==(const CompositionElement& o) const;
    bool operator!=(const CompositionElement& o) const { return !(*this == o); }

private:
    friend class CompositionAlgebra;
    CompositionElement(const CompositionAlgebra& alg, Vec c) : alg_(alg), c_(std::move(c)) {}

    CompositionAlgebra alg_;
    Vec c_;
};

struct InvolutionData {
    CompositionElement conjugate;
    Scalar trace;
    Scalar norm;
};

CompositionElement multiply(const CompositionElement& x, const CompositionElement& y);
InvolutionData involution_data(const CompositionElement& x);
CompositionElement conjugate(const CompositionElement& x);
Scalar trace(const CompositionElement& x);
Scalar norm(const CompositionElement& x);
// Bilinear pairing <u, v> = Tr(u * conj(v)).
Scalar trace_pairing(const CompositionElement& u, const CompositionElement& v);

// x^{-1} = conj(x)/N(x); throws std::domain_error when N(x) = 0.
CompositionElement invert(const CompositionElement& x);

// 0 for the zero element; 1 for nonzero multiples of the unit and for
// non-central x whose discriminant Tr(x)^2 - 4 N(x) vanishes; 2 otherwise.
int element_rank(const CompositionElement& x);

// The cone of nonzero trace-zero rank-1 elements: x != 0, Tr(x) = 0, N(x) = 0.
bool in_rank1_trace0_cone(const CompositionElement& x);

// Step embedding along the split chain base -> quadratic(1) -> quaternion(1,1)
// -> split octonions; throws when x does not sit in the designated predecessor.
CompositionElement embed_next(const CompositionElement& x, const CompositionAlgebra& target);

// Structure constants of the split octonions on the Zorn basis, as integers:
// table[i][j][k] is the e_k-coefficient of e_i * e_j (all values in {-1,0,1}).
const std::vector<std::vector<std::vector<int>>>& octonion_structure_constants();

std::ostream& operator<<(std::ostream& os, const CompositionElement& x);

}  // namespace albert
