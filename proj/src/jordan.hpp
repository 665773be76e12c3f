#pragma once

#include <memory>
#include <string>

#include "composition.hpp"

namespace albert {

class JordanAlgebra;

// An element of J(B): the Hermitian matrix
//   [[a, z, conj(y)], [conj(z), b, x], [y, conj(x), c]]
// with scalar diagonal and entries x, y, z in the coefficient algebra B.
struct JordanElement {
    Scalar a, b, c;
    CompositionElement x, y, z;

    const CompositionAlgebra& coeff() const { return x.algebra(); }
    const Field& field() const { return a.field(); }
    bool is_zero() const;

    JordanElement operator+(const JordanElement& o) const;
    JordanElement operator-(const JordanElement& o) const;
    JordanElement scaled(const Scalar& s) const;
    bool operator==(const JordanElement& o) const;
    bool operator!=(const JordanElement& o) const { return !(*this == o); }
};

struct CubicData {
    Scalar det;
    Scalar tr;
    Scalar sigma;
    JordanElement sharp;
};

class JordanAlgebra {
public:
    explicit JordanAlgebra(CompositionAlgebra coeff);

    const CompositionAlgebra& coeff() const { return coeff_; }
    const Field& field() const { return coeff_.field(); }
    int dim() const { return 3 + 3 * coeff_.dim(); }

    JordanElement zero() const;
    JordanElement identity() const;
    JordanElement diagonal(const Scalar& a, const Scalar& b, const Scalar& c) const;
    JordanElement element(Scalar a, Scalar b, Scalar c, CompositionElement x, CompositionElement y,
                          CompositionElement z) const;

    // Coordinates are serialized as [a, b, c, coords(x), coords(y), coords(z)].
    JordanElement from_vec(const Vec& v) const;
    Vec to_vec(const JordanElement& e) const;
    JordanElement basis_element(int i) const;

    bool operator==(const JordanAlgebra& o) const { return coeff_ == o.coeff_; }

private:
    CompositionAlgebra coeff_;
};

// alpha o beta = (alpha beta + beta alpha)/2, computed through the matrix product.
JordanElement jordan_multiply(const JordanElement& alpha, const JordanElement& beta);

// det, tr, sigma = tr(sharp), and the adjoint sharp, all from the cubic norm.
CubicData cubic_data(const JordanElement& alpha);

// 0 iff alpha = 0; 1 iff alpha != 0 and sharp = 0; 2 iff sharp != 0 and det = 0;
// 3 iff det != 0.
int rank(const JordanElement& alpha);

// The six displayed rank-1 conditions N(x)=bc, N(y)=ca, N(z)=ab,
// xy = c conj(z), yz = a conj(x), zx = b conj(y), together with alpha != 0.
bool rank1_paper_predicate(const JordanElement& alpha);

// T(alpha, beta) = sum of diagonal products plus the trace pairings of x, y, z.
Scalar jordan_trace_form(const JordanElement& alpha, const JordanElement& beta);

// Freudenthal cross product: (alpha + beta)# - alpha# - beta#.
JordanElement jordan_cross(const JordanElement& alpha, const JordanElement& beta);

// Left Jordan multiplication L_alpha as a dim x dim matrix on serialized coords.
ExactMatrix multiplication_operator(const JordanAlgebra& J, const JordanElement& alpha);

// Entrywise lift J(B0) -> J(B1) along a designated composition-algebra step.
JordanElement jordan_embed(const JordanElement& alpha, const JordanAlgebra& target);

// ---------------------------------------------------------------------------
// Cubic norm structures: the uniform (N, T, #, x) package carried by every
// member of the chain  k  ⊂  E = k^3  ⊂  J(k) ⊂ J(K) ⊂ J(D) ⊂ J(O).
// Elements are plain coordinate vectors.

enum class CubicKind { Base, Diagonal, Jordan };

class CubicNormStructure {
public:
    virtual ~CubicNormStructure() = default;

    virtual CubicKind kind() const = 0;
    virtual const Field& field() const = 0;
    virtual int dim() const = 0;
    virtual std::string name() const = 0;
    virtual Vec basepoint() const = 0;
    virtual Scalar norm_form(const Vec& v) const = 0;
    virtual Scalar trace_form(const Vec& u, const Vec& v) const = 0;
    virtual Vec sharp(const Vec& v) const = 0;

    // (u + v)# - u# - v#
    Vec cross(const Vec& u, const Vec& v) const;
    // For Jordan instances, the wrapped algebra; null otherwise.
    virtual const JordanAlgebra* jordan() const { return nullptr; }
};

std::unique_ptr<CubicNormStructure> cubic_structure_base(const Field& f);
std::unique_ptr<CubicNormStructure> cubic_structure_diagonal(const Field& f);
std::unique_ptr<CubicNormStructure> cubic_structure_jordan(const CompositionAlgebra& B);

// The designated six-member chain over f, in order.
std::vector<std::unique_ptr<CubicNormStructure>> cubic_chain(const Field& f);

// Inclusion of a chain member into the next one; src and dst must be adjacent.
Vec embed_chain(const CubicNormStructure& src, const CubicNormStructure& dst, const Vec& v);

}  // namespace albert
