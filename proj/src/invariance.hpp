#pragma once

#include <functional>
#include <optional>

#include "jordan.hpp"

namespace albert {

// A Lie algebra of operators given by an explicit basis of flattened vectors,
// carrying its bracket and a closure witness: the structure constants of the
// commutator restricted to the basis, verified exactly on construction.
class LinearSubalgebra {
public:
    using BracketFn = std::function<Vec(const Vec&, const Vec&)>;

    LinearSubalgebra(const Field& f, int ambient_dim, BracketFn bracket,
                     std::vector<Vec> basis_vectors);

    const Field& field() const { return *fld_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    Vec bracket(const Vec& u, const Vec& v) const { return bracket_(u, v); }

    bool contains(const Vec& v) const { return solver_.contains(v); }
    std::optional<Vec> coordinates(const Vec& v) const { return solver_.coordinates(v); }
    // coordinates of [basis_i, basis_j] in this basis (the closure witness)
    const Vec& structure_coords(int i, int j) const;

    // ad of an element given in basis coordinates, as a dim x dim matrix
    ExactMatrix ad_matrix(const Vec& coords) const;
    // Killing form Tr(ad X ad Y) on the basis
    ExactMatrix killing_form() const;
    // basis of the center, in basis coordinates
    std::vector<Vec> center_coords() const;
    // spanned-subspace helper: new subalgebra from coordinate vectors (must be
    // closed; verified)
    LinearSubalgebra subalgebra_from_coords(const std::vector<Vec>& coord_vectors) const;
    Vec from_coords(const Vec& coords) const;

private:
    const Field* fld_;
    int ambient_;
    BracketFn bracket_;
    std::vector<Vec> basis_;
    BasisSolver solver_;
    std::vector<Vec> witness_;  // row-major over pairs i < j
};

// bracket for flattened n x n matrices: AB - BA
LinearSubalgebra::BracketFn matrix_commutator_bracket(const Field& f, int n);

// product table of an n-dimensional algebra: table[i][j] = coords of e_i e_j
using ProductTable = std::vector<std::vector<Vec>>;

ProductTable product_table(const CompositionAlgebra& A);
ProductTable product_table(const JordanAlgebra& J);

// All operators phi with phi(uv) = phi(u) v + u phi(v), as n x n matrices.
LinearSubalgebra derivation_algebra(const Field& f, const ProductTable& table);

// m_R: operators phi with T(phi(alpha), alpha#) = 0 identically, imposed by
// matching coefficients of the cubic polynomial identity.
LinearSubalgebra norm_preserving_algebra(const CubicNormStructure& R);

// reshape the basis of g (flattened n x n matrices) into action matrices
std::vector<ExactMatrix> natural_action(const LinearSubalgebra& g, int module_dim);

// {X in g : X p = 0 for every p in points}
LinearSubalgebra stabilizer_subalgebra(const LinearSubalgebra& g,
                                       const std::vector<ExactMatrix>& action,
                                       const std::vector<Vec>& points);

// {X in g : [X, Y] = 0 for every basis Y of h}; h must lie inside g
LinearSubalgebra centralizer_subalgebra(const LinearSubalgebra& g, const LinearSubalgebra& h);

struct LineStabilizerResult {
    LinearSubalgebra q;              // {X : X x in k x}
    std::vector<int> filtration_dims;  // dims of u >= [u,u] >= [u,[u,u]] >= ...;
                                       // empty when the nilradical u vanishes
    Vec grading_element;             // coords in the basis of g; zero when u = 0
    std::vector<long> spectrum;      // distinct ad-eigenvalues of the grading
                                     // element on q: nonnegative integers
};

// q = {X : X x in k x} together with an integral grading element found inside
// the Levi of q (the joint line stabilizer with an opposite point), grading the
// nilradical filtration. Throws std::runtime_error when no candidate opposite
// point yields an integral grading.
LineStabilizerResult line_stabilizer_with_filtration(const LinearSubalgebra& g,
                                                     const std::vector<ExactMatrix>& action,
                                                     const Vec& x,
                                                     const std::vector<Vec>& opposite_candidates);

// Triples (A, B, C) with Tr((Ax y) z) + Tr((x By) z) + Tr((x y) Cz) = 0 for all
// x, y, z, each component skew for the octonion norm; flattened as 192-vectors
// with componentwise commutator.
LinearSubalgebra triality_algebra(const Field& f);
// the {(A, A, A)} subalgebra of a triality algebra
LinearSubalgebra triality_cyclic_fixed(const LinearSubalgebra& tri);
// extract one 8x8 component (0, 1 or 2) of a flattened triple
ExactMatrix triality_component(const Field& f, const Vec& triple, int which);
// block-diagonal action of triples on O^3 (24-dimensional module)
std::vector<ExactMatrix> triality_module_action(const LinearSubalgebra& tri);

}  // namespace albert
