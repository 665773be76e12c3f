#pragma once

#include "composition.hpp"

namespace albert {

// Matrices over an associative coefficient algebra (base, quadratic, or
// quaternion kind). They act on coordinate columns of right modules: entries
// multiply coordinates from the left, module scalars act from the right.
class DMatrix {
public:
    DMatrix(const CompositionAlgebra& D, int rows, int cols);
    static DMatrix identity(const CompositionAlgebra& D, int n);

    const CompositionAlgebra& coeff() const { return alg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CompositionElement& at(int i, int j);
    const CompositionElement& at(int i, int j) const;

    DMatrix operator*(const DMatrix& o) const;
    DMatrix operator+(const DMatrix& o) const;
    DMatrix operator-(const DMatrix& o) const;
    DMatrix scaled(const Scalar& c) const;
    DMatrix conj_transpose() const;
    bool operator==(const DMatrix& o) const;
    bool operator!=(const DMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    CompositionAlgebra alg_;
    int rows_, cols_;
    std::vector<CompositionElement> e_;  // row-major
};

// k-matrix of the left-multiplication action on coordinate columns; block
// (i, j) is the multiplication table of entry (i, j)
ExactMatrix realize_dmatrix(const DMatrix& g);
// inverse of realize_dmatrix; throws std::invalid_argument when the k-matrix
// does not come from a coefficient-algebra matrix
DMatrix unrealize_dmatrix(const CompositionAlgebra& D, const ExactMatrix& m, int rows, int cols);
// throws std::domain_error when g is not invertible
DMatrix dmatrix_inverse(const DMatrix& g);
// trace of left multiplication by the entries' algebra on itself, summed over
// the diagonal: the trace of g as a k-linear map on the coordinate module
Scalar ktrace_dmatrix(const DMatrix& g);

// A right module over the coefficient algebra carrying a nondegenerate
// eps-Hermitian form, stored as the Gram matrix of a fixed basis. The form is
// conjugate-linear in the first slot: B(u, v) = sum conj(u_i) G_ij v_j.
class HermitianSpace {
public:
    HermitianSpace(const CompositionAlgebra& D, int eps, DMatrix gram);

    // diagonal bilinear form over the base field (eps = +1)
    static HermitianSpace quadratic(const Field& f, const std::vector<Scalar>& diag);
    // hyperbolic alternating form over the base field, dimension 2r (eps = -1)
    static HermitianSpace symplectic(const Field& f, int r);
    // hyperbolic eps-Hermitian form of dimension 2r: G = [[0, I], [eps I, 0]]
    static HermitianSpace hyperbolic(const CompositionAlgebra& D, int eps, int r);
    // one-dimensional space with Gram (g)
    static HermitianSpace line(const CompositionAlgebra& D, int eps, const CompositionElement& g);

    const CompositionAlgebra& coeff() const { return alg_; }
    const Field& field() const { return alg_.field(); }
    int eps() const { return eps_; }
    int dim() const { return gram_.rows(); }
    int kdim() const { return dim() * alg_.dim(); }
    const DMatrix& gram() const { return gram_; }

    CompositionElement form(const std::vector<CompositionElement>& u,
                            const std::vector<CompositionElement>& v) const;
    // the k-bilinear trace realization Tr(B(., .)); nondegenerate
    ExactMatrix realized_gram() const;
    bool is_isometry(const DMatrix& g) const;
    bool in_lie_algebra(const DMatrix& s) const;
    // basis of {S : B(Su, v) + B(u, Sv) = 0}
    std::vector<DMatrix> isometry_lie_algebra() const;
    // exact isometry (1 - S)(1 + S)^{-1} from a Lie-algebra element S; throws
    // std::domain_error when 1 + S is singular
    DMatrix cayley_isometry(const DMatrix& S) const;

private:
    CompositionAlgebra alg_;
    int eps_;
    DMatrix gram_;
};

// The alternating form Tr(B_W(w1, w2) conj(B_V(v1, v2))) on V (x) W^*, over
// the base field. Coordinates are matrices C over the coefficient algebra
// (rows indexed by V, columns by W), flattened row-major and then over the
// algebra basis.
HermitianSpace tensor_symplectic(const HermitianSpace& V, const HermitianSpace& W);

// the pair (g, h) acting on tensor coordinates by C -> g C h^{ct}; both
// factors are verified to be isometries
ExactMatrix embed_pair(const HermitianSpace& V, const HermitianSpace& W, const DMatrix& g,
                       const DMatrix& h);
// derivative of the pair action: C -> s C + C h^{ct}
ExactMatrix embed_pair_lie(const HermitianSpace& V, const HermitianSpace& W, const DMatrix& s,
                           const DMatrix& h);

// complementary totally isotropic bases, as coordinate columns in W
struct Polarization {
    std::vector<std::vector<CompositionElement>> e_basis;
    std::vector<std::vector<CompositionElement>> f_basis;
};

// first half of the basis against the second; requires the hyperbolic layout
Polarization standard_polarization(const HermitianSpace& W);

// The stabilizer data of the polarization: the Levi block GL(E), the abelian
// unipotent radical Hom(F, E) of the fixed symmetry type, and the coadjoint
// action on characters of N. All matrices are written in the polarization
// basis (E first, then F).
class SiegelData {
public:
    SiegelData(const HermitianSpace& W, const Polarization& P);

    int rank() const { return rank_; }
    const HermitianSpace& space() const { return wpol_; }
    const CompositionAlgebra& coeff() const { return wpol_.coeff(); }
    const DMatrix& pairing() const { return pairing_; }
    // basis of Hom(F, E)_{-eps_W}, the Lie algebra of N
    const std::vector<DMatrix>& n_basis() const { return n_basis_; }
    // basis of the complementary eigenspace Hom(F, E)_{+eps_W}
    const std::vector<DMatrix>& n_complement() const { return n_complement_; }

    // adjoints against the E-F pairing
    DMatrix star_of_levi(const DMatrix& A) const;   // End(E) -> End(F)
    DMatrix star_of_hom_fe(const DMatrix& X) const; // Hom(F, E) involution
    DMatrix star_of_hom_ef(const DMatrix& Y) const; // Hom(E, F) involution

    // block matrices on E + F
    DMatrix levi_matrix(const DMatrix& A) const;      // diag(A, (A^*)^{-1})
    DMatrix unipotent_matrix(const DMatrix& X) const; // [[1, X], [0, 1]]

    // conjugation m(A) n(X) m(A)^{-1} = n(A X A^*) at the block level
    DMatrix transport(const DMatrix& A, const DMatrix& X) const;
    // the character argument Tr_F(Y X), as a base-field value
    Scalar character_exponent(const DMatrix& Y, const DMatrix& X) const;
    // coadjoint action A . Y = (A^*)^{-1} Y A^{-1} on Hom(E, F)_{-eps_W}
    DMatrix coadjoint(const DMatrix& A, const DMatrix& Y) const;
    // the stabilizer predicate Y = A^* Y A
    bool stabilizes(const DMatrix& A, const DMatrix& Y) const;
    // basis of {a in End(E) : a^* Y + Y a = 0}
    std::vector<DMatrix> infinitesimal_stabilizer(const DMatrix& Y) const;

private:
    HermitianSpace wpol_;
    int rank_;
    DMatrix pairing_;      // B(e_i, f_j)
    DMatrix pairing_inv_;
    std::vector<DMatrix> n_basis_;
    std::vector<DMatrix> n_complement_;
};

inline SiegelData siegel_data(const HermitianSpace& W, const Polarization& P) {
    return SiegelData(W, P);
}

// T^* B_V^flat T as an element of Hom(E, F)_{-eps_W}: the matrix Y whose
// attached form satisfies eps_W B_W(e1, Y e2) = B_V(T e1, T e2)
DMatrix moment_map(const HermitianSpace& V, const SiegelData& S, const DMatrix& T);

}  // namespace albert
