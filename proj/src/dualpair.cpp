#include "dualpair.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "matrix.hpp"

namespace albert {

namespace {

void check_same_algebra(const CompositionAlgebra& a, const CompositionAlgebra& b,
                        const char* message) {
    if (!(a == b)) throw std::invalid_argument(message);
}

// row-major coordinates, entries expanded over the algebra basis
Vec dmatrix_flatten(const DMatrix& m) {
    const int dk = m.coeff().dim();
    Vec out = vec_zero(m.coeff().field(), m.rows() * m.cols() * dk);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (int s = 0; s < dk; ++s) out[(i * m.cols() + j) * dk + s] = m.at(i, j).coord(s);
    return out;
}

DMatrix dmatrix_unflatten(const CompositionAlgebra& D, const Vec& v, int rows, int cols) {
    const int dk = D.dim();
    DMatrix out(D, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Vec c = vec_zero(D.field(), dk);
            for (int s = 0; s < dk; ++s) c[s] = v[(i * cols + j) * dk + s];
            out.at(i, j) = D.element(std::move(c));
        }
    return out;
}

// basis of the matrices satisfying a linear condition
std::vector<DMatrix> solve_matrix_condition(
    const CompositionAlgebra& D, int rows, int cols,
    const std::function<DMatrix(const DMatrix&)>& condition) {
    const int dk = D.dim();
    const int vars = rows * cols * dk;
    if (vars == 0) return {};
    std::vector<Vec> images;
    images.reserve(vars);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int s = 0; s < dk; ++s) {
                DMatrix unit(D, rows, cols);
                unit.at(i, j) = D.basis_element(s);
                images.push_back(dmatrix_flatten(condition(unit)));
            }
    const int out_dim = static_cast<int>(images[0].size());
    ExactMatrix M(D.field(), out_dim, vars);
    for (int c = 0; c < vars; ++c)
        for (int r = 0; r < out_dim; ++r) M.at(r, c) = images[c][r];
    std::vector<DMatrix> basis;
    for (const auto& v : nullspace(M)) basis.push_back(dmatrix_unflatten(D, v, rows, cols));
    return basis;
}

HermitianSpace make_polarized_space(const HermitianSpace& W, const Polarization& P) {
    const int r = static_cast<int>(P.e_basis.size());
    if (r == 0 || static_cast<int>(P.f_basis.size()) != r || 2 * r != W.dim())
        throw std::invalid_argument("polarization does not split the space");
    for (const auto& half : {&P.e_basis, &P.f_basis})
        for (const auto& v : *half)
            if (static_cast<int>(v.size()) != W.dim())
                throw std::invalid_argument("polarization vectors have the wrong length");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (!W.form(P.e_basis[i], P.e_basis[j]).is_zero() ||
                !W.form(P.f_basis[i], P.f_basis[j]).is_zero())
                throw std::invalid_argument("polarization subspaces must be isotropic");
    const CompositionAlgebra& D = W.coeff();
    const Scalar eps(W.field(), W.eps());
    DMatrix gram(D, 2 * r, 2 * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            CompositionElement p = W.form(P.e_basis[i], P.f_basis[j]);
            gram.at(i, r + j) = p;
            gram.at(r + j, i) = conjugate(p).scaled(eps);
        }
    return HermitianSpace(D, W.eps(), std::move(gram));
}

DMatrix extract_pairing(const DMatrix& gram, int r) {
    DMatrix out(gram.coeff(), r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.at(i, j) = gram.at(i, r + j);
    return out;
}

}  // namespace

DMatrix::DMatrix(const CompositionAlgebra& D, int rows, int cols)
    : alg_(D), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), alg_.zero());
}

DMatrix DMatrix::identity(const CompositionAlgebra& D, int n) {
    DMatrix out(D, n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = D.one();
    return out;
}

CompositionElement& DMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const CompositionElement& DMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

DMatrix DMatrix::operator*(const DMatrix& o) const {
    check_same_algebra(alg_, o.alg_, "matrix entries live over different algebras");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimensions do not match");
    DMatrix out(alg_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.at(i, j) = out.at(i, j) + multiply(at(i, k), o.at(k, j));
        }
    return out;
}

DMatrix DMatrix::operator+(const DMatrix& o) const {
    check_same_algebra(alg_, o.alg_, "matrix entries live over different algebras");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimensions do not match");
    DMatrix out(alg_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

DMatrix DMatrix::operator-(const DMatrix& o) const {
    check_same_algebra(alg_, o.alg_, "matrix entries live over different algebras");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimensions do not match");
    DMatrix out(alg_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

DMatrix DMatrix::scaled(const Scalar& c) const {
    DMatrix out(alg_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].scaled(c);
    return out;
}

DMatrix DMatrix::conj_transpose() const {
    DMatrix out(alg_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = conjugate(at(i, j));
    return out;
}

bool DMatrix::operator==(const DMatrix& o) const {
    if (!(alg_ == o.alg_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return e_ == o.e_;
}

bool DMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix realize_dmatrix(const DMatrix& g) {
    const CompositionAlgebra& D = g.coeff();
    const int dk = D.dim();
    ExactMatrix out(D.field(), g.rows() * dk, g.cols() * dk);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            if (g.at(i, j).is_zero()) continue;
            for (int s = 0; s < dk; ++s) {
                CompositionElement img = multiply(g.at(i, j), D.basis_element(s));
                for (int r = 0; r < dk; ++r) out.at(i * dk + r, j * dk + s) = img.coord(r);
            }
        }
    return out;
}

DMatrix unrealize_dmatrix(const CompositionAlgebra& D, const ExactMatrix& m, int rows, int cols) {
    const int dk = D.dim();
    if (m.rows() != rows * dk || m.cols() != cols * dk)
        throw std::invalid_argument("realized matrix has the wrong shape");
    const Vec one = D.one().coords();
    DMatrix out(D, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Vec c = vec_zero(D.field(), dk);
            for (int r = 0; r < dk; ++r)
                for (int s = 0; s < dk; ++s)
                    c[r] = c[r] + m.at(i * dk + r, j * dk + s) * one[s];
            out.at(i, j) = D.element(std::move(c));
        }
    if (!(realize_dmatrix(out) == m))
        throw std::invalid_argument("matrix is not linear over the coefficient algebra");
    return out;
}

DMatrix dmatrix_inverse(const DMatrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("matrix must be square");
    return unrealize_dmatrix(g.coeff(), matrix_inverse(realize_dmatrix(g)), g.rows(), g.cols());
}

Scalar ktrace_dmatrix(const DMatrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("matrix must be square");
    const CompositionAlgebra& D = g.coeff();
    Scalar out(D.field(), 0);
    for (int i = 0; i < g.rows(); ++i) {
        if (g.at(i, i).is_zero()) continue;
        for (int s = 0; s < D.dim(); ++s)
            out = out + multiply(g.at(i, i), D.basis_element(s)).coord(s);
    }
    return out;
}

HermitianSpace::HermitianSpace(const CompositionAlgebra& D, int eps, DMatrix gram)
    : alg_(D), eps_(eps), gram_(std::move(gram)) {
    if (alg_.kind() == CompKind::SplitOctonion)
        throw std::invalid_argument("coefficient algebra must be associative");
    if (eps_ != 1 && eps_ != -1) throw std::invalid_argument("form sign must be +1 or -1");
    check_same_algebra(alg_, gram_.coeff(), "Gram matrix lives over the wrong algebra");
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw std::invalid_argument("Gram matrix must be square and nonempty");
    if (!(gram_.conj_transpose() == gram_.scaled(Scalar(field(), eps_))))
        throw std::invalid_argument("Gram matrix does not have the declared symmetry");
    if (matrix_rank(realized_gram()) != kdim()) throw std::invalid_argument("the form is degenerate");
}

HermitianSpace HermitianSpace::quadratic(const Field& f, const std::vector<Scalar>& diag) {
    CompositionAlgebra D = CompositionAlgebra::base(f);
    const int n = static_cast<int>(diag.size());
    DMatrix gram(D, n, n);
    for (int i = 0; i < n; ++i) gram.at(i, i) = D.scalar_multiple_of_one(diag[i]);
    return HermitianSpace(D, 1, std::move(gram));
}

HermitianSpace HermitianSpace::symplectic(const Field& f, int r) {
    return hyperbolic(CompositionAlgebra::base(f), -1, r);
}

HermitianSpace HermitianSpace::hyperbolic(const CompositionAlgebra& D, int eps, int r) {
    DMatrix gram(D, 2 * r, 2 * r);
    const Scalar e(D.field(), eps);
    for (int i = 0; i < r; ++i) {
        gram.at(i, r + i) = D.one();
        gram.at(r + i, i) = D.one().scaled(e);
    }
    return HermitianSpace(D, eps, std::move(gram));
}

HermitianSpace HermitianSpace::line(const CompositionAlgebra& D, int eps,
                                    const CompositionElement& g) {
    DMatrix gram(D, 1, 1);
    gram.at(0, 0) = g;
    return HermitianSpace(D, eps, std::move(gram));
}

CompositionElement HermitianSpace::form(const std::vector<CompositionElement>& u,
                                        const std::vector<CompositionElement>& v) const {
    if (static_cast<int>(u.size()) != dim() || static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("vectors have the wrong length");
    CompositionElement out = alg_.zero();
    for (int i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        CompositionElement left = conjugate(u[i]);
        for (int j = 0; j < dim(); ++j) {
            if (gram_.at(i, j).is_zero() || v[j].is_zero()) continue;
            out = out + multiply(multiply(left, gram_.at(i, j)), v[j]);
        }
    }
    return out;
}

ExactMatrix HermitianSpace::realized_gram() const {
    const int n = dim();
    const int dk = alg_.dim();
    ExactMatrix out(field(), kdim(), kdim());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (gram_.at(i, j).is_zero()) continue;
            for (int s = 0; s < dk; ++s) {
                CompositionElement left =
                    multiply(conjugate(alg_.basis_element(s)), gram_.at(i, j));
                for (int t = 0; t < dk; ++t)
                    out.at(i * dk + s, j * dk + t) = trace(multiply(left, alg_.basis_element(t)));
            }
        }
    return out;
}

bool HermitianSpace::is_isometry(const DMatrix& g) const {
    if (!(g.coeff() == alg_) || g.rows() != dim() || g.cols() != dim()) return false;
    return g.conj_transpose() * gram_ * g == gram_;
}

bool HermitianSpace::in_lie_algebra(const DMatrix& s) const {
    if (!(s.coeff() == alg_) || s.rows() != dim() || s.cols() != dim()) return false;
    return (s.conj_transpose() * gram_ + gram_ * s).is_zero();
}

std::vector<DMatrix> HermitianSpace::isometry_lie_algebra() const {
    return solve_matrix_condition(alg_, dim(), dim(), [this](const DMatrix& s) {
        return s.conj_transpose() * gram_ + gram_ * s;
    });
}

DMatrix HermitianSpace::cayley_isometry(const DMatrix& S) const {
    if (!in_lie_algebra(S))
        throw std::invalid_argument("the parameter is not in the isometry Lie algebra");
    DMatrix one = DMatrix::identity(alg_, dim());
    return (one - S) * dmatrix_inverse(one + S);
}

HermitianSpace tensor_symplectic(const HermitianSpace& V, const HermitianSpace& W) {
    check_same_algebra(V.coeff(), W.coeff(),
                       "tensor factors live over different coefficient algebras");
    if (V.eps() * W.eps() != -1)
        throw std::invalid_argument("tensor factors must have opposite form signs");
    const CompositionAlgebra& D = V.coeff();
    const Field& f = D.field();
    CompositionAlgebra base = CompositionAlgebra::base(f);
    const int nv = V.dim(), nw = W.dim(), dk = D.dim();
    DMatrix gram(base, nv * nw * dk, nv * nw * dk);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            if (V.gram().at(i, j).is_zero()) continue;
            CompositionElement gv = conjugate(V.gram().at(i, j));
            for (int l = 0; l < nw; ++l)
                for (int m = 0; m < nw; ++m) {
                    if (W.gram().at(l, m).is_zero()) continue;
                    for (int s = 0; s < dk; ++s) {
                        CompositionElement left = multiply(D.basis_element(s), W.gram().at(l, m));
                        for (int t = 0; t < dk; ++t) {
                            Scalar val = trace(
                                multiply(multiply(left, conjugate(D.basis_element(t))), gv));
                            gram.at((i * nw + l) * dk + s, (j * nw + m) * dk + t) =
                                base.scalar_multiple_of_one(val);
                        }
                    }
                }
        }
    return HermitianSpace(base, -1, std::move(gram));
}

ExactMatrix embed_pair(const HermitianSpace& V, const HermitianSpace& W, const DMatrix& g,
                       const DMatrix& h) {
    check_same_algebra(V.coeff(), W.coeff(),
                       "tensor factors live over different coefficient algebras");
    if (!V.is_isometry(g)) throw std::invalid_argument("first factor is not an isometry");
    if (!W.is_isometry(h)) throw std::invalid_argument("second factor is not an isometry");
    const CompositionAlgebra& D = V.coeff();
    const int nv = V.dim(), nw = W.dim(), dk = D.dim();
    const int n = nv * nw * dk;
    ExactMatrix out(V.field(), n, n);
    for (int j = 0; j < nv; ++j)
        for (int m = 0; m < nw; ++m)
            for (int t = 0; t < dk; ++t) {
                const int col = (j * nw + m) * dk + t;
                for (int i = 0; i < nv; ++i) {
                    if (g.at(i, j).is_zero()) continue;
                    CompositionElement left = multiply(g.at(i, j), D.basis_element(t));
                    for (int l = 0; l < nw; ++l) {
                        if (h.at(l, m).is_zero()) continue;
                        CompositionElement val = multiply(left, conjugate(h.at(l, m)));
                        for (int r = 0; r < dk; ++r)
                            out.at((i * nw + l) * dk + r, col) = val.coord(r);
                    }
                }
            }
    return out;
}

ExactMatrix embed_pair_lie(const HermitianSpace& V, const HermitianSpace& W, const DMatrix& s,
                           const DMatrix& h) {
    check_same_algebra(V.coeff(), W.coeff(),
                       "tensor factors live over different coefficient algebras");
    if (!V.in_lie_algebra(s))
        throw std::invalid_argument("first factor is not in the isometry Lie algebra");
    if (!W.in_lie_algebra(h))
        throw std::invalid_argument("second factor is not in the isometry Lie algebra");
    const CompositionAlgebra& D = V.coeff();
    const int nv = V.dim(), nw = W.dim(), dk = D.dim();
    const int n = nv * nw * dk;
    ExactMatrix out(V.field(), n, n);
    for (int j = 0; j < nv; ++j)
        for (int m = 0; m < nw; ++m)
            for (int t = 0; t < dk; ++t) {
                const int col = (j * nw + m) * dk + t;
                for (int i = 0; i < nv; ++i) {
                    if (s.at(i, j).is_zero()) continue;
                    CompositionElement val = multiply(s.at(i, j), D.basis_element(t));
                    for (int r = 0; r < dk; ++r) {
                        const int row = (i * nw + m) * dk + r;
                        out.at(row, col) = out.at(row, col) + val.coord(r);
                    }
                }
                for (int l = 0; l < nw; ++l) {
                    if (h.at(l, m).is_zero()) continue;
                    CompositionElement val = multiply(D.basis_element(t), conjugate(h.at(l, m)));
                    for (int r = 0; r < dk; ++r) {
                        const int row = (j * nw + l) * dk + r;
                        out.at(row, col) = out.at(row, col) + val.coord(r);
                    }
                }
            }
    return out;
}

Polarization standard_polarization(const HermitianSpace& W) {
    if (W.dim() % 2 != 0) throw std::invalid_argument("space has odd dimension");
    const int r = W.dim() / 2;
    Polarization P;
    auto column = [&](int k) {
        std::vector<CompositionElement> v;
        for (int i = 0; i < W.dim(); ++i) v.push_back(i == k ? W.coeff().one() : W.coeff().zero());
        return v;
    };
    for (int i = 0; i < r; ++i) P.e_basis.push_back(column(i));
    for (int i = 0; i < r; ++i) P.f_basis.push_back(column(r + i));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (!W.form(P.e_basis[i], P.e_basis[j]).is_zero() ||
                !W.form(P.f_basis[i], P.f_basis[j]).is_zero())
                throw std::invalid_argument("basis halves are not isotropic");
    return P;
}

SiegelData::SiegelData(const HermitianSpace& W, const Polarization& P)
    : wpol_(make_polarized_space(W, P)),
      rank_(wpol_.dim() / 2),
      pairing_(extract_pairing(wpol_.gram(), rank_)),
      pairing_inv_(dmatrix_inverse(pairing_)) {
    const CompositionAlgebra& D = wpol_.coeff();
    const Scalar eps(wpol_.field(), wpol_.eps());
    n_basis_ = solve_matrix_condition(D, rank_, rank_, [&](const DMatrix& X) {
        return star_of_hom_fe(X) + X.scaled(eps);
    });
    n_complement_ = solve_matrix_condition(D, rank_, rank_, [&](const DMatrix& X) {
        return star_of_hom_fe(X) - X.scaled(eps);
    });
}

DMatrix SiegelData::star_of_levi(const DMatrix& A) const {
    return pairing_inv_ * A.conj_transpose() * pairing_;
}

DMatrix SiegelData::star_of_hom_fe(const DMatrix& X) const {
    return pairing_inv_.conj_transpose() * X.conj_transpose() * pairing_;
}

DMatrix SiegelData::star_of_hom_ef(const DMatrix& Y) const {
    return pairing_inv_ * Y.conj_transpose() * pairing_.conj_transpose();
}

DMatrix SiegelData::levi_matrix(const DMatrix& A) const {
    DMatrix inv_star = dmatrix_inverse(star_of_levi(A));
    DMatrix out(coeff(), 2 * rank_, 2 * rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            out.at(i, j) = A.at(i, j);
            out.at(rank_ + i, rank_ + j) = inv_star.at(i, j);
        }
    return out;
}

DMatrix SiegelData::unipotent_matrix(const DMatrix& X) const {
    DMatrix out = DMatrix::identity(coeff(), 2 * rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out.at(i, rank_ + j) = X.at(i, j);
    return out;
}

DMatrix SiegelData::transport(const DMatrix& A, const DMatrix& X) const {
    return A * X * star_of_levi(A);
}

Scalar SiegelData::character_exponent(const DMatrix& Y, const DMatrix& X) const {
    return ktrace_dmatrix(Y * X);
}

DMatrix SiegelData::coadjoint(const DMatrix& A, const DMatrix& Y) const {
    return dmatrix_inverse(star_of_levi(A)) * Y * dmatrix_inverse(A);
}

bool SiegelData::stabilizes(const DMatrix& A, const DMatrix& Y) const {
    return star_of_levi(A) * Y * A == Y;
}

std::vector<DMatrix> SiegelData::infinitesimal_stabilizer(const DMatrix& Y) const {
    return solve_matrix_condition(coeff(), rank_, rank_, [&](const DMatrix& a) {
        return star_of_levi(a) * Y + Y * a;
    });
}

DMatrix moment_map(const HermitianSpace& V, const SiegelData& S, const DMatrix& T) {
    check_same_algebra(V.coeff(), S.coeff(), "the map joins spaces over different algebras");
    if (T.rows() != V.dim() || T.cols() != S.rank())
        throw std::invalid_argument("the map has the wrong shape");
    DMatrix pulled = T.conj_transpose() * V.gram() * T;
    return (dmatrix_inverse(S.pairing()) * pulled).scaled(Scalar(V.field(), S.space().eps()));
}

}  // namespace albert
