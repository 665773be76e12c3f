#include "matrix.hpp"

#include <numeric>

namespace albert {

Vec vec_zero(const Field& f, int n) { return Vec(n, Scalar(f)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Scalar vec_dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_dot: length mismatch");
    Scalar acc(a.empty() ? Field::rationals() : a[0].field());
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

void vec_add_scaled(Vec& a, const Scalar& c, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
    Vec out(a);
    for (auto& x : out) x = x * c;
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

void vec_normalize_primitive(Vec& v) {
    if (v.empty()) return;
    const Field& f = v[0].field();
    if (!f.is_rationals()) {
        for (const auto& x : v)
            if (!x.is_zero()) {
                Scalar inv = x.inverse();
                for (auto& y : v) y *= inv;
                return;
            }
        return;
    }
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& x : v) {
        mpq_class q = x.to_mpq();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return;
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    // Flip sign so the first nonzero entry is positive.
    for (const auto& x : v)
        if (!x.is_zero()) {
            if (sgn(x.to_mpq() * factor) < 0) factor = -factor;
            break;
        }
    Scalar c(f, factor);
    for (auto& y : v) y *= c;
}

ExactMatrix ExactMatrix::identity(const Field& f, int n) {
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
    ExactMatrix m(f, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("from_rows: ragged row");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: inner dimension mismatch");
    if (!same_field(*fld_, *o.fld_)) throw std::invalid_argument("matmul: field mismatch");
    ExactMatrix out(*fld_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    ExactMatrix out(*this);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
    ExactMatrix out(*this);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix out(*this);
    for (auto& x : out.a_) x *= c;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(*fld_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !same_field(*fld_, *o.fld_)) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec ExactMatrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec out = vec_zero(*fld_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& x = at(i, j);
            if (!x.is_zero()) out[i] += x * v[j];
        }
    return out;
}

Vec ExactMatrix::row(int i) const {
    Vec out;
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref_inplace(std::vector<Vec>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (!rows[i][c].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][c].inverse();
        for (int j = c; j < cols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size(), Vec{});
    return pivots;
}

}  // namespace

int matrix_rank(const ExactMatrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return static_cast<int>(rref_inplace(rows, m.cols()).size());
}

std::vector<Vec> nullspace(const ExactMatrix& m) {
    const Field& f = m.field();
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    std::vector<int> pivots = rref_inplace(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(f, m.cols());
        v[c] = Scalar(f, 1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const ExactMatrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    const Field& f = m.field();
    int cols = m.cols();
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Vec r = m.row(i);
        r.push_back(b[i]);
        rows.push_back(std::move(r));
    }
    std::vector<int> pivots = rref_inplace(rows, cols + 1);
    Vec x = vec_zero(f, cols);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
        x[pivots[r]] = rows[r][cols];
    }
    return x;
}

ExactMatrix matrix_inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const Field& f = m.field();
    int n = m.rows();
    std::vector<Vec> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        Vec r = m.row(i);
        Vec id = vec_zero(f, n);
        id[i] = Scalar(f, 1);
        r.insert(r.end(), id.begin(), id.end());
        rows.push_back(std::move(r));
    }
    std::vector<int> pivots = rref_inplace(rows, 2 * n);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::domain_error("matrix_inverse: singular matrix");
    ExactMatrix out(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = rows[i][n + j];
    return out;
}

BasisSolver::BasisSolver(const Field& f, int ambient_dim) : fld_(&f), dim_(ambient_dim) {}

bool BasisSolver::reduce(Vec& v, Vec* coords) const {
    // coords, when requested, receives the combination of *added* vectors that
    // was subtracted from v.
    if (coords) *coords = vec_zero(*fld_, static_cast<int>(basis_.size()));
    int next = -1;
    for (size_t r = 0; r < echelon_.size(); ++r) {
        const Scalar& c = v[pivot_col_[r]];
        if (c.is_zero()) continue;
        Scalar factor = c;
        vec_add_scaled(v, -factor, echelon_[r]);
        if (coords)
            for (size_t j = 0; j < combo_[r].size(); ++j) (*coords)[j] += factor * combo_[r][j];
    }
    (void)next;
    return !vec_is_zero(v);
}

bool BasisSolver::add(const Vec& v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("BasisSolver::add: wrong dimension");
    Vec w = v;
    Vec coords;
    if (!reduce(w, &coords)) return false;
    int piv = 0;
    while (w[piv].is_zero()) ++piv;
    Scalar inv = w[piv].inverse();
    for (auto& x : w) x *= inv;
    // combo for the new echelon row: (v - sum coords*basis) * inv
    Vec combo = vec_zero(*fld_, static_cast<int>(basis_.size()) + 1);
    for (size_t j = 0; j < coords.size(); ++j) combo[j] = -coords[j] * inv;
    combo[basis_.size()] = inv;
    // keep existing echelon rows reduced against the new one
    for (size_t r = 0; r < echelon_.size(); ++r) {
        const Scalar& c = echelon_[r][piv];
        if (c.is_zero()) continue;
        Scalar factor = c;
        vec_add_scaled(echelon_[r], -factor, w);
        combo_[r].resize(basis_.size() + 1, Scalar(*fld_));
        for (size_t j = 0; j < combo.size(); ++j) combo_[r][j] -= factor * combo[j];
    }
    for (auto& cr : combo_) cr.resize(basis_.size() + 1, Scalar(*fld_));
    basis_.push_back(v);
    echelon_.push_back(std::move(w));
    combo_.push_back(std::move(combo));
    pivot_col_.push_back(piv);
    return true;
}

bool BasisSolver::contains(const Vec& v) const {
    Vec w = v;
    return !reduce(w, nullptr);
}

std::optional<Vec> BasisSolver::coordinates(const Vec& v) const {
    Vec w = v;
    Vec coords;
    if (reduce(w, &coords)) return std::nullopt;
    coords.resize(basis_.size(), Scalar(*fld_));
    return coords;
}

NullspaceTracker::NullspaceTracker(const Field& f, int dim) : fld_(&f), dim_(dim) {
    basis_.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        Vec v = vec_zero(f, dim);
        v[i] = Scalar(f, 1);
        basis_.push_back(std::move(v));
    }
}

void NullspaceTracker::shrink(const Vec& coeffs) {
    int piv = -1;
    for (size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) { piv = static_cast<int>(j); break; }
    if (piv < 0) return;
    Scalar inv = coeffs[piv].inverse();
    for (size_t j = 0; j < basis_.size(); ++j) {
        if (static_cast<int>(j) == piv || coeffs[j].is_zero()) continue;
        vec_add_scaled(basis_[j], -(coeffs[j] * inv), basis_[piv]);
    }
    basis_.erase(basis_.begin() + piv);
}

void NullspaceTracker::add_constraint(const SparseRow& r) {
    if (basis_.empty()) return;
    Vec coeffs = vec_zero(*fld_, static_cast<int>(basis_.size()));
    bool any = false;
    for (size_t j = 0; j < basis_.size(); ++j) {
        Scalar acc(*fld_);
        for (const auto& [i, c] : r) acc += c * basis_[j][i];
        if (!acc.is_zero()) any = true;
        coeffs[j] = acc;
    }
    if (any) shrink(coeffs);
}

void NullspaceTracker::add_constraint_dense(const Vec& r) {
    SparseRow s;
    for (size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) s.emplace_back(static_cast<int>(i), r[i]);
    add_constraint(s);
}

}  // namespace albert
