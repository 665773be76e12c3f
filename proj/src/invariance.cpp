#include "invariance.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace albert {

namespace {

Vec flatten_matrix(const ExactMatrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

ExactMatrix unflatten_matrix(const Field& f, const Vec& v, int n) {
    if (static_cast<int>(v.size()) != n * n)
        throw std::invalid_argument("flattened matrix has the wrong length");
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    return m;
}

// sort-and-merge a list of (index, coefficient) contributions into a SparseRow
SparseRow compress_row(std::vector<std::pair<int, Scalar>>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow row;
    for (auto& [idx, c] : entries) {
        if (!row.empty() && row.back().first == idx)
            row.back().second += c;
        else
            row.emplace_back(idx, c);
    }
    row.erase(std::remove_if(row.begin(), row.end(),
                             [](const auto& e) { return e.second.is_zero(); }),
              row.end());
    return row;
}

Scalar sparse_dot(const SparseRow& row, const Vec& v) {
    Scalar acc(v.empty() ? Field::rationals() : v[0].field());
    for (const auto& [i, c] : row) acc += c * v[i];
    return acc;
}

}  // namespace

LinearSubalgebra::LinearSubalgebra(const Field& f, int ambient_dim, BracketFn bracket,
                                   std::vector<Vec> basis_vectors)
    : fld_(&f), ambient_(ambient_dim), bracket_(std::move(bracket)), solver_(f, ambient_dim) {
    for (auto& v : basis_vectors) {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("basis vector has the wrong ambient dimension");
        if (!solver_.add(v)) throw std::logic_error("subalgebra basis is not independent");
        basis_.push_back(std::move(v));
    }
    int d = dim();
    witness_.reserve(d * (d - 1) / 2);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            auto coords = solver_.coordinates(bracket_(basis_[i], basis_[j]));
            if (!coords) throw std::logic_error("subalgebra is not closed under the bracket");
            coords->resize(d, Scalar(f));
            witness_.push_back(std::move(*coords));
        }
}

const Vec& LinearSubalgebra::structure_coords(int i, int j) const {
    if (!(0 <= i && i < j && j < dim())) throw std::invalid_argument("need 0 <= i < j < dim");
    return witness_[static_cast<size_t>(i) * dim() - i * (i + 1) / 2 + (j - i - 1)];
}

ExactMatrix LinearSubalgebra::ad_matrix(const Vec& coords) const {
    int d = dim();
    ExactMatrix m(*fld_, d, d);
    for (int i = 0; i < d; ++i) {
        if (coords[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            // [b_i, b_j] = -[b_j, b_i]
            const Vec& w = i < j ? structure_coords(i, j) : structure_coords(j, i);
            Scalar sign = Scalar(*fld_, i < j ? 1 : -1) * coords[i];
            for (int r = 0; r < d; ++r)
                if (!w[r].is_zero()) m.at(r, j) += sign * w[r];
        }
    }
    return m;
}

ExactMatrix LinearSubalgebra::killing_form() const {
    int d = dim();
    std::vector<ExactMatrix> ads;
    ads.reserve(d);
    for (int i = 0; i < d; ++i) {
        Vec e = vec_zero(*fld_, d);
        e[i] = Scalar(*fld_, 1);
        ads.push_back(ad_matrix(e));
    }
    ExactMatrix k(*fld_, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Scalar acc(*fld_);
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s) {
                    const Scalar& a = ads[i].at(r, s);
                    if (!a.is_zero()) acc += a * ads[j].at(s, r);
                }
            k.at(i, j) = acc;
            k.at(j, i) = std::move(acc);
        }
    return k;
}

std::vector<Vec> LinearSubalgebra::center_coords() const {
    int d = dim();
    if (d == 0) return {};
    ExactMatrix sys(*fld_, d * d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            if (i == j) continue;
            const Vec& w = i < j ? structure_coords(i, j) : structure_coords(j, i);
            Scalar sign(*fld_, i < j ? 1 : -1);
            for (int r = 0; r < d; ++r)
                if (!w[r].is_zero()) sys.at(j * d + r, i) = sign * w[r];
        }
    return nullspace(sys);
}

Vec LinearSubalgebra::from_coords(const Vec& coords) const {
    Vec out = vec_zero(*fld_, ambient_);
    for (int i = 0; i < dim(); ++i)
        if (!coords[i].is_zero()) vec_add_scaled(out, coords[i], basis_[i]);
    return out;
}

LinearSubalgebra LinearSubalgebra::subalgebra_from_coords(
    const std::vector<Vec>& coord_vectors) const {
    std::vector<Vec> lifted;
    lifted.reserve(coord_vectors.size());
    for (const auto& c : coord_vectors) {
        Vec v = from_coords(c);
        vec_normalize_primitive(v);
        lifted.push_back(std::move(v));
    }
    return LinearSubalgebra(*fld_, ambient_, bracket_, std::move(lifted));
}

LinearSubalgebra::BracketFn matrix_commutator_bracket(const Field& f, int n) {
    return [fp = &f, n](const Vec& a, const Vec& b) {
        Vec out = vec_zero(*fp, n * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Scalar& aik = a[i * n + k];
                const Scalar& bik = b[i * n + k];
                if (aik.is_zero() && bik.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (!aik.is_zero()) out[i * n + j] += aik * b[k * n + j];
                    if (!bik.is_zero()) out[i * n + j] -= bik * a[k * n + j];
                }
            }
        return out;
    };
}

ProductTable product_table(const CompositionAlgebra& A) {
    int n = A.dim();
    ProductTable t(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = multiply(A.basis_element(i), A.basis_element(j)).coords();
    return t;
}

ProductTable product_table(const JordanAlgebra& J) {
    int n = J.dim();
    ProductTable t(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            t[i][j] = J.to_vec(jordan_multiply(J.basis_element(i), J.basis_element(j)));
            if (j > i) t[j][i] = t[i][j];
        }
    return t;
}

namespace {

bool table_is_commutative(const ProductTable& t) {
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (t[i][j] != t[j][i]) return false;
    return true;
}

// Leibniz system phi(e_i e_j) = phi(e_i) e_j + e_i phi(e_j); unknown phi_{rs}
// at index r*n + s.
std::vector<SparseRow> leibniz_rows(const Field& f, const ProductTable& table) {
    int n = static_cast<int>(table.size());
    bool comm = table_is_commutative(table);
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i)
        for (int j = comm ? i : 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                std::vector<std::pair<int, Scalar>> entries;
                for (int s = 0; s < n; ++s)
                    if (!table[i][j][s].is_zero()) entries.emplace_back(m * n + s, table[i][j][s]);
                for (int r = 0; r < n; ++r) {
                    if (!table[r][j][m].is_zero()) entries.emplace_back(r * n + i, -table[r][j][m]);
                    if (!table[i][r][m].is_zero()) entries.emplace_back(r * n + j, -table[i][r][m]);
                }
                SparseRow row = compress_row(entries);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    (void)f;
    return rows;
}

ProductTable reduce_table(const ProductTable& t, const Field& fp) {
    ProductTable out(t.size(), std::vector<Vec>(t.size()));
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t.size(); ++j) {
            Vec v;
            v.reserve(t[i][j].size());
            for (const auto& s : t[i][j]) v.push_back(Scalar(fp, s.to_mpq()));
            out[i][j] = std::move(v);
        }
    return out;
}

std::vector<Vec> solve_sparse_system(const Field& f, int unknowns,
                                     const std::vector<SparseRow>& rows) {
    NullspaceTracker tracker(f, unknowns);
    for (const auto& r : rows) tracker.add_constraint(r);
    std::vector<Vec> basis = tracker.basis();
    for (auto& v : basis) vec_normalize_primitive(v);
    return basis;
}

// Kernel dimension of the system after reduction mod a suitable prime; the
// rank over Q is at least the rank mod p, so this upper-bounds the rational
// kernel dimension.
int kernel_dim_mod_p(int unknowns, const std::vector<SparseRow>& rows) {
    for (long p : {5L, 7L, 11L, 13L}) {
        const Field& fp = Field::prime(p);
        try {
            NullspaceTracker tracker(fp, unknowns);
            for (const auto& r : rows) {
                SparseRow reduced;
                for (const auto& [i, c] : r) {
                    Scalar s(fp, c.to_mpq());
                    if (!s.is_zero()) reduced.emplace_back(i, s);
                }
                tracker.add_constraint(reduced);
            }
            return tracker.kernel_dim();
        } catch (const std::domain_error&) {
            continue;  // p divides some denominator; try the next prime
        }
    }
    throw std::runtime_error("no usable certificate prime");
}

}  // namespace

LinearSubalgebra derivation_algebra(const Field& f, const ProductTable& table) {
    int n = static_cast<int>(table.size());
    std::vector<SparseRow> rows = leibniz_rows(f, table);
    auto finish = [&](std::vector<Vec> basis) {
        return LinearSubalgebra(f, n * n, matrix_commutator_bracket(f, n), std::move(basis));
    };
    if (f.is_rationals() && n >= 20 && table_is_commutative(table)) {
        // Candidate basis from commutators of multiplication operators, with a
        // mod-p rank certificate establishing maximality.
        std::vector<ExactMatrix> L;
        L.reserve(n);
        for (int i = 0; i < n; ++i) {
            ExactMatrix Li(f, n, n);
            for (int s = 0; s < n; ++s)
                for (int r = 0; r < n; ++r) Li.at(r, s) = table[i][s][r];
            L.push_back(std::move(Li));
        }
        BasisSolver span(f, n * n);
        std::vector<Vec> candidates;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec v = flatten_matrix(L[i] * L[j] - L[j] * L[i]);
                vec_normalize_primitive(v);
                if (span.add(v)) candidates.push_back(std::move(v));
            }
        bool all_valid = true;
        for (const auto& v : candidates)
            for (const auto& row : rows)
                if (!sparse_dot(row, v).is_zero()) {
                    all_valid = false;
                    break;
                }
        if (all_valid && static_cast<int>(candidates.size()) == kernel_dim_mod_p(n * n, rows))
            return finish(std::move(candidates));
    }
    return finish(solve_sparse_system(f, n * n, rows));
}

namespace {

// Coefficient-matching rows of T(phi(alpha), alpha#) = 0: one row per monomial
// multiset i <= j <= k, with S(r | j,k) = T(e_r, e_j x e_k).
std::vector<SparseRow> norm_invariance_rows(const CubicNormStructure& R) {
    const Field& f = R.field();
    int n = R.dim();
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) {
        e[i] = vec_zero(f, n);
        e[i][i] = Scalar(f, 1);
    }
    ExactMatrix gram(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram.at(i, j) = R.trace_form(e[i], e[j]);
    // S[j][k] (j <= k) is the vector of T(e_r, e_j x e_k) over r
    std::vector<std::vector<Vec>> S(n, std::vector<Vec>(n));
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) S[j][k] = gram.apply(R.cross(e[j], e[k]));
    auto s_at = [&](int j, int k) -> const Vec& { return j <= k ? S[j][k] : S[k][j]; };
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                std::vector<std::pair<int, Scalar>> entries;
                for (int r = 0; r < n; ++r) {
                    if (!s_at(j, k)[r].is_zero()) entries.emplace_back(r * n + i, s_at(j, k)[r]);
                    if (!s_at(i, k)[r].is_zero()) entries.emplace_back(r * n + j, s_at(i, k)[r]);
                    if (!s_at(i, j)[r].is_zero()) entries.emplace_back(r * n + k, s_at(i, j)[r]);
                }
                SparseRow row = compress_row(entries);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    return rows;
}

}  // namespace

LinearSubalgebra norm_preserving_algebra(const CubicNormStructure& R) {
    const Field& f = R.field();
    int n = R.dim();
    std::vector<SparseRow> rows = norm_invariance_rows(R);
    auto finish = [&](std::vector<Vec> basis) {
        LinearSubalgebra m(f, n * n, matrix_commutator_bracket(f, n), std::move(basis));
        for (const auto& v : m.basis()) {
            Scalar tr(f);
            for (int i = 0; i < n; ++i) tr += v[i * n + i];
            if (!tr.is_zero()) throw std::logic_error("norm-preserving operator has nonzero trace");
        }
        return m;
    };
    if (f.is_rationals() && n > 300 && R.kind() == CubicKind::Jordan) {
        // der(J) + multiplications by trace-zero elements, certified maximal by
        // a mod-p rank bound.
        const JordanAlgebra& J = *R.jordan();
        LinearSubalgebra der = derivation_algebra(f, product_table(J));
        BasisSolver span(f, n * n);
        std::vector<Vec> candidates;
        for (const auto& v : der.basis()) {
            if (span.add(v)) candidates.push_back(v);
        }
        Vec e = R.basepoint();
        for (int i = 0; i < n; ++i) {
            Vec ei = vec_zero(f, n);
            ei[i] = Scalar(f, 1);
            Scalar ti = R.trace_form(ei, e);
            // 3 e_i - T(e_i, e) e  lies in the trace-zero part
            Vec w = vec_scaled(ei, Scalar(f, 3));
            vec_add_scaled(w, -ti, e);
            if (vec_is_zero(w)) continue;
            Vec L = flatten_matrix(multiplication_operator(J, J.from_vec(w)));
            vec_normalize_primitive(L);
            if (span.add(L)) candidates.push_back(std::move(L));
        }
        bool all_valid = true;
        for (const auto& v : candidates)
            for (const auto& row : rows)
                if (!sparse_dot(row, v).is_zero()) {
                    all_valid = false;
                    break;
                }
        if (all_valid && static_cast<int>(candidates.size()) == kernel_dim_mod_p(n * n, rows))
            return finish(std::move(candidates));
    }
    return finish(solve_sparse_system(f, n * n, rows));
}

std::vector<ExactMatrix> natural_action(const LinearSubalgebra& g, int module_dim) {
    if (g.ambient_dim() != module_dim * module_dim)
        throw std::invalid_argument("ambient dimension is not a square matching the module");
    std::vector<ExactMatrix> mats;
    mats.reserve(g.dim());
    for (const auto& v : g.basis()) mats.push_back(unflatten_matrix(g.field(), v, module_dim));
    return mats;
}

LinearSubalgebra stabilizer_subalgebra(const LinearSubalgebra& g,
                                       const std::vector<ExactMatrix>& action,
                                       const std::vector<Vec>& points) {
    const Field& f = g.field();
    if (static_cast<int>(action.size()) != g.dim())
        throw std::invalid_argument("need one action matrix per basis element");
    int d = g.dim();
    std::vector<Vec> rows;
    for (const auto& p : points) {
        std::vector<Vec> images;
        images.reserve(d);
        for (int i = 0; i < d; ++i) images.push_back(action[i].apply(p));
        for (size_t m = 0; m < p.size(); ++m) {
            Vec row = vec_zero(f, d);
            for (int i = 0; i < d; ++i) row[i] = images[i][m];
            rows.push_back(std::move(row));
        }
    }
    auto kernel = nullspace(ExactMatrix::from_rows(f, rows, d));
    return g.subalgebra_from_coords(kernel);
}

LinearSubalgebra centralizer_subalgebra(const LinearSubalgebra& g, const LinearSubalgebra& h) {
    const Field& f = g.field();
    int d = g.dim();
    std::vector<Vec> rows;
    for (const auto& y : h.basis()) {
        auto ycoords = g.coordinates(y);
        if (!ycoords) throw std::invalid_argument("h does not lie inside g");
        ycoords->resize(d, Scalar(f));
        ExactMatrix ady = g.ad_matrix(*ycoords);
        // [X, y] = 0 as rows over the coordinates of X: column i is [b_i, y]
        for (int r = 0; r < d; ++r) {
            Vec row = vec_zero(f, d);
            for (int i = 0; i < d; ++i) row[i] = -ady.at(r, i);
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) rows.push_back(vec_zero(f, d));
    auto kernel = nullspace(ExactMatrix::from_rows(f, rows, d));
    return g.subalgebra_from_coords(kernel);
}

namespace {

// coordinate-space bracket relative to the basis of g
Vec coord_bracket(const LinearSubalgebra& g, const Vec& u, const Vec& v) {
    return g.ad_matrix(u).apply(v);
}

// {coords c : sum c_i action_i x in k x}, as coordinate vectors
std::vector<Vec> line_stabilizer_coords(const LinearSubalgebra& g,
                                        const std::vector<ExactMatrix>& action, const Vec& x) {
    const Field& f = g.field();
    int d = g.dim();
    int m = static_cast<int>(x.size());
    ExactMatrix sys(f, m, d + 1);
    for (int i = 0; i < d; ++i) {
        Vec img = action[i].apply(x);
        for (int r = 0; r < m; ++r) sys.at(r, i) = img[r];
    }
    for (int r = 0; r < m; ++r) sys.at(r, d) = -x[r];
    std::vector<Vec> out;
    for (const auto& k : nullspace(sys)) {
        Vec c(k.begin(), k.begin() + d);
        if (!vec_is_zero(c)) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Vec> intersect_coord_spans(const Field& f, const std::vector<Vec>& a,
                                       const std::vector<Vec>& b, int dim) {
    if (a.empty() || b.empty()) return {};
    int da = static_cast<int>(a.size()), db = static_cast<int>(b.size());
    ExactMatrix sys(f, dim, da + db);
    for (int j = 0; j < da; ++j)
        for (int r = 0; r < dim; ++r) sys.at(r, j) = a[j][r];
    for (int j = 0; j < db; ++j)
        for (int r = 0; r < dim; ++r) sys.at(r, da + j) = -b[j][r];
    std::vector<Vec> out;
    BasisSolver span(f, dim);
    for (const auto& k : nullspace(sys)) {
        Vec v = vec_zero(f, dim);
        for (int j = 0; j < da; ++j)
            if (!k[j].is_zero()) vec_add_scaled(v, k[j], a[j]);
        if (!vec_is_zero(v) && span.add(v)) out.push_back(std::move(v));
    }
    return out;
}

// eigen decomposition with eigenvalues drawn from a candidate list; returns
// nullopt unless the eigenspaces fill the whole space
struct EigenSplit {
    std::vector<Scalar> values;
    std::vector<std::vector<Vec>> spaces;
};

std::optional<EigenSplit> eigen_split(const ExactMatrix& m, const std::vector<Scalar>& candidates) {
    int n = m.rows();
    EigenSplit out;
    int total = 0;
    for (const auto& lam : candidates) {
        ExactMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= lam;
        auto space = nullspace(shifted);
        if (space.empty()) continue;
        total += static_cast<int>(space.size());
        out.values.push_back(lam);
        out.spaces.push_back(std::move(space));
    }
    if (total != n) return std::nullopt;
    return out;
}

std::vector<Scalar> eigenvalue_candidates(const Field& f) {
    std::vector<Scalar> cands;
    if (f.is_rationals()) {
        for (long den = 1; den <= 3; ++den)
            for (long num = -9; num <= 9; ++num) {
                mpq_class q(num, den);
                q.canonicalize();
                Scalar s(f, q);
                bool seen = false;
                for (const auto& c : cands) seen = seen || c == s;
                if (!seen) cands.push_back(s);
            }
    } else {
        for (long r = 0; r < f.p(); ++r) cands.emplace_back(f, r);
    }
    return cands;
}

}  // namespace

LineStabilizerResult line_stabilizer_with_filtration(const LinearSubalgebra& g,
                                                     const std::vector<ExactMatrix>& action,
                                                     const Vec& x,
                                                     const std::vector<Vec>& opposite_candidates) {
    const Field& f = g.field();
    if (vec_is_zero(x)) throw std::invalid_argument("line stabilizer needs a nonzero point");
    int d = g.dim();
    std::vector<Vec> qc = line_stabilizer_coords(g, action, x);
    LinearSubalgebra q = g.subalgebra_from_coords(qc);
    int dq = static_cast<int>(qc.size());

    // nilradical u = q intersect q-perp under the Killing form of g
    ExactMatrix K = g.killing_form();
    ExactMatrix QK(f, dq, dq);
    for (int i = 0; i < dq; ++i) {
        Vec Kqi = K.apply(qc[i]);
        for (int j = 0; j < dq; ++j) QK.at(i, j) = vec_dot(Kqi, qc[j]);
    }
    std::vector<Vec> u;
    for (const auto& t : nullspace(QK)) {
        Vec v = vec_zero(f, d);
        for (int i = 0; i < dq; ++i)
            if (!t[i].is_zero()) vec_add_scaled(v, t[i], qc[i]);
        u.push_back(std::move(v));
    }
    if (u.empty())
        return LineStabilizerResult{std::move(q), {}, vec_zero(f, d), {}};

    // lower central series dims of u
    std::vector<int> filtration;
    std::vector<Vec> layer = u;
    while (!layer.empty()) {
        filtration.push_back(static_cast<int>(layer.size()));
        BasisSolver next(f, d);
        std::vector<Vec> next_basis;
        for (const auto& a : u)
            for (const auto& b : layer) {
                Vec w = coord_bracket(g, a, b);
                if (!vec_is_zero(w) && next.add(w)) next_basis.push_back(w);
            }
        layer = std::move(next_basis);
    }

    // search for an integral grading element in the Levi of q: the joint line
    // stabilizer with an opposite point
    std::vector<Vec> candidates = opposite_candidates;
    int mdim = static_cast<int>(x.size());
    for (int i = 0; i < mdim; ++i) {
        Vec e = vec_zero(f, mdim);
        e[i] = Scalar(f, 1);
        candidates.push_back(std::move(e));
    }
    std::optional<LineStabilizerResult> best;
    long best_radius = 0;
    for (const auto& y : candidates) {
        if (vec_is_zero(y)) continue;
        std::vector<Vec> qyc = line_stabilizer_coords(g, action, y);
        std::vector<Vec> levi = intersect_coord_spans(f, qc, qyc, d);
        if (static_cast<int>(levi.size()) != dq - static_cast<int>(u.size())) continue;
        // center of the Levi
        int dl = static_cast<int>(levi.size());
        if (dl == 0) continue;
        std::vector<Vec> rows;
        for (const auto& b : levi) {
            ExactMatrix cols(f, d, dl);
            for (int i = 0; i < dl; ++i) {
                Vec w = coord_bracket(g, levi[i], b);
                for (int r = 0; r < d; ++r) cols.at(r, i) = w[r];
            }
            for (int r = 0; r < d; ++r) {
                Vec row = vec_zero(f, dl);
                for (int i = 0; i < dl; ++i) row[i] = cols.at(r, i);
                rows.push_back(std::move(row));
            }
        }
        auto zker = nullspace(ExactMatrix::from_rows(f, rows, dl));
        for (const auto& t : zker) {
            Vec h0 = vec_zero(f, d);
            for (int i = 0; i < dl; ++i)
                if (!t[i].is_zero()) vec_add_scaled(h0, t[i], levi[i]);
            if (vec_is_zero(h0)) continue;
            // eigenvalue of h0 on the line through x
            ExactMatrix H(f, mdim, mdim);
            for (int i = 0; i < d; ++i)
                if (!h0[i].is_zero()) H = H + action[i].scaled(h0[i]);
            Vec hx = H.apply(x);
            std::optional<Scalar> mu;
            bool collinear = true;
            for (int r = 0; r < mdim && collinear; ++r) {
                if (x[r].is_zero()) {
                    collinear = hx[r].is_zero();
                } else if (!mu) {
                    mu = hx[r] / x[r];
                } else {
                    collinear = hx[r] == *mu * x[r];
                }
            }
            if (!collinear || !mu || mu->is_zero()) continue;
            Vec h1 = vec_scaled(h0, mu->inverse());
            // restrict ad h1 to q (h1 lies in q, which is a subalgebra, so q
            // is ad h1 stable) and split q into eigenspaces; the grading is
            // read off there, where all weights are nonnegative
            ExactMatrix adq(f, dq, dq);
            bool restricted = true;
            {
                ExactMatrix adh = g.ad_matrix(h1);
                ExactMatrix sys(f, d, dq);
                for (int jj = 0; jj < dq; ++jj)
                    for (int r = 0; r < d; ++r) sys.at(r, jj) = qc[jj][r];
                for (int j = 0; j < dq && restricted; ++j) {
                    auto sol = solve_linear(sys, adh.apply(qc[j]));
                    if (!sol) {
                        restricted = false;
                        break;
                    }
                    for (int r = 0; r < dq; ++r) adq.at(r, j) = (*sol)[r];
                }
            }
            if (!restricted) continue;
            auto qsplit = eigen_split(adq, eigenvalue_candidates(f));
            if (!qsplit) continue;
            // rescale h1 so the spectrum on q becomes a primitive set of
            // nonnegative integers
            Scalar scale(f, 1);
            std::vector<long> spectrum;
            if (f.is_rationals()) {
                bool nonneg = true;
                mpz_class L(1), G(0);
                for (const auto& lam : qsplit->values) {
                    mpq_class v = lam.to_mpq();
                    if (v < 0) {
                        nonneg = false;
                        break;
                    }
                    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den().get_mpz_t());
                    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), v.get_num().get_mpz_t());
                }
                if (!nonneg || G == 0) continue;
                mpq_class sc(L, G);
                sc.canonicalize();
                scale = Scalar(f, sc);
                for (const auto& lam : qsplit->values) {
                    mpq_class v = lam.to_mpq() * sc;
                    spectrum.push_back(v.get_num().get_si());
                }
            } else {
                // pick the scaling with the smallest nonnegative lifts on q
                long p = f.p();
                long best_max = -1;
                Scalar best_s(f, 1);
                for (long s = 1; s < p; ++s) {
                    Scalar sc(f, s);
                    long mx = 0;
                    for (const auto& lam : qsplit->values) mx = std::max(mx, (lam * sc).to_long());
                    if (best_max < 0 || mx < best_max) {
                        best_max = mx;
                        best_s = sc;
                    }
                }
                scale = best_s;
                for (const auto& lam : qsplit->values) spectrum.push_back((lam * scale).to_long());
            }
            std::sort(spectrum.begin(), spectrum.end());
            Vec h = vec_scaled(h1, scale);
            // the nonzero-weight part of q must be exactly the nilradical u
            BasisSolver uspan(f, d);
            for (const auto& v : u) uspan.add(v);
            int nonzero_dim = 0;
            bool contained = true;
            for (size_t vi = 0; vi < qsplit->values.size() && contained; ++vi) {
                if (qsplit->values[vi].is_zero()) continue;
                for (const auto& t2 : qsplit->spaces[vi]) {
                    Vec v = vec_zero(f, d);
                    for (int i = 0; i < dq; ++i)
                        if (!t2[i].is_zero()) vec_add_scaled(v, t2[i], qc[i]);
                    contained = contained && uspan.contains(v);
                    ++nonzero_dim;
                }
            }
            if (!contained || nonzero_dim != static_cast<int>(u.size())) continue;
            long radius = spectrum.back();
            if (!best || radius < best_radius) {
                best = LineStabilizerResult{q, filtration, h, spectrum};
                best_radius = radius;
            }
        }
    }
    if (!best) throw std::runtime_error("no integral grading element found");
    return std::move(*best);
}

LinearSubalgebra triality_algebra(const Field& f) {
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(f);
    const int n = 8;
    // integer data: structure constants, Tr(e_s e_k), and the norm bilinear form
    const auto& t = octonion_structure_constants();
    ExactMatrix trmat(f, n, n);
    ExactMatrix nb(f, n, n);
    for (int s = 0; s < n; ++s)
        for (int k = 0; k < n; ++k) {
            trmat.at(s, k) = trace(multiply(oct.basis_element(s), oct.basis_element(k)));
            nb.at(s, k) = norm(oct.basis_element(s) + oct.basis_element(k)) -
                          norm(oct.basis_element(s)) - norm(oct.basis_element(k));
        }
    // TT(r, j, k) = Tr((e_r e_j) e_k)
    auto TT = [&](int r, int j, int k) {
        Scalar acc(f);
        for (int s = 0; s < n; ++s)
            if (t[r][j][s]) acc += Scalar(f, t[r][j][s]) * trmat.at(s, k);
        return acc;
    };
    std::vector<SparseRow> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<std::pair<int, Scalar>> entries;
                for (int r = 0; r < n; ++r) {
                    Scalar ca = TT(r, j, k);
                    if (!ca.is_zero()) entries.emplace_back(r * n + i, ca);
                    Scalar cb = TT(i, r, k);
                    if (!cb.is_zero()) entries.emplace_back(64 + r * n + j, cb);
                    Scalar cc = TT(i, j, r);
                    if (!cc.is_zero()) entries.emplace_back(128 + r * n + k, cc);
                }
                SparseRow row = compress_row(entries);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    // each component skew for N: B(Xu, v) + B(u, Xv) = 0
    for (int comp = 0; comp < 3; ++comp)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                std::vector<std::pair<int, Scalar>> entries;
                for (int r = 0; r < n; ++r) {
                    if (!nb.at(r, j).is_zero())
                        entries.emplace_back(64 * comp + r * n + i, nb.at(r, j));
                    if (!nb.at(r, i).is_zero())
                        entries.emplace_back(64 * comp + r * n + j, nb.at(r, i));
                }
                SparseRow row = compress_row(entries);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    std::vector<Vec> basis = solve_sparse_system(f, 192, rows);
    auto bracket = [fp = &f](const Vec& a, const Vec& b) {
        Vec out = vec_zero(*fp, 192);
        for (int comp = 0; comp < 3; ++comp)
            for (int i = 0; i < 8; ++i)
                for (int k = 0; k < 8; ++k) {
                    const Scalar& aik = a[64 * comp + i * 8 + k];
                    const Scalar& bik = b[64 * comp + i * 8 + k];
                    if (aik.is_zero() && bik.is_zero()) continue;
                    for (int j = 0; j < 8; ++j) {
                        if (!aik.is_zero())
                            out[64 * comp + i * 8 + j] += aik * b[64 * comp + k * 8 + j];
                        if (!bik.is_zero())
                            out[64 * comp + i * 8 + j] -= bik * a[64 * comp + k * 8 + j];
                    }
                }
        return out;
    };
    return LinearSubalgebra(f, 192, bracket, std::move(basis));
}

LinearSubalgebra triality_cyclic_fixed(const LinearSubalgebra& tri) {
    const Field& f = tri.field();
    int d = tri.dim();
    std::vector<Vec> rows;
    for (int m = 0; m < 64; ++m) {
        Vec r1 = vec_zero(f, d), r2 = vec_zero(f, d);
        for (int i = 0; i < d; ++i) {
            r1[i] = tri.basis()[i][m] - tri.basis()[i][64 + m];
            r2[i] = tri.basis()[i][64 + m] - tri.basis()[i][128 + m];
        }
        rows.push_back(std::move(r1));
        rows.push_back(std::move(r2));
    }
    auto kernel = nullspace(ExactMatrix::from_rows(f, rows, d));
    return tri.subalgebra_from_coords(kernel);
}

ExactMatrix triality_component(const Field& f, const Vec& triple, int which) {
    ExactMatrix m(f, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.at(i, j) = triple.at(64 * which + i * 8 + j);
    return m;
}

std::vector<ExactMatrix> triality_module_action(const LinearSubalgebra& tri) {
    const Field& f = tri.field();
    std::vector<ExactMatrix> out;
    out.reserve(tri.dim());
    for (const auto& v : tri.basis()) {
        ExactMatrix m(f, 24, 24);
        for (int comp = 0; comp < 3; ++comp)
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    m.at(8 * comp + i, 8 * comp + j) = v[64 * comp + i * 8 + j];
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace albert
