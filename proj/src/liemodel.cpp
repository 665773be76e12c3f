#include "liemodel.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace albert {

LieModel::LieModel(const Field& f, std::vector<BasisLabel> basis_labels, std::vector<int> cartan)
    : fld_(&f), basis_(std::move(basis_labels)), cartan_(std::move(cartan)) {
    int n = dim();
    for (int c : cartan_)
        if (c < 0 || c >= n) throw std::invalid_argument("cartan index out of range");
    rows_.resize(static_cast<size_t>(n) * (n - 1) / 2);
}

size_t LieModel::pair_index(int i, int j) const {
    return static_cast<size_t>(i) * dim() - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

void LieModel::add_structure_constant(int i, int j, int k, const Scalar& c) {
    if (i == j || i < 0 || j < 0 || k < 0 || i >= dim() || j >= dim() || k >= dim())
        throw std::invalid_argument("bad structure constant indices");
    if (c.is_zero()) return;
    Scalar v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    SparseRow& row = rows_[pair_index(i, j)];
    auto it = std::lower_bound(row.begin(), row.end(), k,
                               [](const auto& e, int key) { return e.first < key; });
    if (it != row.end() && it->first == k)
        it->second += v;
    else
        row.insert(it, {k, v});
}

void LieModel::strip_zero_entries() {
    for (auto& row : rows_)
        row.erase(std::remove_if(row.begin(), row.end(),
                                 [](const auto& e) { return e.second.is_zero(); }),
                  row.end());
}

const SparseRow& LieModel::pair_row(int i, int j) const {
    if (!(0 <= i && i < j && j < dim())) throw std::invalid_argument("need i < j");
    return rows_[pair_index(i, j)];
}

Vec LieModel::bracket(const Vec& u, const Vec& v) const {
    Vec out = vec_zero(*fld_, dim());
    for (int i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (j == i || v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            const SparseRow& row = rows_[pair_index(std::min(i, j), std::max(i, j))];
            if (i > j) c = -c;
            for (const auto& [k, s] : row) out[k] += c * s;
        }
    }
    return out;
}

ExactMatrix LieModel::ad(const Vec& u) const {
    int n = dim();
    ExactMatrix m(*fld_, n, n);
    for (int i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const SparseRow& row = rows_[pair_index(std::min(i, j), std::max(i, j))];
            Scalar c = i > j ? -u[i] : u[i];
            for (const auto& [k, s] : row) m.at(k, j) += c * s;
        }
    }
    return m;
}

ExactMatrix LieModel::killing_form() const {
    int n = dim();
    // sparse ad matrices: ad_i entries (k, j, c) with c the coefficient of b_k
    // in [b_i, b_j]
    struct Entry {
        int k, j;
        Scalar c;
    };
    std::vector<std::vector<Entry>> ads(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const SparseRow& row = rows_[pair_index(std::min(i, j), std::max(i, j))];
            for (const auto& [k, s] : row) ads[i].push_back({k, j, i > j ? -s : s});
        }
    ExactMatrix kf(*fld_, n, n);
    std::vector<Scalar> scratch(static_cast<size_t>(n) * n, Scalar(*fld_));
    for (int i = 0; i < n; ++i) {
        for (const auto& e : ads[i]) scratch[static_cast<size_t>(e.k) * n + e.j] = e.c;
        for (int j = i; j < n; ++j) {
            Scalar acc(*fld_);
            // tr(ad_i ad_j) = sum over entries (k, l) of ad_j of ad_i(l, k) * c
            for (const auto& e : ads[j]) {
                const Scalar& a = scratch[static_cast<size_t>(e.j) * n + e.k];
                if (!a.is_zero()) acc += a * e.c;
            }
            kf.at(i, j) = acc;
            kf.at(j, i) = std::move(acc);
        }
        for (const auto& e : ads[i]) scratch[static_cast<size_t>(e.k) * n + e.j] = Scalar(*fld_);
    }
    return kf;
}

namespace {

// integer structure constants (numerators over one common denominator, or
// residues mod p), used by the exhaustive Jacobi scan
struct IntRows {
    bool usable = false;
    long p = 0;  // 0 means plain integers
    std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
};

IntRows integer_rows(const LieModel& L) {
    int n = L.dim();
    IntRows out;
    out.rows.resize(static_cast<size_t>(n) * (n - 1) / 2);
    if (!L.field().is_rationals()) {
        out.p = L.field().p();
        if (out.p > 100000) return out;  // keep products inside int64
        size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                for (const auto& [k, c] : L.pair_row(i, j))
                    if (!c.is_zero()) out.rows[idx].emplace_back(k, c.to_long());
        out.usable = true;
        return out;
    }
    mpz_class den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const auto& [k, c] : L.pair_row(i, j)) {
                (void)k;
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.to_mpq().get_den().get_mpz_t());
            }
    mpz_class max_num(0);
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            for (const auto& [k, c] : L.pair_row(i, j)) {
                mpq_class scaled = c.to_mpq() * den;
                mpz_class num = scaled.get_num();
                mpz_class a = abs(num);
                if (a > max_num) max_num = a;
                if (!num.fits_slong_p()) return out;
                out.rows[idx].emplace_back(k, num.get_si());
            }
    // bound: sums of <= 4 n^2 products of two constants must fit in int64
    mpz_class bound = max_num * max_num * 4 * n * n;
    if (!bound.fits_slong_p()) return out;
    out.usable = true;
    return out;
}

}  // namespace

JacobiReport jacobi_verify(const LieModel& L) {
    int n = L.dim();
    IntRows ir = integer_rows(L);
    long triples = 0;
    auto pair_idx = [n](int i, int j) {
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
    };
    if (ir.usable) {
        std::vector<std::int64_t> scratch(n, 0);
        std::vector<int> touched;
        touched.reserve(64);
        // term [[u,v],w] accumulated into scratch
        auto accumulate = [&](int u, int v, int w) {
            const auto& row = ir.rows[pair_idx(std::min(u, v), std::max(u, v))];
            std::int64_t sign = u > v ? -1 : 1;
            for (const auto& [m, c1] : row) {
                if (m == w) continue;
                const auto& row2 = ir.rows[pair_idx(std::min(m, w), std::max(m, w))];
                std::int64_t c = m > w ? -sign * c1 : sign * c1;
                for (const auto& [t, c2] : row2) {
                    if (scratch[t] == 0) touched.push_back(t);
                    scratch[t] += c * c2;
                }
            }
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool rij = !ir.rows[pair_idx(i, j)].empty();
                for (int k = j + 1; k < n; ++k) {
                    ++triples;
                    if (!rij && ir.rows[pair_idx(j, k)].empty() &&
                        ir.rows[pair_idx(i, k)].empty())
                        continue;
                    touched.clear();
                    accumulate(i, j, k);
                    accumulate(j, k, i);
                    accumulate(k, i, j);
                    bool ok = true;
                    for (int t : touched) {
                        std::int64_t v = scratch[t];
                        scratch[t] = 0;
                        if (ir.p ? (v % ir.p != 0) : (v != 0)) ok = false;
                    }
                    if (!ok) return {false, triples, {i, j, k}};
                }
            }
        return {true, triples, {-1, -1, -1}};
    }
    // exact fallback
    const Field& f = L.field();
    Vec ei = vec_zero(f, n), ej = vec_zero(f, n), ek = vec_zero(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                ++triples;
                ei[i] = ej[j] = ek[k] = Scalar(f, 1);
                Vec s = L.bracket(L.bracket(ei, ej), ek);
                s = vec_add(s, L.bracket(L.bracket(ej, ek), ei));
                s = vec_add(s, L.bracket(L.bracket(ek, ei), ej));
                ei[i] = ej[j] = ek[k] = Scalar(f);
                if (!vec_is_zero(s)) return {false, triples, {i, j, k}};
            }
    return {true, triples, {-1, -1, -1}};
}

namespace {

std::vector<Scalar> grading_candidates(const Field& f, bool integers_only) {
    std::vector<Scalar> out;
    if (!f.is_rationals()) {
        for (long r = 0; r < f.p(); ++r) out.emplace_back(f, r);
        return out;
    }
    for (long a = -12; a <= 12; ++a) out.emplace_back(f, a);
    if (!integers_only) {
        for (long num : {-13L, -11L, -9L, -7L, -5L, -3L, -1L, 1L, 3L, 5L, 7L, 9L, 11L, 13L})
            out.push_back(Scalar(f, num) / Scalar(f, 2));
        for (long num : {-8L, -7L, -5L, -4L, -2L, -1L, 1L, 2L, 4L, 5L, 7L, 8L})
            out.push_back(Scalar(f, num) / Scalar(f, 3));
    }
    return out;
}

// Split the whole model into ad(h)-eigen coordinates (phase 1) plus a
// coordinate-closed remainder subspace that is split exactly (phase 2).
// Returns pairs (eigenvalue, vectors). Throws if the action is not
// diagonalizable with eigenvalues among the candidates.
std::vector<std::pair<Scalar, std::vector<Vec>>> ad_eigen_decomposition(
    const LieModel& L, const Vec& h, const std::vector<Scalar>& candidates,
    const std::string& name) {
    const Field& f = L.field();
    int n = L.dim();
    ExactMatrix A = L.ad(h);
    std::vector<std::pair<Scalar, std::vector<Vec>>> out;
    auto slot = [&](const Scalar& lam) -> std::vector<Vec>& {
        for (auto& [v, vecs] : out)
            if (v == lam) return vecs;
        out.emplace_back(lam, std::vector<Vec>{});
        return out.back().second;
    };
    std::vector<int> mixed;
    for (int m = 0; m < n; ++m) {
        // column m of A against e_m: eigen iff the column is supported on m
        bool eigen = true;
        for (int r = 0; r < n && eigen; ++r)
            if (r != m && !A.at(r, m).is_zero()) eigen = false;
        if (eigen) {
            Vec e = vec_zero(f, n);
            e[m] = Scalar(f, 1);
            slot(A.at(m, m)).push_back(std::move(e));
        } else {
            mixed.push_back(m);
        }
    }
    if (!mixed.empty()) {
        // the remainder must be coordinate-closed under ad(h)
        std::vector<bool> in_mixed(n, false);
        for (int m : mixed) in_mixed[m] = true;
        for (int m : mixed)
            for (int r = 0; r < n; ++r)
                if (!A.at(r, m).is_zero() && !in_mixed[r])
                    throw std::runtime_error("element " + name +
                                             " mixes eigen and non-eigen coordinates");
        int w = static_cast<int>(mixed.size());
        ExactMatrix B(f, w, w);
        for (int a = 0; a < w; ++a)
            for (int b = 0; b < w; ++b) B.at(a, b) = A.at(mixed[a], mixed[b]);
        int found = 0;
        for (const auto& lam : candidates) {
            ExactMatrix shifted = B;
            for (int a = 0; a < w; ++a) shifted.at(a, a) -= lam;
            for (const auto& kv : nullspace(shifted)) {
                Vec v = vec_zero(f, n);
                for (int a = 0; a < w; ++a) v[mixed[a]] = kv[a];
                vec_normalize_primitive(v);
                slot(lam).push_back(std::move(v));
                ++found;
            }
            if (found == w) break;
        }
        if (found != w)
            throw std::runtime_error("element " + name +
                                     " does not act diagonalizably over the field");
    }
    return out;
}

std::string weight_key(const Vec& wvec) {
    std::string key;
    for (const auto& s : wvec) key += s.to_string() + ",";
    return key;
}

}  // namespace

WeightDecomposition weight_decomposition(const LieModel& L, const std::vector<int>& torus) {
    const Field& f = L.field();
    int n = L.dim();
    for (int t : torus) {
        if (std::find(L.cartan().begin(), L.cartan().end(), t) == L.cartan().end())
            throw std::invalid_argument("torus index is not in the designated Cartan");
        for (int s : torus)
            if (s != t && !L.pair_row(std::min(s, t), std::max(s, t)).empty())
                throw std::invalid_argument("torus elements do not commute");
    }
    auto candidates = grading_candidates(f, false);
    // refine subspaces one torus element at a time
    struct Piece {
        Vec weight;
        std::vector<Vec> vectors;
    };
    std::vector<Piece> pieces(1);
    pieces[0].weight = Vec{};
    pieces[0].vectors.reserve(n);
    for (int m = 0; m < n; ++m) {
        Vec e = vec_zero(f, n);
        e[m] = Scalar(f, 1);
        pieces[0].vectors.push_back(std::move(e));
    }
    for (size_t ti = 0; ti < torus.size(); ++ti) {
        Vec h = vec_zero(f, n);
        h[torus[ti]] = Scalar(f, 1);
        std::string name = "b" + std::to_string(torus[ti]);
        ExactMatrix A = L.ad(h);
        std::vector<Piece> next;
        auto emit = [&](const Piece& parent, const Scalar& lam, std::vector<Vec>&& vecs) {
            if (vecs.empty()) return;
            Piece np;
            np.weight = parent.weight;
            np.weight.push_back(lam);
            np.vectors = std::move(vecs);
            next.push_back(std::move(np));
        };
        for (const auto& piece : pieces) {
            int d = static_cast<int>(piece.vectors.size());
            if (d == n) {
                // first round: split the whole space directly
                for (auto& [lam, evecs] : ad_eigen_decomposition(L, h, candidates, name))
                    emit(piece, lam, std::move(evecs));
                continue;
            }
            // restrict ad(h) to the piece, which it preserves since h commutes
            // with the torus elements that carved the piece out
            BasisSolver pspan(f, n);
            for (const auto& v : piece.vectors) pspan.add(v);
            ExactMatrix M(f, d, d);
            bool diagonal = true;
            for (int j = 0; j < d; ++j) {
                auto co = pspan.coordinates(A.apply(piece.vectors[j]));
                if (!co)
                    throw std::runtime_error("element " + name +
                                             " does not preserve a weight piece");
                for (int r = 0; r < d; ++r) {
                    M.at(r, j) = (*co)[r];
                    if (r != j && !M.at(r, j).is_zero()) diagonal = false;
                }
            }
            if (diagonal) {
                std::vector<std::pair<Scalar, std::vector<Vec>>> groups;
                for (int j = 0; j < d; ++j) {
                    const Scalar& lam = M.at(j, j);
                    auto it = std::find_if(groups.begin(), groups.end(),
                                           [&](const auto& g) { return g.first == lam; });
                    if (it == groups.end()) {
                        groups.emplace_back(lam, std::vector<Vec>{});
                        it = std::prev(groups.end());
                    }
                    it->second.push_back(piece.vectors[j]);
                }
                for (auto& [lam, vecs] : groups) emit(piece, lam, std::move(vecs));
                continue;
            }
            int found = 0;
            for (const auto& lam : candidates) {
                ExactMatrix shifted = M;
                for (int a = 0; a < d; ++a) shifted.at(a, a) -= lam;
                std::vector<Vec> lifted;
                for (const auto& kv : nullspace(shifted)) {
                    Vec v = vec_zero(f, n);
                    for (int a = 0; a < d; ++a)
                        if (!kv[a].is_zero()) vec_add_scaled(v, kv[a], piece.vectors[a]);
                    vec_normalize_primitive(v);
                    lifted.push_back(std::move(v));
                }
                found += static_cast<int>(lifted.size());
                emit(piece, lam, std::move(lifted));
                if (found == d) break;
            }
            if (found != d)
                throw std::runtime_error("element " + name +
                                         " does not act diagonalizably over the field");
        }
        pieces = std::move(next);
    }
    WeightDecomposition out;
    out.zero_index = -1;
    for (auto& piece : pieces) {
        bool zero = true;
        for (const auto& s : piece.weight) zero = zero && s.is_zero();
        if (zero) out.zero_index = static_cast<int>(out.spaces.size());
        out.spaces.push_back({std::move(piece.weight), std::move(piece.vectors)});
    }
    if (out.zero_index < 0 && !torus.empty()) {
        out.zero_index = static_cast<int>(out.spaces.size());
        out.spaces.push_back({Vec(torus.size(), Scalar(f)), {}});
    }
    return out;
}

GradedDecomposition grade_by_cocharacter(const LieModel& L, const Vec& h) {
    const Field& f = L.field();
    int n = L.dim();
    auto split = ad_eigen_decomposition(L, h, grading_candidates(f, true), "h");
    std::vector<std::pair<long, std::vector<Vec>>> graded;
    for (auto& [lam, vecs] : split) {
        long d;
        if (f.is_rationals()) {
            mpq_class q = lam.to_mpq();
            if (q.get_den() != 1) throw std::domain_error("non-integer eigenvalue " + q.get_str());
            d = q.get_num().get_si();
        } else {
            d = lam.to_long();
            if (d > f.p() / 2) d -= f.p();  // centered representative
        }
        graded.emplace_back(d, std::move(vecs));
    }
    std::sort(graded.begin(), graded.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    GradedDecomposition out;
    for (auto& [d, vecs] : graded) {
        out.degrees.push_back(d);
        out.pieces.push_back(std::move(vecs));
    }
    // check [s[a], s[b]] <= s[a+b]
    auto degree_slot = [&](long d) -> int {
        for (size_t i = 0; i < out.degrees.size(); ++i)
            if (out.degrees[i] == d) return static_cast<int>(i);
        return -1;
    };
    std::vector<BasisSolver> spans;
    for (const auto& piece : out.pieces) {
        spans.emplace_back(f, n);
        for (const auto& v : piece) spans.back().add(v);
    }
    for (size_t a = 0; a < out.pieces.size(); ++a)
        for (size_t b = a; b < out.pieces.size(); ++b)
            for (const auto& u : out.pieces[a])
                for (const auto& v : out.pieces[b]) {
                    Vec w = L.bracket(u, v);
                    if (vec_is_zero(w)) continue;
                    int slot = degree_slot(out.degrees[a] + out.degrees[b]);
                    if (slot < 0 || !spans[slot].contains(w))
                        throw std::logic_error("grading is not multiplicative");
                }
    return out;
}

std::vector<SiegelGrading> find_siegel_grading(const LieModel& L) {
    const Field& f = L.field();
    int n = L.dim();
    int r = static_cast<int>(L.cartan().size());
    WeightDecomposition wd = weight_decomposition(L, L.cartan());
    // roots as vectors of length r, with their multiplicities
    std::vector<Vec> roots;
    std::vector<int> mult;
    std::vector<const std::vector<Vec>*> root_vecs;
    for (int i = 0; i < static_cast<int>(wd.spaces.size()); ++i) {
        if (i == wd.zero_index) continue;
        roots.push_back(wd.spaces[i].weight);
        mult.push_back(static_cast<int>(wd.spaces[i].vectors.size()));
        root_vecs.push_back(&wd.spaces[i].vectors);
    }
    // an independent set of roots determines h from its values there
    BasisSolver indep(f, r);
    std::vector<int> chosen;
    for (size_t i = 0; i < roots.size() && indep.rank() < r; ++i)
        if (indep.add(roots[i])) chosen.push_back(static_cast<int>(i));
    if (static_cast<int>(chosen.size()) != r)
        throw std::runtime_error("roots do not span the Cartan dual; Siegel search "
                                 "needs a semisimple model");
    ExactMatrix M(f, r, r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) M.at(a, b) = roots[chosen[a]][b];
    ExactMatrix Minv = matrix_inverse(M);
    std::vector<SiegelGrading> found;
    std::set<std::string> seen;
    std::vector<long> assign(r, -1);
    while (true) {
        Vec vals(assign.size(), Scalar(f));
        for (int a = 0; a < r; ++a) vals[a] = Scalar(f, assign[a]);
        Vec y = Minv.apply(vals);
        bool all_ok = !vec_is_zero(y);
        for (size_t i = 0; i < roots.size() && all_ok; ++i) {
            Scalar v = vec_dot(roots[i], y);
            all_ok = v.is_zero() || v == Scalar(f, 1) || v == Scalar(f, -1);
        }
        if (all_ok) {
            // dedupe up to sign
            Vec canon = y;
            for (size_t s = 0; s < canon.size(); ++s) {
                if (canon[s].is_zero()) continue;
                bool neg = f.is_rationals() ? canon[s].to_mpq() < 0
                                            : canon[s].to_long() > f.p() / 2;
                if (neg) canon = vec_scaled(canon, Scalar(f, -1));
                break;
            }
            std::string key = weight_key(canon);
            if (!seen.count(key)) {
                seen.insert(key);
                SiegelGrading sg;
                sg.h = vec_zero(f, n);
                for (int a = 0; a < r; ++a) sg.h[L.cartan()[a]] = y[a];
                sg.dim_plus = 0;
                std::vector<Vec> plus;
                for (size_t i = 0; i < roots.size(); ++i)
                    if (vec_dot(roots[i], y) == Scalar(f, 1)) {
                        sg.dim_plus += mult[i];
                        for (const auto& v : *root_vecs[i]) plus.push_back(v);
                    }
                sg.abelian = true;
                for (size_t a = 0; a < plus.size() && sg.abelian; ++a)
                    for (size_t b = a + 1; b < plus.size() && sg.abelian; ++b)
                        sg.abelian = vec_is_zero(L.bracket(plus[a], plus[b]));
                found.push_back(std::move(sg));
            }
        }
        // odometer over {-1, 0, 1}^r
        int pos = 0;
        while (pos < r && assign[pos] == 1) assign[pos++] = -1;
        if (pos == r) break;
        ++assign[pos];
    }
    return found;
}

SubalgebraPair subalgebra_generated_and_commutant(const LieModel& L,
                                                  const std::vector<Vec>& generators) {
    const Field& f = L.field();
    int n = L.dim();
    SubalgebraPair out;
    BasisSolver span(f, n);
    std::vector<Vec> worklist;
    for (const auto& g : generators) {
        Vec v = g;
        vec_normalize_primitive(v);
        if (!vec_is_zero(v) && span.add(v)) {
            out.closure.push_back(v);
            worklist.push_back(v);
        }
    }
    size_t next = 0;
    while (next < worklist.size()) {
        Vec w = worklist[next++];
        for (size_t i = 0; i < out.closure.size(); ++i) {
            Vec b = L.bracket(out.closure[i], w);
            if (vec_is_zero(b)) continue;
            vec_normalize_primitive(b);
            if (span.add(b)) {
                out.closure.push_back(b);
                worklist.push_back(b);
            }
        }
    }
    NullspaceTracker tracker(f, n);
    for (const auto& g : generators) {
        ExactMatrix adg = L.ad(g);
        for (int r = 0; r < n; ++r) {
            SparseRow row;
            for (int c = 0; c < n; ++c)
                if (!adg.at(r, c).is_zero()) row.emplace_back(c, -adg.at(r, c));
            if (!row.empty()) tracker.add_constraint(row);
        }
    }
    out.centralizer = tracker.basis();
    for (auto& v : out.centralizer) vec_normalize_primitive(v);
    return out;
}

namespace {

nlohmann::json field_to_json(const Field& f) {
    nlohmann::json j;
    if (f.is_rationals()) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.p();
    }
    return j;
}

const Field& field_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("field descriptor must be an object with a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw std::invalid_argument("Fp descriptor needs an integer p");
        return Field::prime(j["p"].get<long>());
    }
    throw std::invalid_argument("unknown field kind: " + kind);
}

Scalar scalar_from_string(const Field& f, const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar literal: " + s);
    q.canonicalize();
    return Scalar(f, q);
}

}  // namespace

std::string export_model(const LieModel& L) {
    nlohmann::json j;
    j["field"] = field_to_json(L.field());
    j["dim"] = L.dim();
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : L.basis()) basis.push_back({{"label", b.label}, {"tag", b.tag}});
    j["basis"] = std::move(basis);
    nlohmann::json brackets = nlohmann::json::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int k = i + 1; k < L.dim(); ++k)
            for (const auto& [t, c] : L.pair_row(i, k))
                brackets.push_back({i, k, t, c.to_string()});
    j["brackets"] = std::move(brackets);
    j["cartan"] = L.cartan();
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& [name, c] : L.constants) constants[name] = c.to_string();
    j["constants"] = std::move(constants);
    return j.dump(1);
}

namespace {

LieModel import_model_checked(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("model document is not valid JSON: ") + e.what());
    }
    for (const char* key : {"field", "dim", "basis", "brackets", "cartan"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("model document lacks \"") + key + "\"");
    const Field& f = field_from_json(j["field"]);
    if (!j["dim"].is_number_integer()) throw std::invalid_argument("dim must be an integer");
    int n = j["dim"].get<int>();
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != n)
        throw std::invalid_argument("basis must list exactly dim entries");
    std::vector<BasisLabel> labels;
    for (const auto& b : j["basis"]) {
        if (!b.is_object() || !b.contains("label") || !b.contains("tag"))
            throw std::invalid_argument("basis entries need label and tag");
        labels.push_back({b["tag"].get<std::string>(), b["label"].get<std::string>()});
    }
    if (!j["cartan"].is_array()) throw std::invalid_argument("cartan must be an array");
    std::vector<int> cartan;
    for (const auto& c : j["cartan"]) {
        if (!c.is_number_integer()) throw std::invalid_argument("cartan indices must be integers");
        cartan.push_back(c.get<int>());
    }
    LieModel L(f, std::move(labels), std::move(cartan));
    if (!j["brackets"].is_array()) throw std::invalid_argument("brackets must be an array");
    std::set<std::array<int, 3>> seen;
    for (const auto& e : j["brackets"]) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer() || !e[3].is_string())
            throw std::invalid_argument("bracket entries must be [i, j, k, \"c\"]");
        int i = e[0].get<int>(), k = e[1].get<int>(), t = e[2].get<int>();
        if (i < 0 || k < 0 || t < 0 || i >= n || k >= n || t >= n || i == k)
            throw std::invalid_argument("bracket entry indices out of range");
        if (!seen.insert({i, k, t}).second)
            throw std::invalid_argument("duplicate bracket entry");
        L.add_structure_constant(i, k, t, scalar_from_string(f, e[3].get<std::string>()));
    }
    if (j.contains("constants")) {
        if (!j["constants"].is_object())
            throw std::invalid_argument("constants must be an object");
        for (const auto& [name, val] : j["constants"].items())
            L.constants.emplace(name, scalar_from_string(f, val.get<std::string>()));
    }
    L.strip_zero_entries();
    return L;
}

}  // namespace

LieModel import_model(const std::string& json_text) {
    try {
        return import_model_checked(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed model document: ") + e.what());
    }
}

LieModel reduce_model(const LieModel& L, long p) {
    const Field& fp = Field::prime(p);
    LieModel out(fp, L.basis(), L.cartan());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j)
            for (const auto& [k, c] : L.pair_row(i, j))
                out.add_structure_constant(i, j, k, Scalar(fp, c.to_mpq()));
    out.strip_zero_entries();
    for (const auto& [name, c] : L.constants) out.constants.emplace(name, Scalar(fp, c.to_mpq()));
    return out;
}

}  // namespace albert
