#include "freudenthal.hpp"

#include <algorithm>
#include <stdexcept>

#include "invariance.hpp"

namespace albert {

namespace {

Vec flatten(const ExactMatrix& m) {
    Vec v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

ExactMatrix unflatten(const Field& f, const Vec& v, int n) {
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i) * n + j];
    return m;
}

Scalar trace_product(const ExactMatrix& a, const ExactMatrix& b) {
    Scalar acc(a.field());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (!a.at(r, c).is_zero()) acc += a.at(r, c) * b.at(c, r);
    return acc;
}

// one linear condition on an operator, as entry positions with coefficients
struct EntryCondition {
    std::vector<std::pair<std::pair<int, int>, long>> terms;
};

// Conditions pinning an S x S block to the split-torus span used for the
// designated Cartan: the commuting semisimple operators of the norm form of
// the coefficient algebra in its standard coordinates.
std::vector<EntryCondition> block_torus_conditions(int off, int S) {
    std::vector<EntryCondition> out;
    auto zero_at = [&](int p, int q) { out.push_back({{{{off + p, off + q}, 1}}}); };
    auto equal_pm = [&](int p, int q, int r, int s, long sign) {
        out.push_back({{{{off + p, off + q}, 1}, {{off + r, off + s}, sign}}});
    };
    switch (S) {
        case 1:
            zero_at(0, 0);
            break;
        case 2:
            zero_at(0, 0);
            zero_at(1, 1);
            equal_pm(0, 1, 1, 0, -1);
            break;
        case 4:
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    if (!((p == 0 && q == 1) || (p == 1 && q == 0) || (p == 2 && q == 3) ||
                          (p == 3 && q == 2)))
                        zero_at(p, q);
            equal_pm(0, 1, 1, 0, -1);
            equal_pm(2, 3, 3, 2, -1);
            break;
        case 8:
            for (int p = 0; p < 8; ++p)
                for (int q = 0; q < 8; ++q)
                    if (p != q) zero_at(p, q);
            equal_pm(0, 0, 7, 7, 1);
            equal_pm(1, 1, 4, 4, 1);
            equal_pm(2, 2, 5, 5, 1);
            equal_pm(3, 3, 6, 6, 1);
            break;
        default:
            throw std::logic_error("unsupported coefficient dimension");
    }
    return out;
}

// The designated commuting diagonalizable family of the operator algebra m,
// returned as flattened matrices. For Jordan structures this is the span of
// the two diagonal multiplication operators together with the operators that
// kill the diagonal idempotents, preserve each off-diagonal block, and act
// there inside the block torus.
std::vector<Vec> designated_m_cartan(const CubicNormStructure& R, const LinearSubalgebra& m) {
    const Field& f = R.field();
    int n = R.dim();
    if (m.dim() == 0) return {};
    if (R.kind() == CubicKind::Diagonal) return m.basis();

    const JordanAlgebra* J = R.jordan();
    if (J == nullptr) throw std::logic_error("operator Cartan needs a Jordan structure");
    int S = J->coeff().dim();

    std::vector<Vec> cart;
    Scalar one(f, 1), minus(f, -1), zero(f);
    cart.push_back(flatten(multiplication_operator(*J, J->diagonal(one, minus, zero))));
    cart.push_back(flatten(multiplication_operator(*J, J->diagonal(zero, one, minus))));
    for (const auto& v : cart)
        if (!m.contains(v))
            throw std::logic_error("diagonal multiplication operator escapes m");

    std::vector<ExactMatrix> mats = natural_action(m, n);
    std::vector<EntryCondition> conds;
    // kill the three diagonal idempotents
    for (int col = 0; col < 3; ++col)
        for (int r = 0; r < n; ++r) conds.push_back({{{{r, col}, 1}}});
    for (int b = 0; b < 3; ++b) {
        int off = 3 + b * S;
        // block purity: the image of each off-diagonal block stays inside it
        for (int col = off; col < off + S; ++col)
            for (int r = 0; r < n; ++r)
                if (r < off || r >= off + S) conds.push_back({{{{r, col}, 1}}});
        auto torus = block_torus_conditions(off, S);
        conds.insert(conds.end(), torus.begin(), torus.end());
    }
    NullspaceTracker tracker(f, m.dim());
    for (const auto& cond : conds) {
        Vec row(m.dim(), Scalar(f));
        for (int k = 0; k < m.dim(); ++k) {
            Scalar acc(f);
            for (const auto& [pos, coeff] : cond.terms)
                acc += mats[k].at(pos.first, pos.second) * Scalar(f, coeff);
            row[k] = acc;
        }
        tracker.add_constraint_dense(row);
    }
    int expected = S == 1 ? 0 : S == 2 ? 2 : S == 4 ? 3 : 4;
    std::vector<Vec> torus_part = tracker.basis();
    if (static_cast<int>(torus_part.size()) != expected)
        throw std::logic_error("designated operator torus has unexpected dimension " +
                               std::to_string(torus_part.size()));
    for (const auto& coords : torus_part) cart.push_back(m.from_coords(coords));
    return cart;
}

}  // namespace

SLayout layout_of(const LieModel& L) {
    SLayout lay;
    for (const auto& b : L.basis()) {
        if (b.tag == "m_R") ++lay.m_dim;
        if (b.tag.rfind("short(", 0) == 0) ++lay.r_dim;
    }
    if (lay.r_dim % 3 != 0) throw std::invalid_argument("model lacks the uniform layout");
    lay.r_dim /= 3;
    lay.short_off = 8 + lay.m_dim;
    lay.coshort_off = lay.short_off + 3 * lay.r_dim;
    if (lay.dim() != L.dim()) throw std::invalid_argument("model lacks the uniform layout");
    return lay;
}

std::string algebra_name_for_r_dim(int r_dim) {
    switch (r_dim) {
        case 1: return "g2";
        case 3: return "d4";
        case 6: return "f4";
        case 9: return "e6";
        case 15: return "e7";
        case 27: return "e8";
    }
    throw std::invalid_argument("no chain member has coefficient dimension " +
                                std::to_string(r_dim));
}

std::vector<int> indices_with_tag_prefix(const LieModel& L, const std::string& prefix) {
    std::vector<int> out;
    for (int i = 0; i < L.dim(); ++i)
        if (L.basis()[i].tag.rfind(prefix, 0) == 0) out.push_back(i);
    return out;
}

LieModel build_s(const CubicNormStructure& R) {
    const Field& f = R.field();
    if (!f.is_rationals() && f.p() <= 7)
        throw std::invalid_argument("construction needs Q or F_p with p > 7");
    int n = R.dim();
    Scalar one(f, 1), zero(f);

    LinearSubalgebra m_raw = norm_preserving_algebra(R);
    int dm = m_raw.dim();

    // designated torus first, then a completion of the operator block
    std::vector<Vec> cart = designated_m_cartan(R, m_raw);
    int ncart = static_cast<int>(cart.size());
    std::vector<Vec> mbasis = cart;
    {
        BasisSolver span(f, n * n);
        for (const auto& v : cart)
            if (!span.add(v)) throw std::logic_error("designated operator torus is degenerate");
        for (const auto& v : m_raw.basis())
            if (span.add(v)) mbasis.push_back(v);
    }
    if (static_cast<int>(mbasis.size()) != dm)
        throw std::logic_error("operator torus escapes the operator algebra");
    for (int i = 0; i < ncart; ++i) {
        ExactMatrix a = unflatten(f, cart[i], n);
        for (int j = i + 1; j < ncart; ++j) {
            ExactMatrix b = unflatten(f, cart[j], n);
            if (!(a * b - b * a).is_zero())
                throw std::logic_error("designated operator torus is not commutative");
        }
    }
    LinearSubalgebra m(f, n * n, matrix_commutator_bracket(f, n), mbasis);
    std::vector<ExactMatrix> Mact = natural_action(m, n);

    ExactMatrix G(f, n, n);
    {
        std::vector<Vec> e(n, vec_zero(f, n));
        for (int i = 0; i < n; ++i) e[i][i] = one;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = R.trace_form(e[i], e[j]);
    }
    ExactMatrix Ginv = matrix_inverse(G);
    std::vector<ExactMatrix> Mco;
    Mco.reserve(dm);
    for (const auto& M : Mact) Mco.push_back(Ginv * M.transpose() * G);

    // trace-form duals D0_{a,b} in m of the functionals  op -> T(e_b, op e_a)
    // on m + k id, with the identity component dropped
    std::vector<std::vector<Vec>> D0;
    if (dm > 0) {
        int adim = dm + 1;
        std::vector<const ExactMatrix*> aspace;
        ExactMatrix id = ExactMatrix::identity(f, n);
        for (const auto& M : Mact) aspace.push_back(&M);
        aspace.push_back(&id);
        ExactMatrix gm(f, adim, adim);
        for (int i = 0; i < adim; ++i)
            for (int j = i; j < adim; ++j) {
                Scalar t = trace_product(*aspace[i], *aspace[j]);
                gm.at(i, j) = t;
                gm.at(j, i) = std::move(t);
            }
        ExactMatrix gi = matrix_inverse(gm);
        std::vector<ExactMatrix> GM;
        GM.reserve(dm);
        for (const auto& M : Mact) GM.push_back(G * M);
        D0.assign(n, std::vector<Vec>(n));
        Vec ell(adim, zero);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                for (int k = 0; k < dm; ++k) ell[k] = GM[k].at(b, a);
                ell[dm] = G.at(b, a);
                Vec d = gi.apply(ell);
                d.resize(dm);
                D0[a][b] = std::move(d);
            }
    }

    std::vector<std::vector<Vec>> crossTab(n, std::vector<Vec>(n));
    {
        std::vector<Vec> e(n, vec_zero(f, n));
        for (int i = 0; i < n; ++i) e[i][i] = one;
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                crossTab[a][b] = R.cross(e[a], e[b]);
                if (b != a) crossTab[b][a] = crossTab[a][b];
            }
    }

    // the eight sl3 generators and their commutator coordinates
    std::vector<ExactMatrix> B(8, ExactMatrix(f, 3, 3));
    B[0].at(0, 0) = one;
    B[0].at(1, 1) = -one;
    B[1].at(1, 1) = one;
    B[1].at(2, 2) = -one;
    B[2].at(0, 1) = one;
    B[3].at(0, 2) = one;
    B[4].at(1, 0) = one;
    B[5].at(1, 2) = one;
    B[6].at(2, 0) = one;
    B[7].at(2, 1) = one;
    BasisSolver sl3solver(f, 9);
    for (const auto& mat : B)
        if (!sl3solver.add(flatten(mat))) throw std::logic_error("sl3 basis degenerate");
    std::vector<std::vector<Vec>> sl3comm(8, std::vector<Vec>(8));
    for (int s = 0; s < 8; ++s)
        for (int t = s + 1; t < 8; ++t) {
            auto coords = sl3solver.coordinates(flatten(B[s] * B[t] - B[t] * B[s]));
            if (!coords) throw std::logic_error("sl3 is not closed");
            sl3comm[s][t] = *coords;
        }

    SLayout lay;
    lay.r_dim = n;
    lay.m_dim = dm;
    lay.short_off = 8 + dm;
    lay.coshort_off = lay.short_off + 3 * n;
    int N = lay.dim();

    std::vector<BasisLabel> labels;
    labels.reserve(N);
    for (const char* s : {"H1", "H2", "E12", "E13", "E21", "E23", "E31", "E32"})
        labels.push_back({"sl3", s});
    for (int k = 0; k < dm; ++k) labels.push_back({"m_R", "m" + std::to_string(k)});
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < n; ++a) {
            std::string t = "(" + std::to_string(i) + "," + std::to_string(a) + ")";
            labels.push_back({"short" + t, "short" + t});
        }
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < n; ++a) {
            std::string t = "(" + std::to_string(i) + "," + std::to_string(a) + ")";
            labels.push_back({"coshort" + t, "coshort" + t});
        }
    std::vector<int> cartan = {0, 1};
    for (int k = 0; k < ncart; ++k) cartan.push_back(8 + k);

    auto sh = [&](int i, int a) { return lay.short_index(i, a); };
    auto co = [&](int i, int a) { return lay.coshort_index(i, a); };
    const Scalar third = one / Scalar(f, 3);
    const Scalar h_coef[3][2] = {{Scalar(f, 2) * third, third},
                                 {-third, third},
                                 {-third, -third - third}};
    static const int eidx[3][3] = {{-1, 2, 3}, {4, -1, 5}, {6, 7, -1}};
    struct Wedge {
        int i, j, k;
    };
    static const Wedge wedges[3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

    auto make_model = [&](const Scalar& c1, const Scalar& c2, const Scalar& c3,
                          const Scalar& c4) {
        LieModel L(f, labels, cartan);
        for (int s = 0; s < 8; ++s)
            for (int t = s + 1; t < 8; ++t)
                for (int u = 0; u < 8; ++u)
                    L.add_structure_constant(s, t, u, sl3comm[s][t][u]);
        for (int t = 0; t < 8; ++t)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (!B[t].at(j, i).is_zero())
                        for (int a = 0; a < n; ++a)
                            L.add_structure_constant(t, sh(i, a), sh(j, a), B[t].at(j, i));
                    if (!B[t].at(i, j).is_zero())
                        for (int a = 0; a < n; ++a)
                            L.add_structure_constant(t, co(i, a), co(j, a), -B[t].at(i, j));
                }
        for (int k = 0; k < dm; ++k)
            for (int l = k + 1; l < dm; ++l) {
                const Vec& cds = m.structure_coords(k, l);
                for (int u = 0; u < dm; ++u)
                    L.add_structure_constant(8 + k, 8 + l, 8 + u, cds[u]);
            }
        for (int k = 0; k < dm; ++k)
            for (int b = 0; b < n; ++b)
                for (int a = 0; a < n; ++a) {
                    if (!Mact[k].at(b, a).is_zero())
                        for (int i = 0; i < 3; ++i)
                            L.add_structure_constant(8 + k, sh(i, a), sh(i, b), Mact[k].at(b, a));
                    if (!Mco[k].at(b, a).is_zero())
                        for (int i = 0; i < 3; ++i)
                            L.add_structure_constant(8 + k, co(i, a), co(i, b), -Mco[k].at(b, a));
                }
        for (const auto& w : wedges) {
            bool flip = w.i > w.j;
            int i = flip ? w.j : w.i, j = flip ? w.i : w.j;
            Scalar s1 = flip ? -c1 : c1, s2 = flip ? -c2 : c2;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Vec& cr = crossTab[a][b];
                    for (int r = 0; r < n; ++r)
                        if (!cr[r].is_zero()) {
                            L.add_structure_constant(sh(i, a), sh(j, b), co(w.k, r), s1 * cr[r]);
                            L.add_structure_constant(co(i, a), co(j, b), sh(w.k, r), s2 * cr[r]);
                        }
                }
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        Scalar pairing = c4 * G.at(b, a);
                        if (i != j) {
                            L.add_structure_constant(sh(i, a), co(j, b), eidx[i][j], pairing);
                            continue;
                        }
                        for (int u = 0; u < dm; ++u)
                            if (!D0[a][b][u].is_zero())
                                L.add_structure_constant(sh(i, a), co(i, b), 8 + u,
                                                         c3 * D0[a][b][u]);
                        L.add_structure_constant(sh(i, a), co(i, b), 0, pairing * h_coef[i][0]);
                        L.add_structure_constant(sh(i, a), co(i, b), 1, pairing * h_coef[i][1]);
                    }
        L.strip_zero_entries();
        return L;
    };

    // Solve for the bracket constants: Jacobi rows on mixed short/coshort
    // triples are homogeneous linear in (c1 c2, c3, c4); the three indicator
    // models isolate the coefficient vectors.
    LieModel mA = make_model(one, one, zero, zero);
    LieModel mB = make_model(zero, zero, one, zero);
    LieModel mC = make_model(zero, zero, zero, one);
    auto unit_vec = [&](int p) {
        Vec v = vec_zero(f, N);
        v[p] = one;
        return v;
    };
    auto jac = [&](const LieModel& L, int p, int q, int r) {
        Vec vp = unit_vec(p), vq = unit_vec(q), vr = unit_vec(r);
        Vec s = L.bracket(L.bracket(vp, vq), vr);
        s = vec_add(s, L.bracket(L.bracket(vq, vr), vp));
        return vec_add(s, L.bracket(L.bracket(vr, vp), vq));
    };
    std::vector<Vec> kernel;
    std::vector<int> windows = {std::min(4, n)};
    if (n > 4) windows.push_back(std::min(8, n));
    if (n > 8) windows.push_back(n);
    for (int W : windows) {
        NullspaceTracker tracker(f, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int a = 0; a < W; ++a)
                        for (int b = 0; b < W; ++b)
                            for (int c = 0; c < W; ++c)
                                for (int type = 0; type < 2; ++type) {
                                    int p = type ? co(i, a) : sh(i, a);
                                    int q = type ? co(j, b) : sh(j, b);
                                    int r = type ? sh(k, c) : co(k, c);
                                    if (p == q) continue;
                                    Vec ja = jac(mA, p, q, r);
                                    Vec jb = jac(mB, p, q, r);
                                    Vec jc = jac(mC, p, q, r);
                                    for (int t = 0; t < N; ++t)
                                        if (!ja[t].is_zero() || !jb[t].is_zero() ||
                                            !jc[t].is_zero())
                                            tracker.add_constraint_dense({ja[t], jb[t], jc[t]});
                                }
        if (dm == 0) tracker.add_constraint_dense({zero, one, zero});
        kernel = tracker.basis();
        if (kernel.size() == 1) break;
    }
    if (kernel.empty())
        throw std::runtime_error("no bracket constants satisfy Jacobi on the sampled triples");
    if (kernel.size() != 1)
        throw std::runtime_error("bracket constants are underdetermined by Jacobi");
    if (kernel[0][0].is_zero())
        throw std::runtime_error("Jacobi forces the wedge constants to vanish");
    Scalar c3 = kernel[0][1] / kernel[0][0];
    Scalar c4 = kernel[0][2] / kernel[0][0];

    LieModel L = make_model(one, one, c3, c4);
    L.constants.emplace("c1", one);
    L.constants.emplace("c2", one);
    L.constants.emplace("c3", c3);
    L.constants.emplace("c4", c4);
    JacobiReport rep = jacobi_verify(L);
    if (!rep.ok)
        throw std::runtime_error("construction failure: Jacobi violated at basis triple (" +
                                 std::to_string(rep.witness[0]) + ", " +
                                 std::to_string(rep.witness[1]) + ", " +
                                 std::to_string(rep.witness[2]) + ")");
    return L;
}

std::vector<Vec> subchain_generators(const LieModel& L,
                                     const std::vector<std::unique_ptr<CubicNormStructure>>& chain,
                                     int src, int dst) {
    if (src < 0 || dst >= static_cast<int>(chain.size()) || src > dst)
        throw std::invalid_argument("bad chain positions");
    const Field& f = L.field();
    SLayout lay = layout_of(L);
    if (lay.r_dim != chain[dst]->dim())
        throw std::invalid_argument("model does not match the target chain member");
    std::vector<Vec> out;
    for (int t = 0; t < 8; ++t) {
        Vec v = vec_zero(f, L.dim());
        v[t] = Scalar(f, 1);
        out.push_back(std::move(v));
    }
    int d0 = chain[src]->dim();
    for (int a = 0; a < d0; ++a) {
        Vec w = vec_zero(f, d0);
        w[a] = Scalar(f, 1);
        for (int s = src; s < dst; ++s) w = embed_chain(*chain[s], *chain[s + 1], w);
        for (int i = 0; i < 3; ++i) {
            Vec vs = vec_zero(f, L.dim());
            Vec vc = vec_zero(f, L.dim());
            for (int r = 0; r < lay.r_dim; ++r) {
                vs[lay.short_index(i, r)] = w[r];
                vc[lay.coshort_index(i, r)] = w[r];
            }
            out.push_back(std::move(vs));
            out.push_back(std::move(vc));
        }
    }
    return out;
}

}  // namespace albert
