#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "../src/freudenthal.hpp"
#include "../src/invariance.hpp"
#include "doctest.h"

using namespace albert;

namespace {

const std::vector<std::unique_ptr<CubicNormStructure>>& qchain() {
    static auto c = cubic_chain(Field::rationals());
    return c;
}

// the six constructed algebras over Q, built once and shared across cases
const LieModel& qmodel(int idx) {
    static std::map<int, LieModel> cache;
    auto it = cache.find(idx);
    if (it == cache.end()) it = cache.emplace(idx, build_s(*qchain()[idx])).first;
    return it->second;
}

Vec unit(const Field& f, int n, int i) {
    Vec v = vec_zero(f, n);
    v[i] = Scalar(f, 1);
    return v;
}

// t = diag(1,0,-1) = H1 + H2 in the designated Cartan of sl3
Vec heisenberg_cocharacter(const LieModel& L) {
    Vec h = vec_zero(L.field(), L.dim());
    h[0] = Scalar(L.field(), 1);
    h[1] = Scalar(L.field(), 1);
    return h;
}

std::string weight_string(const Vec& w) {
    std::string k;
    for (const auto& s : w) k += s.to_string() + ",";
    return k;
}

// for each root, the number of other roots it sums with into a third root;
// sorted, this multiset is a basis-free fingerprint of the root system
std::vector<int> neighbor_signature(const std::vector<Vec>& roots) {
    std::set<std::string> keys;
    for (const auto& r : roots) keys.insert(weight_string(r));
    std::vector<int> counts;
    for (size_t i = 0; i < roots.size(); ++i) {
        int c = 0;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (i == j) continue;
            Vec s = roots[i];
            for (size_t t = 0; t < s.size(); ++t) s[t] = s[t] + roots[j][t];
            if (keys.count(weight_string(s))) ++c;
        }
        counts.push_back(c);
    }
    std::sort(counts.begin(), counts.end());
    return counts;
}

std::vector<Vec> nonzero_weights(const WeightDecomposition& wd) {
    std::vector<Vec> out;
    for (size_t i = 0; i < wd.spaces.size(); ++i)
        if (static_cast<int>(i) != wd.zero_index) out.push_back(wd.spaces[i].weight);
    return out;
}

const char* kSl2Doc = R"({
  "field": {"kind": "Q"},
  "dim": 3,
  "basis": [
    {"label": "h", "tag": "cartan"},
    {"label": "e", "tag": "raise"},
    {"label": "f", "tag": "lower"}
  ],
  "brackets": [[0, 1, 1, "2"], [0, 2, 2, "-2"], [1, 2, 0, "1"]],
  "cartan": [0]
})";

}  // namespace

TEST_CASE("hand-written sl2: bracket evaluation, verification, decompositions") {
    const Field& Q = Field::rationals();
    std::vector<BasisLabel> labels = {{"cartan", "h"}, {"raise", "e"}, {"lower", "f"}};
    LieModel L(Q, labels, {0});
    L.add_structure_constant(0, 1, 1, Scalar(Q, 2));
    L.add_structure_constant(0, 2, 2, Scalar(Q, -2));
    L.add_structure_constant(1, 2, 0, Scalar(Q, 1));

    CHECK_THROWS_AS(L.add_structure_constant(1, 1, 0, Scalar(Q, 1)), std::invalid_argument);
    CHECK_THROWS_AS(L.add_structure_constant(0, 3, 0, Scalar(Q, 1)), std::invalid_argument);

    // [e, f] = h, antisymmetrically
    Vec e = unit(Q, 3, 1), f = unit(Q, 3, 2);
    CHECK(L.bracket(e, f) == unit(Q, 3, 0));
    CHECK(vec_is_zero(vec_add(L.bracket(e, f), L.bracket(f, e))));
    for (int i = 0; i < 3; ++i) CHECK(vec_is_zero(L.bracket(unit(Q, 3, i), unit(Q, 3, i))));

    JacobiReport rep = jacobi_verify(L);
    CHECK(rep.ok);
    CHECK(rep.triples_checked == 1);

    CHECK(matrix_rank(L.killing_form()) == 3);

    WeightDecomposition wd = weight_decomposition(L, {0});
    CHECK(wd.spaces.size() == 3);
    CHECK(wd.spaces[wd.zero_index].vectors.size() == 1);
    std::set<std::string> seen;
    for (const auto& sp : wd.spaces) seen.insert(weight_string(sp.weight));
    CHECK(seen == std::set<std::string>{"-2,", "0,", "2,"});

    GradedDecomposition g = grade_by_cocharacter(L, unit(Q, 3, 0));
    CHECK(g.degrees == std::vector<long>{-2, 0, 2});
    for (const auto& piece : g.pieces) CHECK(piece.size() == 1);

    // grading by zero puts everything in one piece
    GradedDecomposition g0 = grade_by_cocharacter(L, vec_zero(Q, 3));
    CHECK(g0.degrees == std::vector<long>{0});
    CHECK(g0.pieces[0].size() == 3);
}

TEST_CASE("model documents: round trip, validation, modular reduction") {
    LieModel sl2 = import_model(kSl2Doc);
    CHECK(sl2.dim() == 3);
    CHECK(jacobi_verify(sl2).ok);
    CHECK(export_model(import_model(export_model(sl2))) == export_model(sl2));

    // a built model round-trips byte-for-byte
    const LieModel& d4 = qmodel(1);
    std::string doc = export_model(d4);
    LieModel back = import_model(doc);
    CHECK(export_model(back) == doc);
    CHECK(back.constants.at("c3") == d4.constants.at("c3"));
    CHECK(jacobi_verify(back).ok);

    CHECK_THROWS_AS(import_model("{ not json"), std::invalid_argument);
    CHECK_THROWS_AS(import_model("{\"dim\": 2}"), std::invalid_argument);
    // malformed bracket entries: wrong arity, i == j, out of range, duplicates
    auto patched = [&](const std::string& brackets) {
        std::string s = kSl2Doc;
        auto pos = s.find("\"brackets\":");
        auto end = s.find("]]", pos);
        return s.substr(0, pos) + "\"brackets\": " + brackets + s.substr(end + 2);
    };
    CHECK_THROWS_AS(import_model(patched("[[0, 1, 1]]")), std::invalid_argument);
    CHECK_THROWS_AS(import_model(patched("[[1, 1, 0, \"1\"]]")), std::invalid_argument);
    CHECK_THROWS_AS(import_model(patched("[[0, 1, 7, \"1\"]]")), std::invalid_argument);
    CHECK_THROWS_AS(import_model(patched("[[0, 1, 1, \"2\"], [0, 1, 1, \"2\"]]")),
                    std::invalid_argument);
    CHECK_THROWS_AS(import_model(patched("[[0, 1, 1, \"two\"]]")), std::invalid_argument);

    // reduction mod p preserves the identities and the Killing rank
    const LieModel& f4 = qmodel(2);
    LieModel f4p = reduce_model(f4, 11);
    CHECK(f4p.dim() == 52);
    CHECK(!f4p.field().is_rationals());
    CHECK(jacobi_verify(f4p).ok);
    CHECK(matrix_rank(f4p.killing_form()) == 52);
}

TEST_CASE("uniform construction: dimensions, rank, solved constants, Killing forms") {
    const int dims[6] = {14, 28, 52, 78, 133, 248};
    const int ranks[6] = {2, 4, 4, 6, 7, 8};
    const char* names[6] = {"g2", "d4", "f4", "e6", "e7", "e8"};
    const char* c3s[6] = {"0", "-2", "-5/2", "-3", "-4", "-6"};
    for (int i = 0; i < 6; ++i) {
        const LieModel& L = qmodel(i);
        CAPTURE(names[i]);
        CHECK(L.dim() == dims[i]);
        CHECK(static_cast<int>(L.cartan().size()) == ranks[i]);
        SLayout lay = layout_of(L);
        CHECK(lay.dim() == dims[i]);
        CHECK(algebra_name_for_r_dim(lay.r_dim) == names[i]);
        CHECK(L.constants.at("c1").to_string() == "1");
        CHECK(L.constants.at("c2").to_string() == "1");
        CHECK(L.constants.at("c3").to_string() == c3s[i]);
        CHECK(L.constants.at("c4").to_string() == "-1");
        CHECK(matrix_rank(L.killing_form()) == dims[i]);
    }
    // an exhaustive verification pass over the largest instance
    JacobiReport rep = jacobi_verify(qmodel(5));
    CHECK(rep.ok);
    CHECK(rep.triples_checked == 248L * 247 * 246 / 6);
}

TEST_CASE("two-torus weights: twelve roots, long multiplicity 1, short multiplicity dim R") {
    for (int i = 0; i < 6; ++i) {
        const LieModel& L = qmodel(i);
        SLayout lay = layout_of(L);
        CAPTURE(lay.r_dim);
        WeightDecomposition wd =
            weight_decomposition(L, {L.cartan()[0], L.cartan()[1]});
        std::vector<int> mults;
        for (size_t k = 0; k < wd.spaces.size(); ++k)
            if (static_cast<int>(k) != wd.zero_index)
                mults.push_back(static_cast<int>(wd.spaces[k].vectors.size()));
        std::sort(mults.begin(), mults.end());
        REQUIRE(mults.size() == 12);
        for (int k = 0; k < 6; ++k) CHECK(mults[k] == 1);
        for (int k = 6; k < 12; ++k) CHECK(mults[k] == lay.r_dim);
        CHECK(static_cast<int>(wd.spaces[wd.zero_index].vectors.size()) == 2 + lay.m_dim);
    }
}

TEST_CASE("full designated Cartan: singleton roots counting dim minus rank") {
    const int dims[6] = {14, 28, 52, 78, 133, 248};
    const int ranks[6] = {2, 4, 4, 6, 7, 8};
    for (int i = 0; i < 6; ++i) {
        const LieModel& L = qmodel(i);
        CAPTURE(dims[i]);
        WeightDecomposition wd = weight_decomposition(L, L.cartan());
        int nonzero = 0;
        for (size_t k = 0; k < wd.spaces.size(); ++k) {
            if (static_cast<int>(k) == wd.zero_index) continue;
            ++nonzero;
            CHECK(wd.spaces[k].vectors.size() == 1);
        }
        CHECK(nonzero == dims[i] - ranks[i]);
        CHECK(static_cast<int>(wd.spaces[wd.zero_index].vectors.size()) == ranks[i]);
        // the roots span the dual of the Cartan
        std::vector<Vec> rows = nonzero_weights(wd);
        CHECK(matrix_rank(ExactMatrix::from_rows(L.field(), rows, ranks[i])) == ranks[i]);
    }
}

TEST_CASE("the 14-dim instance matches the octonion derivation algebra root system") {
    const Field& Q = Field::rationals();
    CompositionAlgebra O = CompositionAlgebra::split_octonions(Q);
    LinearSubalgebra der = derivation_algebra(Q, product_table(O));
    REQUIRE(der.dim() == 14);

    // the derivations acting diagonally on the hyperbolic basis form a
    // two-dimensional torus
    NullspaceTracker diag(Q, der.dim());
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            if (r == c) continue;
            Vec row = vec_zero(Q, der.dim());
            for (int j = 0; j < der.dim(); ++j) row[j] = der.basis()[j][r * 8 + c];
            diag.add_constraint_dense(row);
        }
    REQUIRE(diag.kernel_dim() == 2);

    std::vector<Vec> coords = diag.basis();
    BasisSolver extend(Q, der.dim());
    for (const auto& v : coords) extend.add(v);
    for (int j = 0; j < der.dim(); ++j) {
        Vec e = unit(Q, der.dim(), j);
        if (extend.add(e)) coords.push_back(e);
    }
    LinearSubalgebra reordered = der.subalgebra_from_coords(coords);
    std::vector<BasisLabel> labels;
    for (int j = 0; j < reordered.dim(); ++j) labels.push_back({"der", "d" + std::to_string(j)});
    LieModel D(Q, labels, {0, 1});
    for (int i = 0; i < reordered.dim(); ++i)
        for (int j = i + 1; j < reordered.dim(); ++j) {
            const Vec& sc = reordered.structure_coords(i, j);
            for (int k = 0; k < reordered.dim(); ++k)
                if (!sc[k].is_zero()) D.add_structure_constant(i, j, k, sc[k]);
        }
    CHECK(jacobi_verify(D).ok);

    WeightDecomposition wd_der = weight_decomposition(D, {0, 1});
    std::vector<Vec> roots_der = nonzero_weights(wd_der);
    CHECK(roots_der.size() == 12);
    for (size_t k = 0; k < wd_der.spaces.size(); ++k)
        if (static_cast<int>(k) != wd_der.zero_index)
            CHECK(wd_der.spaces[k].vectors.size() == 1);
    CHECK(wd_der.spaces[wd_der.zero_index].vectors.size() == 2);

    const LieModel& G = qmodel(0);
    WeightDecomposition wd_g = weight_decomposition(G, {G.cartan()[0], G.cartan()[1]});
    std::vector<Vec> roots_g = nonzero_weights(wd_g);

    // six short roots each adjacent to six others, six long roots adjacent to
    // four: the signature that pins the rank-2 system down
    std::vector<int> expected = {4, 4, 4, 4, 4, 4, 6, 6, 6, 6, 6, 6};
    CHECK(neighbor_signature(roots_der) == expected);
    CHECK(neighbor_signature(roots_g) == expected);
}

TEST_CASE("Heisenberg grading under diag(1,0,-1)") {
    for (int i = 0; i < 6; ++i) {
        const LieModel& L = qmodel(i);
        SLayout lay = layout_of(L);
        CAPTURE(lay.r_dim);
        int n = lay.r_dim, m = lay.m_dim;
        GradedDecomposition g = grade_by_cocharacter(L, heisenberg_cocharacter(L));
        REQUIRE(g.degrees == std::vector<long>{-2, -1, 0, 1, 2});
        CHECK(g.pieces[0].size() == 1);
        CHECK(static_cast<int>(g.pieces[1].size()) == 2 + 2 * n);
        CHECK(static_cast<int>(g.pieces[2].size()) == 2 + m + 2 * n);
        CHECK(static_cast<int>(g.pieces[3].size()) == 2 + 2 * n);
        CHECK(g.pieces[4].size() == 1);

        // the top piece is the single matrix unit E13
        const Vec& top = g.pieces[4][0];
        for (int t = 0; t < L.dim(); ++t) CHECK(top[t].is_zero() == (t != 3));

        // [s1, s1] spans exactly s2: a Heisenberg pair of steps
        BasisSolver sq(L.field(), L.dim());
        const auto& s1 = g.pieces[3];
        for (size_t a = 0; a < s1.size(); ++a)
            for (size_t b = a + 1; b < s1.size(); ++b) sq.add(L.bracket(s1[a], s1[b]));
        CHECK(sq.rank() == 1);
        CHECK(sq.contains(top));

        // the semisimple part of the Levi: derived algebra of the zero piece
        BasisSolver derived(L.field(), L.dim());
        const auto& s0 = g.pieces[2];
        for (size_t a = 0; a < s0.size(); ++a)
            for (size_t b = a + 1; b < s0.size(); ++b) derived.add(L.bracket(s0[a], s0[b]));
        CHECK(derived.rank() == 1 + m + 2 * n);
    }
}

TEST_CASE("gradings with spectrum {-1,0,1}: abelian radicals exist exactly where expected") {
    const int counts[6] = {0, 12, 0, 27, 28, 0};
    const int plus_dims[6] = {0, 6, 0, 16, 27, 0};
    for (int i = 0; i < 6; ++i) {
        const LieModel& L = qmodel(i);
        CAPTURE(L.dim());
        std::vector<SiegelGrading> found = find_siegel_grading(L);
        CHECK(static_cast<int>(found.size()) == counts[i]);
        for (const auto& s : found) {
            CHECK(s.dim_plus == plus_dims[i]);
            CHECK(s.abelian);
        }
    }
}

TEST_CASE("subchains and their commutants inside the larger algebras") {
    struct Row {
        int model, src;
        int closure, centralizer;
    };
    // the small member sits inside the big algebra through the chain; the
    // centralizer is its dual partner
    const Row rows[] = {{3, 0, 14, 8}, {4, 2, 52, 3}, {4, 1, 28, 9}};
    for (const Row& r : rows) {
        const LieModel& L = qmodel(r.model);
        CAPTURE(L.dim());
        CAPTURE(r.src);
        auto gens = subchain_generators(L, qchain(), r.src, r.model);
        SubalgebraPair sp = subalgebra_generated_and_commutant(L, gens);
        CHECK(static_cast<int>(sp.closure.size()) == r.closure);
        CHECK(static_cast<int>(sp.centralizer.size()) == r.centralizer);
    }

    // the centralizer of the standard sl3 is the coefficient algebra block
    for (int i = 0; i < 6; ++i) {
        const LieModel& L = qmodel(i);
        SLayout lay = layout_of(L);
        CAPTURE(lay.r_dim);
        std::vector<Vec> sl3;
        for (int j = 0; j < 8; ++j) sl3.push_back(unit(L.field(), L.dim(), j));
        SubalgebraPair sp = subalgebra_generated_and_commutant(L, sl3);
        CHECK(static_cast<int>(sp.closure.size()) == 8);
        CHECK(static_cast<int>(sp.centralizer.size()) == lay.m_dim);
        for (const auto& v : sp.centralizer)
            for (int t = 0; t < L.dim(); ++t)
                if (!v[t].is_zero()) {
                    CHECK(t >= lay.m_off);
                    CHECK(t < lay.m_off + lay.m_dim);
                }
    }
}

TEST_CASE("construction over a finite field") {
    const Field& f11 = Field::prime(11);
    auto chain = cubic_chain(f11);
    LieModel L = build_s(*chain[5]);
    CHECK(L.dim() == 248);
    CHECK(L.cartan().size() == 8);
    CHECK(jacobi_verify(L).ok);
    CHECK(matrix_rank(L.killing_form()) == 248);
    // -6 mod 11
    CHECK(L.constants.at("c3").to_string() == "5");

    // small characteristics are refused outright
    for (long p : {5L, 7L}) {
        auto small = cubic_chain(Field::prime(p));
        CHECK_THROWS_AS(build_s(*small[0]), std::invalid_argument);
    }
}

TEST_CASE("every single-constant mutation breaks the Jacobi identity") {
    const LieModel& G = qmodel(0);
    const Field& Q = G.field();
    int entries = 0;
    for (int i = 0; i < G.dim(); ++i)
        for (int j = i + 1; j < G.dim(); ++j)
            for (const auto& [k, c] : G.pair_row(i, j)) {
                ++entries;
                LieModel M = G;
                M.add_structure_constant(i, j, k, Scalar(Q, 1));
                JacobiReport rep = jacobi_verify(M);
                CHECK(!rep.ok);
                REQUIRE(rep.witness[0] >= 0);
                // the reported witness is a genuine violation
                Vec a = unit(Q, M.dim(), rep.witness[0]);
                Vec b = unit(Q, M.dim(), rep.witness[1]);
                Vec cc = unit(Q, M.dim(), rep.witness[2]);
                Vec s = M.bracket(M.bracket(a, b), cc);
                s = vec_add(s, M.bracket(M.bracket(b, cc), a));
                s = vec_add(s, M.bracket(M.bracket(cc, a), b));
                CHECK(!vec_is_zero(s));
            }
    CHECK(entries == 60);

    // same behaviour on a handful of entries of the 52-dim instance
    const LieModel& F = qmodel(2);
    int tried = 0;
    for (int i = 0; i < F.dim() && tried < 8; ++i)
        for (int j = i + 1; j < F.dim() && tried < 8; ++j)
            for (const auto& [k, c] : F.pair_row(i, j)) {
                if (++tried > 8) break;
                LieModel M = F;
                M.add_structure_constant(i, j, k, Scalar(Q, 1));
                CHECK(!jacobi_verify(M).ok);
            }
}
