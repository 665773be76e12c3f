#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "jordan.hpp"

using namespace albert;

namespace {

CompositionElement random_comp(const CompositionAlgebra& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-3, 3);
    Vec c;
    for (int i = 0; i < alg.dim(); ++i) c.push_back(Scalar(alg.field(), pick(rng)));
    return alg.element(std::move(c));
}

JordanElement random_jordan(const JordanAlgebra& J, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-3, 3);
    const Field& f = J.field();
    return J.element(Scalar(f, pick(rng)), Scalar(f, pick(rng)), Scalar(f, pick(rng)),
                     random_comp(J.coeff(), rng), random_comp(J.coeff(), rng),
                     random_comp(J.coeff(), rng));
}

// Independent componentwise oracle for the symmetrized Hermitian-matrix product,
// expanded by hand from the 3x3 entries.
JordanElement oracle_multiply(const JordanElement& A, const JordanElement& B) {
    const Field& f = A.field();
    Scalar half = Scalar(f, 2).inverse();
    auto T = [](const CompositionElement& u, const CompositionElement& v) {
        return trace_pairing(u, v);
    };
    Scalar a = A.a * B.a + half * (T(A.z, B.z) + T(A.y, B.y));
    Scalar b = A.b * B.b + half * (T(A.z, B.z) + T(A.x, B.x));
    Scalar c = A.c * B.c + half * (T(A.y, B.y) + T(A.x, B.x));
    CompositionElement x =
        (multiply(conjugate(A.z), conjugate(B.y)) + multiply(conjugate(B.z), conjugate(A.y)) +
         A.x.scaled(B.b + B.c) + B.x.scaled(A.b + A.c))
            .scaled(half);
    CompositionElement y =
        (multiply(conjugate(A.x), conjugate(B.z)) + multiply(conjugate(B.x), conjugate(A.z)) +
         A.y.scaled(B.c + B.a) + B.y.scaled(A.c + A.a))
            .scaled(half);
    CompositionElement z =
        (multiply(conjugate(A.y), conjugate(B.x)) + multiply(conjugate(B.y), conjugate(A.x)) +
         A.z.scaled(B.a + B.b) + B.z.scaled(A.a + A.b))
            .scaled(half);
    return JordanElement{a, b, c, x, y, z};
}

std::vector<JordanAlgebra> standard_instances(const Field& f) {
    return {JordanAlgebra(CompositionAlgebra::base(f)),
            JordanAlgebra(CompositionAlgebra::quadratic(f, Scalar(f, 1))),
            JordanAlgebra(CompositionAlgebra::quaternion(f, Scalar(f, 1), Scalar(f, 1))),
            JordanAlgebra(CompositionAlgebra::quaternion(f, Scalar(f, 2), Scalar(f, -1))),
            JordanAlgebra(CompositionAlgebra::split_octonions(f))};
}

}  // namespace

TEST_CASE("unit law and diagonal products") {
    const Field& q = Field::rationals();
    JordanAlgebra J(CompositionAlgebra::split_octonions(q));
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        JordanElement alpha = random_jordan(J, rng);
        CHECK(jordan_multiply(J.identity(), alpha) == alpha);
        CHECK(jordan_multiply(alpha, J.identity()) == alpha);
    }
    JordanElement d1 = J.diagonal(Scalar(q, 2), Scalar(q, -1), Scalar(q, 7));
    JordanElement d2 = J.diagonal(Scalar(q, 3), Scalar(q, 5), Scalar(q, 4));
    CHECK(jordan_multiply(d1, d2) == J.diagonal(Scalar(q, 6), Scalar(q, -5), Scalar(q, 28)));
}

TEST_CASE("matrix-path product matches the componentwise oracle") {
    std::mt19937 rng(17);
    for (const Field* f : {&Field::rationals(), &Field::prime(5)}) {
        for (const auto& J : standard_instances(*f)) {
            for (int t = 0; t < 60; ++t) {
                JordanElement A = random_jordan(J, rng);
                JordanElement B = random_jordan(J, rng);
                JordanElement p = jordan_multiply(A, B);
                CHECK(p == oracle_multiply(A, B));
                CHECK(p == jordan_multiply(B, A));
            }
        }
    }
}

TEST_CASE("cubic data on diagonal and rank-one elements") {
    const Field& q = Field::rationals();
    JordanAlgebra J(CompositionAlgebra::split_octonions(q));
    JordanElement d = J.diagonal(Scalar(q, 2), Scalar(q, 3), Scalar(q, 5));
    CubicData cd = cubic_data(d);
    CHECK(cd.det == Scalar(q, 30));
    CHECK(cd.tr == Scalar(q, 10));
    CHECK(cd.sharp == J.diagonal(Scalar(q, 15), Scalar(q, 10), Scalar(q, 6)));
    CHECK(cd.sigma == Scalar(q, 31));

    JordanElement e11 = J.diagonal(Scalar(q, 1), Scalar(q), Scalar(q));
    CubicData cd1 = cubic_data(e11);
    CHECK(cd1.det.is_zero());
    CHECK(cd1.sharp.is_zero());
    CHECK(rank(e11) == 1);
    CHECK(rank1_paper_predicate(e11));
}

TEST_CASE("sharp identities and Cayley-Hamilton on samples") {
    std::mt19937 rng(23);
    for (const Field* f : {&Field::rationals(), &Field::prime(5), &Field::prime(7)}) {
        for (const auto& J : standard_instances(*f)) {
            for (int t = 0; t < 40; ++t) {
                JordanElement alpha = random_jordan(J, rng);
                CubicData cd = cubic_data(alpha);
                // (alpha#)# = det(alpha) alpha
                CHECK(cubic_data(cd.sharp).sharp == alpha.scaled(cd.det));
                // T(alpha#, alpha) = 3 det(alpha)
                CHECK(jordan_trace_form(cd.sharp, alpha) == Scalar(*f, 3) * cd.det);
                // Cayley-Hamilton with Jordan powers
                JordanElement sq = jordan_multiply(alpha, alpha);
                JordanElement cube = jordan_multiply(sq, alpha);
                JordanElement lhs = cube - sq.scaled(cd.tr) + alpha.scaled(cd.sigma) -
                                    J.identity().scaled(cd.det);
                CHECK(lhs.is_zero());
                // sigma agrees with the trace of sharp
                CHECK(cd.sigma == cubic_data(cd.sharp).tr);
            }
        }
    }
}

TEST_CASE("rank ladder") {
    const Field& q = Field::rationals();
    JordanAlgebra J(CompositionAlgebra::split_octonions(q));
    CHECK(rank(J.zero()) == 0);
    CHECK(rank(J.diagonal(Scalar(q, 1), Scalar(q), Scalar(q))) == 1);
    CHECK(rank(J.diagonal(Scalar(q, 1), Scalar(q, 1), Scalar(q))) == 2);
    CHECK(rank(J.diagonal(Scalar(q, 1), Scalar(q, 1), Scalar(q, 1))) == 3);
    CHECK(!rank1_paper_predicate(J.diagonal(Scalar(q, 1), Scalar(q, 1), Scalar(q))));
    // all-ones element built from octonion units
    JordanElement ones = J.element(Scalar(q, 1), Scalar(q, 1), Scalar(q, 1),
                                   J.coeff().one(), J.coeff().one(), J.coeff().one());
    CHECK(rank1_paper_predicate(ones));
    CHECK(cubic_data(ones).sharp.is_zero());
    CHECK(rank(ones) == 1);
}

TEST_CASE("rank-one predicate matches vanishing sharp exhaustively over J(k), F5") {
    const Field& f5 = Field::prime(5);
    JordanAlgebra J(CompositionAlgebra::base(f5));
    REQUIRE(J.dim() == 6);
    std::vector<long> digits(6, 0);
    long checked = 0;
    while (true) {
        Vec v;
        for (long d : digits) v.push_back(Scalar(f5, d));
        JordanElement alpha = J.from_vec(v);
        bool lhs = rank1_paper_predicate(alpha);
        bool rhs = !alpha.is_zero() && cubic_data(alpha).sharp.is_zero();
        if (lhs != rhs) {  // count misses without flooding assertion output
            CHECK(lhs == rhs);
        }
        ++checked;
        int i = 0;
        while (i < 6 && ++digits[i] == 5) digits[i++] = 0;
        if (i == 6) break;
    }
    CHECK(checked == 15625);
}

TEST_CASE("rank-one predicate matches vanishing sharp on samples of J(K) and J(O)") {
    std::mt19937 rng(31);
    const Field& f5 = Field::prime(5);
    for (const auto& J : {JordanAlgebra(CompositionAlgebra::quadratic(f5, Scalar(f5, 1))),
                          JordanAlgebra(CompositionAlgebra::split_octonions(f5))}) {
        int rank1_seen = 0;
        for (int t = 0; t < 4000; ++t) {
            JordanElement alpha = random_jordan(J, rng);
            bool lhs = rank1_paper_predicate(alpha);
            bool rhs = !alpha.is_zero() && cubic_data(alpha).sharp.is_zero();
            CHECK(lhs == rhs);
            rank1_seen += lhs ? 1 : 0;
        }
        // make sure the sample did hit the interesting locus
        JordanElement e11 = J.diagonal(Scalar(f5, 1), Scalar(f5), Scalar(f5));
        CHECK(rank1_paper_predicate(e11));
    }
}

TEST_CASE("cross product is symmetric and T(u x v, w) fully symmetric") {
    std::mt19937 rng(37);
    const Field& q = Field::rationals();
    JordanAlgebra J(CompositionAlgebra::split_octonions(q));
    for (int t = 0; t < 25; ++t) {
        JordanElement u = random_jordan(J, rng);
        JordanElement v = random_jordan(J, rng);
        JordanElement w = random_jordan(J, rng);
        CHECK(jordan_cross(u, v) == jordan_cross(v, u));
        Scalar s1 = jordan_trace_form(jordan_cross(u, v), w);
        Scalar s2 = jordan_trace_form(jordan_cross(u, w), v);
        Scalar s3 = jordan_trace_form(jordan_cross(v, w), u);
        CHECK(s1 == s2);
        CHECK(s2 == s3);
    }
    // bilinearity in the first slot
    JordanElement u = random_jordan(J, rng), v = random_jordan(J, rng), w = random_jordan(J, rng);
    Scalar lam(q, 3);
    JordanElement lhs = jordan_cross(u.scaled(lam) + v, w);
    JordanElement rhs = jordan_cross(u, w).scaled(lam) + jordan_cross(v, w);
    CHECK(lhs == rhs);
}

TEST_CASE("multiplication operator acts like the product") {
    std::mt19937 rng(41);
    const Field& f7 = Field::prime(7);
    JordanAlgebra J(CompositionAlgebra::quaternion(f7, Scalar(f7, 1), Scalar(f7, 1)));
    JordanElement alpha = random_jordan(J, rng);
    ExactMatrix L = multiplication_operator(J, alpha);
    for (int t = 0; t < 10; ++t) {
        JordanElement beta = random_jordan(J, rng);
        CHECK(L.apply(J.to_vec(beta)) == J.to_vec(jordan_multiply(alpha, beta)));
    }
}

TEST_CASE("cubic norm structures satisfy the package axioms") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (const Field* f : {&Field::rationals(), &Field::prime(5)}) {
        auto chain = cubic_chain(*f);
        REQUIRE(chain.size() == 6);
        std::vector<int> expected_dims{1, 3, 6, 9, 15, 27};
        for (size_t i = 0; i < chain.size(); ++i) {
            const CubicNormStructure& R = *chain[i];
            CHECK(R.dim() == expected_dims[i]);
            Vec e = R.basepoint();
            CHECK(R.norm_form(e).is_one());
            CHECK(R.sharp(e) == e);
            // T nondegenerate: Gram matrix on the coordinate basis has full rank
            ExactMatrix gram(*f, R.dim(), R.dim());
            for (int r = 0; r < R.dim(); ++r)
                for (int c = 0; c < R.dim(); ++c) {
                    Vec er = vec_zero(*f, R.dim()), ec = vec_zero(*f, R.dim());
                    er[r] = Scalar(*f, 1);
                    ec[c] = Scalar(*f, 1);
                    gram.at(r, c) = R.trace_form(er, ec);
                }
            CHECK(matrix_rank(gram) == R.dim());
            for (int t = 0; t < 15; ++t) {
                Vec v;
                for (int k = 0; k < R.dim(); ++k) v.push_back(Scalar(*f, pick(rng)));
                CHECK(R.sharp(R.sharp(v)) == vec_scaled(v, R.norm_form(v)));
                CHECK(R.trace_form(R.sharp(v), v) == Scalar(*f, 3) * R.norm_form(v));
            }
        }
    }
}

TEST_CASE("chain embeddings preserve the cubic package") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (const Field* f : {&Field::rationals(), &Field::prime(5)}) {
        auto chain = cubic_chain(*f);
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            const CubicNormStructure& R0 = *chain[i];
            const CubicNormStructure& R1 = *chain[i + 1];
            CHECK(embed_chain(R0, R1, R0.basepoint()) == R1.basepoint());
            for (int t = 0; t < 20; ++t) {
                Vec u, v;
                for (int k = 0; k < R0.dim(); ++k) {
                    u.push_back(Scalar(*f, pick(rng)));
                    v.push_back(Scalar(*f, pick(rng)));
                }
                Vec eu = embed_chain(R0, R1, u), ev = embed_chain(R0, R1, v);
                CHECK(R1.norm_form(eu) == R0.norm_form(u));
                CHECK(R1.trace_form(eu, ev) == R0.trace_form(u, v));
                CHECK(R1.sharp(eu) == embed_chain(R0, R1, R0.sharp(u)));
                // linearity
                CHECK(embed_chain(R0, R1, vec_add(u, v)) == vec_add(eu, ev));
            }
        }
        // non-adjacent pairs are rejected
        CHECK_THROWS_AS(embed_chain(*chain[0], *chain[2], chain[0]->basepoint()),
                        std::invalid_argument);
    }
}

TEST_CASE("diagonal chain examples") {
    const Field& q = Field::rationals();
    auto chain = cubic_chain(q);
    // lambda in k maps to lambda * e with det = lambda^3
    Vec lam{Scalar(q, 2)};
    Vec inE = embed_chain(*chain[0], *chain[1], lam);
    CHECK(inE == Vec(3, Scalar(q, 2)));
    CHECK(chain[1]->norm_form(inE) == Scalar(q, 8));
    // (a, b, c) maps to diag(a, b, c) with det = abc
    Vec abc{Scalar(q, 2), Scalar(q, 3), Scalar(q, 5)};
    Vec inJ = embed_chain(*chain[1], *chain[2], abc);
    CHECK(chain[2]->norm_form(inJ) == Scalar(q, 30));
}
