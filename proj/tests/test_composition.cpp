#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "composition.hpp"

using namespace albert;

namespace {

CompositionElement random_element(const CompositionAlgebra& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-4, 4);
    Vec c;
    for (int i = 0; i < alg.dim(); ++i) c.push_back(Scalar(alg.field(), pick(rng)));
    return alg.element(std::move(c));
}

// Every element of an F_p algebra of the given dimension, by odometer.
std::vector<CompositionElement> all_elements(const CompositionAlgebra& alg) {
    long p = alg.field().p();
    std::vector<CompositionElement> out;
    std::vector<long> digits(alg.dim(), 0);
    while (true) {
        Vec c;
        for (long d : digits) c.push_back(Scalar(alg.field(), d));
        out.push_back(alg.element(std::move(c)));
        int i = 0;
        while (i < alg.dim() && ++digits[i] == p) digits[i++] = 0;
        if (i == alg.dim()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("unit law and diagonal idempotents in Zorn's model") {
    const Field& q = Field::rationals();
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
        CompositionElement x = random_element(oct, rng);
        CHECK(multiply(oct.one(), x) == x);
        CHECK(multiply(x, oct.one()) == x);
    }
    CompositionElement e = oct.basis_element(0);
    CompositionElement f = oct.basis_element(7);
    CHECK(multiply(e, f).is_zero());
    CHECK(multiply(f, e).is_zero());
}

TEST_CASE("wedge term of the Zorn product") {
    const Field& q = Field::rationals();
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
    CompositionElement x = oct.basis_element(1);  // (0, e1, 0, 0)
    CompositionElement y = oct.basis_element(2);  // (0, e2, 0, 0)
    CHECK(multiply(x, y) == oct.basis_element(6));  // (0, 0, e3', 0)
}

TEST_CASE("involution data") {
    const Field& q = Field::rationals();
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
    auto [conj1, tr1, n1] = involution_data(oct.one());
    CHECK(conj1 == oct.one());
    CHECK(tr1 == Scalar(q, 2));
    CHECK(n1.is_one());

    Vec c{Scalar(q, 3), Scalar(q, 1), Scalar(q, 0), Scalar(q, 2),
          Scalar(q, -1), Scalar(q, 4), Scalar(q, 0), Scalar(q, 5)};
    CompositionElement x = oct.element(c);
    CHECK(trace(x) == Scalar(q, 8));                 // a + b
    CHECK(norm(x) == Scalar(q, 3 * 5 - (-1 + 0 + 0)));  // ab - <v', v>
    CHECK(conjugate(conjugate(x)) == x);
    // Tr(x) 1 = x + conj(x) and N(x) 1 = x conj(x)
    CHECK(x + conjugate(x) == oct.scalar_multiple_of_one(trace(x)));
    CHECK(multiply(x, conjugate(x)) == oct.scalar_multiple_of_one(norm(x)));
}

TEST_CASE("composition law exhaustively for small F5 algebras") {
    const Field& f5 = Field::prime(5);
    std::vector<CompositionAlgebra> algs{
        CompositionAlgebra::base(f5),
        CompositionAlgebra::quadratic(f5, Scalar(f5, 1)),
        CompositionAlgebra::quadratic(f5, Scalar(f5, 2)),
    };
    for (const auto& alg : algs) {
        auto elems = all_elements(alg);
        for (const auto& x : elems)
            for (const auto& y : elems) CHECK(norm(multiply(x, y)) == norm(x) * norm(y));
    }
}

TEST_CASE("composition and anti-automorphism laws on samples") {
    std::mt19937 rng(7);
    for (const Field* f : {&Field::rationals(), &Field::prime(5), &Field::prime(7)}) {
        std::vector<CompositionAlgebra> algs{
            CompositionAlgebra::quadratic(*f, Scalar(*f, 2)),
            CompositionAlgebra::quaternion(*f, Scalar(*f, 1), Scalar(*f, 1)),
            CompositionAlgebra::quaternion(*f, Scalar(*f, 2), Scalar(*f, -3)),
            CompositionAlgebra::split_octonions(*f),
        };
        for (const auto& alg : algs) {
            for (int t = 0; t < 200; ++t) {
                CompositionElement x = random_element(alg, rng);
                CompositionElement y = random_element(alg, rng);
                CompositionElement z = random_element(alg, rng);
                CHECK(norm(multiply(x, y)) == norm(x) * norm(y));
                CHECK(conjugate(multiply(x, y)) == multiply(conjugate(y), conjugate(x)));
                // quadratic relation x^2 - Tr(x) x + N(x) = 0
                CompositionElement lhs =
                    multiply(x, x) - x.scaled(trace(x)) + alg.scalar_multiple_of_one(norm(x));
                CHECK(lhs.is_zero());
                // trace associativity
                CHECK(trace(multiply(multiply(x, y), z)) == trace(multiply(x, multiply(y, z))));
                // alternativity consequences
                CHECK(multiply(multiply(conjugate(x), y), y) ==
                      multiply(conjugate(x), multiply(y, y)));
                if (!norm(x).is_zero()) CHECK(multiply(x, multiply(invert(x), y)) == y);
            }
        }
    }
}

TEST_CASE("inversion") {
    const Field& q = Field::rationals();
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
    CHECK(invert(oct.one()) == oct.one());
    Vec c = vec_zero(q, 8);
    c[0] = Scalar(q, 1);
    c[7] = Scalar(q, 2);
    CompositionElement x = oct.element(c);
    CHECK(norm(x) == Scalar(q, 2));
    CompositionElement xi = invert(x);
    CHECK(xi.coord(0) == Scalar(q, 1));
    CHECK(xi.coord(7) == Scalar::parse(q, "1/2"));
    CHECK(multiply(x, xi) == oct.one());
    CHECK(multiply(xi, x) == oct.one());
    CHECK_THROWS_AS(invert(oct.basis_element(1)), std::domain_error);
}

TEST_CASE("element rank and the trace-zero rank-1 cone") {
    const Field& q = Field::rationals();
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
    CHECK(element_rank(oct.zero()) == 0);
    CHECK(element_rank(oct.one()) == 1);
    CHECK(element_rank(oct.one().scaled(Scalar(q, -3))) == 1);
    CompositionElement v1 = oct.basis_element(1);
    CHECK(element_rank(v1) == 1);
    CHECK(in_rank1_trace0_cone(v1));
    CompositionElement e11 = oct.basis_element(0);  // trace 1, norm 0; disc = 1
    CHECK(element_rank(e11) == 2);
    CHECK(!in_rank1_trace0_cone(e11));
    CHECK(!in_rank1_trace0_cone(oct.zero()));
    // generic invertible element
    std::mt19937 rng(3);
    CompositionElement x = random_element(oct, rng);
    while (norm(x).is_zero() || (trace(x) * trace(x) - Scalar(q, 4) * norm(x)).is_zero())
        x = random_element(oct, rng);
    CHECK(element_rank(x) == 2);
}

TEST_CASE("chain embeddings are norm-compatible homomorphisms") {
    const Field& f5 = Field::prime(5);
    CompositionAlgebra K = CompositionAlgebra::quadratic(f5, Scalar(f5, 1));
    CompositionAlgebra D = CompositionAlgebra::quaternion(f5, Scalar(f5, 1), Scalar(f5, 1));
    CompositionAlgebra O = CompositionAlgebra::split_octonions(f5);

    auto ks = all_elements(K);
    for (const auto& x : ks)
        for (const auto& y : ks) {
            CHECK(embed_next(multiply(x, y), D) == multiply(embed_next(x, D), embed_next(y, D)));
            CHECK(norm(embed_next(x, D)) == norm(x));
            CHECK(trace(embed_next(x, D)) == trace(x));
            CHECK(conjugate(embed_next(x, D)) == embed_next(conjugate(x), D));
        }
    CHECK(embed_next(K.one(), D) == D.one());
    CHECK(embed_next(D.one(), O) == O.one());

    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        CompositionElement x = random_element(D, rng);
        CompositionElement y = random_element(D, rng);
        CHECK(embed_next(multiply(x, y), O) == multiply(embed_next(x, O), embed_next(y, O)));
        CHECK(norm(embed_next(x, O)) == norm(x));
        CHECK(trace(embed_next(x, O)) == trace(x));
        CHECK(conjugate(embed_next(x, O)) == embed_next(conjugate(x), O));
    }

    // non-adjacent or mismatched steps are rejected
    CompositionAlgebra B = CompositionAlgebra::base(f5);
    CHECK_THROWS_AS(embed_next(B.one(), O), std::invalid_argument);
    CompositionAlgebra D23 = CompositionAlgebra::quaternion(f5, Scalar(f5, 2), Scalar(f5, 3));
    CHECK_THROWS_AS(embed_next(D23.one(), O), std::invalid_argument);
}

TEST_CASE("octonion structure constants are signed unit coefficients") {
    const auto& t = octonion_structure_constants();
    REQUIRE(t.size() == 8);
    // unit row/column
    const Field& q = Field::rationals();
    CompositionAlgebra oct = CompositionAlgebra::split_octonions(q);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CompositionElement prod = multiply(oct.basis_element(i), oct.basis_element(j));
            for (int k = 0; k < 8; ++k) {
                CHECK(t[i][j][k] >= -1);
                CHECK(t[i][j][k] <= 1);
                CHECK(prod.coord(k) == Scalar(q, t[i][j][k]));
            }
        }
    CHECK(t[1][2][6] == 1);  // e1 e2 = e3'
}
