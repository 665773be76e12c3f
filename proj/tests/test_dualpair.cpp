#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dualpair.hpp"
#include "matrix.hpp"

using namespace albert;

namespace {

Scalar random_scalar(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-2, 2);
    return Scalar(f, pick(rng));
}

DMatrix random_dmatrix(const CompositionAlgebra& D, int rows, int cols, std::mt19937& rng) {
    DMatrix out(D, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Vec c;
            for (int s = 0; s < D.dim(); ++s) c.push_back(random_scalar(D.field(), rng));
            out.at(i, j) = D.element(std::move(c));
        }
    return out;
}

DMatrix random_invertible(const CompositionAlgebra& D, int n, std::mt19937& rng) {
    while (true) {
        DMatrix A = random_dmatrix(D, n, n, rng);
        try {
            dmatrix_inverse(A);
            return A;
        } catch (const std::domain_error&) {
        }
    }
}

// an exact isometry from a random Lie-algebra element via the Cayley map
DMatrix random_isometry(const HermitianSpace& V, std::mt19937& rng) {
    auto lie = V.isometry_lie_algebra();
    while (true) {
        DMatrix S(V.coeff(), V.dim(), V.dim());
        for (const auto& b : lie) S = S + b.scaled(random_scalar(V.field(), rng));
        try {
            return V.cayley_isometry(S);
        } catch (const std::domain_error&) {
        }
    }
}

int centralizer_dimension(const std::vector<DMatrix>& ambient,
                          const std::vector<ExactMatrix>& generators, const Field& f, int n) {
    ExactMatrix M(f, n * n * static_cast<int>(generators.size()),
                  static_cast<int>(ambient.size()));
    for (size_t j = 0; j < ambient.size(); ++j) {
        ExactMatrix Z = realize_dmatrix(ambient[j]);
        for (size_t i = 0; i < generators.size(); ++i) {
            ExactMatrix C = Z * generators[i] - generators[i] * Z;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    M.at(static_cast<int>(i) * n * n + r * n + c, static_cast<int>(j)) =
                        C.at(r, c);
        }
    }
    return static_cast<int>(nullspace(M).size());
}

}  // namespace

TEST_CASE("matrices over a coefficient algebra") {
    const Field& Q = Field::rationals();
    std::mt19937 rng(411);
    CompositionAlgebra D = CompositionAlgebra::quaternion(Q, Scalar(Q, 1), Scalar(Q, 1));

    DMatrix g = random_dmatrix(D, 2, 3, rng);
    CHECK(g.conj_transpose().rows() == 3);
    CHECK(g.conj_transpose().conj_transpose() == g);

    DMatrix a = random_dmatrix(D, 2, 2, rng);
    DMatrix b = random_dmatrix(D, 2, 2, rng);
    DMatrix c = random_dmatrix(D, 2, 2, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj_transpose() == b.conj_transpose() * a.conj_transpose());
    CHECK(DMatrix::identity(D, 2) * a == a);

    // realization is a ring map and unrealization inverts it
    CHECK(realize_dmatrix(a * b) == realize_dmatrix(a) * realize_dmatrix(b));
    CHECK(realize_dmatrix(a + b) == realize_dmatrix(a) + realize_dmatrix(b));
    CHECK(unrealize_dmatrix(D, realize_dmatrix(g), 2, 3) == g);

    DMatrix u = random_invertible(D, 2, rng);
    CHECK(u * dmatrix_inverse(u) == DMatrix::identity(D, 2));
    CHECK(dmatrix_inverse(u) * u == DMatrix::identity(D, 2));

    // the trace of the realized matrix agrees with the direct trace
    Scalar tr = ktrace_dmatrix(a);
    ExactMatrix ra = realize_dmatrix(a);
    Scalar tr2(Q, 0);
    for (int i = 0; i < ra.rows(); ++i) tr2 = tr2 + ra.at(i, i);
    CHECK(tr == tr2);
    CHECK(ktrace_dmatrix(a * b) == ktrace_dmatrix(b * a));

    ExactMatrix bad = ExactMatrix::identity(Q, 8);
    bad.at(0, 1) = Scalar(Q, 1);
    CHECK_THROWS_AS(unrealize_dmatrix(D, bad, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(a * g.conj_transpose() * g, std::invalid_argument);  // 2x2 times 3x2
    CHECK_THROWS_AS(dmatrix_inverse(DMatrix(D, 2, 2)), std::domain_error);
}

TEST_CASE("hermitian spaces and their isometries") {
    const Field& F5 = Field::prime(5);
    const Field& Q = Field::rationals();
    std::mt19937 rng(412);

    HermitianSpace V = HermitianSpace::quadratic(F5, {Scalar(F5, 1), Scalar(F5, 1), Scalar(F5, 1)});
    CHECK(V.dim() == 3);
    CHECK(V.kdim() == 3);
    CHECK(V.eps() == 1);
    CHECK(V.isometry_lie_algebra().size() == 3);

    HermitianSpace W = HermitianSpace::symplectic(F5, 1);
    CHECK(W.kdim() == 2);
    CHECK(W.eps() == -1);
    CHECK(W.isometry_lie_algebra().size() == 3);

    for (int trial = 0; trial < 5; ++trial) {
        DMatrix g = random_isometry(V, rng);
        CHECK(V.is_isometry(g));
        ExactMatrix rg = realize_dmatrix(g);
        ExactMatrix np = rg.transpose() * V.realized_gram() * rg;
        CHECK(np == V.realized_gram());
    }

    // quaternionic lines: a Hermitian unit and a skew-Hermitian unit
    CompositionAlgebra D = CompositionAlgebra::quaternion(F5, Scalar(F5, 1), Scalar(F5, 1));
    HermitianSpace Vq = HermitianSpace::line(D, 1, D.one());
    HermitianSpace Wq = HermitianSpace::line(D, -1, D.basis_element(1));
    CHECK(Vq.kdim() == 4);
    CHECK(Vq.isometry_lie_algebra().size() == 3);
    CHECK(Wq.isometry_lie_algebra().size() == 1);
    DMatrix h = random_isometry(Wq, rng);
    CHECK(Wq.is_isometry(h));

    // constructor rejections
    DMatrix notherm(D, 1, 1);
    notherm.at(0, 0) = D.one();
    CHECK_THROWS_AS(HermitianSpace(D, -1, notherm), std::invalid_argument);  // wrong symmetry
    CHECK_THROWS_AS(HermitianSpace::line(D, 1, D.zero()), std::invalid_argument);  // degenerate
    CHECK_THROWS_AS(HermitianSpace::quadratic(Q, {Scalar(Q, 1), Scalar(Q, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        HermitianSpace::line(CompositionAlgebra::split_octonions(Q), 1,
                             CompositionAlgebra::split_octonions(Q).one()),
        std::invalid_argument);
    CHECK_THROWS_AS(HermitianSpace::quadratic(Q, {}), std::invalid_argument);
}

TEST_CASE("tensor product carries a symplectic form") {
    const Field& F5 = Field::prime(5);
    std::mt19937 rng(413);

    HermitianSpace V = HermitianSpace::quadratic(F5, {Scalar(F5, 1), Scalar(F5, 1), Scalar(F5, 1)});
    HermitianSpace W = HermitianSpace::symplectic(F5, 1);
    HermitianSpace T = tensor_symplectic(V, W);
    CHECK(T.kdim() == 6);
    CHECK(T.eps() == -1);
    ExactMatrix G = realize_dmatrix(T.gram());
    CHECK(G.transpose() == G.scaled(Scalar(F5, -1)));
    CHECK(matrix_rank(G) == 6);

    CompositionAlgebra D = CompositionAlgebra::quaternion(F5, Scalar(F5, 1), Scalar(F5, 1));
    HermitianSpace Vq = HermitianSpace::line(D, 1, D.one());
    HermitianSpace Wq = HermitianSpace::line(D, -1, D.basis_element(1));
    HermitianSpace Tq = tensor_symplectic(Vq, Wq);
    CHECK(Tq.kdim() == 4);
    ExactMatrix Gq = realize_dmatrix(Tq.gram());
    CHECK(Gq.transpose() == Gq.scaled(Scalar(F5, -1)));
    CHECK(matrix_rank(Gq) == 4);

    CHECK_THROWS_AS(tensor_symplectic(V, V), std::invalid_argument);
    CHECK_THROWS_AS(tensor_symplectic(Vq, Vq), std::invalid_argument);
    CHECK_THROWS_AS(tensor_symplectic(V, Wq), std::invalid_argument);
}

TEST_CASE("commuting isometry pairs inside the symplectic group") {
    const Field& F5 = Field::prime(5);
    std::mt19937 rng(414);

    HermitianSpace V = HermitianSpace::quadratic(F5, {Scalar(F5, 1), Scalar(F5, 1), Scalar(F5, 1)});
    HermitianSpace W = HermitianSpace::symplectic(F5, 1);
    HermitianSpace T = tensor_symplectic(V, W);
    ExactMatrix G = realize_dmatrix(T.gram());
    DMatrix idv = DMatrix::identity(V.coeff(), V.dim());
    DMatrix idw = DMatrix::identity(W.coeff(), W.dim());
    CHECK(embed_pair(V, W, idv, idw) == ExactMatrix::identity(F5, 6));

    for (int trial = 0; trial < 8; ++trial) {
        DMatrix g = random_isometry(V, rng);
        DMatrix h = random_isometry(W, rng);
        ExactMatrix Mg = embed_pair(V, W, g, idw);
        ExactMatrix Mh = embed_pair(V, W, idv, h);
        CHECK(Mg * Mh == Mh * Mg);
        CHECK(Mg * Mh == embed_pair(V, W, g, h));
        CHECK(Mg.transpose() * G * Mg == G);
        CHECK(Mh.transpose() * G * Mh == G);
    }

    CompositionAlgebra D = CompositionAlgebra::quaternion(F5, Scalar(F5, 1), Scalar(F5, 1));
    HermitianSpace Vq = HermitianSpace::line(D, 1, D.one());
    HermitianSpace Wq = HermitianSpace::line(D, -1, D.basis_element(1));
    HermitianSpace Tq = tensor_symplectic(Vq, Wq);
    ExactMatrix Gq = realize_dmatrix(Tq.gram());
    DMatrix id1 = DMatrix::identity(D, 1);
    CHECK(embed_pair(Vq, Wq, id1, id1) == ExactMatrix::identity(F5, 4));
    for (int trial = 0; trial < 8; ++trial) {
        DMatrix g = random_isometry(Vq, rng);
        DMatrix h = random_isometry(Wq, rng);
        ExactMatrix Mg = embed_pair(Vq, Wq, g, id1);
        ExactMatrix Mh = embed_pair(Vq, Wq, id1, h);
        CHECK(Mg * Mh == Mh * Mg);
        CHECK(Mg.transpose() * Gq * Mg == Gq);
        CHECK(Mh.transpose() * Gq * Mh == Gq);
    }

    DMatrix notiso(D, 1, 1);
    notiso.at(0, 0) = D.scalar_multiple_of_one(Scalar(F5, 2));
    CHECK_THROWS_AS(embed_pair(Vq, Wq, notiso, id1), std::invalid_argument);
}

TEST_CASE("each factor centralizes the other at the Lie level") {
    const Field& F5 = Field::prime(5);

    HermitianSpace V = HermitianSpace::quadratic(F5, {Scalar(F5, 1), Scalar(F5, 1), Scalar(F5, 1)});
    HermitianSpace W = HermitianSpace::symplectic(F5, 1);
    HermitianSpace T = tensor_symplectic(V, W);
    ExactMatrix G = realize_dmatrix(T.gram());

    auto ambient = T.isometry_lie_algebra();
    CHECK(ambient.size() == 21);

    DMatrix zv(V.coeff(), V.dim(), V.dim());
    DMatrix zw(W.coeff(), W.dim(), W.dim());
    std::vector<ExactMatrix> img_v, img_w;
    for (const auto& s : V.isometry_lie_algebra()) img_v.push_back(embed_pair_lie(V, W, s, zw));
    for (const auto& h : W.isometry_lie_algebra()) img_w.push_back(embed_pair_lie(V, W, zv, h));
    for (const auto& E : img_v) CHECK((E.transpose() * G + G * E).is_zero());
    for (const auto& E : img_w) CHECK((E.transpose() * G + G * E).is_zero());
    for (const auto& A : img_v)
        for (const auto& B : img_w) CHECK(A * B == B * A);

    // the centralizer of each image is exactly the span of the other
    CHECK(centralizer_dimension(ambient, img_v, F5, 6) == 3);
    CHECK(centralizer_dimension(ambient, img_w, F5, 6) == 3);
}

TEST_CASE("siegel stabilizer of a polarization") {
    const Field& Q = Field::rationals();
    std::mt19937 rng(415);

    HermitianSpace W = HermitianSpace::symplectic(Q, 2);
    SiegelData S(W, standard_polarization(W));
    CHECK(S.rank() == 2);
    CHECK(S.n_basis().size() == 3);      // symmetric 2x2 matrices
    CHECK(S.n_complement().size() == 1);

    DMatrix X0 = random_dmatrix(S.coeff(), 2, 2, rng);
    CHECK(S.star_of_hom_fe(S.star_of_hom_fe(X0)) == X0);

    const auto& NB = S.n_basis();
    DMatrix X = NB[0] + NB[1].scaled(Scalar(Q, 3));
    DMatrix X2 = NB[2].scaled(Scalar(Q, -2)) + NB[0];
    CHECK(S.unipotent_matrix(X) * S.unipotent_matrix(X2) == S.unipotent_matrix(X + X2));
    CHECK(S.space().is_isometry(S.unipotent_matrix(X)));
    CHECK_FALSE(S.space().is_isometry(S.unipotent_matrix(S.n_complement()[0])));

    DMatrix A = random_invertible(S.coeff(), 2, rng);
    DMatrix mA = S.levi_matrix(A);
    CHECK(S.space().is_isometry(mA));
    CHECK(mA * S.unipotent_matrix(X) * dmatrix_inverse(mA) ==
          S.unipotent_matrix(S.transport(A, X)));

    // polarization misuse
    HermitianSpace V3 = HermitianSpace::quadratic(Q, {Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 1)});
    CHECK_THROWS_AS(standard_polarization(V3), std::invalid_argument);
    HermitianSpace V4 = HermitianSpace::quadratic(
        Q, {Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 1)});
    CHECK_THROWS_AS(standard_polarization(V4), std::invalid_argument);
    Polarization bad = standard_polarization(W);
    bad.f_basis.pop_back();
    CHECK_THROWS_AS(SiegelData(W, bad), std::invalid_argument);
}

TEST_CASE("characters of the unipotent radical and their coadjoint transport") {
    const Field& Q = Field::rationals();
    std::mt19937 rng(416);

    HermitianSpace W = HermitianSpace::symplectic(Q, 2);
    SiegelData S(W, standard_polarization(W));
    HermitianSpace V = HermitianSpace::quadratic(Q, {Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, -1)});

    DMatrix T = random_dmatrix(V.coeff(), 3, 2, rng);
    DMatrix Y = moment_map(V, S, T);
    CHECK(S.star_of_hom_ef(Y) == Y.scaled(Scalar(Q, -S.space().eps())));
    CHECK(moment_map(V, S, DMatrix(V.coeff(), 3, 2)).is_zero());

    DMatrix A = random_invertible(S.coeff(), 2, rng);
    DMatrix Ainv = dmatrix_inverse(A);
    CHECK(moment_map(V, S, T * Ainv) == S.coadjoint(A, Y));

    for (const auto& X : S.n_basis()) {
        CHECK(S.character_exponent(S.coadjoint(A, Y), X) ==
              S.character_exponent(Y, S.transport(Ainv, X)));
        DMatrix X2 = S.n_basis()[0];
        CHECK(S.character_exponent(Y, X + X2) ==
              S.character_exponent(Y, X) + S.character_exponent(Y, X2));
    }

    // stabilizers on a rank-one example
    HermitianSpace W2 = HermitianSpace::symplectic(Q, 1);
    SiegelData S2(W2, standard_polarization(W2));
    CompositionAlgebra B = CompositionAlgebra::base(Q);
    DMatrix Y1(B, 1, 1);
    Y1.at(0, 0) = B.one();
    DMatrix one = DMatrix::identity(B, 1);
    CHECK(S2.stabilizes(one, Y1));
    CHECK(S2.stabilizes(one.scaled(Scalar(Q, -1)), Y1));
    CHECK_FALSE(S2.stabilizes(one.scaled(Scalar(Q, 2)), Y1));
    CHECK(S2.infinitesimal_stabilizer(Y1).empty());
    CHECK(S2.infinitesimal_stabilizer(DMatrix(B, 1, 1)).size() == 1);
    CHECK(S2.stabilizes(one.scaled(Scalar(Q, 2)), DMatrix(B, 1, 1)));

    CHECK_THROWS_AS(moment_map(V, S2, T), std::invalid_argument);  // wrong shape
}

TEST_CASE("siegel data against a non-standard pairing") {
    const Field& Q = Field::rationals();
    std::mt19937 rng(417);
    CompositionAlgebra B = CompositionAlgebra::base(Q);

    DMatrix gram(B, 4, 4);
    DMatrix P(B, 2, 2);
    P.at(0, 0) = B.one();
    P.at(0, 1) = B.scalar_multiple_of_one(Scalar(Q, 2));
    P.at(1, 1) = B.one();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            gram.at(i, 2 + j) = P.at(i, j);
            gram.at(2 + j, i) = P.at(i, j).scaled(Scalar(Q, -1));
        }
    HermitianSpace W(B, -1, gram);
    SiegelData S(W, standard_polarization(W));
    CHECK(S.pairing() == P);
    CHECK(S.n_basis().size() == 3);
    CHECK(S.n_complement().size() == 1);

    DMatrix A = random_invertible(B, 2, rng);
    CHECK(S.space().is_isometry(S.levi_matrix(A)));
    const DMatrix& X = S.n_basis()[0];
    CHECK(S.space().is_isometry(S.unipotent_matrix(X)));
    CHECK(S.levi_matrix(A) * S.unipotent_matrix(X) * dmatrix_inverse(S.levi_matrix(A)) ==
          S.unipotent_matrix(S.transport(A, X)));

    HermitianSpace V = HermitianSpace::quadratic(Q, {Scalar(Q, 1), Scalar(Q, 1)});
    DMatrix T = random_dmatrix(B, 2, 2, rng);
    DMatrix Y = moment_map(V, S, T);
    CHECK(S.star_of_hom_ef(Y) == Y);
    CHECK(moment_map(V, S, T * dmatrix_inverse(A)) == S.coadjoint(A, Y));
}

TEST_CASE("quaternionic hyperbolic plane") {
    const Field& Q = Field::rationals();
    CompositionAlgebra D = CompositionAlgebra::quaternion(Q, Scalar(Q, 1), Scalar(Q, 1));

    HermitianSpace W = HermitianSpace::hyperbolic(D, -1, 1);
    CHECK(W.kdim() == 8);
    SiegelData S(W, standard_polarization(W));
    CHECK(S.rank() == 1);
    CHECK(S.n_basis().size() == 1);      // the center of the coefficient algebra
    CHECK(S.n_complement().size() == 3);

    // the Levi is the unit group of the coefficient algebra
    DMatrix A(D, 1, 1);
    A.at(0, 0) = D.basis_element(1);
    CHECK(S.space().is_isometry(S.levi_matrix(A)));
    DMatrix B1(D, 1, 1);
    B1.at(0, 0) = D.element({Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, -1), Scalar(Q, 1)});
    CHECK(S.space().is_isometry(S.levi_matrix(B1)));
    CHECK(S.space().is_isometry(S.unipotent_matrix(S.n_basis()[0])));

    DMatrix X = S.n_basis()[0];
    CHECK(S.levi_matrix(A) * S.unipotent_matrix(X) * dmatrix_inverse(S.levi_matrix(A)) ==
          S.unipotent_matrix(S.transport(A, X)));

    // a quaternionic Hermitian line maps into the plane's oscillator space
    HermitianSpace V = HermitianSpace::line(D, 1, D.one());
    DMatrix T(D, 1, 1);
    T.at(0, 0) = D.basis_element(2);
    DMatrix Y = moment_map(V, S, T);
    CHECK(S.star_of_hom_ef(Y) == Y);
    CHECK(S.stabilizes(DMatrix::identity(D, 1), Y));
}
