#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "opmodels.hpp"

using namespace albert;

namespace {

const OperatorCheck& check_named(const OperatorRelationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    throw std::logic_error("no check named " + name);
}

}  // namespace

TEST_CASE("cyclotomic integers and additive characters") {
    const long p = 5;
    auto z = CyclotomicInt::zeta_power(p, 1);
    auto acc = CyclotomicInt::one(p);
    for (int i = 0; i < 5; ++i) acc = acc * z;
    CHECK(acc.is_one());
    auto total = CyclotomicInt::zero(p);
    for (long e = 0; e < p; ++e) total = total + CyclotomicInt::zeta_power(p, e);
    CHECK(total.is_zero());
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            CHECK(CyclotomicInt::zeta_power(p, a) * CyclotomicInt::zeta_power(p, b) ==
                  CyclotomicInt::zeta_power(p, a + b));
    CHECK(CyclotomicInt::zeta_power(p, 2) != CyclotomicInt::zeta_power(p, 3));
    CHECK_THROWS_AS(CyclotomicInt::zeta_power(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(CyclotomicInt::one(5) + CyclotomicInt::one(7), std::invalid_argument);

    for (auto [cp, m] : {std::pair<long, int>{5, 1}, {3, 2}, {5, 2}}) {
        GaloisField F(cp, m);
        const long q = F.q();
        std::vector<long> hits(static_cast<size_t>(cp), 0);
        for (long a = 0; a < q; ++a) {
            if (a != 0) CHECK(F.mul(a, F.inverse(a)) == 1);
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.trace(a) == F.trace(F.pow(a, cp)));
            hits[static_cast<size_t>(F.trace(a))]++;
        }
        for (long r = 0; r < cp; ++r) CHECK(hits[static_cast<size_t>(r)] == q / cp);
        AdditiveCharacter psi(F);
        auto sum = CyclotomicInt::zero(cp);
        bool nontrivial = false;
        for (long a = 0; a < q; ++a) {
            sum = sum + psi(a);
            if (!psi(a).is_one()) nontrivial = true;
            for (long b = 0; b < q; ++b) CHECK(psi(F.add(a, b)) == psi(a) * psi(b));
        }
        CHECK(nontrivial);
        CHECK(sum.is_zero());
    }

    GaloisField f5(5, 1);
    AdditiveCharacter psi(f5);
    const Field& F5 = Field::prime(5);
    CHECK(psi(Scalar(F5, 3) + Scalar(F5, 4)) == psi(Scalar(F5, 3)) * psi(Scalar(F5, 4)));
    CHECK_THROWS_AS(psi(Scalar(Field::rationals(), 1)), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(2, 13), std::invalid_argument);
    CHECK_THROWS_AS(f5.inverse(0), std::domain_error);
}

TEST_CASE("value-table operators compose along their loci") {
    const Field& f = Field::prime(5);
    std::vector<std::vector<long>> keys;
    for (long i = 0; i < 5; ++i) keys.push_back({i});
    FiniteFunctionSpace space(f, keys);
    CHECK(space.size() == 5);
    CHECK(space.index_of({3}) == 3);
    CHECK(space.index_of({7}) == 2);  // residues are canonicalized
    CHECK(space.index_of({1, 1}) == -1);

    // shift(i) = i + 1 with phase zeta^i, defined away from i = 4
    auto shift = ModelOperator::from_action(
        space, 5, "shift", [](const Vec& pt) { return pt[0].to_long() != 4; },
        [&](const Vec& pt) { return Vec{pt[0] + Scalar(f, 1)}; },
        [](const Vec& pt) { return pt[0]; });
    CHECK(shift.locus_size() == 4);
    CHECK(shift.defined_at(0));
    CHECK(!shift.defined_at(4));
    CHECK(shift.target(2) == 3);
    CHECK(shift.multiplier(2) == CyclotomicInt::zeta_power(5, 2));

    auto id = ModelOperator::identity(space, 5);
    CHECK((id * shift).first_difference(shift) == std::nullopt);
    CHECK((shift * id) == shift);

    // composition: locus pulls back, targets chain, phases add
    auto twice = shift * shift;
    CHECK(twice.locus_size() == 3);  // i = 3 maps to 4, where shift is undefined
    CHECK(twice.target(1) == 3);
    CHECK(twice.multiplier(1) == CyclotomicInt::zeta_power(5, 1 + 2));

    // application to a value table: undefined slots give zero
    std::vector<CyclotomicInt> delta(5, CyclotomicInt::zero(5));
    delta[3] = CyclotomicInt::one(5);
    auto image = shift.apply(delta);
    CHECK(image[2] == CyclotomicInt::zeta_power(5, 2));
    for (size_t i : {0u, 1u, 3u, 4u}) CHECK(image[i].is_zero());

    auto flip = ModelOperator::from_action(
        space, 5, "flip", [](const Vec&) { return true; },
        [&](const Vec& pt) { return Vec{-pt[0]}; },
        [&](const Vec&) { return Scalar(f, 0); });
    CHECK((flip * flip) == id);
    CHECK(flip.first_difference(id).has_value());
    CHECK(!flip.same_locus(shift));

    CHECK_THROWS_AS(ModelOperator::from_table(space, 5, "bad", {1, 1, 1, 1, 1},
                                              {0, 1, 2, 3, 9}, {0, 0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModelOperator::from_table(space, 5, "bad", {1}, {0}, {0}),
                    std::invalid_argument);
    FiniteFunctionSpace other(f, {{0}, {1}});
    CHECK_THROWS_AS(ModelOperator::identity(other, 5) * id, std::invalid_argument);
    CHECK_THROWS_AS(shift.apply(std::vector<CyclotomicInt>(3, CyclotomicInt::zero(5))),
                    std::invalid_argument);
}

TEST_CASE("classical oscillator relations at q = 5") {
    OperatorSuiteDescriptor d;
    d.suite = "classical";
    auto report = verify_operator_relations(d);
    CHECK(report.q == 5);
    CHECK(report.checks.size() == 8);
    for (const auto& c : report.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.ok);
    }

    const Field& f = Field::prime(5);
    HermitianSpace V = HermitianSpace::quadratic(f, {Scalar(f, 1), Scalar(f, 1), Scalar(f, 1)});
    HermitianSpace W = HermitianSpace::symplectic(f, 1);
    AdditiveCharacter psi(GaloisField(5, 1));
    ClassicalSchrodingerModel model(V, W, standard_polarization(W), psi);
    CHECK(model.space().size() == 125);

    // a singular Levi parameter and a non-isometry are rejected
    DMatrix zero(V.coeff(), 1, 1);
    CHECK_THROWS_AS(model.m_operator(zero), std::invalid_argument);
    DMatrix stretch = DMatrix::identity(V.coeff(), 3).scaled(Scalar(f, 2));
    CHECK_THROWS_AS(model.g_operator(stretch), std::invalid_argument);

    // matching form signs are rejected outright
    CHECK_THROWS_AS(ClassicalSchrodingerModel(V, V, standard_polarization(W), psi),
                    std::invalid_argument);

    // the enumeration guard trips on a domain that cannot be tabulated
    CHECK_THROWS_AS(ClassicalSchrodingerModel(V, W, standard_polarization(W), psi, 100),
                    std::invalid_argument);
}

TEST_CASE("mixed minimal-representation model over the cubic chain") {
    OperatorSuiteDescriptor d;
    d.suite = "mixed";
    d.cubic = "E";
    auto report = verify_operator_relations(d);
    CHECK(report.checks.size() == 8);
    for (const auto& c : report.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.ok);
    }

    // locus bookkeeping on the 2,500-point domain over E
    const Field& f = Field::prime(5);
    auto chain = cubic_chain(f);
    AdditiveCharacter psi(GaloisField(5, 1));
    MixedMinrepModel model(*chain[1], psi);
    CHECK(model.space().size() == (5 - 1) * 125 * 5);
    CHECK(model.weyl_operator().locus_size() == 4 * 125 * 4);
    CHECK(model.u_minus_beta(Scalar(f, 2)).locus_size() == 4 * 125 * 4);
    CHECK(model.u_minus_beta(Scalar(f, 0)).locus_size() == 4 * 125 * 5);
    CHECK(model.center_character(Scalar(f, 3)).locus_size() == model.space().size());

    // the corrupted reflection is caught by the order-four law
    d.corrupt_weyl = true;
    auto corrupted = verify_operator_relations(d);
    CHECK(!corrupted.all_ok());
    const auto& order4 = check_named(corrupted, "the reflection has order four");
    CHECK(!order4.ok);
    CHECK(!order4.witness.empty());
    CHECK(check_named(corrupted, "the lower unipotents form a one-parameter group").ok);

    // a domain too large to enumerate is rejected up front
    CHECK_THROWS_AS(MixedMinrepModel(*chain[5], psi), std::invalid_argument);
    // and so is a character over the wrong prime
    CHECK_THROWS_AS(MixedMinrepModel(*chain[1], AdditiveCharacter(GaloisField(7, 1))),
                    std::invalid_argument);
}

TEST_CASE("minimal cone model for the 78-dimensional algebra at q = 5") {
    OperatorSuiteDescriptor d;
    d.suite = "e6-schrodinger";
    auto report = verify_operator_relations(d);
    CHECK(report.checks.size() == 6);
    for (const auto& c : report.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.ok);
    }

    E6SchrodingerModel model(5);
    const Field& f = Field::prime(5);
    CHECK(model.model().dim() == 78);
    CHECK(model.in_domain(model.base_point()));

    // frozen rank profile: ad of a cone point squares to rank one, ad itself
    // has rank 22; a generic spinor has ranks (32, 8)
    ExactMatrix ad = model.model().ad(model.base_point());
    CHECK(matrix_rank(ad) == 22);
    CHECK(matrix_rank(ad * ad) == 1);

    // the grading element is not nilpotent, and a fat Levi sum exceeds the
    // characteristic bound
    CHECK_THROWS_AS(model.levi_exponential(model.grading_element(), Scalar(f, 1)),
                    std::invalid_argument);
    Vec fat = model.levi_root_vectors()[0];
    vec_add_scaled(fat, Scalar(f, 1), model.levi_root_vectors()[1]);
    CHECK_THROWS_AS(model.levi_exponential(fat, Scalar(f, 1)), std::invalid_argument);

    CHECK_THROWS_AS(E6SchrodingerModel(4), std::invalid_argument);

    // unknown suites are rejected
    OperatorSuiteDescriptor bad;
    bad.suite = "nonsense";
    CHECK_THROWS_AS(verify_operator_relations(bad), std::invalid_argument);
}
