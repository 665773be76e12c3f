#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>

#include "json.hpp"

#include "census.hpp"
#include "composition.hpp"
#include "invariance.hpp"
#include "jordan.hpp"

using namespace albert;

namespace {

const CensusResult& find_level(const std::vector<CensusResult>& results,
                               const std::string& params) {
    for (const auto& r : results)
        if (r.parameters == params) return r;
    FAIL("missing census result for " << params);
    return results.front();
}

}  // namespace

TEST_CASE("group order polynomials match the classical values") {
    CHECK(order_g2(3) == 4245696);
    CHECK(order_sl3(3) == 5616);
    CHECK(order_su3(3) == 6048);
    CHECK(order_sl2(3) == 24);
    CHECK(order_g2(3) / order_sl3(3) == 756);
    CHECK(order_g2(3) / order_su3(3) == 702);
    CHECK(order_spin8(3) / order_g2(3) == 4665600);
    CHECK(order_g2(3) / (order_sl2(3) * 9) == 19656);
    CHECK(order_spin8(5) / order_g2(5) == mpz_class(6084000000L));
}

TEST_CASE("octonion norm levels match both oracles") {
    auto r3 = census_octonion_levels(3);
    REQUIRE(r3.size() == 4);
    for (const auto& r : r3) {
        CHECK(r.status == "PASS");
        CHECK(r.has_oracle);
        CHECK(r.count >= 0);
    }
    CHECK(find_level(r3, "a = 0").count == 729);
    CHECK(find_level(r3, "a = 1").count == 702);
    CHECK(find_level(r3, "a = 2").count == 756);
    CHECK(find_level(r3, "omega0").count == 728);
    // the split stabilizer sits at the levels where -a is a square
    CHECK(find_level(r3, "a = 2").oracle_description.find("SL3") != std::string::npos);
    CHECK(find_level(r3, "a = 1").oracle_description.find("SU3") != std::string::npos);

    auto r5 = census_octonion_levels(5);
    REQUIRE(r5.size() == 6);
    for (const auto& r : r5) CHECK(r.status == "PASS");
    CHECK(find_level(r5, "a = 0").count == 15625);
    CHECK(find_level(r5, "a = 1").count == 15750);
    CHECK(find_level(r5, "a = 2").count == 15500);
    CHECK(find_level(r5, "a = 3").count == 15500);
    CHECK(find_level(r5, "a = 4").count == 15750);
    CHECK(find_level(r5, "omega0").count == 15624);

    // an extension field exercises the same code path
    auto r9 = census_octonion_levels(9);
    REQUIRE(r9.size() == 10);
    long long high = 0, low = 0;
    for (const auto& r : r9) {
        CHECK(r.status == "PASS");
        if (r.count == 532170) ++high;
        if (r.count == 530712) ++low;
    }
    CHECK(high == 4);
    CHECK(low == 4);
    CHECK(find_level(r9, "omega0").count == 531440);

    CHECK_THROWS_AS(census_octonion_levels(4), std::invalid_argument);
    CHECK_THROWS_AS(census_octonion_levels(2), std::invalid_argument);
    CHECK_THROWS_AS(census_octonion_levels(15), std::invalid_argument);

    // a starved budget skips the enumeration but keeps the oracles
    auto starved = census_octonion_levels(3, 10);
    REQUIRE(starved.size() == 4);
    for (const auto& r : starved) {
        CHECK(r.status == "SKIPPED");
        CHECK(r.has_oracle);
    }
    CHECK(find_level(starved, "a = 2").oracle_value == 756);
}

TEST_CASE("rank-one diagonal censuses at q = 3") {
    auto r111 = census_rank1_fixed_diagonal(3, {1, 1, 1});
    CHECK(r111.status == "PASS");
    CHECK(r111.count == 4665600);
    CHECK(r111.oracle_value == 4665600);

    // rescaling bijections: a global scalar and a torus-type change of diagonal
    auto r222 = census_rank1_fixed_diagonal(3, {2, 2, 2});
    CHECK(r222.status == "PASS");
    CHECK(r222.count == r111.count);

    auto r121 = census_rank1_fixed_diagonal(3, {1, 2, 1});
    CHECK(r121.status == "PASS");
    CHECK(r121.count == r111.count);

    // above the budget the census reports SKIPPED with the oracle attached
    auto r5 = census_rank1_fixed_diagonal(5, {1, 1, 1});
    CHECK(r5.status == "SKIPPED");
    CHECK(r5.has_oracle);
    CHECK(r5.oracle_value == 6084000000LL);

    CHECK_THROWS_AS(census_rank1_fixed_diagonal(3, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(census_rank1_fixed_diagonal(3, {3, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(census_rank1_fixed_diagonal(4, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("pair cone double enumeration agrees") {
    auto r3 = census_omega_q_e6(3);
    CHECK(r3.status == "PASS");
    CHECK(r3.count == r3.oracle_value);
    // closed form for the punctured cone
    CHECK(r3.count == 2LL * 4 * 10 * 28 * 82);
    CHECK(r3.count == 183680);

    auto r5 = census_omega_q_e6(5);
    CHECK(r5.status == "PASS");
    CHECK(r5.count == 4LL * 6 * 26 * 126 * 626);
    CHECK(r5.count == 49218624);

    auto r7 = census_omega_q_e6(7);
    CHECK(r7.status == "SKIPPED");
}

TEST_CASE("fiber census matches the order quotient") {
    auto r1 = census_g2_fiber(3);
    CHECK(r1.status == "PASS");
    CHECK(r1.count == 19656);

    // the count does not depend on the torus parameter
    auto r2 = census_g2_fiber(3, 2);
    CHECK(r2.status == "PASS");
    CHECK(r2.count == r1.count);

    CHECK_THROWS_AS(census_g2_fiber(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(census_g2_fiber(3, 3), std::invalid_argument);

    // stabilizer cross-check: the derivations killing a sample fiber point
    // form a 5-dimensional algebra (sl2 plus a 2-dimensional center piece)
    for (const Field* f : {&Field::rationals(), &Field::prime(5)}) {
        auto O = CompositionAlgebra::split_octonions(*f);
        Vec x0 = vec_zero(*f, 8), y0 = vec_zero(*f, 8);
        x0[1] = Scalar(*f, 1);
        y0[7] = Scalar(*f, 1);
        auto xe = O.element(x0);
        auto ye = O.element(y0);
        CHECK(in_rank1_trace0_cone(xe));
        CHECK(trace(ye).is_one());
        CHECK(norm(ye).is_zero());
        CHECK(multiply(xe, conjugate(ye)).is_zero());
        auto g = derivation_algebra(*f, product_table(O));
        auto stab = stabilizer_subalgebra(g, natural_action(g, 8), {x0, y0});
        CHECK(g.dim() == 14);
        CHECK(stab.dim() == 5);
    }
}

TEST_CASE("determinant levels are uniform on the six-dimensional algebra") {
    for (long p : {5L, 7L}) {
        const Field& F = Field::prime(p);
        auto chain = cubic_chain(F);
        const auto& Jk = *chain[2];
        REQUIRE(Jk.dim() == 6);
        std::map<long, long long> counts;
        std::vector<long> c(6, 0);
        bool more = true;
        while (more) {
            Vec v;
            for (int i = 0; i < 6; ++i) v.push_back(Scalar(F, c[i]));
            ++counts[Jk.norm_form(v).to_long()];
            more = false;
            for (size_t i = 0; i < c.size() && !more; ++i) {
                if (++c[i] < p)
                    more = true;
                else
                    c[i] = 0;
            }
        }
        long long nonzero_level = counts[1];
        long long total = 0;
        for (const auto& [value, n] : counts) {
            total += n;
            if (value != 0) CHECK(n == nonzero_level);
        }
        CHECK(total == counts[0] + (p - 1) * nonzero_level);
        if (p == 5) CHECK(nonzero_level == 3100);
        if (p == 7) CHECK(nonzero_level == 16758);
    }
}

TEST_CASE("census results serialize as json lines") {
    auto results = census_octonion_levels(3);
    auto line = census_json_line(results.front());
    CHECK(line.find('\n') == std::string::npos);
    auto j = nlohmann::json::parse(line);
    CHECK(j["case"] == "octonion-levels");
    CHECK(j["q"] == 3);
    CHECK(j["status"] == "PASS");
    CHECK(j["count"].get<long long>() == j["oracle"].get<long long>());
    CHECK(j["elapsed_seconds"].is_number());

    CensusResult bare;
    bare.label = "omega-e6";
    bare.q = 7;
    bare.status = "SKIPPED";
    auto j2 = nlohmann::json::parse(census_json_line(bare));
    CHECK(j2["oracle"].is_null());
}
