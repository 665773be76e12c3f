#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace albert {

// Exact point counts over small finite fields for orbit sets attached to the
// split octonions and the 27-dimensional cubic Jordan algebra, each checked
// against an independent oracle (group-order quotients, quadratic-form point
// counts, or agreement of two enumeration orders).
//
// The enumerations run on table-based F_q arithmetic (q = p^m an odd prime
// power) whose structure constants are pulled once from the exact core over
// the rationals. Census parameters given as plain integers (diagonal entries,
// the torus parameter) are reduced into the prime subfield.
struct CensusResult {
    std::string label;
    long q = 0;
    std::string parameters;
    long long count = 0;
    bool has_oracle = false;
    long long oracle_value = 0;
    std::string oracle_description;
    double elapsed_seconds = 0.0;
    std::string status;  // "PASS", "FAIL", or "SKIPPED"
};

// One-line JSON rendering (object with case/q/parameters/count/oracle/
// oracle_description/elapsed_seconds/status fields).
std::string census_json_line(const CensusResult& r);

// Orders of the finite groups of Lie type entering the oracles, by the
// standard order polynomials.
mpz_class order_g2(long q);     // q^6 (q^6 - 1)(q^2 - 1)
mpz_class order_sl3(long q);    // q^3 (q^2 - 1)(q^3 - 1)
mpz_class order_su3(long q);    // q^3 (q^2 - 1)(q^3 + 1)
mpz_class order_sl2(long q);    // q (q^2 - 1)
mpz_class order_spin8(long q);  // q^12 (q^2 - 1)(q^4 - 1)^2 (q^6 - 1)

// Hard cap on inner-loop iterations; a census whose (pre-estimated or charged)
// work exceeds the budget reports SKIPPED with its oracle still attached.
// Passing a larger budget forces the enumeration.
inline constexpr long long kCensusBudget = 100000000;

// Norm levels of the 7-dimensional trace-zero space of the split octonions:
// one result per level a in F_q, plus one for the punctured null cone
// {x != 0 : N(x) = 0, Tr(x) = 0}. Nonzero levels carry two independent
// oracles (which must also agree with each other): the quadratic-form count
// q^6 + q^3 eta(-a disc), and |G2(q)|/|SL3(q)| when -a is a square in F_q^x
// (split stabilizer) or |G2(q)|/|SU3(q)| otherwise.
std::vector<CensusResult> census_octonion_levels(long q, long long budget = kCensusBudget);

// Rank-one elements of the cubic Jordan algebra with fixed invertible
// diagonal (a, b, c): pairs (x, y) with N(x) = bc and N(y) = ca are
// enumerated, z := b * conj(y) * x^{-1} is formed, and the element is kept
// iff all six rank-one conditions hold. Oracle: |Spin8(q)|/|G2(q)|
// = q^6 (q^4 - 1)^2.
CensusResult census_rank1_fixed_diagonal(long q, const std::array<long, 3>& diag,
                                         long long budget = kCensusBudget);

// Nonzero octonion pairs with N(x) = N(y) = 0 = x * conj(y), counted by two
// independent enumeration orders (x-outer over the null cone with a
// linear-plus-quadric fiber in y, and y-outer symmetrically); the two counts
// must agree. Every counted x is non-invertible by construction.
CensusResult census_omega_q_e6(long q, long long budget = kCensusBudget);

// Pairs (x, y) with x in the punctured trace-zero null cone, Tr(y) = lambda,
// N(y) = 0 and x * conj(y) = 0. Oracle for lambda != 0:
// |G2(q)|/(|SL2(q)| q^2) = q^3 (q^6 - 1), independent of lambda.
CensusResult census_g2_fiber(long q, long lambda = 1, long long budget = kCensusBudget);

}  // namespace albert
