#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "census.hpp"

namespace albert {

// Named verification suites, one per library module, each returning a report
// of independent named checks. A check compares a computed value against a
// stated expectation and carries a witness when it fails; a SKIPPED check
// records why it did not run (a work-budget stop or an option that makes it
// inapplicable). Reports are deterministic for fixed options: the checks are
// listed in canonical order (sorted by name) and the JSON form carries no
// timing data, so two runs with the same seed produce identical bytes.

enum class CheckStatus { PASS, FAIL, SKIPPED };

std::string check_status_name(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::PASS;
    std::string expected;
    std::string got;
    std::string witness;  // non-empty exactly when the check fails
    long millis = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> checks;  // sorted by name
    bool overall_pass() const;        // no FAIL present (SKIPPED does not fail)
};

struct SuiteOptions {
    // "Q" or "Fp:<p>"; empty selects the suite default (the rationals for the
    // Lie-construction suites, F_5 for everything finite)
    std::string field;
    long q = 0;             // finite-field size for the operator/census suites; 0 = 5
    std::uint64_t seed = 1;
    long samples = 10000;   // sample count for the randomized identity checks
    long long budget = kCensusBudget;
    std::string algebra;    // lie suite instance g2/d4/f4/e6/e7/e8; empty = f4
    std::string census_case;  // run a single census case; empty = all of them
    std::array<long, 3> diag{1, 1, 1};  // rank-one census diagonal
    long lambda = 1;                    // fiber census torus parameter
};

// Valid suite names, "all" last.
const std::vector<std::string>& suite_names();

// Runs one suite ("all" concatenates every other suite, prefixing each check
// name with its suite). Throws std::invalid_argument for an unknown name or
// unusable options.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// One JSON document on a single line, keys sorted, no timing fields.
std::string suite_report_json(const SuiteReport& r);
// Human-readable table with per-check timings and a summary line.
std::string suite_report_text(const SuiteReport& r);

}  // namespace albert
