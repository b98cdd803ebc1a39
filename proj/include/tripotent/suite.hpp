#ifndef TRIPOTENT_SUITE_HPP
#define TRIPOTENT_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripotent/matrix.hpp"
#include "tripotent/theorems.hpp"

namespace tripotent {

// Sweep configuration. theorems selects theorem ids (empty means all); each
// id expands to all of its variants. Exponent pairs are drawn from the
// integer grid [grid_min, grid_max]^2, filtered per variant side condition
// and cycled across trials.
struct SuiteConfig {
    std::vector<std::size_t> sizes = {1, 2, 3, 4, 5, 6, 7, 8};
    std::size_t trials_per_cell = 50;
    std::uint64_t seed = 1;
    ToleranceConfig tolerances;
    std::vector<std::string> theorems;
    int grid_min = -3;
    int grid_max = 3;
};

// One (theorem variant, family, size) cell. status is "ok" when every trial
// was verdict-consistent, "failed" when at least one was not,
// "expected-exception" for consistent cells of the star-average-spectrum
// family (their verdicts rely on the documented exclusion flag), and
// "infeasible" when the family cannot be realized at this size (no trials
// run). max_residual is the largest residual any trial reported and is
// informational. On failure, witness holds the first inconsistent matrix and
// witness_trial its trial index.
struct SuiteCell {
    std::string theorem;
    std::string family;
    std::size_t size = 0;
    std::size_t trials = 0;
    std::size_t consistent = 0;
    std::size_t inconsistent = 0;
    double max_residual = 0.0;
    std::string status;
    std::optional<ComplexMatrix> witness;
    std::optional<std::size_t> witness_trial;
};

struct SuiteReport {
    std::vector<SuiteCell> cells;
    std::size_t total_trials = 0;
    std::size_t total_inconsistent = 0;
    double seconds = 0.0;

    bool all_consistent() const { return total_inconsistent == 0; }
};

// Families swept against every theorem variant, in order: 3OP plus the five
// structured negatives. average:toStar additionally sweeps the
// star-average-spectrum family, whose draws satisfy the average identity
// without being 3OP; the spectral exclusion keeps those verdicts consistent.
std::vector<std::string> suite_families(const std::string& theorem_id);

// Deterministic sequential sweep. Seeds derive per cell and per trial from
// cfg.seed, so equal configs give equal reports.
SuiteReport run_suite(const SuiteConfig& cfg);

std::string to_json_string(const SuiteReport& report);

// Random search for a matrix where the checker's condition disagrees with
// 3OP membership outright (any toStar spectral exclusion is ignored, which
// is the point: the search demonstrates why the exclusion is needed).
struct SearchConfig {
    CheckRequest request;
    std::string ensemble;
    std::size_t budget = 1000;
    std::uint64_t seed = 1;
    std::size_t min_n = 2;
    std::size_t max_n = 5;
    ToleranceConfig tolerances;
};

struct SearchResult {
    bool found = false;
    std::size_t samples = 0;
    std::optional<ComplexMatrix> witness;
    std::optional<TheoremReport> report;
};

SearchResult search_counterexample(const SearchConfig& cfg);

std::string to_json_string(const SearchResult& result);

} // namespace tripotent

#endif
