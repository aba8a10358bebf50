#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // honest summary, including any fallback taken
};

struct ReproConfig {
    // budget for the n=44 symmetric triangular search attempt
    double fig2_secs = 60.0;
    std::int64_t fig2_nodes = 1'000'000'000;
    // largest n of the symmetric-vs-oracle fallback sweep
    int fig2_fallback_max_n = 20;
    int workers = 1;
};

// Reads SKC_FIG2_SECS, SKC_FIG2_NODES and SKC_WORKERS overrides.
ReproConfig repro_config_from_env();

// Runs the full acceptance suite; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const ReproConfig& config);

}  // namespace skc
