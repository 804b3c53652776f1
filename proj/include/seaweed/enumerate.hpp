#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seaweed/functionals.hpp"
#include "seaweed/spec.hpp"

namespace seaweed {

// All compositions of n in lexicographic order. With `partial`, compositions
// of every total 0..n are listed (the empty composition first).
std::vector<Composition> compositions(int n, bool partial = false);

// Every spec of the family with rank 1..max_n. gl ranks are matrix sizes.
std::vector<SeaweedSpec> all_specs(Family family, int max_n, bool canonical = false);

int sweep_ceiling(Family family);

struct SweepOptions {
    Family family = Family::GL;
    int max_n = 4;
    PeakPolicy policy;
    int oracle_samples = 8;  // 0 disables the oracle comparison
    std::uint64_t seed = 1;
    bool canonical = false;
    long budget = 0;         // maximum number of specs; 0 means no limit
    std::string log_path;    // JSON lines; empty means no log
};

struct SweepFailure {
    SeaweedSpec spec;
    std::string reason;
};

struct SweepReport {
    long total = 0;
    long regular = 0;
    long oracle_checked = 0;
    long oracle_resampled = 0;
    long oracle_mismatches = 0;
    bool truncated = false;
    std::vector<SweepFailure> failures;
};

SweepReport enumerate_sweep(const SweepOptions& options);

}  // namespace seaweed
