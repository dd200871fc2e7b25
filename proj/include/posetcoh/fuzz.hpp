#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "posetcoh/cohomology.hpp"
#include "posetcoh/criterion.hpp"

namespace posetcoh {

struct FuzzParams {
    std::size_t count = 100;       ///< posets
    std::size_t max_size = 8;      ///< elements per poset
    std::size_t presheaves = 5;    ///< per PASS poset
    std::uint64_t seed = 1;
};

/// Deterministic poset corpus for a seed; also used by the property tests.
std::vector<Poset> fuzz_corpus(std::size_t count, std::size_t max_size, std::uint64_t seed);

struct FuzzViolation {
    std::string kind;  ///< "comparison", "shortcut" or "internal"
    std::string detail;
    Poset poset;
    std::uint64_t presheaf_seed = 0;
};

struct FuzzSummary {
    std::size_t posets = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t comparisons = 0;
    std::vector<FuzzViolation> violations;
};

/// Criterion on every corpus poset (with and without shortcuts); for PASS posets,
/// random presheaves must compare isomorphically in every degree.
FuzzSummary run_fuzz(const FuzzParams& params);

/// Greedily deletes elements while the violation persists.
FuzzViolation minimize(const FuzzViolation& v);

/// Writes poset.json, presheaf.json (when applicable) and violation.json under dir/violation-<k>.
void write_bundle(const FuzzViolation& v, std::size_t k, const std::filesystem::path& dir);

}  // namespace posetcoh
