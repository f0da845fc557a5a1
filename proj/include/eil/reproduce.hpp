#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eil {

struct ClaimOptions {
    int k = 2;               ///< lemma-Hk
    int a = 1;               ///< lemma-gab
    int b = 0;               ///< lemma-gab
    std::uint64_t seed = 0;  ///< offset added to every sampled seed
};

struct ClaimResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::vector<std::string> failures; ///< first few mismatches, human readable
    std::vector<std::string> notes;    ///< summary counts
    double seconds = 0;
};

struct ClaimInfo {
    std::string id;
    std::string title;
};

/// Registered claims in run order.
std::vector<ClaimInfo> claim_registry();
/// Throws InvalidInput for an unknown id.
ClaimResult run_claim(const std::string& id, const ClaimOptions& options = {});

} // namespace eil
