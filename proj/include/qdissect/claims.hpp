#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdissect/check_report.hpp"

namespace qdissect {

// Knobs shared by every registered claim.  `precision` overrides the claim's
// default range (its meaning per claim: series precision, compared terms, or
// progression limit).  `inject_mutation` is a test hook that corrupts one
// expected golden-table entry so the harness can prove a failure surfaces.
struct RunConfig {
    std::optional<long> precision;
    std::optional<BigInt> modulus;
    long steps = 0;
    bool inject_mutation = false;
};

struct Claim {
    std::string id;
    std::string description;
    std::function<CheckReport(const RunConfig&)> run;
};

// All registered claims, in fixed report order.
const std::vector<Claim>& claim_registry();

// Lookup by id; throws UnknownClaim for ids not in the registry.
const Claim& find_claim(const std::string& id);

// Run the whole registry in order with one shared config.
std::vector<CheckReport> reproduce_paper(const RunConfig& config);

} // namespace qdissect
