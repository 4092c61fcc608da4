#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qdissect/rational.hpp"

namespace qdissect {

// One counterexample: index (or exponent) n and the offending value — the
// nonzero residue for a modular check, the coefficient difference (possibly
// a rational) for an exact comparison.
struct Violation {
    BigInt n;
    std::string value;
};

// Outcome of one verification run.  A report passes exactly when something
// was actually checked and nothing failed.
struct CheckReport {
    std::string claim;
    BigInt modulus = 0;                                 // 0 for exact comparisons
    std::vector<std::pair<long, long>> progressions;    // (m, r) pairs; empty = identity check
    long checked = 0;
    std::vector<Violation> violations;                  // at most kMaxViolations, smallest n first

    static constexpr std::size_t kMaxViolations = 10;

    bool passed() const { return checked > 0 && violations.empty(); }

    void add_violation(BigInt n, std::string value) {
        if (violations.size() < kMaxViolations)
            violations.push_back({std::move(n), std::move(value)});
    }

    // Fold a sub-check into an aggregate report.
    void absorb(const CheckReport& part) {
        checked += part.checked;
        for (const auto& v : part.violations) add_violation(v.n, v.value);
        for (const auto& p : part.progressions)
            if (std::find(progressions.begin(), progressions.end(), p) == progressions.end())
                progressions.push_back(p);
    }
};

} // namespace qdissect
