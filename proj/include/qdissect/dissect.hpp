#pragma once

#include <vector>

#include "qdissect/phi_rep.hpp"

namespace qdissect {

// Result of one 3-dissection step applied to an admissible representation of
// F(q) = sum c(n) q^n: the residue class ell picked out, and a representation
// of the same shape for sum c(3n + ell) q^n.
struct DissectStep {
    int ell; // 0, 1 or 2
    PhiRep rep;
};

// Extract the only residue class of q^alpha / psi(q)^beta * (phi-quotient sum)
// that survives 3-dissection, and rewrite it in the same shape with
// beta' = 3 beta.  Throws InadmissibleRepresentation unless the input falls in
// one of the two admissible classes.  An empty representation steps through as
// pure (alpha, beta) bookkeeping with an empty result.
DissectStep dissect_step(const PhiRep& rep);

struct ChainResult {
    // steps[i] holds ell_i and the representation after i+1 steps.
    std::vector<DissectStep> steps;
    // After k steps the final representation generates sum b(period n + offset)
    // (up to the accumulated q-power), where period = 3^k and
    // offset = sum ell_i 3^i.
    BigInt period;
    BigInt offset;
};

// Iterate dissect_step k times from `start`.  When modulus is nonzero (odd,
// >= 2) the weights are reduced mod it after every step, which keeps
// coefficient growth bounded; the step matrix is integral, so reduction
// commutes with stepping.
ChainResult dissect_chain(const PhiRep& start, long k, const BigInt& modulus = 0);

} // namespace qdissect
