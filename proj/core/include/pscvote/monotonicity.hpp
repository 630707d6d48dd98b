#pragma once

#include <string>
#include <vector>

#include "pscvote/coalitions.hpp"

namespace pscvote {

struct AuditViolation {
    int line = 0;       // ballot line carrying the perturbation
    int candidate = 0;  // candidate shifted one rank up
    std::string before;
    std::string after;
};

struct AuditReport {
    std::string instance_digest;  // serialized instance, for reproduction
    long perturbations_tested = 0;
    std::vector<AuditViolation> violations;

    bool passed() const { return violations.empty(); }
};

// Non-resolute audit: for every PSC committee W, every c in W, and every
// single-copy one-rank-up shift of c, some PSC committee of the perturbed
// instance must still contain c.
AuditReport audit_psc_set(const Instance& inst, long cap = kDefaultEnumerationCap);

// Probabilistic audit: a one-rank-up shift of c never decreases c's PFR
// probability (exact rational comparison; no tolerance exists).
AuditReport audit_pfr(const Instance& inst);

}  // namespace pscvote
