#pragma once

#include <optional>
#include <vector>

#include "pscvote/model.hpp"

namespace pscvote {

// A maximal solid coalition: every voter on one of `lines` ranks all of
// `candidates` above everything else, and `lines` collects every such line.
struct SolidCoalition {
    std::vector<int> candidates;  // sorted ascending, |candidates| == rank
    int rank = 0;
    std::vector<int> lines;       // ballot line indices, ascending
    long voter_count = 0;

    bool operator==(const SolidCoalition&) const = default;
};

struct PscViolation {
    SolidCoalition coalition;
    long demand = 0;    // largest violated l = floor(|N'| k / n)
    long achieved = 0;  // |W intersect C'|
};

struct ExAnteViolation {
    SolidCoalition coalition;
    Rational demand;    // |N'| k / n, possibly fractional
    Rational achieved;  // probability mass on C'
};

// All maximal solid coalitions, ordered by (rank, candidate set lex).
// At each fixed rank the voter groups partition N.
std::vector<SolidCoalition> enumerate_solid_coalitions(const Instance& inst);

std::optional<PscViolation> check_psc(const Instance& inst, const Committee& committee);

std::optional<ExAnteViolation> check_ex_ante_psc(const Instance& inst,
                                                 const FractionalCommittee& fractional);

class CapExceededError : public InstanceError {
  public:
    explicit CapExceededError(const std::string& what) : InstanceError(what) {}
};

inline constexpr long kDefaultEnumerationCap = 1'000'000;

// Brute force over all C(m, k) committees; throws CapExceededError when the
// committee count exceeds `cap`. Result is sorted.
std::vector<Committee> enumerate_psc_committees(const Instance& inst,
                                                long cap = kDefaultEnumerationCap);

// All committees reachable by any execution of the minimal demand process.
// Equals enumerate_psc_committees by the characterization of PSC.
std::vector<Committee> minimal_demand_enumerate(const Instance& inst,
                                                long cap = kDefaultEnumerationCap);

// One deterministic execution: coalitions in (rank, lex) order, always add
// the lowest-index eligible candidate, fill up with lowest-index unused.
Committee minimal_demand_single(const Instance& inst);

}  // namespace pscvote
