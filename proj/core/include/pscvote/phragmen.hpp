#pragma once

#include <utility>
#include <vector>

#include "pscvote/model.hpp"

namespace pscvote {

struct TraceEvent {
    enum class Kind { FullyEaten, Elected };

    Rational time;
    int candidate = 0;
    Kind kind = Kind::FullyEaten;

    bool operator==(const TraceEvent&) const = default;
};

struct Trace {
    std::vector<TraceEvent> events;  // times non-decreasing
};

// Per-(voter copy, candidate) eaten amounts recorded by the fractional rule.
// Voter ids enumerate ballot copies in profile order: all copies of line 0,
// then line 1, and so on.
struct EatingLedger {
    long num_voters = 0;
    int num_candidates = 0;
    std::vector<std::vector<Rational>> entries;  // [voter][candidate]
    Rational stop_time;                          // k / n

    Rational candidate_mass(int candidate) const {
        Rational mass = 0;
        for (const auto& row : entries) {
            mass += row[static_cast<size_t>(candidate)];
        }
        return mass;
    }
};

// First voter id of each ballot line, plus n as a sentinel.
std::vector<long> voter_offsets(const Instance& inst);

// Continuous eating until k candidates are fully eaten. Simultaneous
// completions are elected in ascending index order; completions past seat k
// at the stopping instant are dropped.
std::pair<Committee, Trace> ordered_rule(const Instance& inst);

// Same dynamics, stopped at total eaten weight k (time k/n); eaten fractions
// become selection probabilities.
std::pair<FractionalCommittee, EatingLedger> pfr(const Instance& inst);

// Discrete-slice validation oracle: `steps` uniform slices of k/(n*steps)
// weight per voter, overshoot spilled to the voter's next candidate.
// Converges to pfr as steps grows; agrees exactly at commensurate step
// counts.
FractionalCommittee pfr_discrete_oracle(const Instance& inst, long steps);

}  // namespace pscvote
