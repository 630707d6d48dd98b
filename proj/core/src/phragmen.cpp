#include "pscvote/phragmen.hpp"

#include <algorithm>
#include <cassert>

namespace pscvote {

std::vector<long> voter_offsets(const Instance& inst) {
    std::vector<long> offsets;
    offsets.reserve(inst.ballots().size() + 1);
    long acc = 0;
    for (const Ballot& b : inst.ballots()) {
        offsets.push_back(acc);
        acc += b.multiplicity;
    }
    offsets.push_back(acc);
    return offsets;
}

namespace {

// Shared state of the continuous eating process. Every voter eats their top
// not-fully-eaten candidate at speed 1; the simulation jumps between
// completion events, with all completions at one instant processed before
// any voter is reassigned.
class EatingEngine {
  public:
    explicit EatingEngine(const Instance& inst)
        : inst_(inst),
          remaining_(static_cast<size_t>(inst.num_candidates()), Rational(1)),
          eaten_(static_cast<size_t>(inst.num_candidates())),
          pos_(inst.ballots().size(), 0) {}

    const Rational& time() const { return time_; }

    // Advances to the next completion event, or to `deadline` if that comes
    // first. Returns the list of candidates fully eaten at the new time
    // (ascending index), without marking them eaten yet.
    std::vector<int> advance(const Rational* deadline) {
        const auto& ballots = inst_.ballots();
        const int m = inst_.num_candidates();
        std::vector<long> eaters(static_cast<size_t>(m), 0);
        for (size_t line = 0; line < ballots.size(); ++line) {
            eaters[static_cast<size_t>(target(line))] += ballots[line].multiplicity;
        }
        bool have_dt = false;
        Rational dt;
        for (int c = 0; c < m; ++c) {
            if (eaters[static_cast<size_t>(c)] == 0) {
                continue;
            }
            Rational candidate_dt = remaining_[static_cast<size_t>(c)] / eaters[static_cast<size_t>(c)];
            if (!have_dt || candidate_dt < dt) {
                dt = candidate_dt;
                have_dt = true;
            }
        }
        assert(have_dt);
        if (deadline != nullptr && *deadline - time_ < dt) {
            dt = *deadline - time_;
        }
        for (size_t line = 0; line < ballots.size(); ++line) {
            const int c = target(line);
            remaining_[static_cast<size_t>(c)] -= dt * ballots[line].multiplicity;
            if (ledger_ != nullptr) {
                const long first = (*offsets_)[line];
                for (long copy = 0; copy < ballots[line].multiplicity; ++copy) {
                    ledger_->entries[static_cast<size_t>(first + copy)][static_cast<size_t>(c)] += dt;
                }
            }
        }
        time_ += dt;
        std::vector<int> completed;
        for (int c = 0; c < m; ++c) {
            if (!eaten_[static_cast<size_t>(c)] && remaining_[static_cast<size_t>(c)] == 0) {
                completed.push_back(c);
            }
        }
        return completed;
    }

    void mark_eaten(const std::vector<int>& candidates) {
        for (int c : candidates) {
            eaten_[static_cast<size_t>(c)] = 1;
        }
    }

    const Rational& remaining(int candidate) const {
        return remaining_[static_cast<size_t>(candidate)];
    }

    void record_into(EatingLedger* ledger, const std::vector<long>* offsets) {
        ledger_ = ledger;
        offsets_ = offsets;
    }

  private:
    int target(size_t line) {
        const auto& ranking = inst_.ballots()[line].ranking;
        size_t& p = pos_[line];
        while (eaten_[static_cast<size_t>(ranking[p])]) {
            ++p;
            assert(p < ranking.size());
        }
        return ranking[p];
    }

    const Instance& inst_;
    std::vector<Rational> remaining_;
    std::vector<char> eaten_;
    std::vector<size_t> pos_;
    Rational time_;
    EatingLedger* ledger_ = nullptr;
    const std::vector<long>* offsets_ = nullptr;
};

}  // namespace

std::pair<Committee, Trace> ordered_rule(const Instance& inst) {
    const int k = inst.committee_size();
    EatingEngine engine(inst);
    Trace trace;
    Committee committee;

    while (static_cast<int>(committee.members.size()) < k) {
        const std::vector<int> completed = engine.advance(nullptr);
        engine.mark_eaten(completed);
        for (int c : completed) {
            trace.events.push_back({engine.time(), c, TraceEvent::Kind::FullyEaten});
        }
        // Ties at the stopping instant resolve by ascending index; anything
        // past seat k is dropped.
        for (int c : completed) {
            if (static_cast<int>(committee.members.size()) < k) {
                committee.members.push_back(c);
                trace.events.push_back({engine.time(), c, TraceEvent::Kind::Elected});
            }
        }
    }
    std::sort(committee.members.begin(), committee.members.end());
    return {std::move(committee), std::move(trace)};
}

std::pair<FractionalCommittee, EatingLedger> pfr(const Instance& inst) {
    const int m = inst.num_candidates();
    const long n = inst.num_voters();
    const Rational stop = Rational(inst.committee_size()) / n;

    EatingLedger ledger;
    ledger.num_voters = n;
    ledger.num_candidates = m;
    ledger.entries.assign(static_cast<size_t>(n),
                          std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
    ledger.stop_time = stop;
    const std::vector<long> offsets = voter_offsets(inst);

    EatingEngine engine(inst);
    engine.record_into(&ledger, &offsets);
    while (engine.time() < stop) {
        const std::vector<int> completed = engine.advance(&stop);
        engine.mark_eaten(completed);
    }

    FractionalCommittee fractional;
    fractional.probabilities.reserve(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) {
        fractional.probabilities.push_back(Rational(1) - engine.remaining(c));
    }
    return {std::move(fractional), std::move(ledger)};
}

FractionalCommittee pfr_discrete_oracle(const Instance& inst, long steps) {
    assert(steps >= 1);
    const int m = inst.num_candidates();
    const long n = inst.num_voters();
    const Rational slice = Rational(inst.committee_size()) / (n * steps);

    std::vector<Rational> remaining(static_cast<size_t>(m), Rational(1));
    for (long step = 0; step < steps; ++step) {
        for (const Ballot& b : inst.ballots()) {
            for (long copy = 0; copy < b.multiplicity; ++copy) {
                Rational budget = slice;
                for (size_t r = 0; r < b.ranking.size() && budget > 0; ++r) {
                    Rational& rem = remaining[static_cast<size_t>(b.ranking[r])];
                    const Rational bite = std::min(rem, budget);
                    rem -= bite;
                    budget -= bite;
                }
                assert(budget == 0);
            }
        }
    }
    FractionalCommittee fractional;
    fractional.probabilities.reserve(static_cast<size_t>(m));
    for (int c = 0; c < m; ++c) {
        fractional.probabilities.push_back(Rational(1) - remaining[static_cast<size_t>(c)]);
    }
    return fractional;
}

}  // namespace pscvote
