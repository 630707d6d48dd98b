#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "pscvote/coalitions.hpp"
#include "pscvote/generate.hpp"
#include "pscvote/phragmen.hpp"

using namespace pscvote;

namespace {

void check_ledger_invariants(const Instance& inst, const FractionalCommittee& fractional,
                             const EatingLedger& ledger) {
    const int m = inst.num_candidates();
    const Rational speed_share = Rational(inst.committee_size()) / inst.num_voters();
    CHECK(ledger.stop_time == speed_share);

    Rational total = 0;
    for (const auto& row : ledger.entries) {
        Rational row_sum = 0;
        for (const Rational& cell : row) {
            CHECK(cell >= 0);
            CHECK(cell <= 1);
            row_sum += cell;
        }
        CHECK(row_sum == speed_share);  // every voter eats at speed 1 until k/n
        total += row_sum;
    }
    CHECK(total == inst.committee_size());

    for (int c = 0; c < m; ++c) {
        const Rational column = ledger.candidate_mass(c);
        CHECK(column == fractional.probabilities[static_cast<size_t>(c)]);
        CHECK(column >= 0);
        CHECK(column <= 1);
    }
}

// A voter may only have eaten c if everything they rank above c is fully
// eaten or was still being eaten when the process stopped (positive entry).
void check_prefix_consistency(const Instance& inst, const FractionalCommittee& fractional,
                              const EatingLedger& ledger) {
    const auto offsets = voter_offsets(inst);
    for (size_t line = 0; line < inst.ballots().size(); ++line) {
        const Ballot& b = inst.ballots()[line];
        for (long copy = 0; copy < b.multiplicity; ++copy) {
            const auto& row = ledger.entries[static_cast<size_t>(offsets[line] + copy)];
            for (size_t pos = 0; pos < b.ranking.size(); ++pos) {
                if (row[static_cast<size_t>(b.ranking[pos])] == 0) {
                    continue;
                }
                for (size_t above = 0; above < pos; ++above) {
                    const int better = b.ranking[above];
                    const bool fully_eaten =
                        fractional.probabilities[static_cast<size_t>(better)] == 1;
                    const bool in_progress = row[static_cast<size_t>(better)] > 0;
                    CHECK((fully_eaten || in_progress));
                }
            }
        }
    }
}

}  // namespace

TEST_CASE("ordered rule on its fixture") {
    const Instance inst = parse_instance(fixtures::kOrderedEating);
    const auto [committee, trace] = ordered_rule(inst);
    CHECK(committee == Committee{{0, 2}});

    std::vector<TraceEvent> elections;
    for (const TraceEvent& e : trace.events) {
        if (e.kind == TraceEvent::Kind::Elected) {
            elections.push_back(e);
        }
    }
    REQUIRE(elections.size() == 2);
    CHECK(elections[0].candidate == 0);
    CHECK(elections[0].time == Rational(1, 2));
    CHECK(elections[1].candidate == 2);
    CHECK(elections[1].time == Rational(3, 4));

    for (size_t i = 1; i < trace.events.size(); ++i) {
        CHECK(trace.events[i - 1].time <= trace.events[i].time);
    }
}

TEST_CASE("ordered rule fails PSC on the failure fixture") {
    const Instance inst = parse_instance(fixtures::kOrderedPscFailure);
    const Committee committee = ordered_rule(inst).first;
    CHECK(committee == Committee{{0, 5, 6}});  // c6, c7, then the index tie-break
    const auto violation = check_psc(inst, committee);
    REQUIRE(violation.has_value());
    CHECK(violation->demand == 2);
}

TEST_CASE("ordered rule on unanimity elects the shared prefix") {
    const Instance inst = parse_instance(fixtures::kUnanimity);
    const auto [committee, trace] = ordered_rule(inst);
    CHECK(committee == Committee{{1, 3}});
    REQUIRE(trace.events.size() == 4);
    CHECK(trace.events[0].time == Rational(1, 3));
    CHECK(trace.events[2].time == Rational(2, 3));
}

TEST_CASE("pfr on its fixture") {
    const Instance inst = parse_instance(fixtures::kFractionalEating);
    const auto [fractional, ledger] = pfr(inst);
    CHECK(fractional.probabilities ==
          std::vector<Rational>{1, Rational(1, 6), Rational(2, 3), Rational(1, 6)});
    check_ledger_invariants(inst, fractional, ledger);
    check_prefix_consistency(inst, fractional, ledger);
}

TEST_CASE("pfr on the failure fixture") {
    const Instance inst = parse_instance(fixtures::kOrderedPscFailure);
    const auto [fractional, ledger] = pfr(inst);
    CHECK(fractional.probabilities ==
          std::vector<Rational>{Rational(2, 5), Rational(2, 5), Rational(2, 5),
                                Rational(2, 5), Rational(2, 5), 1, 0});
    check_ledger_invariants(inst, fractional, ledger);
}

TEST_CASE("pfr on the rank-pjr fixture") {
    const Instance inst = parse_instance(fixtures::kRankPjrGap);
    const auto fractional = pfr(inst).first;
    CHECK(fractional.probabilities ==
          std::vector<Rational>{Rational(1, 2), 0, 0, Rational(1, 2), Rational(1, 2),
                                Rational(1, 2)});
}

TEST_CASE("every candidate fully eaten by pfr is elected by the ordered rule") {
    RngStream rng(31);
    for (int i = 0; i < 80; ++i) {
        const Instance inst = random_instance(rng, 10, 6, 4);
        const auto fractional = pfr(inst).first;
        const Committee committee = ordered_rule(inst).first;
        for (int c = 0; c < inst.num_candidates(); ++c) {
            if (fractional.probabilities[static_cast<size_t>(c)] == 1) {
                CHECK(std::binary_search(committee.members.begin(), committee.members.end(), c));
            }
        }
    }
}

TEST_CASE("pfr ledger invariants hold on random instances") {
    RngStream rng(17);
    for (int i = 0; i < 40; ++i) {
        const Instance inst = random_instance(rng, 9, 6, 4);
        const auto [fractional, ledger] = pfr(inst);
        check_ledger_invariants(inst, fractional, ledger);
        check_prefix_consistency(inst, fractional, ledger);
        CHECK_FALSE(check_ex_ante_psc(inst, fractional));
    }
}

TEST_CASE("discrete oracle agrees exactly at commensurate step counts") {
    const Instance inst = parse_instance(fixtures::kFractionalEating);
    for (long steps : {24, 48, 120}) {  // multiples of 6
        CHECK(pfr_discrete_oracle(inst, steps).probabilities ==
              pfr(inst).first.probabilities);
    }

    const Instance unanimity = parse_instance(fixtures::kUnanimity);
    CHECK(pfr_discrete_oracle(unanimity, 12).probabilities ==
          pfr(unanimity).first.probabilities);
}

TEST_CASE("discrete oracle converges within m*n/steps") {
    RngStream rng(53);
    for (int i = 0; i < 25; ++i) {
        const Instance inst = random_instance(rng, 6, 5, 3);
        const long steps = inst.num_voters() * inst.num_candidates() * 4;
        const auto exact = pfr(inst).first;
        const auto approx = pfr_discrete_oracle(inst, steps);
        const Rational bound =
            Rational(inst.num_candidates()) * inst.num_voters() / steps;
        for (int c = 0; c < inst.num_candidates(); ++c) {
            const Rational diff = exact.probabilities[static_cast<size_t>(c)] -
                                  approx.probabilities[static_cast<size_t>(c)];
            CHECK(abs(diff) <= bound);
        }
    }
}
