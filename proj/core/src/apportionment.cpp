#include "pscvote/apportionment.hpp"

#include <cassert>

#include "pscvote/rounding.hpp"

namespace pscvote {

Instance expand_party_list(const PartyProfile& profile) {
    const int parties = profile.party_count;
    const int h = profile.house_size;
    std::vector<Ballot> expanded;
    expanded.reserve(profile.ballots.size());
    for (const Ballot& b : profile.ballots) {
        Ballot e;
        e.multiplicity = b.multiplicity;
        e.ranking.reserve(static_cast<size_t>(parties) * static_cast<size_t>(h));
        for (int party : b.ranking) {
            for (int clone = 0; clone < h; ++clone) {
                e.ranking.push_back(party * h + clone);
            }
        }
        expanded.push_back(std::move(e));
    }
    return Instance(parties * h, h, std::move(expanded));
}

namespace {

std::vector<Rational> party_totals(const PartyProfile& profile,
                                   const std::vector<Rational>& clone_values) {
    std::vector<Rational> totals(static_cast<size_t>(profile.party_count), Rational(0));
    for (int party = 0; party < profile.party_count; ++party) {
        for (int clone = 0; clone < profile.house_size; ++clone) {
            totals[static_cast<size_t>(party)] +=
                clone_values[static_cast<size_t>(party * profile.house_size + clone)];
        }
    }
    return totals;
}

}  // namespace

std::vector<Rational> expected_seats(const PartyProfile& profile) {
    const Instance expanded = expand_party_list(profile);
    return party_totals(profile, pfr(expanded).first.probabilities);
}

std::pair<SeatAllocation, std::vector<Rational>> apportion(const PartyProfile& profile,
                                                           std::uint64_t seed) {
    const Instance expanded = expand_party_list(profile);
    auto [fractional, ledger] = pfr(expanded);
    const RoundingGraph graph = build_rounding_graph(expanded, ledger);
    RngStream rng(seed);
    const RoundedOutcome outcome = gkps_round(graph, rng);

    SeatAllocation alloc;
    alloc.seats.assign(static_cast<size_t>(profile.party_count), 0);
    for (int c : outcome.committee.members) {
        ++alloc.seats[static_cast<size_t>(c / profile.house_size)];
    }
    return {std::move(alloc), party_totals(profile, fractional.probabilities)};
}

bool check_quota(const PartyProfile& profile, const SeatAllocation& alloc) {
    const long n = profile.num_voters();
    std::vector<long> votes(static_cast<size_t>(profile.party_count), 0);
    for (const Ballot& b : profile.ballots) {
        votes[static_cast<size_t>(b.ranking.front())] += b.multiplicity;
    }
    long total = 0;
    for (int party = 0; party < profile.party_count; ++party) {
        const Rational quota =
            Rational(votes[static_cast<size_t>(party)]) * profile.house_size / n;
        const long seats = alloc.seats[static_cast<size_t>(party)];
        if (BigInt(seats) != rational_floor(quota) && BigInt(seats) != rational_ceil(quota)) {
            return false;
        }
        total += seats;
    }
    return total == profile.house_size;
}

}  // namespace pscvote
