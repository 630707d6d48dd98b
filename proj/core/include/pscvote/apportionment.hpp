#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pscvote/model.hpp"

namespace pscvote {

// Party-list profile: voters rank parties, `house_size` seats are
// distributed. The ballot format is the same as for candidates, with
// indices standing for parties.
struct PartyProfile {
    int party_count = 0;
    int house_size = 0;
    std::vector<Ballot> ballots;  // complete strict rankings over parties

    long num_voters() const {
        long n = 0;
        for (const Ballot& b : ballots) {
            n += b.multiplicity;
        }
        return n;
    }
};

struct SeatAllocation {
    std::vector<long> seats;  // per party, sums to house_size

    bool operator==(const SeatAllocation&) const = default;
};

// Clones each party h times (clone j of party i is candidate i*h + j, ranked
// before clone j+1), so that a party's candidates never run out; k = h.
Instance expand_party_list(const PartyProfile& profile);

// Per-party expected seats under PFR on the expansion; equals v_i * h / n
// exactly for each party.
std::vector<Rational> expected_seats(const PartyProfile& profile);

// One seeded draw of the rounding pipeline on the expansion. Returns the
// realized allocation and the per-party expected seats.
std::pair<SeatAllocation, std::vector<Rational>> apportion(const PartyProfile& profile,
                                                           std::uint64_t seed);

// true iff every party's seats are the floor or ceiling of its exact quota
// v_i * h / n and the seats sum to h.
bool check_quota(const PartyProfile& profile, const SeatAllocation& alloc);

}  // namespace pscvote
