#pragma once

#include "pscvote/apportionment.hpp"
#include "pscvote/model.hpp"
#include "pscvote/rng.hpp"

namespace pscvote {

// Random instance with n <= max_voters, m <= max_candidates,
// k <= min(max_committee, m). Ballot lines are independent uniform
// permutations; multiplicities partition n.
Instance random_instance(RngStream& rng, long max_voters, int max_candidates,
                         int max_committee);

PartyProfile random_party_profile(RngStream& rng, int max_parties, int max_house,
                                  long max_voters);

}  // namespace pscvote
