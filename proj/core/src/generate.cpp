#include "pscvote/generate.hpp"

#include <numeric>

namespace pscvote {

namespace {

std::vector<int> random_permutation(RngStream& rng, int m) {
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.uniform_u64(i)]);
    }
    return perm;
}

std::vector<Ballot> random_ballots(RngStream& rng, long n, int m) {
    std::vector<Ballot> ballots;
    long remaining = n;
    while (remaining > 0) {
        Ballot b;
        b.multiplicity = 1 + static_cast<long>(rng.uniform_u64(static_cast<std::uint64_t>(remaining)));
        b.ranking = random_permutation(rng, m);
        remaining -= b.multiplicity;
        ballots.push_back(std::move(b));
    }
    return ballots;
}

}  // namespace

Instance random_instance(RngStream& rng, long max_voters, int max_candidates,
                         int max_committee) {
    const int m = 1 + static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(max_candidates)));
    const int k_cap = std::min(max_committee, m);
    const int k = 1 + static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(k_cap)));
    const long n = 1 + static_cast<long>(rng.uniform_u64(static_cast<std::uint64_t>(max_voters)));
    return Instance(m, k, random_ballots(rng, n, m));
}

PartyProfile random_party_profile(RngStream& rng, int max_parties, int max_house,
                                  long max_voters) {
    PartyProfile profile;
    profile.party_count =
        1 + static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(max_parties)));
    profile.house_size =
        1 + static_cast<int>(rng.uniform_u64(static_cast<std::uint64_t>(max_house)));
    const long n = 1 + static_cast<long>(rng.uniform_u64(static_cast<std::uint64_t>(max_voters)));
    profile.ballots = random_ballots(rng, n, profile.party_count);
    return profile;
}

}  // namespace pscvote
