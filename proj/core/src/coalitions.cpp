#include "pscvote/coalitions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>

namespace pscvote {

std::vector<SolidCoalition> enumerate_solid_coalitions(const Instance& inst) {
    const int m = inst.num_candidates();
    const auto& ballots = inst.ballots();
    std::vector<SolidCoalition> out;
    std::vector<std::vector<int>> prefixes(ballots.size());
    for (int r = 1; r <= m; ++r) {
        // Group ballot lines by the *set* of their top-r candidates.
        std::map<std::vector<int>, SolidCoalition> groups;
        for (size_t line = 0; line < ballots.size(); ++line) {
            auto& prefix = prefixes[line];
            prefix.insert(std::upper_bound(prefix.begin(), prefix.end(),
                                           ballots[line].ranking[static_cast<size_t>(r - 1)]),
                          ballots[line].ranking[static_cast<size_t>(r - 1)]);
            SolidCoalition& g = groups[prefix];
            g.lines.push_back(static_cast<int>(line));
            g.voter_count += ballots[line].multiplicity;
        }
        for (auto& [prefix, g] : groups) {
            g.candidates = prefix;
            g.rank = r;
            out.push_back(std::move(g));
        }
    }
    return out;
}

namespace {

long intersection_size(const std::vector<int>& sorted_candidates, const Committee& w) {
    long count = 0;
    for (int c : sorted_candidates) {
        count += std::binary_search(w.members.begin(), w.members.end(), c) ? 1 : 0;
    }
    return count;
}

}  // namespace

std::optional<PscViolation> check_psc(const Instance& inst, const Committee& committee) {
    const long n = inst.num_voters();
    const long k = inst.committee_size();
    std::optional<PscViolation> worst;
    for (const SolidCoalition& g : enumerate_solid_coalitions(inst)) {
        // Largest l with |N'| >= l n / k; condition (ii) is monotone in l.
        const long demand = g.voter_count * k / n;
        const long need = std::min<long>(g.rank, demand);
        const long achieved = intersection_size(g.candidates, committee);
        if (achieved < need && (!worst || demand > worst->demand)) {
            worst = PscViolation{g, demand, achieved};
        }
    }
    return worst;
}

std::optional<ExAnteViolation> check_ex_ante_psc(const Instance& inst,
                                                 const FractionalCommittee& fractional) {
    const Rational quota = Rational(inst.committee_size()) / inst.num_voters();
    for (const SolidCoalition& g : enumerate_solid_coalitions(inst)) {
        const Rational demand = Rational(g.voter_count) * quota;
        const Rational need = std::min(Rational(g.rank), demand);
        Rational mass = 0;
        for (int c : g.candidates) {
            mass += fractional.probabilities[static_cast<size_t>(c)];
        }
        if (mass < need) {
            return ExAnteViolation{g, demand, mass};
        }
    }
    return std::nullopt;
}

namespace {

long committee_count_or_throw(int m, int k, long cap) {
    // C(m, k), capped.
    long count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * (m - k + i) / i;
        if (count > cap) {
            throw CapExceededError("committee enumeration cap exceeded");
        }
    }
    return count;
}

struct MaskedCoalition {
    int rank;
    std::uint64_t candidate_mask;
    long need;  // min(|C'|, floor(|N'| k / n))
};

std::vector<MaskedCoalition> masked_coalitions(const Instance& inst) {
    if (inst.num_candidates() > 63) {
        throw CapExceededError("bitmask enumeration supports at most 63 candidates");
    }
    std::vector<MaskedCoalition> out;
    const long n = inst.num_voters();
    const long k = inst.committee_size();
    for (const SolidCoalition& g : enumerate_solid_coalitions(inst)) {
        std::uint64_t mask = 0;
        for (int c : g.candidates) {
            mask |= std::uint64_t{1} << c;
        }
        const long need = std::min<long>(g.rank, g.voter_count * k / n);
        if (need > 0) {
            out.push_back({g.rank, mask, need});
        }
    }
    return out;
}

}  // namespace

std::vector<Committee> enumerate_psc_committees(const Instance& inst, long cap) {
    const int m = inst.num_candidates();
    const int k = inst.committee_size();
    committee_count_or_throw(m, k, cap);
    const auto coalitions = masked_coalitions(inst);

    std::vector<Committee> out;
    std::vector<int> members(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        members[static_cast<size_t>(i)] = i;
    }
    while (true) {
        std::uint64_t mask = 0;
        for (int c : members) {
            mask |= std::uint64_t{1} << c;
        }
        bool ok = true;
        for (const MaskedCoalition& g : coalitions) {
            if (std::popcount(mask & g.candidate_mask) < g.need) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(Committee{members});
        }
        // next k-combination of 0..m-1
        int i = k - 1;
        while (i >= 0 && members[static_cast<size_t>(i)] == m - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++members[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            members[static_cast<size_t>(j)] = members[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

namespace {

// Reachable-set search over minimal demand executions. States are
// (rank, partial committee); the nondeterminism is both which violated
// coalition to serve and which of its candidates to add.
class MinimalDemandSearch {
  public:
    MinimalDemandSearch(const Instance& inst, long cap)
        : m_(inst.num_candidates()), k_(inst.committee_size()), cap_(cap) {
        by_rank_.resize(static_cast<size_t>(m_ + 1));
        for (const MaskedCoalition& g : masked_coalitions(inst)) {
            by_rank_[static_cast<size_t>(g.rank)].push_back(g);
        }
    }

    std::set<std::uint64_t> run() {
        visit(1, 0);
        return std::move(terminal_);
    }

  private:
    void visit(int rank, std::uint64_t w) {
        if (!visited_.insert({rank, w}).second) {
            return;
        }
        if (static_cast<long>(visited_.size()) > cap_) {
            throw CapExceededError("minimal demand state cap exceeded");
        }
        if (rank > m_) {
            // The rank-m coalition of all voters demands k seats, so the
            // committee is already full here; keep the fill as a fallback.
            if (std::popcount(w) == k_) {
                terminal_.insert(w);
            } else {
                fill(w, 0);
            }
            return;
        }
        std::uint64_t addable = 0;
        for (const MaskedCoalition& g : by_rank_[static_cast<size_t>(rank)]) {
            if (std::popcount(w & g.candidate_mask) < g.need) {
                addable |= g.candidate_mask & ~w;
            }
        }
        if (addable == 0) {
            visit(rank + 1, w);
            return;
        }
        if (std::popcount(w) == k_) {
            return;  // dead branch; cannot occur on valid executions
        }
        while (addable != 0) {
            const std::uint64_t bit = addable & (~addable + 1);
            addable ^= bit;
            visit(rank, w | bit);
        }
    }

    void fill(std::uint64_t w, int from) {
        if (std::popcount(w) == k_) {
            terminal_.insert(w);
            return;
        }
        for (int c = from; c < m_; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (!(w & bit)) {
                fill(w | bit, c + 1);
            }
        }
    }

    int m_;
    int k_;
    long cap_;
    std::vector<std::vector<MaskedCoalition>> by_rank_;
    std::set<std::pair<int, std::uint64_t>> visited_;
    std::set<std::uint64_t> terminal_;
};

}  // namespace

std::vector<Committee> minimal_demand_enumerate(const Instance& inst, long cap) {
    committee_count_or_throw(inst.num_candidates(), inst.committee_size(), cap);
    MinimalDemandSearch search(inst, cap);
    std::vector<Committee> out;
    for (std::uint64_t mask : search.run()) {
        Committee w;
        for (int c = 0; c < inst.num_candidates(); ++c) {
            if (mask & (std::uint64_t{1} << c)) {
                w.members.push_back(c);
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

Committee minimal_demand_single(const Instance& inst) {
    const int m = inst.num_candidates();
    const int k = inst.committee_size();
    const long n = inst.num_voters();
    const auto coalitions = enumerate_solid_coalitions(inst);
    std::vector<char> in_w(static_cast<size_t>(m));
    int size = 0;

    for (int rank = 1; rank <= m; ++rank) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const SolidCoalition& g : coalitions) {
                if (g.rank != rank) {
                    continue;
                }
                const long need = std::min<long>(g.rank, g.voter_count * k / n);
                long achieved = 0;
                for (int c : g.candidates) {
                    achieved += in_w[static_cast<size_t>(c)];
                }
                if (achieved >= need) {
                    continue;
                }
                assert(size < k);
                for (int c : g.candidates) {  // lowest-index eligible candidate
                    if (!in_w[static_cast<size_t>(c)]) {
                        in_w[static_cast<size_t>(c)] = 1;
                        ++size;
                        break;
                    }
                }
                changed = true;
                break;
            }
        }
    }
    for (int c = 0; c < m && size < k; ++c) {
        if (!in_w[static_cast<size_t>(c)]) {
            in_w[static_cast<size_t>(c)] = 1;
            ++size;
        }
    }
    Committee out;
    for (int c = 0; c < m; ++c) {
        if (in_w[static_cast<size_t>(c)]) {
            out.members.push_back(c);
        }
    }
    return out;
}

}  // namespace pscvote
