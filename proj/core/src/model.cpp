#include "pscvote/model.hpp"

#include <algorithm>
#include <sstream>

#include "pscvote/rng.hpp"

namespace pscvote {

Instance::Instance(int num_candidates, int committee_size, std::vector<Ballot> ballots)
    : m_(num_candidates), k_(committee_size), ballots_(std::move(ballots)), n_(0) {
    if (m_ < 1) {
        throw InstanceError("candidate count must be positive");
    }
    if (k_ < 1 || k_ > m_) {
        throw InstanceError("committee size must satisfy 1 <= k <= m");
    }
    if (ballots_.empty()) {
        throw InstanceError("empty profile");
    }
    std::vector<char> seen(static_cast<size_t>(m_));
    for (const Ballot& b : ballots_) {
        if (b.multiplicity < 1) {
            throw InstanceError("ballot multiplicity must be positive");
        }
        if (static_cast<int>(b.ranking.size()) != m_) {
            throw InstanceError("ranking is not a complete permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int c : b.ranking) {
            if (c < 0 || c >= m_ || seen[static_cast<size_t>(c)]) {
                throw InstanceError("ranking is not a permutation of 0..m-1");
            }
            seen[static_cast<size_t>(c)] = 1;
        }
        n_ += b.multiplicity;
    }
}

namespace {

void complete_ranking(std::vector<int>& ranking, int m, CompletionPolicy policy,
                      RngStream& rng) {
    std::vector<char> present(static_cast<size_t>(m));
    for (int c : ranking) {
        present[static_cast<size_t>(c)] = 1;
    }
    std::vector<int> tail;
    for (int c = 0; c < m; ++c) {
        if (!present[static_cast<size_t>(c)]) {
            tail.push_back(c);
        }
    }
    if (policy == CompletionPolicy::ShuffleTail) {
        for (size_t i = tail.size(); i > 1; --i) {
            std::swap(tail[i - 1], tail[rng.uniform_u64(i)]);
        }
    }
    ranking.insert(ranking.end(), tail.begin(), tail.end());
}

}  // namespace

Instance parse_instance(std::string_view text, CompletionPolicy policy,
                        std::uint64_t completion_seed) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int m = -1;
    int k = -1;
    std::vector<Ballot> ballots;
    RngStream rng(completion_seed);

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto pos = line.find('#'); pos != std::string_view::npos) {
            line = line.substr(0, pos);
        }
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            continue;
        }
        std::istringstream fields{std::string(line)};
        if (m < 0) {
            if (!(fields >> m >> k) || m < 1) {
                throw ParseError(line_no, "malformed header, expected \"m k\"");
            }
            if (k < 1 || k > m) {
                throw ParseError(line_no, "committee size must satisfy 1 <= k <= m");
            }
            std::string rest;
            if (fields >> rest) {
                throw ParseError(line_no, "trailing data after header");
            }
            continue;
        }
        Ballot b;
        char colon = 0;
        if (!(fields >> b.multiplicity >> colon) || colon != ':' || b.multiplicity < 1) {
            throw ParseError(line_no, "malformed ballot line, expected \"count: i1 i2 ...\"");
        }
        std::vector<char> seen(static_cast<size_t>(m));
        int c = 0;
        while (fields >> c) {
            if (c < 1 || c > m) {
                throw ParseError(line_no,
                                 "candidate index " + std::to_string(c) + " out of range");
            }
            if (seen[static_cast<size_t>(c - 1)]) {
                throw ParseError(line_no, "duplicate candidate " + std::to_string(c));
            }
            seen[static_cast<size_t>(c - 1)] = 1;
            b.ranking.push_back(c - 1);
        }
        if (!fields.eof()) {
            throw ParseError(line_no, "non-numeric candidate index");
        }
        if (static_cast<int>(b.ranking.size()) != m) {
            if (policy == CompletionPolicy::Reject) {
                throw ParseError(line_no, "ranking is missing candidates (" +
                                              std::to_string(b.ranking.size()) + " of " +
                                              std::to_string(m) + " listed)");
            }
            complete_ranking(b.ranking, m, policy, rng);
        }
        ballots.push_back(std::move(b));
    }
    if (m < 0) {
        throw ParseError(line_no, "missing header");
    }
    if (ballots.empty()) {
        throw ParseError(line_no, "empty profile");
    }
    try {
        return Instance(m, k, std::move(ballots));
    } catch (const InstanceError& e) {
        throw ParseError(line_no, e.what());
    }
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.num_candidates() << ' ' << inst.committee_size() << '\n';
    for (const Ballot& b : inst.ballots()) {
        out << b.multiplicity << ':';
        for (int c : b.ranking) {
            out << ' ' << c + 1;
        }
        out << '\n';
    }
    return out.str();
}

Instance swap_up(const Instance& inst, int line, long count, int candidate) {
    const auto& ballots = inst.ballots();
    if (line < 0 || line >= static_cast<int>(ballots.size())) {
        throw InstanceError("ballot line out of range");
    }
    const Ballot& b = ballots[static_cast<size_t>(line)];
    if (count < 1 || count > b.multiplicity) {
        throw InstanceError("copy count exceeds ballot multiplicity");
    }
    auto it = std::find(b.ranking.begin(), b.ranking.end(), candidate);
    if (it == b.ranking.end()) {
        throw InstanceError("candidate not on ballot");
    }
    if (it == b.ranking.begin()) {
        throw InstanceError("candidate is already top-ranked on this line");
    }
    Ballot swapped = b;
    swapped.multiplicity = count;
    auto pos = it - b.ranking.begin();
    std::swap(swapped.ranking[static_cast<size_t>(pos)],
              swapped.ranking[static_cast<size_t>(pos - 1)]);

    std::vector<Ballot> out = ballots;
    if (count == b.multiplicity) {
        out[static_cast<size_t>(line)] = std::move(swapped);
    } else {
        out[static_cast<size_t>(line)].multiplicity -= count;
        out.insert(out.begin() + line + 1, std::move(swapped));
    }
    return Instance(inst.num_candidates(), inst.committee_size(), std::move(out));
}

Committee make_committee(std::vector<int> members, const Instance& inst) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw InstanceError("committee members must be distinct");
    }
    if (static_cast<int>(members.size()) != inst.committee_size()) {
        throw InstanceError("committee must have exactly k members");
    }
    if (!members.empty() &&
        (members.front() < 0 || members.back() >= inst.num_candidates())) {
        throw InstanceError("committee member out of range");
    }
    return Committee{std::move(members)};
}

Committee parse_committee(std::string_view text, const Instance& inst) {
    std::string spaced(text);
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<int> members;
    int c = 0;
    while (in >> c) {
        if (c < 1 || c > inst.num_candidates()) {
            throw InstanceError("candidate index " + std::to_string(c) + " out of range");
        }
        members.push_back(c - 1);
    }
    if (!in.eof()) {
        throw InstanceError("malformed committee string");
    }
    return make_committee(std::move(members), inst);
}

std::string format_committee(const Committee& committee) {
    std::string out = "{";
    for (size_t i = 0; i < committee.members.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += "c" + std::to_string(committee.members[i] + 1);
    }
    return out + "}";
}

}  // namespace pscvote
