#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pscvote/rational.hpp"

namespace pscvote {

// One ballot line: `multiplicity` identical voters with a complete strict
// ranking (candidate indices 0..m-1, most preferred first).
struct Ballot {
    long multiplicity = 1;
    std::vector<int> ranking;

    bool operator==(const Ballot&) const = default;
};

class InstanceError : public std::runtime_error {
  public:
    explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public InstanceError {
  public:
    ParseError(int line, const std::string& what)
        : InstanceError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

// An election instance: m candidates, committee size k, and a profile of
// complete strict rankings with integer multiplicities. Immutable after
// construction; all operations on instances are pure.
class Instance {
  public:
    Instance(int num_candidates, int committee_size, std::vector<Ballot> ballots);

    int num_candidates() const { return m_; }
    int committee_size() const { return k_; }
    long num_voters() const { return n_; }
    const std::vector<Ballot>& ballots() const { return ballots_; }

    bool operator==(const Instance&) const = default;

  private:
    int m_;
    int k_;
    std::vector<Ballot> ballots_;
    long n_;
};

struct Committee {
    std::vector<int> members;  // sorted ascending

    auto operator<=>(const Committee&) const = default;
};

struct FractionalCommittee {
    std::vector<Rational> probabilities;  // per candidate, sums to k

    bool operator==(const FractionalCommittee&) const = default;
};

// How to treat ballot lines that do not list every candidate.
enum class CompletionPolicy {
    Reject,           // incomplete rankings are a parse error (default)
    AppendAscending,  // append missing candidates in ascending index order
    ShuffleTail,      // append missing candidates in seeded random order
};

// Ballot file: line 1 is "m k"; each further non-empty, non-# line is
// "count: i1 i2 ... im" with 1-based candidate indices.
Instance parse_instance(std::string_view text,
                        CompletionPolicy policy = CompletionPolicy::Reject,
                        std::uint64_t completion_seed = 0);

std::string serialize_instance(const Instance& inst);

// Shift candidate `c` one rank up in `count` copies of ballot line `line`.
// If count is below the line's multiplicity, the line is split: the
// unchanged copies keep their position and the modified copies are inserted
// directly after.
Instance swap_up(const Instance& inst, int line, long count, int candidate);

Committee make_committee(std::vector<int> members, const Instance& inst);

// "1,3" with 1-based indices -> Committee (validated against inst).
Committee parse_committee(std::string_view text, const Instance& inst);
std::string format_committee(const Committee& committee);

}  // namespace pscvote
