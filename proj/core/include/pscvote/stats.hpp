#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pscvote/coalitions.hpp"
#include "pscvote/rounding.hpp"

namespace pscvote {

inline constexpr int kStatsSchemaVersion = 1;

// Per-instance summary of the PFR lottery: candidate probability buckets,
// PSC committee count, sampled support, and how many committees (taken in
// descending probability order) cover each mass threshold.
struct StatsRow {
    std::string id;
    int m = 0;
    int k = 0;
    long n = 0;
    long prob_one = 0;    // candidates with probability exactly 1
    long prob_ge_90 = 0;  // >= 9/10
    long prob_ge_80 = 0;  // >= 4/5
    long prob_ge_50 = 0;  // >= 1/2
    long prob_le_10 = 0;  // <= 1/10
    long psc_count = 0;
    bool psc_capped = false;
    long support_size = 0;  // distinct sampled committees
    long mass_75 = 0;
    long mass_90 = 0;
    long mass_95 = 0;
    long mass_99 = 0;
    bool exact_percentiles = false;  // from exact_support rather than samples
    long sample_count = 0;
};

struct AggregateRow {
    int m = 0;
    int k = 0;
    long instances = 0;
    double avg_psc = 0;
    double avg_support = 0;
    double avg_75 = 0;
    double avg_90 = 0;
    double avg_95 = 0;
    double avg_99 = 0;
};

// Mass thresholds 3/4, 9/10, 19/20, 99/100 against the exact distribution.
std::array<long, 4> percentiles_from_exact(const std::map<Committee, Rational>& dist);

// Same thresholds against an empirical histogram with `total` samples.
std::array<long, 4> percentiles_from_histogram(const std::map<Committee, long>& hist,
                                               long total);

StatsRow compute_stats_row(const std::string& id, const Instance& inst,
                           long sample_count, std::uint64_t seed,
                           long psc_cap = kDefaultEnumerationCap,
                           long exact_cap = 10'000);

// One row per readable ballot file in `dir`, sorted by filename. Unreadable
// or malformed files are skipped and reported through `warnings`.
std::vector<StatsRow> stats_for_directory(const std::string& dir, long sample_count,
                                          std::uint64_t seed,
                                          std::vector<std::string>* warnings,
                                          long psc_cap = kDefaultEnumerationCap,
                                          long exact_cap = 10'000);

// Per-(m, k) averages, mirroring the summary figures.
std::vector<AggregateRow> aggregate_stats(const std::vector<StatsRow>& rows);

std::string stats_csv(const std::vector<StatsRow>& rows);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);

}  // namespace pscvote
