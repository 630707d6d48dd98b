#include "pscvote/stats.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pscvote/coalitions.hpp"

namespace pscvote {

namespace {

constexpr std::array<std::pair<long, long>, 4> kThresholds = {
    {{3, 4}, {9, 10}, {19, 20}, {99, 100}}};

template <typename Weight>
std::array<long, 4> percentiles(std::vector<std::pair<Committee, Weight>> entries,
                                const Weight& total) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::array<long, 4> out{};
    for (size_t t = 0; t < kThresholds.size(); ++t) {
        Weight cumulative{};
        long needed = 0;
        for (const auto& [committee, weight] : entries) {
            if (cumulative * kThresholds[t].second >= total * kThresholds[t].first) {
                break;
            }
            cumulative += weight;
            ++needed;
        }
        out[t] = needed;
    }
    return out;
}

}  // namespace

std::array<long, 4> percentiles_from_exact(const std::map<Committee, Rational>& dist) {
    std::vector<std::pair<Committee, Rational>> entries(dist.begin(), dist.end());
    return percentiles(std::move(entries), Rational(1));
}

std::array<long, 4> percentiles_from_histogram(const std::map<Committee, long>& hist,
                                               long total) {
    std::vector<std::pair<Committee, long>> entries(hist.begin(), hist.end());
    return percentiles(std::move(entries), total);
}

StatsRow compute_stats_row(const std::string& id, const Instance& inst,
                           long sample_count, std::uint64_t seed, long psc_cap,
                           long exact_cap) {
    StatsRow row;
    row.id = id;
    row.m = inst.num_candidates();
    row.k = inst.committee_size();
    row.n = inst.num_voters();
    row.sample_count = sample_count;

    auto [fractional, ledger] = pfr(inst);
    for (const Rational& p : fractional.probabilities) {
        row.prob_one += p == 1;
        row.prob_ge_90 += p >= Rational(9, 10);
        row.prob_ge_80 += p >= Rational(4, 5);
        row.prob_ge_50 += p >= Rational(1, 2);
        row.prob_le_10 += p <= Rational(1, 10);
    }

    try {
        row.psc_count = static_cast<long>(enumerate_psc_committees(inst, psc_cap).size());
    } catch (const CapExceededError&) {
        row.psc_capped = true;
    }

    std::map<Committee, long> histogram;
    for (const Committee& w : sample_committees(inst, sample_count, seed)) {
        ++histogram[w];
    }
    row.support_size = static_cast<long>(histogram.size());

    const RoundingGraph graph = build_rounding_graph(inst, ledger);
    std::array<long, 4> masses{};
    try {
        masses = percentiles_from_exact(exact_support(graph, exact_cap));
        row.exact_percentiles = true;
    } catch (const CapExceededError&) {
        masses = percentiles_from_histogram(histogram, sample_count);
    }
    row.mass_75 = masses[0];
    row.mass_90 = masses[1];
    row.mass_95 = masses[2];
    row.mass_99 = masses[3];
    return row;
}

std::vector<StatsRow> stats_for_directory(const std::string& dir, long sample_count,
                                          std::uint64_t seed,
                                          std::vector<std::string>* warnings,
                                          long psc_cap, long exact_cap) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<StatsRow> rows;
    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        if (!in.good() && !in.eof()) {
            if (warnings != nullptr) {
                warnings->push_back("skipping unreadable file " + path.string());
            }
            continue;
        }
        try {
            const Instance inst = parse_instance(buffer.str());
            rows.push_back(compute_stats_row(path.filename().string(), inst, sample_count,
                                             seed, psc_cap, exact_cap));
        } catch (const InstanceError& e) {
            if (warnings != nullptr) {
                warnings->push_back("skipping " + path.string() + ": " + e.what());
            }
        }
    }
    return rows;
}

std::vector<AggregateRow> aggregate_stats(const std::vector<StatsRow>& rows) {
    std::map<std::pair<int, int>, AggregateRow> groups;
    for (const StatsRow& row : rows) {
        AggregateRow& agg = groups[{row.m, row.k}];
        agg.m = row.m;
        agg.k = row.k;
        ++agg.instances;
        agg.avg_psc += static_cast<double>(row.psc_count);
        agg.avg_support += static_cast<double>(row.support_size);
        agg.avg_75 += static_cast<double>(row.mass_75);
        agg.avg_90 += static_cast<double>(row.mass_90);
        agg.avg_95 += static_cast<double>(row.mass_95);
        agg.avg_99 += static_cast<double>(row.mass_99);
    }
    std::vector<AggregateRow> out;
    for (auto& [key, agg] : groups) {
        const double count = static_cast<double>(agg.instances);
        agg.avg_psc /= count;
        agg.avg_support /= count;
        agg.avg_75 /= count;
        agg.avg_90 /= count;
        agg.avg_95 /= count;
        agg.avg_99 /= count;
        out.push_back(agg);
    }
    return out;
}

std::string stats_csv(const std::vector<StatsRow>& rows) {
    std::ostringstream out;
    out << "schema_version,instance,m,k,n,prob_one,prob_ge_90,prob_ge_80,prob_ge_50,"
           "prob_le_10,psc_committees,psc_capped,support_size,mass_75,mass_90,mass_95,"
           "mass_99,percentile_source,samples\n";
    for (const StatsRow& row : rows) {
        out << kStatsSchemaVersion << ',' << row.id << ',' << row.m << ',' << row.k << ','
            << row.n << ',' << row.prob_one << ',' << row.prob_ge_90 << ','
            << row.prob_ge_80 << ',' << row.prob_ge_50 << ',' << row.prob_le_10 << ','
            << (row.psc_capped ? std::string("capped") : std::to_string(row.psc_count))
            << ',' << (row.psc_capped ? 1 : 0) << ',' << row.support_size << ','
            << row.mass_75 << ',' << row.mass_90 << ',' << row.mass_95 << ','
            << row.mass_99 << ',' << (row.exact_percentiles ? "exact" : "sampled") << ','
            << row.sample_count << '\n';
    }
    return out.str();
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
    std::ostringstream out;
    out << "schema_version,m,k,instances,avg_psc_committees,avg_support,avg_mass_75,"
           "avg_mass_90,avg_mass_95,avg_mass_99\n";
    for (const AggregateRow& row : rows) {
        out << kStatsSchemaVersion << ',' << row.m << ',' << row.k << ',' << row.instances
            << ',' << row.avg_psc << ',' << row.avg_support << ',' << row.avg_75 << ','
            << row.avg_90 << ',' << row.avg_95 << ',' << row.avg_99 << '\n';
    }
    return out.str();
}

}  // namespace pscvote
