#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "pscvote/generate.hpp"
#include "pscvote/stats.hpp"

using namespace pscvote;

TEST_CASE("percentiles on an exact distribution") {
    std::map<Committee, Rational> dist;
    dist[Committee{{0, 2}}] = Rational(2, 3);
    dist[Committee{{0, 1}}] = Rational(1, 6);
    dist[Committee{{0, 3}}] = Rational(1, 6);
    // Mass 2/3 < 3/4, so the 3/4 threshold already needs a second committee.
    CHECK(percentiles_from_exact(dist) == std::array<long, 4>{2, 3, 3, 3});

    std::map<Committee, Rational> point;
    point[Committee{{0}}] = 1;
    CHECK(percentiles_from_exact(point) == std::array<long, 4>{1, 1, 1, 1});
}

TEST_CASE("percentiles on a histogram") {
    std::map<Committee, long> hist;
    hist[Committee{{0, 1}}] = 60;
    hist[Committee{{0, 2}}] = 30;
    hist[Committee{{0, 3}}] = 10;
    CHECK(percentiles_from_histogram(hist, 100) == std::array<long, 4>{2, 2, 3, 3});
    // Exactly hitting the threshold counts: 75 of 100 is within the top two.
    std::map<Committee, long> exact_edge;
    exact_edge[Committee{{0}}] = 75;
    exact_edge[Committee{{1}}] = 25;
    CHECK(percentiles_from_histogram(exact_edge, 100)[0] == 1);
}

TEST_CASE("stats row for the fractional fixture") {
    const Instance inst = parse_instance(fixtures::kFractionalEating);
    const StatsRow row = compute_stats_row("fixture", inst, 2000, 9);
    CHECK(row.m == 4);
    CHECK(row.k == 2);
    CHECK(row.n == 4);
    CHECK(row.prob_one == 1);
    CHECK(row.prob_ge_50 == 2);  // c1 and c3
    CHECK(row.prob_le_10 == 0);
    CHECK_FALSE(row.psc_capped);
    CHECK(row.exact_percentiles);
    CHECK(row.support_size == 3);
    CHECK(row.mass_75 == 2);
    CHECK(row.mass_99 == 3);
    CHECK(row.sample_count == 2000);
}

TEST_CASE("stats row falls back to sampled percentiles when capped") {
    const Instance inst = parse_instance(fixtures::kOrderedPscFailure);
    const StatsRow row = compute_stats_row("capped", inst, 500, 9,
                                           kDefaultEnumerationCap, /*exact_cap=*/2);
    CHECK_FALSE(row.exact_percentiles);
    CHECK(row.support_size > 0);
    CHECK(row.mass_75 <= row.mass_90);
    CHECK(row.mass_95 <= row.mass_99);
}

TEST_CASE("stats rows are seed-deterministic") {
    const Instance inst = parse_instance(fixtures::kOrderedPscFailure);
    const StatsRow a = compute_stats_row("x", inst, 800, 21);
    const StatsRow b = compute_stats_row("x", inst, 800, 21);
    CHECK(stats_csv({a}) == stats_csv({b}));
}

TEST_CASE("directory scan skips malformed files with a warning") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "pscvote_stats_test";
    fs::create_directories(dir);
    std::ofstream(dir / "a_good.toc") << fixtures::kFractionalEating;
    std::ofstream(dir / "b_bad.toc") << "not a ballot file\n";
    std::ofstream(dir / "c_good.toc") << fixtures::kUnanimity;

    std::vector<std::string> warnings;
    const auto rows = stats_for_directory(dir.string(), 200, 3, &warnings);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "a_good.toc");
    CHECK(rows[1].id == "c_good.toc");
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("b_bad.toc") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("aggregation averages rows sharing m and k") {
    StatsRow a;
    a.m = 4;
    a.k = 2;
    a.psc_count = 4;
    a.support_size = 2;
    a.mass_75 = 1;
    a.mass_90 = 2;
    a.mass_95 = 2;
    a.mass_99 = 2;
    StatsRow b = a;
    b.psc_count = 6;
    b.support_size = 4;
    b.mass_75 = 3;
    StatsRow other;
    other.m = 5;
    other.k = 3;

    const auto agg = aggregate_stats({a, b, other});
    REQUIRE(agg.size() == 2);
    CHECK(agg[0].instances == 2);
    CHECK(agg[0].avg_psc == doctest::Approx(5.0));
    CHECK(agg[0].avg_support == doctest::Approx(3.0));
    CHECK(agg[0].avg_75 == doctest::Approx(2.0));
    CHECK(agg[1].instances == 1);
}

TEST_CASE("csv output carries the schema version and source flags") {
    const Instance inst = parse_instance(fixtures::kFractionalEating);
    const std::string csv = stats_csv({compute_stats_row("fx", inst, 300, 1)});
    CHECK(csv.find("schema_version") != std::string::npos);
    CHECK(csv.find("fx") != std::string::npos);
    CHECK(csv.find("exact") != std::string::npos);
}
