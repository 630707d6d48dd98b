#include <doctest.h>

#include "fixtures.hpp"
#include "pscvote/generate.hpp"
#include "pscvote/model.hpp"

using namespace pscvote;

TEST_CASE("parse reads the introductory instance") {
    const Instance inst = parse_instance(fixtures::kPscIntro);
    CHECK(inst.num_candidates() == 4);
    CHECK(inst.committee_size() == 2);
    CHECK(inst.num_voters() == 4);
    CHECK(inst.ballots().size() == 4);
    CHECK(inst.ballots()[2].ranking == std::vector<int>{2, 3, 0, 1});
}

TEST_CASE("parse handles multiplicities, comments and blank lines") {
    const Instance inst = parse_instance(fixtures::kOrderedPscFailure);
    CHECK(inst.num_voters() == 15);
    CHECK(inst.ballots()[5].multiplicity == 5);

    const Instance commented = parse_instance("# header comment\n\n1 1\n1: 1\n");
    CHECK(commented.num_candidates() == 1);
    CHECK(commented.num_voters() == 1);
}

TEST_CASE("parse rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("x y\n1: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("4 5\n1: 1 2 3 4\n"), ParseError);  // k > m
    CHECK_THROWS_AS(parse_instance("2 1\n"), ParseError);              // empty profile
    CHECK_THROWS_AS(parse_instance("4 2\n1: 1 2 3\n"), ParseError);    // missing candidate
    CHECK_THROWS_AS(parse_instance("2 1\n1: 1 1\n"), ParseError);      // duplicate
    CHECK_THROWS_AS(parse_instance("2 1\n0: 1 2\n"), ParseError);      // zero count

    try {
        parse_instance("4 2\n1: 1 2 3 4\n1: 1 2 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("completion policies fill in missing candidates") {
    const Instance appended =
        parse_instance("4 2\n1: 3 1\n", CompletionPolicy::AppendAscending);
    CHECK(appended.ballots()[0].ranking == std::vector<int>{2, 0, 1, 3});

    const Instance shuffled =
        parse_instance("5 2\n1: 3\n", CompletionPolicy::ShuffleTail, 42);
    CHECK(shuffled.ballots()[0].ranking.size() == 5);
    CHECK(shuffled.ballots()[0].ranking[0] == 2);
    // Same seed, same tail.
    CHECK(shuffled == parse_instance("5 2\n1: 3\n", CompletionPolicy::ShuffleTail, 42));
}

TEST_CASE("serialize round-trips") {
    for (const char* text :
         {fixtures::kPscIntro, fixtures::kOrderedPscFailure, fixtures::kUnanimity, "1 1\n1: 1\n"}) {
        const Instance inst = parse_instance(text);
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
}

TEST_CASE("serialize round-trips on random instances") {
    RngStream rng(2024);
    for (int i = 0; i < 50; ++i) {
        const Instance inst = random_instance(rng, 10, 6, 3);
        CHECK(parse_instance(serialize_instance(inst)) == inst);
    }
}

TEST_CASE("swap_up exchanges one adjacent pair") {
    const Instance inst = parse_instance(fixtures::kPscIntro);
    // Third voter raises c4 over c3.
    const Instance perturbed = swap_up(inst, 2, 1, 3);
    CHECK(perturbed.ballots()[2].ranking == std::vector<int>{3, 2, 0, 1});
    CHECK(perturbed.num_voters() == inst.num_voters());
    // All other lines untouched.
    for (size_t line : {0u, 1u, 3u}) {
        CHECK(perturbed.ballots()[line] == inst.ballots()[line]);
    }
}

TEST_CASE("swap_up splits multiplicities") {
    const Instance inst = parse_instance(fixtures::kOrderedPscFailure);
    const Instance perturbed = swap_up(inst, 5, 2, 0);  // two of the five raise c1
    CHECK(perturbed.num_voters() == 15);
    CHECK(perturbed.ballots().size() == 7);
    CHECK(perturbed.ballots()[5].multiplicity == 3);
    CHECK(perturbed.ballots()[6].multiplicity == 2);
    CHECK(perturbed.ballots()[6].ranking == std::vector<int>{5, 0, 6, 1, 2, 3, 4});
}

TEST_CASE("swap_up rejects invalid requests") {
    const Instance inst = parse_instance(fixtures::kPscIntro);
    CHECK_THROWS_AS(swap_up(inst, 0, 1, 0), InstanceError);  // already top
    CHECK_THROWS_AS(swap_up(inst, 0, 2, 1), InstanceError);  // count > multiplicity
    CHECK_THROWS_AS(swap_up(inst, 9, 1, 1), InstanceError);  // bad line
}

TEST_CASE("swap_up of a full line is an involution") {
    const Instance inst = parse_instance(fixtures::kPscIntro);
    const Instance once = swap_up(inst, 2, 1, 3);
    // c3 sits directly below c4 now; swapping it back restores the instance.
    CHECK(swap_up(once, 2, 1, 2) == inst);
}

TEST_CASE("committee parsing validates size and range") {
    const Instance inst = parse_instance(fixtures::kPscIntro);
    CHECK(parse_committee("1,3", inst).members == std::vector<int>{0, 2});
    CHECK(parse_committee("3 1", inst).members == std::vector<int>{0, 2});
    CHECK_THROWS_AS(parse_committee("1", inst), InstanceError);
    CHECK_THROWS_AS(parse_committee("1,1", inst), InstanceError);
    CHECK_THROWS_AS(parse_committee("1,5", inst), InstanceError);
    CHECK(format_committee(parse_committee("3,1", inst)) == "{c1,c3}");
}
