#include <doctest.h>

#include "fixtures.hpp"
#include "pscvote/generate.hpp"
#include "pscvote/monotonicity.hpp"
#include "pscvote/phragmen.hpp"

using namespace pscvote;

TEST_CASE("psc set audit passes on the fixtures") {
    for (const char* text : {fixtures::kPscIntro, fixtures::kOrderedEating,
                             fixtures::kFractionalEating, fixtures::kOrderedPscFailure,
                             fixtures::kRankPjrGap, fixtures::kUnanimity}) {
        const AuditReport report = audit_psc_set(parse_instance(text));
        CHECK(report.passed());
        CHECK(report.perturbations_tested > 0);
    }
}

TEST_CASE("psc set audit passes on random instances") {
    RngStream rng(301);
    for (int i = 0; i < 60; ++i) {
        const Instance inst = random_instance(rng, 8, 6, 3);
        const AuditReport report = audit_psc_set(inst);
        CHECK(report.passed());
        CHECK(report.instance_digest == serialize_instance(inst));
    }
}

TEST_CASE("pfr audit passes on the fixtures") {
    for (const char* text : {fixtures::kPscIntro, fixtures::kOrderedEating,
                             fixtures::kFractionalEating, fixtures::kOrderedPscFailure,
                             fixtures::kRankPjrGap, fixtures::kUnanimity}) {
        CHECK(audit_pfr(parse_instance(text)).passed());
    }
}

TEST_CASE("pfr audit passes on random instances") {
    RngStream rng(302);
    for (int i = 0; i < 120; ++i) {
        const Instance inst = random_instance(rng, 10, 7, 4);
        CHECK(audit_pfr(inst).passed());
    }
}

TEST_CASE("a single swap never lowers the raised candidate's probability") {
    // Spot-check the relation the audit relies on, independent of AuditReport.
    RngStream rng(303);
    for (int i = 0; i < 40; ++i) {
        const Instance inst = random_instance(rng, 8, 6, 3);
        const auto before = pfr(inst).first;
        for (size_t line = 0; line < inst.ballots().size(); ++line) {
            const Ballot& b = inst.ballots()[line];
            for (size_t pos = 1; pos < b.ranking.size(); ++pos) {
                const int c = b.ranking[pos];
                const Instance perturbed = swap_up(inst, static_cast<int>(line), 1, c);
                const auto after = pfr(perturbed).first;
                CHECK(after.probabilities[static_cast<size_t>(c)] >=
                      before.probabilities[static_cast<size_t>(c)]);
            }
        }
    }
}
