#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pscvote/phragmen.hpp"
#include "pscvote/rng.hpp"

namespace pscvote {

// Weighted bipartite graph fed to dependent rounding: group vertices on the
// left (one per probability-1 candidate, plus one per solid coalition with
// integral leftover demand), candidates on the right.
struct RoundingGraph {
    struct LeftVertex {
        bool dedicated = false;           // single edge of weight exactly 1
        int rank = 0;                     // coalition prefix size (0 when dedicated)
        std::vector<int> coalition;       // C' for coalition vertices, sorted
        long demand = 0;                  // integral total incident weight
    };
    struct Edge {
        int left = 0;
        int candidate = 0;
        Rational weight;  // in (0, 1]
    };

    std::vector<LeftVertex> lefts;
    std::vector<Edge> edges;
    int num_candidates = 0;
    int committee_size = 0;

    Rational candidate_weight(int candidate) const {
        Rational w = 0;
        for (const Edge& e : edges) {
            if (e.candidate == candidate) {
                w += e.weight;
            }
        }
        return w;
    }
};

struct RoundedOutcome {
    std::vector<int> selected_edges;  // indices into RoundingGraph::edges
    Committee committee;
};

// Builds the rounding graph from a PFR ledger: dedicated vertices for fully
// eaten candidates, then per rank and coalition (lex order of C') a group
// vertex whenever the coalition's leftover ledger mass has a positive floor,
// with greedy deductions by ascending candidate index then voter id.
RoundingGraph build_rounding_graph(const Instance& inst, const EatingLedger& ledger);

// Pipage-style dependent rounding: each edge keeps its marginal exactly,
// every left vertex keeps its integral degree, and the resulting committee
// has exactly k members.
RoundedOutcome gkps_round(const RoundingGraph& graph, RngStream& rng);

// `count` independent seeded rounding draws from a single PFR run. Every
// returned committee satisfies PSC.
std::vector<Committee> sample_committees(const Instance& inst, long count,
                                         std::uint64_t seed);

// Symbolic expansion of the rounding recursion; exact output distribution
// for small graphs. Throws CapExceededError past `cap` recursion nodes.
std::map<Committee, Rational> exact_support(const RoundingGraph& graph, long cap = 10'000);

}  // namespace pscvote
