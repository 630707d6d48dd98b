#include "pscvote/rounding.hpp"

#include <algorithm>
#include <cassert>

#include "pscvote/coalitions.hpp"

namespace pscvote {

RoundingGraph build_rounding_graph(const Instance& inst, const EatingLedger& ledger) {
    const int m = inst.num_candidates();
    const long n = inst.num_voters();
    assert(ledger.num_candidates == m && ledger.num_voters == n);

    RoundingGraph graph;
    graph.num_candidates = m;
    graph.committee_size = inst.committee_size();

    auto remaining = ledger.entries;  // deducted as group vertices are formed
    std::vector<Rational> probabilities(static_cast<size_t>(m), Rational(0));
    for (const auto& row : remaining) {
        for (int c = 0; c < m; ++c) {
            probabilities[static_cast<size_t>(c)] += row[static_cast<size_t>(c)];
        }
    }

    for (int c = 0; c < m; ++c) {
        if (probabilities[static_cast<size_t>(c)] == 1) {
            const int vertex = static_cast<int>(graph.lefts.size());
            graph.lefts.push_back({true, 0, {c}, 1});
            graph.edges.push_back({vertex, c, Rational(1)});
            for (auto& row : remaining) {
                row[static_cast<size_t>(c)] = 0;
            }
        }
    }

    const std::vector<long> offsets = voter_offsets(inst);
    const auto& ballots = inst.ballots();
    for (const SolidCoalition& g : enumerate_solid_coalitions(inst)) {
        Rational mass = 0;
        for (int line : g.lines) {
            for (long v = offsets[static_cast<size_t>(line)];
                 v < offsets[static_cast<size_t>(line)] + ballots[static_cast<size_t>(line)].multiplicity; ++v) {
                for (int c : g.candidates) {
                    mass += remaining[static_cast<size_t>(v)][static_cast<size_t>(c)];
                }
            }
        }
        const BigInt demand = rational_floor(mass);
        if (demand < 1) {
            continue;
        }
        const int vertex = static_cast<int>(graph.lefts.size());
        graph.lefts.push_back({false, g.rank, g.candidates, demand.convert_to<long>()});
        // Greedy deductions: candidates ascending, voter ids ascending, take
        // maximal amounts until exactly `demand` is collected.
        Rational need(demand);
        for (int c : g.candidates) {
            Rational edge_weight = 0;
            for (int line : g.lines) {
                for (long v = offsets[static_cast<size_t>(line)];
                     need > 0 && v < offsets[static_cast<size_t>(line)] +
                                         ballots[static_cast<size_t>(line)].multiplicity;
                     ++v) {
                    Rational& cell = remaining[static_cast<size_t>(v)][static_cast<size_t>(c)];
                    const Rational take = std::min(cell, need);
                    cell -= take;
                    need -= take;
                    edge_weight += take;
                }
                if (need == 0) {
                    break;
                }
            }
            if (edge_weight > 0) {
                graph.edges.push_back({vertex, c, edge_weight});
            }
            if (need == 0) {
                break;
            }
        }
        if (need != 0) {
            throw InstanceError("rounding graph construction: non-integral deduction");
        }
    }

    for (const auto& row : remaining) {
        for (const Rational& cell : row) {
            if (cell != 0) {
                throw InstanceError("rounding graph construction: ledger mass remaining");
            }
        }
    }
    for (int c = 0; c < m; ++c) {
        assert(graph.candidate_weight(c) == probabilities[static_cast<size_t>(c)]);
    }
    return graph;
}

namespace {

// One pipage step: an alternating cycle (preferred) or a maximal path in the
// floating subgraph, split into the two alternating edge sets, with the two
// magnitudes that fix at least one edge at 0 or 1.
struct RoundingStep {
    std::vector<int> raise_edges;  // M1
    std::vector<int> lower_edges;  // M2
    Rational alpha;
    Rational beta;
};

class Rounder {
  public:
    Rounder(const RoundingGraph& graph, std::vector<Rational> weights)
        : graph_(graph), weights_(std::move(weights)),
          num_vertices_(graph.lefts.size() + static_cast<size_t>(graph.num_candidates)) {}

    const std::vector<Rational>& weights() const { return weights_; }

    bool has_floating() const {
        return std::any_of(weights_.begin(), weights_.end(),
                           [](const Rational& w) { return w > 0 && w < 1; });
    }

    RoundingStep next_step() const {
        // Floating-edge adjacency. Left vertices come first, candidate c is
        // vertex lefts.size() + c.
        std::vector<std::vector<int>> adj(num_vertices_);
        std::vector<int> degree(num_vertices_, 0);
        for (size_t e = 0; e < graph_.edges.size(); ++e) {
            if (weights_[e] > 0 && weights_[e] < 1) {
                adj[static_cast<size_t>(graph_.edges[e].left)].push_back(static_cast<int>(e));
                adj[candidate_vertex(graph_.edges[e].candidate)].push_back(static_cast<int>(e));
                ++degree[static_cast<size_t>(graph_.edges[e].left)];
                ++degree[candidate_vertex(graph_.edges[e].candidate)];
            }
        }
        std::vector<int> walk = find_cycle(adj, degree);
        if (walk.empty()) {
            walk = find_path(adj, degree);
        }
        assert(!walk.empty());
        return make_step(walk);
    }

    void apply(const RoundingStep& step, bool raise) {
        const Rational delta = raise ? step.alpha : -step.beta;
        for (int e : step.raise_edges) {
            weights_[static_cast<size_t>(e)] += delta;
        }
        for (int e : step.lower_edges) {
            weights_[static_cast<size_t>(e)] -= delta;
        }
    }

    RoundedOutcome outcome() const {
        RoundedOutcome out;
        std::vector<char> chosen(static_cast<size_t>(graph_.num_candidates));
        for (size_t e = 0; e < weights_.size(); ++e) {
            assert(weights_[e] == 0 || weights_[e] == 1);
            if (weights_[e] == 1) {
                out.selected_edges.push_back(static_cast<int>(e));
                const int c = graph_.edges[e].candidate;
                assert(!chosen[static_cast<size_t>(c)]);
                chosen[static_cast<size_t>(c)] = 1;
                out.committee.members.push_back(c);
            }
        }
        std::sort(out.committee.members.begin(), out.committee.members.end());
        assert(static_cast<int>(out.committee.members.size()) == graph_.committee_size);
        return out;
    }

  private:
    size_t candidate_vertex(int candidate) const {
        return graph_.lefts.size() + static_cast<size_t>(candidate);
    }

    int other_endpoint(int edge, int vertex) const {
        const auto& e = graph_.edges[static_cast<size_t>(edge)];
        const int left = e.left;
        const int right = static_cast<int>(candidate_vertex(e.candidate));
        return vertex == left ? right : left;
    }

    // Peels leaves; any remaining vertex lies on a cycle, which a
    // lowest-index walk then closes. Returns the cycle's edge sequence.
    std::vector<int> find_cycle(const std::vector<std::vector<int>>& adj,
                                std::vector<int> degree) const {
        std::vector<char> removed(num_vertices_, 0);
        std::vector<int> queue;
        for (size_t v = 0; v < num_vertices_; ++v) {
            if (degree[v] == 1) {
                queue.push_back(static_cast<int>(v));
            }
        }
        std::vector<char> edge_removed(graph_.edges.size(), 0);
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            removed[static_cast<size_t>(v)] = 1;
            for (int e : adj[static_cast<size_t>(v)]) {
                if (edge_removed[static_cast<size_t>(e)]) {
                    continue;
                }
                edge_removed[static_cast<size_t>(e)] = 1;
                const int u = other_endpoint(e, v);
                if (--degree[static_cast<size_t>(u)] == 1) {
                    queue.push_back(u);
                }
            }
        }
        int start = -1;
        for (size_t v = 0; v < num_vertices_; ++v) {
            if (!removed[v] && degree[v] >= 2) {
                start = static_cast<int>(v);
                break;
            }
        }
        if (start < 0) {
            return {};
        }
        // Walk the 2-core taking the lowest-index usable edge until a vertex
        // repeats; the tail from its first occurrence is the cycle.
        std::vector<int> vertex_walk{start};
        std::vector<int> edge_walk;
        std::vector<int> seen_at(num_vertices_, -1);
        seen_at[static_cast<size_t>(start)] = 0;
        int current = start;
        int incoming = -1;
        while (true) {
            int next_edge = -1;
            for (int e : adj[static_cast<size_t>(current)]) {
                if (e != incoming && !edge_removed[static_cast<size_t>(e)]) {
                    next_edge = e;
                    break;
                }
            }
            assert(next_edge >= 0);
            const int next_vertex = other_endpoint(next_edge, current);
            edge_walk.push_back(next_edge);
            if (seen_at[static_cast<size_t>(next_vertex)] >= 0) {
                const int first = seen_at[static_cast<size_t>(next_vertex)];
                return {edge_walk.begin() + first, edge_walk.end()};
            }
            vertex_walk.push_back(next_vertex);
            seen_at[static_cast<size_t>(next_vertex)] = static_cast<int>(edge_walk.size());
            current = next_vertex;
            incoming = next_edge;
        }
    }

    // Forest case: start at the lowest-numbered floating-degree-1 vertex and
    // extend until the far leaf.
    std::vector<int> find_path(const std::vector<std::vector<int>>& adj,
                               const std::vector<int>& degree) const {
        int start = -1;
        for (size_t v = 0; v < num_vertices_; ++v) {
            if (degree[v] == 1) {
                start = static_cast<int>(v);
                break;
            }
        }
        assert(start >= 0);
        std::vector<int> edge_walk;
        int current = start;
        int incoming = -1;
        while (true) {
            int next_edge = -1;
            for (int e : adj[static_cast<size_t>(current)]) {
                if (e != incoming) {
                    next_edge = e;
                    break;
                }
            }
            if (next_edge < 0) {
                return edge_walk;
            }
            edge_walk.push_back(next_edge);
            current = other_endpoint(next_edge, current);
            incoming = next_edge;
        }
    }

    RoundingStep make_step(const std::vector<int>& edge_walk) const {
        RoundingStep step;
        for (size_t i = 0; i < edge_walk.size(); ++i) {
            (i % 2 == 0 ? step.raise_edges : step.lower_edges).push_back(edge_walk[i]);
        }
        bool first = true;
        for (int e : step.raise_edges) {
            const Rational up = Rational(1) - weights_[static_cast<size_t>(e)];
            if (first || up < step.alpha) {
                step.alpha = up;
            }
            if (first || weights_[static_cast<size_t>(e)] < step.beta) {
                step.beta = weights_[static_cast<size_t>(e)];
            }
            first = false;
        }
        for (int e : step.lower_edges) {
            if (first || weights_[static_cast<size_t>(e)] < step.alpha) {
                step.alpha = weights_[static_cast<size_t>(e)];
            }
            const Rational up = Rational(1) - weights_[static_cast<size_t>(e)];
            if (first || up < step.beta) {
                step.beta = up;
            }
            first = false;
        }
        assert(step.alpha > 0 && step.beta > 0);
        return step;
    }

    const RoundingGraph& graph_;
    std::vector<Rational> weights_;
    size_t num_vertices_;
};

std::vector<Rational> edge_weights(const RoundingGraph& graph) {
    std::vector<Rational> weights;
    weights.reserve(graph.edges.size());
    for (const auto& e : graph.edges) {
        weights.push_back(e.weight);
    }
    return weights;
}

}  // namespace

RoundedOutcome gkps_round(const RoundingGraph& graph, RngStream& rng) {
    Rounder rounder(graph, edge_weights(graph));
    while (rounder.has_floating()) {
        const RoundingStep step = rounder.next_step();
        const Rational raise_prob = step.beta / (step.alpha + step.beta);
        // Per-step martingale: expected change of every touched edge is zero.
        assert(step.alpha * raise_prob - step.beta * (Rational(1) - raise_prob) == 0);
        rounder.apply(step, rng.bernoulli(raise_prob));
    }
    return rounder.outcome();
}

std::vector<Committee> sample_committees(const Instance& inst, long count,
                                         std::uint64_t seed) {
    auto [fractional, ledger] = pfr(inst);
    (void)fractional;
    const RoundingGraph graph = build_rounding_graph(inst, ledger);
    std::vector<Committee> out;
    out.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        RngStream stream = RngStream::substream(seed, static_cast<std::uint64_t>(i));
        out.push_back(gkps_round(graph, stream).committee);
    }
    return out;
}

namespace {

void expand(Rounder rounder, Rational probability, long cap, long& nodes,
            std::map<Committee, Rational>& acc) {
    if (++nodes > cap) {
        throw CapExceededError("exact support recursion cap exceeded");
    }
    if (!rounder.has_floating()) {
        acc[rounder.outcome().committee] += probability;
        return;
    }
    const RoundingStep step = rounder.next_step();
    const Rational raise_prob = step.beta / (step.alpha + step.beta);
    Rounder raised = rounder;
    raised.apply(step, true);
    expand(std::move(raised), probability * raise_prob, cap, nodes, acc);
    rounder.apply(step, false);
    expand(std::move(rounder), probability * (Rational(1) - raise_prob), cap, nodes, acc);
}

}  // namespace

std::map<Committee, Rational> exact_support(const RoundingGraph& graph, long cap) {
    std::map<Committee, Rational> acc;
    long nodes = 0;
    expand(Rounder(graph, edge_weights(graph)), Rational(1), cap, nodes, acc);
    return acc;
}

}  // namespace pscvote
