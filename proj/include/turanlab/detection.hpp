#pragma once

#include <optional>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

// t vertex-disjoint copies of the cycle C_m.
struct ForbiddenFamily {
    int copies;
    int cycle_len;

    ForbiddenFamily(int copies_, int cycle_len_) : copies(copies_), cycle_len(cycle_len_) {
        if (copies < 1) throw std::invalid_argument("ForbiddenFamily: need at least one copy");
        if (cycle_len < 3) throw std::invalid_argument("ForbiddenFamily: cycle length must be at least 3");
    }

    friend bool operator==(const ForbiddenFamily&, const ForbiddenFamily&) = default;
};

// Disjoint cyclic vertex sequences certifying a cycle packing.
struct PackingWitness {
    std::vector<std::vector<int>> cycles;

    VertexSet vertices() const {
        VertexSet s = 0;
        for (const auto& c : cycles)
            for (int v : c) s |= vertex_bit(v);
        return s;
    }
};

// Independent re-check: right cycle count and length, pairwise disjoint,
// cyclically adjacent in g.
bool witness_is_valid(const Graph& g, const ForbiddenFamily& fam, const PackingWitness& w);

// First packing in deterministic search order, or nullopt if none exists.
// Exhaustive backtracking; cycles are anchored at their least vertex and
// placed in increasing anchor order.
std::optional<PackingWitness> find_packing(const Graph& g, const ForbiddenFamily& fam);

bool is_family_free(const Graph& g, const ForbiddenFamily& fam);

// Subgraph (not necessarily induced) containment.
bool contains_cycle(const Graph& g, int m);
bool contains_path(const Graph& g, int k);

inline constexpr int kMaxCutBudget = 24;

// Exact maximum cut by branch and bound; throws budget_error past the budget.
int max_cut(const Graph& g);

// Minimum number of edges whose removal leaves a bipartite graph.
int bipartite_deletion_distance(const Graph& g);

}  // namespace turanlab
