#pragma once

#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

Graph complete(int n);

// Path on k vertices (k-1 edges), k >= 1.
Graph path_graph(int k);

// Cycle on m vertices, m >= 3.
Graph cycle_graph(int m);

// Complete r-partite graph with part sizes differing by at most one.
// Larger parts get the lower vertex indices.
Graph turan(int r, int n);

// complete(ell) joined with turan(2, n-ell); the clique occupies
// vertices 0..ell-1. Requires 1 <= ell < n.
Graph extremal_construction(int ell, int n);

// Each base vertex is replaced by an independent set; two replacement sets
// are completely joined exactly when the base vertices are adjacent.
struct BlowUpSpec {
    Graph base;
    std::vector<int> part_sizes;  // one positive size per base vertex
};

Graph blow_up(const BlowUpSpec& spec);

}  // namespace turanlab
