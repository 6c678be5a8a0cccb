#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

std::uint64_t count_triangles(const Graph& g);

// Number of distinct C_m subgraph copies (each cycle counted once, not per
// traversal). m >= 3; m > v(g) yields 0.
std::uint64_t count_cycles(const Graph& g, int m);

// The 3-uniform hypergraph whose edges are the triangles of the host graph.
struct TriangleHypergraphView {
    Graph host;
    std::vector<std::array<int, 3>> triples;  // ascending within each triple
};

TriangleHypergraphView triangle_hypergraph(const Graph& g);

// Link of v: graph on the full vertex set of g whose edges are the pairs
// {a,b} such that {v,a,b} is a triangle of g.
Graph triangle_link(const Graph& g, int v);

// Edge count of the link of v; sums to 3*count_triangles over all vertices.
std::uint64_t triangle_degree(const Graph& g, int v);

// Vertices whose triangle degree is at least the threshold.
VertexSet heavy_vertices(const Graph& g, std::uint64_t threshold);

std::uint64_t edge_plus_triangle(const Graph& g);

}  // namespace turanlab
