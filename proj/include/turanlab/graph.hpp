#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "turanlab/errors.hpp"

namespace turanlab {

// Vertex subset as a bitmask; bit v = vertex v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// Simple undirected graph on at most 64 vertices, one 64-bit adjacency row
// per vertex. Immutable value: operations that change edges return a new
// graph. Rows are kept symmetric and self-loop free by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (n > kMaxVertices) throw capacity_error("Graph: at most 64 vertices supported");
        n_ = n;
    }

    int vertex_count() const noexcept { return n_; }

    VertexSet vertex_mask() const noexcept {
        return n_ == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[v]);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int edge_count() const noexcept {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    Graph with_edge(int u, int v) const {
        check_edge_ends(u, v);
        Graph g = *this;
        g.adj_[u] |= vertex_bit(v);
        g.adj_[v] |= vertex_bit(u);
        return g;
    }

    Graph without_edge(int u, int v) const {
        check_edge_ends(u, v);
        Graph g = *this;
        g.adj_[u] &= ~vertex_bit(v);
        g.adj_[v] &= ~vertex_bit(u);
        return g;
    }

    // Labeled (structural) equality.
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    void check_edge_ends(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    }

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Incremental construction without per-edge graph copies.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    GraphBuilder& add_edge(int u, int v) {
        g_.check_edge_ends(u, v);
        g_.adj_[u] |= vertex_bit(v);
        g_.adj_[v] |= vertex_bit(u);
        return *this;
    }

    const Graph& build() const { return g_; }

private:
    Graph g_;
};

Graph empty_graph(int n);
Graph add_edge(const Graph& g, int u, int v);
int degree(const Graph& g, int v);
VertexSet neighbors(const Graph& g, int v);
bool has_edge(const Graph& g, int u, int v);
int edge_count(const Graph& g);

// Subgraph induced by `s`, vertices relabeled by ascending original index.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Block-diagonal union; vertices of h are shifted by v(g).
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union plus every cross edge.
Graph join(const Graph& g, const Graph& h);

}  // namespace turanlab
