#include "turanlab/graph.hpp"

namespace turanlab {

Graph empty_graph(int n) { return Graph(n); }

Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }

int degree(const Graph& g, int v) { return g.degree(v); }

VertexSet neighbors(const Graph& g, int v) { return g.neighbors(v); }

bool has_edge(const Graph& g, int u, int v) { return g.has_edge(u, v); }

int edge_count(const Graph& g) { return g.edge_count(); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.vertex_mask())
        throw std::out_of_range("induced_subgraph: set contains vertices outside the graph");
    std::array<int, Graph::kMaxVertices> new_index{};
    int k = 0;
    for (VertexSet bits = s; bits; bits &= bits - 1) new_index[std::countr_zero(bits)] = k++;
    GraphBuilder b(k);
    for (VertexSet bits = s; bits; bits &= bits - 1) {
        const int v = std::countr_zero(bits);
        for (VertexSet nb = g.neighbors(v) & s; nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u > v) b.add_edge(new_index[v], new_index[u]);
        }
    }
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng + nh > Graph::kMaxVertices)
        throw capacity_error("disjoint_union: combined graph exceeds 64 vertices");
    GraphBuilder b(ng + nh);
    for (int v = 0; v < ng; ++v)
        for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u > v) b.add_edge(v, u);
        }
    for (int v = 0; v < nh; ++v)
        for (VertexSet nb = h.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u > v) b.add_edge(ng + v, ng + u);
        }
    return b.build();
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (ng + nh > Graph::kMaxVertices)
        throw capacity_error("join: combined graph exceeds 64 vertices");
    GraphBuilder b(ng + nh);
    for (int v = 0; v < ng; ++v)
        for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u > v) b.add_edge(v, u);
        }
    for (int v = 0; v < nh; ++v)
        for (VertexSet nb = h.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u > v) b.add_edge(ng + v, ng + u);
        }
    for (int v = 0; v < ng; ++v)
        for (int w = 0; w < nh; ++w) b.add_edge(v, ng + w);
    return b.build();
}

}  // namespace turanlab
