#include "turanlab/census.hpp"

#include <bit>
#include <stdexcept>

namespace turanlab {

namespace {

inline VertexSet above(int v) { return ~VertexSet{0} << 1 << v; }  // bits strictly greater than v

}  // namespace

std::uint64_t count_triangles(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t total = 0;
    for (int u = 0; u < n; ++u)
        for (VertexSet nb = g.neighbors(u) & above(u); nb; nb &= nb - 1) {
            const int v = std::countr_zero(nb);
            total += std::popcount(g.neighbors(u) & g.neighbors(v) & above(v));
        }
    return total;
}

std::uint64_t count_cycles(const Graph& g, int m) {
    if (m < 3) throw std::invalid_argument("count_cycles: cycle length must be at least 3");
    const int n = g.vertex_count();
    if (m > n) return 0;
    std::uint64_t total = 0;
    std::array<int, Graph::kMaxVertices> path{};

    // paths anchored at the cycle's least vertex; the second-vertex < last-vertex
    // rule folds the two traversal directions into one count
    auto dfs = [&](auto&& self, int anchor, int last, int depth, VertexSet used) -> void {
        if (depth == m) {
            if (g.has_edge(last, anchor) && path[1] < last) ++total;
            return;
        }
        for (VertexSet cand = g.neighbors(last) & above(anchor) & ~used; cand; cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            path[depth] = w;
            self(self, anchor, w, depth + 1, used | vertex_bit(w));
        }
    };
    for (int anchor = 0; anchor < n; ++anchor) {
        path[0] = anchor;
        dfs(dfs, anchor, anchor, 1, vertex_bit(anchor));
    }
    return total;
}

TriangleHypergraphView triangle_hypergraph(const Graph& g) {
    TriangleHypergraphView view{g, {}};
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (VertexSet nb = g.neighbors(u) & above(u); nb; nb &= nb - 1) {
            const int v = std::countr_zero(nb);
            for (VertexSet cm = g.neighbors(u) & g.neighbors(v) & above(v); cm; cm &= cm - 1)
                view.triples.push_back({u, v, std::countr_zero(cm)});
        }
    return view;
}

Graph triangle_link(const Graph& g, int v) {
    const VertexSet nb = g.neighbors(v);  // range-checked
    GraphBuilder b(g.vertex_count());
    for (VertexSet as = nb; as; as &= as - 1) {
        const int a = std::countr_zero(as);
        for (VertexSet cs = g.neighbors(a) & nb & above(a); cs; cs &= cs - 1)
            b.add_edge(a, std::countr_zero(cs));
    }
    return b.build();
}

std::uint64_t triangle_degree(const Graph& g, int v) {
    const VertexSet nb = g.neighbors(v);
    std::uint64_t total = 0;
    for (VertexSet as = nb; as; as &= as - 1) {
        const int a = std::countr_zero(as);
        total += std::popcount(g.neighbors(a) & nb & above(a));
    }
    return total;
}

VertexSet heavy_vertices(const Graph& g, std::uint64_t threshold) {
    VertexSet heavy = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (triangle_degree(g, v) >= threshold) heavy |= vertex_bit(v);
    return heavy;
}

std::uint64_t edge_plus_triangle(const Graph& g) {
    return static_cast<std::uint64_t>(g.edge_count()) + count_triangles(g);
}

}  // namespace turanlab
