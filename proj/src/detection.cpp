#include "turanlab/detection.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "turanlab/errors.hpp"

namespace turanlab {

namespace {

inline VertexSet above(int v) { return ~VertexSet{0} << 1 << v; }

// 2-colorability of the subgraph induced on `verts`.
bool bipartite_on(const Graph& g, VertexSet verts) {
    std::array<std::int8_t, Graph::kMaxVertices> color{};
    color.fill(-1);
    std::array<int, Graph::kMaxVertices> stack{};
    for (VertexSet rest = verts; rest; rest &= rest - 1) {
        const int root = std::countr_zero(rest);
        if (color[root] >= 0) continue;
        color[root] = 0;
        int top = 0;
        stack[top++] = root;
        while (top) {
            const int v = stack[--top];
            for (VertexSet nb = g.neighbors(v) & verts; nb; nb &= nb - 1) {
                const int u = std::countr_zero(nb);
                if (color[u] < 0) {
                    color[u] = static_cast<std::int8_t>(1 - color[v]);
                    stack[top++] = u;
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct PackingSearch {
    const Graph& g;
    int n;
    int m;
    std::vector<std::vector<int>> cycles;
    std::array<int, Graph::kMaxVertices> path{};
    VertexSet used = 0;

    PackingSearch(const Graph& graph, int cycle_len)
        : g(graph), n(graph.vertex_count()), m(cycle_len) {}

    bool place(int copies_left, int min_anchor) {
        if (copies_left == 0) return true;
        const VertexSet avail = g.vertex_mask() & ~used;
        if (std::popcount(avail) < m * copies_left) return false;
        if ((m & 1) && bipartite_on(g, avail)) return false;  // no odd cycle possible
        for (int a = min_anchor; a < n; ++a) {
            if (!((avail >> a) & 1)) continue;
            path[0] = a;
            if (extend(a, a, 1, vertex_bit(a), copies_left)) return true;
        }
        return false;
    }

    bool extend(int anchor, int last, int depth, VertexSet on_path, int copies_left) {
        if (depth == m) {
            if (!g.has_edge(last, anchor) || path[1] > last) return false;
            cycles.emplace_back(path.begin(), path.begin() + m);
            used |= on_path;
            if (place(copies_left - 1, anchor + 1)) return true;
            used &= ~on_path;
            cycles.pop_back();
            return false;
        }
        const VertexSet cand = g.neighbors(last) & above(anchor) & ~used & ~on_path;
        for (VertexSet bits = cand; bits; bits &= bits - 1) {
            const int w = std::countr_zero(bits);
            path[depth] = w;
            if (extend(anchor, w, depth + 1, on_path | vertex_bit(w), copies_left)) return true;
        }
        return false;
    }
};

}  // namespace

bool witness_is_valid(const Graph& g, const ForbiddenFamily& fam, const PackingWitness& w) {
    if (static_cast<int>(w.cycles.size()) != fam.copies) return false;
    VertexSet seen = 0;
    for (const auto& cyc : w.cycles) {
        if (static_cast<int>(cyc.size()) != fam.cycle_len) return false;
        for (int v : cyc) {
            if (v < 0 || v >= g.vertex_count()) return false;
            if (seen & vertex_bit(v)) return false;
            seen |= vertex_bit(v);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    }
    return true;
}

std::optional<PackingWitness> find_packing(const Graph& g, const ForbiddenFamily& fam) {
    PackingSearch search(g, fam.cycle_len);
    if (!search.place(fam.copies, 0)) return std::nullopt;
    return PackingWitness{std::move(search.cycles)};
}

bool is_family_free(const Graph& g, const ForbiddenFamily& fam) {
    return !find_packing(g, fam).has_value();
}

bool contains_cycle(const Graph& g, int m) {
    return find_packing(g, ForbiddenFamily(1, m)).has_value();
}

bool contains_path(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("contains_path: need at least one vertex");
    const int n = g.vertex_count();
    if (k > n) return false;
    if (k == 1) return true;
    auto dfs = [&](auto&& self, int last, int len, VertexSet on_path) -> bool {
        if (len == k) return true;
        for (VertexSet cand = g.neighbors(last) & ~on_path; cand; cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            if (self(self, w, len + 1, on_path | vertex_bit(w))) return true;
        }
        return false;
    };
    for (int start = 0; start < n; ++start)
        if (dfs(dfs, start, 1, vertex_bit(start))) return true;
    return false;
}

namespace {

struct MaxCutSearch {
    const Graph& g;
    int n;
    int best = 0;

    explicit MaxCutSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    // remaining_internal: edges with both endpoints unassigned, each worth at
    // most one cut edge in the bound.
    void assign(int v, VertexSet side_a, VertexSet side_b, int cut, int remaining_internal) {
        if (v == n) {
            best = std::max(best, cut);
            return;
        }
        int optimistic = cut + remaining_internal;
        for (int u = v; u < n; ++u) {
            const VertexSet nb = g.neighbors(u);
            optimistic += std::max(std::popcount(nb & side_a), std::popcount(nb & side_b));
        }
        if (optimistic <= best) return;

        const VertexSet nb = g.neighbors(v);
        const VertexSet unassigned_after = g.vertex_mask() & ~side_a & ~side_b & ~vertex_bit(v);
        const int internal_next = remaining_internal - std::popcount(nb & unassigned_after);
        const int to_a = std::popcount(nb & side_a);
        const int to_b = std::popcount(nb & side_b);
        if (to_b >= to_a) {
            assign(v + 1, side_a | vertex_bit(v), side_b, cut + to_b, internal_next);
            assign(v + 1, side_a, side_b | vertex_bit(v), cut + to_a, internal_next);
        } else {
            assign(v + 1, side_a, side_b | vertex_bit(v), cut + to_a, internal_next);
            assign(v + 1, side_a | vertex_bit(v), side_b, cut + to_b, internal_next);
        }
    }
};

}  // namespace

int max_cut(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxCutBudget)
        throw budget_error("max_cut: exact search supports at most 24 vertices");
    const int edges = g.edge_count();
    if (n <= 1 || edges == 0) return 0;
    MaxCutSearch search(g);
    // vertex 0 pinned to one side; cuts are symmetric under swapping sides
    const int internal = edges - g.degree(0);
    search.assign(1, vertex_bit(0), 0, 0, internal);
    return search.best;
}

int bipartite_deletion_distance(const Graph& g) { return g.edge_count() - max_cut(g); }

}  // namespace turanlab
