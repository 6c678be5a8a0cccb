#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracles {

std::uint64_t count_triangles_naive(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t total = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++total;
    return total;
}

namespace {

// Hamiltonian cycle count of the induced subgraph on `verts`, cycles counted
// once (first vertex pinned, directions folded).
std::uint64_t spanning_cycles(const Graph& g, const std::vector<int>& verts) {
    const int m = static_cast<int>(verts.size());
    std::vector<int> rest(verts.begin() + 1, verts.end());
    std::sort(rest.begin(), rest.end());
    std::uint64_t found = 0;
    do {
        if (rest.front() > rest.back()) continue;  // fold the two directions
        bool ok = g.has_edge(verts[0], rest.front()) && g.has_edge(rest.back(), verts[0]);
        for (int i = 0; ok && i + 1 < m - 1; ++i) ok = g.has_edge(rest[i], rest[i + 1]);
        if (ok) ++found;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return found;
}

template <typename Fn>
void for_each_subset(int n, int m, Fn&& fn) {
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == m) {
            fn(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::uint64_t count_cycles_naive(const Graph& g, int m) {
    const int n = g.vertex_count();
    if (m > n) return 0;
    std::uint64_t total = 0;
    for_each_subset(n, m, [&](const std::vector<int>& verts) { total += spanning_cycles(g, verts); });
    return total;
}

bool contains_path_naive(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k > n) return false;
    if (k == 1) return n >= 1;
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<int>& verts) {
        if (found) return;
        std::vector<int> order = verts;
        std::sort(order.begin(), order.end());
        do {
            bool ok = true;
            for (int i = 0; ok && i + 1 < k; ++i) ok = g.has_edge(order[i], order[i + 1]);
            if (ok) {
                found = true;
                return;
            }
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return found;
}

namespace {

bool pack_rec(const Graph& g, std::vector<int> avail, int copies, int m) {
    if (copies == 0) return true;
    if (static_cast<int>(avail.size()) < m * copies) return false;
    bool found = false;
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
        if (found) return;
        if (depth == m) {
            if (spanning_cycles(g, pick) == 0) return;
            std::vector<int> rest;
            for (int v : avail)
                if (std::find(pick.begin(), pick.end(), v) == pick.end()) rest.push_back(v);
            if (pack_rec(g, std::move(rest), copies - 1, m)) found = true;
            return;
        }
        for (std::size_t i = start; i < avail.size(); ++i) {
            pick[depth] = avail[i];
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return found;
}

}  // namespace

bool has_disjoint_cycles_naive(const Graph& g, int copies, int m) {
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return pack_rec(g, std::move(all), copies, m);
}

int max_cut_exhaustive(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    int best = 0;
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << (n - 1)); ++side) {
        int cut = 0;
        for (auto [u, v] : edges)
            if (((side >> u) & 1) != ((side >> v) & 1)) ++cut;
        best = std::max(best, cut);
    }
    return best;
}

int pair_count(int n) { return n * (n - 1) / 2; }

namespace {

int pair_index(int n, int u, int v) {
    // row-major upper triangle, u < v
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace

std::uint64_t min_edge_code(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            code |= std::uint64_t{1} << pair_index(n, a, b);
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph from_mask(int n, std::uint64_t mask) {
    turanlab::GraphBuilder b(n);
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if ((mask >> idx) & 1) b.add_edge(u, v);
    return b.build();
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    turanlab::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracles
