#include "turanlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace turanlab {

namespace {

using Cells = std::vector<std::vector<int>>;  // ordered partition of the vertices

// Equitable refinement. Cells are repeatedly split by the vector of neighbor
// counts into every current cell; subcells are emitted in key order, which
// keeps the cell sequence invariant under relabeling.
Cells refine(const Graph& g, Cells cells) {
    const std::size_t max_cells = static_cast<std::size_t>(g.vertex_count());
    for (;;) {
        bool changed = false;
        const std::size_t nc = cells.size();
        std::array<VertexSet, Graph::kMaxVertices> mask{};
        for (std::size_t c = 0; c < nc; ++c)
            for (int v : cells[c]) mask[c] |= vertex_bit(v);

        Cells next;
        next.reserve(nc + 2);
        for (std::size_t ci = 0; ci < nc; ++ci) {
            auto& cell = cells[ci];
            if (cell.size() <= 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::vector<std::array<std::uint8_t, Graph::kMaxVertices>> keys(cell.size());
            for (std::size_t i = 0; i < cell.size(); ++i) {
                keys[i] = {};
                const VertexSet nb = g.neighbors(cell[i]);
                for (std::size_t c = 0; c < nc; ++c)
                    keys[i][c] = static_cast<std::uint8_t>(std::popcount(nb & mask[c]));
            }
            std::vector<int> idx(cell.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(),
                             [&](int a, int b) { return keys[a] < keys[b]; });
            std::size_t groups = 0;
            std::size_t s = 0;
            while (s < idx.size()) {
                std::size_t e = s + 1;
                while (e < idx.size() && keys[idx[e]] == keys[idx[s]]) ++e;
                std::vector<int> group;
                group.reserve(e - s);
                for (std::size_t j = s; j < e; ++j) group.push_back(cell[idx[j]]);
                next.push_back(std::move(group));
                ++groups;
                s = e;
            }
            if (groups > 1) changed = true;
        }
        cells = std::move(next);
        if (!changed || cells.size() == max_cells) break;
    }
    return cells;
}

std::string encode_positions(const Graph& g, const std::array<std::uint8_t, 64>& vertex_at, int n) {
    std::string out;
    out.reserve(1 + static_cast<std::size_t>(n * (n - 1) / 2 + 7) / 8);
    out.push_back(static_cast<char>(n));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            acc = static_cast<std::uint8_t>((acc << 1) | (g.has_edge(vertex_at[p], vertex_at[q]) ? 1 : 0));
            if (++nbits == 8) {
                out.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
}

// Every vertex of the cell has the same neighborhood outside the cell and
// the cell induces an empty or complete graph, so any permutation of the
// cell extends to an automorphism fixing everything else.
bool cell_is_symmetric_module(const Graph& g, const std::vector<int>& cell) {
    VertexSet cm = 0;
    for (int v : cell) cm |= vertex_bit(v);
    const VertexSet first = g.neighbors(cell[0]);
    const VertexSet outside = first & ~cm;
    const int inside = std::popcount(first & cm);
    if (inside != 0 && inside != static_cast<int>(cell.size()) - 1) return false;
    for (std::size_t i = 1; i < cell.size(); ++i) {
        const VertexSet nb = g.neighbors(cell[i]);
        if ((nb & ~cm) != outside) return false;
        if (std::popcount(nb & cm) != inside) return false;
    }
    return true;
}

struct Searcher {
    const Graph& g;
    int n;
    std::string best;
    std::array<std::uint8_t, 64> best_vertex_at{};
    std::vector<std::array<std::uint8_t, 64>> automorphisms;
    std::vector<int> path;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    void run() {
        if (n == 0) {
            best = std::string(1, '\0');
            return;
        }
        Cells root(1);
        root[0].resize(n);
        std::iota(root[0].begin(), root[0].end(), 0);
        search(refine(g, std::move(root)));
    }

    void search(const Cells& cells) {
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = static_cast<int>(i);
                break;
            }
        if (target < 0) {
            process_leaf(cells);
            return;
        }
        const bool collapse = cell_is_symmetric_module(g, cells[target]);
        std::vector<int> tried;
        std::array<int, 64> orbit_parent{};
        std::iota(orbit_parent.begin(), orbit_parent.begin() + n, 0);
        std::size_t gens_processed = 0;
        for (int v : cells[target]) {
            if (collapse && !tried.empty()) break;
            if (in_explored_orbit(v, tried, orbit_parent, gens_processed)) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    rest.reserve(cells[i].size() - 1);
                    for (int u : cells[i])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            path.push_back(v);
            search(refine(g, std::move(child)));
            path.pop_back();
        }
    }

    // v is skipped when a known automorphism fixing every individualized
    // vertex on the path maps an already-explored sibling to v. The orbit
    // state is node-local and absorbs generators incrementally as deeper
    // subtrees discover them.
    bool in_explored_orbit(int v, const std::vector<int>& tried, std::array<int, 64>& parent,
                           std::size_t& gens_processed) {
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (; gens_processed < automorphisms.size(); ++gens_processed) {
            const auto& a = automorphisms[gens_processed];
            bool fixes_path = true;
            for (int p : path)
                if (a[p] != p) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            for (int x = 0; x < n; ++x) {
                int rx = find(x), ry = find(a[x]);
                if (rx != ry) parent[rx] = ry;
            }
        }
        if (tried.empty()) return false;
        const int rv = find(v);
        for (int u : tried)
            if (find(u) == rv) return true;
        return false;
    }

    void process_leaf(const Cells& cells) {
        std::array<std::uint8_t, 64> vertex_at{};
        int pos = 0;
        for (const auto& c : cells) vertex_at[pos++] = static_cast<std::uint8_t>(c[0]);
        std::string bytes = encode_positions(g, vertex_at, n);
        if (best.empty() || bytes < best) {
            best = std::move(bytes);
            best_vertex_at = vertex_at;
        } else if (bytes == best) {
            std::array<std::uint8_t, 64> pos_of{};
            for (int p = 0; p < n; ++p) pos_of[vertex_at[p]] = static_cast<std::uint8_t>(p);
            std::array<std::uint8_t, 64> gamma{};
            for (int v = 0; v < n; ++v) gamma[v] = best_vertex_at[pos_of[v]];
            automorphisms.push_back(gamma);
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    Searcher s(g);
    s.run();
    CanonicalLabeling out;
    out.certificate.bytes = std::move(s.best);
    const int n = g.vertex_count();
    for (int p = 0; p < n; ++p) out.to_canonical[s.best_vertex_at[p]] = static_cast<std::uint8_t>(p);
    return out;
}

CanonicalCertificate canonical_form(const Graph& g) { return canonical_labeling(g).certificate; }

Graph canonical_representative(const Graph& g) {
    const CanonicalLabeling lab = canonical_labeling(g);
    const int n = g.vertex_count();
    std::array<int, 64> perm{};
    for (int v = 0; v < n; ++v) perm[v] = lab.to_canonical[v];
    return apply_permutation(g, std::span<const int>(perm.data(), static_cast<std::size_t>(n)));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    std::array<bool, 64> seen{};
    for (int v = 0; v < n; ++v) {
        if (perm[v] < 0 || perm[v] >= n || seen[perm[v]])
            throw std::invalid_argument("apply_permutation: not a permutation");
        seen[perm[v]] = true;
    }
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u > v) b.add_edge(perm[v], perm[u]);
        }
    return b.build();
}

std::string to_hex(const CanonicalCertificate& cert) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(cert.bytes.size() * 2);
    for (unsigned char c : cert.bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace turanlab
