#include "turanlab/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "turanlab/errors.hpp"

namespace turanlab {

namespace {

struct LevelEntry {
    Graph g;
    CanonicalCertificate cert;
};

// Edge of `g` whose image under the canonical labeling is the first edge of
// the canonical representative in row-major pair order.
std::pair<int, int> canonical_deletion_edge(const Graph& g, const CanonicalLabeling& lab) {
    const int n = g.vertex_count();
    std::array<int, Graph::kMaxVertices> vertex_at{};
    for (int v = 0; v < n; ++v) vertex_at[lab.to_canonical[v]] = v;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (g.has_edge(vertex_at[p], vertex_at[q])) return {vertex_at[p], vertex_at[q]};
    return {-1, -1};
}

// A child is kept only when the removal of its canonical edge reproduces the
// parent class. Children isomorphic to each other from the same parent are
// deduplicated locally; no other parent can generate the same class, so no
// cross-parent deduplication is needed.
void expand_parent(const LevelEntry& parent, const std::optional<ForbiddenFamily>& forbidden,
                   std::vector<LevelEntry>& out) {
    const int n = parent.g.vertex_count();
    std::vector<CanonicalCertificate> seen;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (parent.g.has_edge(u, v)) continue;
            Graph child = parent.g.with_edge(u, v);
            if (forbidden && !is_family_free(child, *forbidden)) continue;
            CanonicalLabeling lab = canonical_labeling(child);
            const auto [a, b] = canonical_deletion_edge(child, lab);
            bool accepted;
            if ((a == u && b == v) || (a == v && b == u))
                accepted = true;
            else
                accepted = canonical_form(child.without_edge(a, b)) == parent.cert;
            if (!accepted) continue;
            if (std::find(seen.begin(), seen.end(), lab.certificate) != seen.end()) continue;
            seen.push_back(lab.certificate);
            out.push_back({std::move(child), std::move(lab.certificate)});
        }
}

std::vector<LevelEntry> expand_level(const std::vector<LevelEntry>& level,
                                     const std::optional<ForbiddenFamily>& forbidden,
                                     unsigned workers) {
    unsigned t = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    t = std::min<unsigned>(t, static_cast<unsigned>(level.size()));
    std::vector<LevelEntry> next;
    if (t <= 1 || level.size() < 32) {
        for (const auto& parent : level) expand_parent(parent, forbidden, next);
    } else {
        std::vector<std::vector<LevelEntry>> chunks(t);
        std::vector<std::thread> pool;
        pool.reserve(t);
        const std::size_t per = (level.size() + t - 1) / t;
        for (unsigned w = 0; w < t; ++w) {
            const std::size_t lo = w * per;
            const std::size_t hi = std::min(level.size(), lo + per);
            pool.emplace_back([&, lo, hi, w] {
                for (std::size_t i = lo; i < hi; ++i) expand_parent(level[i], forbidden, chunks[w]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& c : chunks)
            for (auto& e : c) next.push_back(std::move(e));
    }
    std::sort(next.begin(), next.end(),
              [](const LevelEntry& x, const LevelEntry& y) { return x.cert < y.cert; });
    return next;
}

}  // namespace

void enumerate(int n, const EnumerationFilter& filter,
               const std::function<void(const Graph&, const CanonicalCertificate&)>& sink,
               unsigned workers) {
    if (n < 0) throw std::invalid_argument("enumerate: negative vertex count");
    if (n > kEnumerationBudget)
        throw budget_error("enumerate: exhaustive enumeration supports at most 11 vertices");
    int edge_cap = n * (n - 1) / 2;
    if (filter.max_edges) {
        if (*filter.max_edges < 0) throw std::invalid_argument("enumerate: negative edge limit");
        edge_cap = std::min(edge_cap, *filter.max_edges);
    }

    std::vector<LevelEntry> level;
    Graph root(n);
    level.push_back({root, canonical_form(root)});
    sink(level.front().g, level.front().cert);
    for (int m = 0; m < edge_cap && !level.empty(); ++m) {
        std::vector<LevelEntry> next = expand_level(level, filter.forbidden, workers);
        for (const auto& e : next) sink(e.g, e.cert);
        level = std::move(next);
    }
}

std::vector<Graph> enumerate_all(int n, const EnumerationFilter& filter, unsigned workers) {
    std::vector<Graph> out;
    enumerate(n, filter, [&](const Graph& g, const CanonicalCertificate&) { out.push_back(g); },
              workers);
    return out;
}

std::uint64_t enumerate_count(int n, const EnumerationFilter& filter, unsigned workers) {
    std::uint64_t count = 0;
    enumerate(n, filter, [&](const Graph&, const CanonicalCertificate&) { ++count; }, workers);
    return count;
}

}  // namespace turanlab
