#include "turanlab/constructions.hpp"

#include <bit>
#include <numeric>

namespace turanlab {

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path_graph: need at least one vertex");
    GraphBuilder b(k);
    for (int v = 0; v + 1 < k; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need at least three vertices");
    GraphBuilder b(m);
    for (int v = 0; v + 1 < m; ++v) b.add_edge(v, v + 1);
    b.add_edge(m - 1, 0);
    return b.build();
}

Graph turan(int r, int n) {
    if (r < 1) throw std::invalid_argument("turan: need at least one part");
    Graph capacity_check(n);  // validates 0 <= n <= 64
    // first (n mod r) parts have size floor(n/r)+1
    const int q = n / r, rem = n % r;
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (int p = 0; p < r && v < n; ++p) {
        const int size = q + (p < rem ? 1 : 0);
        for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
    GraphBuilder b(n);
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            if (part_of[a] != part_of[c]) b.add_edge(a, c);
    return b.build();
}

Graph extremal_construction(int ell, int n) {
    if (ell < 1 || ell >= n)
        throw std::invalid_argument("extremal_construction: requires 1 <= ell < n");
    return join(complete(ell), turan(2, n - ell));
}

Graph blow_up(const BlowUpSpec& spec) {
    const int base_n = spec.base.vertex_count();
    if (static_cast<int>(spec.part_sizes.size()) != base_n)
        throw std::invalid_argument("blow_up: one part size per base vertex required");
    long long total = 0;
    for (int s : spec.part_sizes) {
        if (s < 1) throw std::invalid_argument("blow_up: part sizes must be positive");
        total += s;
    }
    if (total > Graph::kMaxVertices) throw capacity_error("blow_up: result exceeds 64 vertices");

    std::vector<int> start(static_cast<std::size_t>(base_n) + 1);
    for (int v = 0; v < base_n; ++v) start[v + 1] = start[v] + spec.part_sizes[v];
    GraphBuilder b(static_cast<int>(total));
    for (int v = 0; v < base_n; ++v)
        for (VertexSet nb = spec.base.neighbors(v); nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            if (u <= v) continue;
            for (int a = start[v]; a < start[v + 1]; ++a)
                for (int c = start[u]; c < start[u + 1]; ++c) b.add_edge(a, c);
        }
    return b.build();
}

}  // namespace turanlab
