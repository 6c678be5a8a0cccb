#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/census.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/graph.hpp"

using namespace turanlab;

TEST_CASE("empty graphs") {
    CHECK(Graph(0).vertex_count() == 0);
    CHECK(Graph(0).edge_count() == 0);
    Graph g(5);
    CHECK(g.edge_count() == 0);
    for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 0);
    CHECK(Graph(64).vertex_count() == 64);
    CHECK_THROWS_AS(Graph(65), capacity_error);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK(empty_graph(3) == Graph(3));
}

TEST_CASE("add_edge") {
    Graph g = add_edge(Graph(2), 0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(add_edge(g, 0, 1).edge_count() == 1);  // idempotent
    CHECK(add_edge(g, 1, 0) == g);
    CHECK_THROWS_AS(add_edge(Graph(4), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(Graph(4), 0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(0).has_edge(0, 0), std::out_of_range);
}

TEST_CASE("degree and edge counts") {
    const Graph c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(complete(5).edge_count() == 10);
    CHECK(turan(2, 9).edge_count() == 20);
    CHECK(neighbors(c5, 0) == (vertex_bit(1) | vertex_bit(4)));
}

TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(complete(5), 0b10101) == complete(3));
    CHECK(induced_subgraph(complete(5), 0) == Graph(0));
    CHECK(induced_subgraph(turan(2, 6), 0b000111) == Graph(3));  // one part is independent
    const Graph g = cycle_graph(4);
    CHECK(induced_subgraph(g, g.vertex_mask()) == g);
    CHECK_THROWS_AS(induced_subgraph(Graph(3), 0b1000), std::out_of_range);
}

TEST_CASE("disjoint union") {
    const Graph two_triangles = disjoint_union(complete(3), complete(3));
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK(count_triangles(two_triangles) == 2);
    CHECK(disjoint_union(cycle_graph(5), Graph(0)) == cycle_graph(5));
    const Graph k5_plus_isolated = disjoint_union(complete(5), Graph(1));
    CHECK(k5_plus_isolated.vertex_count() == 6);
    CHECK(count_triangles(k5_plus_isolated) == 10);
    CHECK_THROWS_AS(disjoint_union(Graph(40), Graph(30)), capacity_error);
}

TEST_CASE("join") {
    const Graph j = join(complete(1), turan(2, 10));
    CHECK(j.vertex_count() == 11);
    CHECK(j.edge_count() == 35);  // 0 + 25 + 1*10
    CHECK(count_triangles(j) == 25);
    CHECK(join(Graph(0), cycle_graph(4)) == cycle_graph(4));
    CHECK_THROWS_AS(join(Graph(33), Graph(32)), capacity_error);
}

TEST_CASE("join identities on random graphs") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracles::random_graph(rng, 1 + rng() % 7, 0.4);
        const Graph h = oracles::random_graph(rng, 1 + rng() % 7, 0.4);
        const Graph j = join(g, h);
        const std::int64_t eg = g.edge_count(), eh = h.edge_count();
        const std::int64_t vg = g.vertex_count(), vh = h.vertex_count();
        CHECK(j.edge_count() == eg + eh + vg * vh);
        CHECK(oracles::count_triangles_naive(j) ==
              oracles::count_triangles_naive(g) + oracles::count_triangles_naive(h) + eg * vh +
                  eh * vg);
    }
}

TEST_CASE("edge count equals half the popcount of all rows") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_graph(rng, 1 + rng() % 12, 0.5);
        int twice = 0;
        for (int v = 0; v < g.vertex_count(); ++v) twice += std::popcount(g.neighbors(v));
        CHECK(g.edge_count() * 2 == twice);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK_FALSE(g.has_edge(v, v) == true);
            for (int u = 0; u < g.vertex_count(); ++u) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(3);
    const Graph c5 = cycle_graph(5);
    const CanonicalCertificate ref = canonical_form(c5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto perm = oracles::random_permutation(rng, 5);
        CHECK(canonical_form(apply_permutation(c5, perm)) == ref);
    }
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + rng() % 12;
        const Graph g = oracles::random_graph(rng, n, 0.5);
        const auto perm = oracles::random_permutation(rng, n);
        CHECK(canonical_form(apply_permutation(g, perm)) == canonical_form(g));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    const Graph k3_plus_isolated = disjoint_union(complete(3), Graph(1));
    CHECK(canonical_form(k3_plus_isolated) != canonical_form(path_graph(4)));
    CHECK(canonical_form(complete(3)) != canonical_form(path_graph(3)));
}

TEST_CASE("canonical classes on 4 vertices match the permutation oracle") {
    std::map<std::uint64_t, std::set<std::string>> code_to_certs;
    std::map<std::string, std::set<std::uint64_t>> cert_to_codes;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const Graph g = oracles::from_mask(4, mask);
        const auto code = oracles::min_edge_code(g);
        const auto cert = canonical_form(g).bytes;
        code_to_certs[code].insert(cert);
        cert_to_codes[cert].insert(code);
    }
    CHECK(code_to_certs.size() == 11);
    CHECK(cert_to_codes.size() == 11);
    for (const auto& [code, certs] : code_to_certs) CHECK(certs.size() == 1);
    for (const auto& [cert, codes] : cert_to_codes) CHECK(codes.size() == 1);
}

TEST_CASE("is_isomorphic") {
    CHECK(is_isomorphic(cycle_graph(4), turan(2, 4)));
    CHECK_FALSE(is_isomorphic(complete(3), path_graph(3)));
    CHECK(is_isomorphic(turan(2, 7), join(Graph(3), Graph(4))));
    CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST_CASE("canonical representative is isomorphic to its source") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_graph(rng, 1 + rng() % 10, 0.5);
        const Graph rep = canonical_representative(g);
        CHECK(canonical_form(rep) == canonical_form(g));
        CHECK(rep.edge_count() == g.edge_count());
    }
}

TEST_CASE("apply_permutation rejects non-permutations") {
    const int bad[] = {0, 0, 1};
    CHECK_THROWS_AS(apply_permutation(Graph(3), bad), std::invalid_argument);
    const int short_perm[] = {0, 1};
    CHECK_THROWS_AS(apply_permutation(Graph(3), short_perm), std::invalid_argument);
}
