#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/detection.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// ell*floor((n-ell)^2/4) + (n-ell)*C(ell,2) + C(ell,3): the triangle count of
// extremal_construction(ell, n). Requires 1 <= ell < n.
std::int64_t formula_value(int ell, int n);

struct Objective {
    enum class Kind { triangles, edges, edges_plus_triangles, cycles };

    Kind kind = Kind::triangles;
    int cycle_len = 0;  // used by Kind::cycles

    static Objective triangles() { return {Kind::triangles, 0}; }
    static Objective edges() { return {Kind::edges, 0}; }
    static Objective edges_plus_triangles() { return {Kind::edges_plus_triangles, 0}; }
    static Objective cycles(int m) { return {Kind::cycles, m}; }

    std::string name() const;
};

// What the maximization ranges over: graphs avoiding either t disjoint
// cycles or a single path.
struct ForbiddenPattern {
    enum class Kind { cycle_family, path };

    Kind kind = Kind::cycle_family;
    std::optional<ForbiddenFamily> family;
    int path_vertices = 0;

    static ForbiddenPattern disjoint_cycles(int copies, int len) {
        return {Kind::cycle_family, ForbiddenFamily(copies, len), 0};
    }
    static ForbiddenPattern single_cycle(int len) { return disjoint_cycles(1, len); }
    static ForbiddenPattern path(int k) { return {Kind::path, std::nullopt, k}; }

    std::string name() const;
};

struct ExtremalRecord {
    int n = 0;
    ForbiddenPattern forbidden;
    Objective objective;
    std::uint64_t value = 0;
    std::vector<CanonicalCertificate> extremal_graphs;
    std::vector<Graph> extremal_examples;  // representatives, aligned with extremal_graphs
    std::optional<std::int64_t> formula;
    std::optional<bool> formula_matches;
    std::optional<bool> unique_and_matches_construction;
};

struct Range {
    int first = 0;
    int last = -1;  // inclusive

    bool contains(int x) const { return first <= x && x <= last; }
};

struct MainTheoremRow {
    int n = 0;
    bool degenerate = false;  // the family needs more than n vertices
    std::uint64_t exact = 0;
    std::int64_t formula = 0;
    bool matches_formula = false;
    bool unique = false;
    bool matches_construction = false;
    std::vector<CanonicalCertificate> extremal_graphs;
    std::vector<Graph> extremal_examples;
};

struct MainTheoremReport {
    int ell = 0;
    int k = 0;
    Range n_range;
    std::vector<MainTheoremRow> rows;
    // least n in range from which equality, uniqueness and construction match
    // all hold through the end of the range
    std::optional<int> onset;
};

struct KeyLemmaRow {
    int n = 0;
    std::uint64_t max_value = 0;  // max of e+t over the censused family
    std::int64_t bound = 0;       // floor(n^2/4)
    bool within_bound = false;
    bool attains_bound = false;
    std::vector<CanonicalCertificate> maximizers;
    std::vector<Graph> maximizer_examples;
    bool unique_turan_maximizer = false;
};

struct KeyLemmaReport {
    int k = 0;
    Range n_range;
    std::vector<KeyLemmaRow> rows;
    std::optional<int> onset;
};

struct ErdosGallaiRow {
    int k = 0;
    int n = 0;
    std::uint64_t exact = 0;
    double bound = 0.0;  // (k-2)*n/2
    bool holds = false;
};

struct ErdosGallaiReport {
    Range k_range;
    Range n_range;
    std::vector<ErdosGallaiRow> rows;
    bool all_hold = true;
};

struct FurediGundersonRow {
    int n = 0;
    std::uint64_t exact = 0;
    std::int64_t bound = 0;  // floor(n^2/4)
    bool equals_bound = false;
    bool turan_attains = false;
    bool turan_unique = false;
};

struct FurediGundersonReport {
    int k = 0;
    Range n_range;
    std::vector<FurediGundersonRow> rows;
    bool all_equal = true;
};

struct AlonShikhelmanRow {
    int n = 0;
    std::uint64_t triangle_max = 0;       // exact max triangles, C_{2k+1}-free
    int half_n = 0;                       // ceil(n/2)
    std::uint64_t even_cycle_edge_max = 0;  // exact max edges on half_n vertices, C_{2k}-free
    bool inequality_holds = false;        // 3*triangle_max <= 16*(k-1)*even_cycle_edge_max
    double even_cycle_bound = 0.0;        // 100*k*half_n^(1+1/k)
    bool even_cycle_bound_holds = false;
};

struct AlonShikhelmanReport {
    int k = 0;
    Range n_range;
    std::vector<AlonShikhelmanRow> rows;
    bool all_hold = true;
};

struct StabilityReport {
    int k = 0;
    int n = 0;
    int slack = 0;
    std::int64_t edge_floor = 0;  // floor(n^2/4) - slack
    std::uint64_t graphs_considered = 0;
    int max_distance = 0;
    std::vector<CanonicalCertificate> farthest;
    std::vector<Graph> farthest_examples;
};

// Exact small-n maximization and verification harness. Censuses and
// objective evaluations are cached per instance, so one lab should serve a
// whole run.
class ExtremalLab {
public:
    // Optional external provider of censuses (e.g. disk-backed); must return
    // exactly the graphs enumerate() would produce, in the same order.
    using CensusSource =
        std::function<std::optional<std::vector<Graph>>(int, const std::optional<ForbiddenFamily>&)>;

    explicit ExtremalLab(unsigned workers = 0) : workers_(workers) {}

    void set_census_source(CensusSource source) { source_ = std::move(source); }

    ExtremalRecord exact_generalized_turan(int n, const Objective& objective,
                                           const ForbiddenPattern& forbidden);

    MainTheoremReport verify_main_theorem(int ell, int k, Range n_range);
    KeyLemmaReport verify_key_lemma(int k, Range n_range);
    ErdosGallaiReport verify_erdos_gallai(Range k_range, Range n_range);
    FurediGundersonReport verify_furedi_gunderson(int k, Range n_range);
    AlonShikhelmanReport verify_alon_shikhelman(int k, Range n_range);
    StabilityReport stability_probe(int k, int n, int slack);

private:
    struct CensusEntry {
        Graph g;
        CanonicalCertificate cert;
    };

    const std::vector<CensusEntry>& census(int n, const std::optional<ForbiddenFamily>& family);
    std::uint64_t evaluate(const Objective& objective, const CensusEntry& entry);

    struct Best {
        std::uint64_t value = 0;
        std::vector<const CensusEntry*> argmax;
    };
    Best maximize(const Objective& objective, const std::vector<const CensusEntry*>& entries);

    unsigned workers_;
    CensusSource source_;
    std::map<std::tuple<int, int, int>, std::vector<CensusEntry>> censuses_;
    std::unordered_map<std::string, std::uint64_t> objective_memo_;
};

}  // namespace turanlab
