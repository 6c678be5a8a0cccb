#include "turanlab/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "turanlab/census.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/enumeration.hpp"

namespace turanlab {

std::int64_t formula_value(int ell, int n) {
    if (ell < 1 || ell >= n) throw std::invalid_argument("formula_value: requires 1 <= ell < n");
    const std::int64_t l = ell, m = n - ell;
    return l * (m * m / 4) + m * (l * (l - 1) / 2) + l * (l - 1) * (l - 2) / 6;
}

std::string Objective::name() const {
    switch (kind) {
        case Kind::triangles: return "triangles";
        case Kind::edges: return "edges";
        case Kind::edges_plus_triangles: return "edges_plus_triangles";
        case Kind::cycles: return "cycles:" + std::to_string(cycle_len);
    }
    return "?";
}

std::string ForbiddenPattern::name() const {
    if (kind == Kind::path) return "P" + std::to_string(path_vertices);
    return std::to_string(family->copies) + "xC" + std::to_string(family->cycle_len);
}

const std::vector<ExtremalLab::CensusEntry>& ExtremalLab::census(
    int n, const std::optional<ForbiddenFamily>& family) {
    const std::tuple<int, int, int> key{n, family ? family->copies : 0,
                                        family ? family->cycle_len : 0};
    auto it = censuses_.find(key);
    if (it != censuses_.end()) return it->second;

    std::vector<CensusEntry> entries;
    std::optional<std::vector<Graph>> provided;
    if (source_) provided = source_(n, family);
    if (provided) {
        entries.reserve(provided->size());
        for (auto& g : *provided) entries.push_back({g, canonical_form(g)});
    } else {
        EnumerationFilter filter;
        filter.forbidden = family;
        enumerate(n, filter,
                  [&](const Graph& g, const CanonicalCertificate& cert) {
                      entries.push_back({g, cert});
                  },
                  workers_);
    }
    return censuses_.emplace(key, std::move(entries)).first->second;
}

std::uint64_t ExtremalLab::evaluate(const Objective& objective, const CensusEntry& entry) {
    std::string key = objective.name();
    key += '/';
    key += entry.cert.bytes;
    auto it = objective_memo_.find(key);
    if (it != objective_memo_.end()) return it->second;
    std::uint64_t value = 0;
    switch (objective.kind) {
        case Objective::Kind::triangles: value = count_triangles(entry.g); break;
        case Objective::Kind::edges: value = static_cast<std::uint64_t>(entry.g.edge_count()); break;
        case Objective::Kind::edges_plus_triangles: value = edge_plus_triangle(entry.g); break;
        case Objective::Kind::cycles: value = count_cycles(entry.g, objective.cycle_len); break;
    }
    objective_memo_.emplace(std::move(key), value);
    return value;
}

ExtremalLab::Best ExtremalLab::maximize(const Objective& objective,
                                        const std::vector<const CensusEntry*>& entries) {
    Best best;
    for (const CensusEntry* e : entries) {
        const std::uint64_t value = evaluate(objective, *e);
        if (best.argmax.empty() || value > best.value) {
            best.value = value;
            best.argmax.assign(1, e);
        } else if (value == best.value) {
            best.argmax.push_back(e);
        }
    }
    return best;
}

ExtremalRecord ExtremalLab::exact_generalized_turan(int n, const Objective& objective,
                                                    const ForbiddenPattern& forbidden) {
    std::vector<const CensusEntry*> pool;
    if (forbidden.kind == ForbiddenPattern::Kind::cycle_family) {
        for (const auto& e : census(n, forbidden.family)) pool.push_back(&e);
    } else {
        for (const auto& e : census(n, std::nullopt))
            if (!contains_path(e.g, forbidden.path_vertices)) pool.push_back(&e);
    }
    const Best best = maximize(objective, pool);

    ExtremalRecord record;
    record.n = n;
    record.forbidden = forbidden;
    record.objective = objective;
    record.value = best.value;
    for (const CensusEntry* e : best.argmax) {
        record.extremal_graphs.push_back(e->cert);
        record.extremal_examples.push_back(e->g);
    }

    // formula comparison applies when maximizing triangles against t >= 2
    // disjoint odd cycles: the competitor is complete(t-1) joined with the
    // balanced bipartite graph
    if (objective.kind == Objective::Kind::triangles &&
        forbidden.kind == ForbiddenPattern::Kind::cycle_family && forbidden.family->copies >= 2 &&
        forbidden.family->cycle_len % 2 == 1 && forbidden.family->copies - 1 < n) {
        const int ell = forbidden.family->copies - 1;
        record.formula = formula_value(ell, n);
        record.formula_matches = static_cast<std::int64_t>(record.value) == *record.formula;
        record.unique_and_matches_construction =
            record.extremal_graphs.size() == 1 &&
            record.extremal_graphs.front() == canonical_form(extremal_construction(ell, n));
    }
    return record;
}

MainTheoremReport ExtremalLab::verify_main_theorem(int ell, int k, Range n_range) {
    if (ell < 1 || k < 1) throw std::invalid_argument("verify_main_theorem: ell and k must be positive");
    if (n_range.first <= ell)
        throw std::invalid_argument("verify_main_theorem: range must start above ell");

    MainTheoremReport report;
    report.ell = ell;
    report.k = k;
    report.n_range = n_range;
    const int cycle = 2 * k + 1;
    for (int n = n_range.first; n <= n_range.last; ++n) {
        ExtremalRecord rec = exact_generalized_turan(
            n, Objective::triangles(), ForbiddenPattern::disjoint_cycles(ell + 1, cycle));
        MainTheoremRow row;
        row.n = n;
        row.degenerate = (ell + 1) * cycle > n;
        row.exact = rec.value;
        row.formula = rec.formula.value_or(formula_value(ell, n));
        row.matches_formula = rec.formula_matches.value_or(false);
        row.unique = rec.extremal_graphs.size() == 1;
        row.matches_construction = rec.unique_and_matches_construction.value_or(false);
        row.extremal_graphs = std::move(rec.extremal_graphs);
        row.extremal_examples = std::move(rec.extremal_examples);
        report.rows.push_back(std::move(row));
    }
    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (!(it->matches_formula && it->unique && it->matches_construction)) break;
        report.onset = it->n;
    }
    return report;
}

KeyLemmaReport ExtremalLab::verify_key_lemma(int k, Range n_range) {
    if (k < 1) throw std::invalid_argument("verify_key_lemma: k must be positive");
    KeyLemmaReport report;
    report.k = k;
    report.n_range = n_range;
    for (int n = n_range.first; n <= n_range.last; ++n) {
        ExtremalRecord rec = exact_generalized_turan(n, Objective::edges_plus_triangles(),
                                                     ForbiddenPattern::single_cycle(2 * k + 1));
        KeyLemmaRow row;
        row.n = n;
        row.max_value = rec.value;
        row.bound = static_cast<std::int64_t>(n) * n / 4;
        row.within_bound = static_cast<std::int64_t>(rec.value) <= row.bound;
        row.attains_bound = static_cast<std::int64_t>(rec.value) == row.bound;
        row.unique_turan_maximizer = rec.extremal_graphs.size() == 1 &&
                                     rec.extremal_graphs.front() == canonical_form(turan(2, n));
        row.maximizers = std::move(rec.extremal_graphs);
        row.maximizer_examples = std::move(rec.extremal_examples);
        report.rows.push_back(std::move(row));
    }
    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (!(it->attains_bound && it->unique_turan_maximizer)) break;
        report.onset = it->n;
    }
    return report;
}

ErdosGallaiReport ExtremalLab::verify_erdos_gallai(Range k_range, Range n_range) {
    if (k_range.first < 2) throw std::invalid_argument("verify_erdos_gallai: k must be at least 2");
    ErdosGallaiReport report;
    report.k_range = k_range;
    report.n_range = n_range;
    for (int k = k_range.first; k <= k_range.last; ++k)
        for (int n = n_range.first; n <= n_range.last; ++n) {
            ExtremalRecord rec =
                exact_generalized_turan(n, Objective::edges(), ForbiddenPattern::path(k));
            ErdosGallaiRow row;
            row.k = k;
            row.n = n;
            row.exact = rec.value;
            row.bound = 0.5 * (k - 2) * n;
            row.holds = 2 * rec.value <= static_cast<std::uint64_t>(k - 2) * n;
            report.all_hold = report.all_hold && row.holds;
            report.rows.push_back(row);
        }
    return report;
}

FurediGundersonReport ExtremalLab::verify_furedi_gunderson(int k, Range n_range) {
    if (k < 1) throw std::invalid_argument("verify_furedi_gunderson: k must be positive");
    if (n_range.first < 4 * k - 2)
        throw std::invalid_argument("verify_furedi_gunderson: range must start at 4k-2 or later");
    FurediGundersonReport report;
    report.k = k;
    report.n_range = n_range;
    for (int n = n_range.first; n <= n_range.last; ++n) {
        ExtremalRecord rec = exact_generalized_turan(n, Objective::edges(),
                                                     ForbiddenPattern::single_cycle(2 * k + 1));
        FurediGundersonRow row;
        row.n = n;
        row.exact = rec.value;
        row.bound = static_cast<std::int64_t>(n) * n / 4;
        row.equals_bound = static_cast<std::int64_t>(rec.value) == row.bound;
        const CanonicalCertificate turan_cert = canonical_form(turan(2, n));
        row.turan_attains = std::find(rec.extremal_graphs.begin(), rec.extremal_graphs.end(),
                                      turan_cert) != rec.extremal_graphs.end();
        row.turan_unique = row.turan_attains && rec.extremal_graphs.size() == 1;
        report.all_equal = report.all_equal && row.equals_bound;
        report.rows.push_back(std::move(row));
    }
    return report;
}

AlonShikhelmanReport ExtremalLab::verify_alon_shikhelman(int k, Range n_range) {
    if (k < 2) throw std::invalid_argument("verify_alon_shikhelman: k must be at least 2");
    AlonShikhelmanReport report;
    report.k = k;
    report.n_range = n_range;
    for (int n = n_range.first; n <= n_range.last; ++n) {
        AlonShikhelmanRow row;
        row.n = n;
        row.triangle_max = exact_generalized_turan(n, Objective::triangles(),
                                                   ForbiddenPattern::single_cycle(2 * k + 1))
                               .value;
        row.half_n = (n + 1) / 2;
        row.even_cycle_edge_max = exact_generalized_turan(row.half_n, Objective::edges(),
                                                          ForbiddenPattern::single_cycle(2 * k))
                                      .value;
        row.inequality_holds =
            3 * row.triangle_max <= static_cast<std::uint64_t>(16 * (k - 1)) * row.even_cycle_edge_max;
        row.even_cycle_bound = 100.0 * k * std::pow(row.half_n, 1.0 + 1.0 / k);
        row.even_cycle_bound_holds =
            static_cast<double>(row.even_cycle_edge_max) <= row.even_cycle_bound;
        report.all_hold = report.all_hold && row.inequality_holds && row.even_cycle_bound_holds;
        report.rows.push_back(row);
    }
    return report;
}

StabilityReport ExtremalLab::stability_probe(int k, int n, int slack) {
    if (k < 1) throw std::invalid_argument("stability_probe: k must be positive");
    if (slack < 0) throw std::invalid_argument("stability_probe: slack must be nonnegative");
    StabilityReport report;
    report.k = k;
    report.n = n;
    report.slack = slack;
    report.edge_floor = static_cast<std::int64_t>(n) * n / 4 - slack;
    report.max_distance = 0;
    for (const auto& entry : census(n, ForbiddenFamily(1, 2 * k + 1))) {
        if (entry.g.edge_count() < report.edge_floor) continue;
        ++report.graphs_considered;
        const int distance = bipartite_deletion_distance(entry.g);
        if (distance > report.max_distance) {
            report.max_distance = distance;
            report.farthest.clear();
            report.farthest_examples.clear();
        }
        if (distance == report.max_distance) {
            report.farthest.push_back(entry.cert);
            report.farthest_examples.push_back(entry.g);
        }
    }
    return report;
}

}  // namespace turanlab
