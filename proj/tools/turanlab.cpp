// turanlab: exact small-graph laboratory for generalized Turan questions.
// Subcommands: construct, count, check, enumerate, verify.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "turanlab/canonical.hpp"
#include "turanlab/census.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/detection.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph6.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace turanlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
    fs::path cache_root;
    bool no_cache = false;
    unsigned workers = 0;
    double time_limit_seconds = 0.0;
};

fs::path default_cache_root() {
    if (const char* env = std::getenv("TURANLAB_CACHE")) return fs::path(env);
    return fs::path(".turanlab-cache");
}

void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string census_filename(int n, const std::optional<ForbiddenFamily>& fam) {
    std::string name = "census_n" + std::to_string(n);
    if (fam) name += "_free_" + std::to_string(fam->copies) + "x" + std::to_string(fam->cycle_len);
    return name + ".g6";
}

std::string render_census(int n, const std::optional<ForbiddenFamily>& fam, unsigned workers,
                          std::uint64_t* count_out) {
    std::string text;
    std::uint64_t count = 0;
    EnumerationFilter filter;
    filter.forbidden = fam;
    enumerate(n, filter,
              [&](const Graph& g, const CanonicalCertificate&) {
                  text += encode_graph6(g);
                  text += '\n';
                  ++count;
              },
              workers);
    if (count_out) *count_out = count;
    return text;
}

std::vector<Graph> parse_census(const std::string& text) {
    std::vector<Graph> graphs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(decode_graph6(line));
    return graphs;
}

struct CensusCache {
    fs::path root;
    bool enabled = true;

    std::optional<std::string> load(const std::string& name) const {
        if (!enabled) return std::nullopt;
        std::ifstream in(root / name, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    void store(const std::string& name, const std::string& text, int n,
               const std::optional<ForbiddenFamily>& fam, std::uint64_t count) const {
        if (!enabled) return;
        fs::create_directories(root);
        atomic_write(root / name, text);

        json manifest = json::object();
        {
            std::ifstream in(root / "manifest.json", std::ios::binary);
            if (in) {
                try {
                    manifest = json::parse(in, nullptr, true, true);
                } catch (const json::exception&) {
                    manifest = json::object();  // rebuilt below
                }
            }
        }
        if (!manifest.contains("schema_version")) manifest["schema_version"] = "1";
        if (!manifest.contains("entries")) manifest["entries"] = json::object();
        json entry;
        entry["n"] = n;
        entry["copies"] = fam ? json(fam->copies) : json(nullptr);
        entry["cycle_len"] = fam ? json(fam->cycle_len) : json(nullptr);
        entry["count"] = count;
        manifest["entries"][name] = entry;
        atomic_write(root / "manifest.json", manifest.dump(2) + "\n");
    }

    // cache-aware census text; bit-identical on hits by construction
    std::string text_for(int n, const std::optional<ForbiddenFamily>& fam, unsigned workers) const {
        const std::string name = census_filename(n, fam);
        if (auto hit = load(name)) return *hit;
        std::uint64_t count = 0;
        std::string text = render_census(n, fam, workers, &count);
        store(name, text, n, fam, count);
        return text;
    }
};

std::vector<std::string> read_graph6_lines(const std::string& in_path) {
    std::vector<std::string> lines;
    std::string line;
    if (in_path.empty() || in_path == "-") {
        while (std::getline(std::cin, line))
            if (!line.empty()) lines.push_back(line);
    } else {
        std::ifstream in(in_path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open input file: " + in_path);
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void emit_graph(const Graph& g, const std::string& out_path) {
    const std::string text = encode_graph6(g) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        atomic_write(out_path, text);
}

json graph_list_json(const std::vector<Graph>& graphs,
                     const std::vector<CanonicalCertificate>& certs) {
    json arr = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        json item;
        item["graph6"] = encode_graph6(graphs[i]);
        item["certificate"] = to_hex(certs[i]);
        arr.push_back(std::move(item));
    }
    return arr;
}

void write_report(const std::string& report_path, const std::string& command,
                  const json& parameters, const json& records, const json& summary, double ms) {
    if (report_path.empty()) return;
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["records"] = records;
    doc["summary"] = summary;
    doc["timings"] = {{"elapsed_ms", ms}};
    atomic_write(report_path, doc.dump(2) + "\n");
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

int cmd_construct(const std::string& family, int n, int r, int ell, int m, int k,
                  const std::string& base_g6, const std::vector<int>& sizes,
                  const std::string& out_path) {
    Graph g;
    if (family == "empty")
        g = Graph(n);
    else if (family == "complete")
        g = complete(n);
    else if (family == "path")
        g = path_graph(k);
    else if (family == "cycle")
        g = cycle_graph(m);
    else if (family == "turan")
        g = turan(r, n);
    else if (family == "extremal")
        g = extremal_construction(ell, n);
    else if (family == "blowup")
        g = blow_up({decode_graph6(base_g6), sizes});
    else
        throw std::invalid_argument("unknown construction: " + family);
    emit_graph(g, out_path);
    return kExitOk;
}

int cmd_count(const std::string& what, const std::string& in_path) {
    Objective objective;
    if (what == "triangles")
        objective = Objective::triangles();
    else if (what == "edges")
        objective = Objective::edges();
    else if (what == "e_plus_t")
        objective = Objective::edges_plus_triangles();
    else if (what.rfind("cycles:", 0) == 0)
        objective = Objective::cycles(std::stoi(what.substr(7)));
    else
        throw std::invalid_argument("unknown quantity: " + what);

    for (const std::string& line : read_graph6_lines(in_path)) {
        const Graph g = decode_graph6(line);
        std::uint64_t value = 0;
        switch (objective.kind) {
            case Objective::Kind::triangles: value = count_triangles(g); break;
            case Objective::Kind::edges: value = g.edge_count(); break;
            case Objective::Kind::edges_plus_triangles: value = edge_plus_triangle(g); break;
            case Objective::Kind::cycles: value = count_cycles(g, objective.cycle_len); break;
        }
        std::cout << value << "\n";
    }
    return kExitOk;
}

int cmd_check(int copies, int cycle_len, const std::string& in_path) {
    const ForbiddenFamily fam(copies, cycle_len);
    bool any_packing = false;
    for (const std::string& line : read_graph6_lines(in_path)) {
        const Graph g = decode_graph6(line);
        const auto witness = find_packing(g, fam);
        if (!witness) {
            std::cout << "FREE\n";
            continue;
        }
        any_packing = true;
        std::cout << "PACKING";
        for (const auto& cycle : witness->cycles) {
            std::cout << " (";
            for (std::size_t i = 0; i < cycle.size(); ++i)
                std::cout << (i ? " " : "") << cycle[i];
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return any_packing ? kExitCheckFailed : kExitOk;
}

int cmd_enumerate(const GlobalOptions& opts, int n, std::optional<int> copies,
                  std::optional<int> cycle_len, std::optional<int> max_edges,
                  const std::string& out_path) {
    if (copies.has_value() != cycle_len.has_value())
        throw std::invalid_argument("--free-copies and --free-cycle-len must be given together");
    std::optional<ForbiddenFamily> fam;
    if (copies) fam = ForbiddenFamily(*copies, *cycle_len);

    std::string text;
    if (max_edges) {
        EnumerationFilter filter;
        filter.forbidden = fam;
        filter.max_edges = max_edges;
        enumerate(n, filter,
                  [&](const Graph& g, const CanonicalCertificate&) {
                      text += encode_graph6(g);
                      text += '\n';
                  },
                  opts.workers);
    } else {
        CensusCache cache{opts.cache_root, !opts.no_cache};
        text = cache.text_for(n, fam, opts.workers);
    }
    atomic_write(out_path, text);
    std::size_t count = 0;
    for (char c : text)
        if (c == '\n') ++count;
    std::cout << count << " graphs written to " << out_path << "\n";
    return kExitOk;
}

ExtremalLab make_lab(const GlobalOptions& opts) {
    ExtremalLab lab(opts.workers);
    if (!opts.no_cache) {
        CensusCache cache{opts.cache_root, true};
        const unsigned workers = opts.workers;
        lab.set_census_source(
            [cache, workers](int n, const std::optional<ForbiddenFamily>& fam)
                -> std::optional<std::vector<Graph>> {
                return parse_census(cache.text_for(n, fam, workers));
            });
    }
    return lab;
}

int verify_main(const GlobalOptions& opts, int ell, int k, int n_from, int n_to,
                const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalLab lab = make_lab(opts);
    const MainTheoremReport report = lab.verify_main_theorem(ell, k, {n_from, n_to});
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    bool feasible = true;
    std::printf("%4s %10s %10s %8s %7s %13s %11s\n", "n", "exact", "formula", "equal", "unique",
                "construction", "degenerate");
    json records = json::array();
    for (const auto& row : report.rows) {
        feasible = feasible && static_cast<std::int64_t>(row.exact) >= row.formula;
        std::printf("%4d %10llu %10lld %8s %7s %13s %11s\n", row.n,
                    static_cast<unsigned long long>(row.exact), static_cast<long long>(row.formula),
                    yesno(row.matches_formula), yesno(row.unique), yesno(row.matches_construction),
                    yesno(row.degenerate));
        json rec;
        rec["n"] = row.n;
        rec["degenerate"] = row.degenerate;
        rec["exact"] = row.exact;
        rec["formula"] = row.formula;
        rec["matches_formula"] = row.matches_formula;
        rec["unique"] = row.unique;
        rec["matches_construction"] = row.matches_construction;
        rec["extremal_graphs"] = graph_list_json(row.extremal_examples, row.extremal_graphs);
        records.push_back(std::move(rec));
    }
    if (report.onset)
        std::printf("onset within range: n = %d\n", *report.onset);
    else
        std::printf("onset within range: none\n");

    json summary;
    summary["onset"] = report.onset ? json(*report.onset) : json(nullptr);
    summary["construction_feasible"] = feasible;
    write_report(report_path, "verify main",
                 {{"ell", ell}, {"k", k}, {"n_from", n_from}, {"n_to", n_to}}, records, summary, ms);
    return feasible ? kExitOk : kExitCheckFailed;
}

int verify_lemma(const GlobalOptions& opts, int k, int n_from, int n_to,
                 const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalLab lab = make_lab(opts);
    const KeyLemmaReport report = lab.verify_key_lemma(k, {n_from, n_to});
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::printf("%4s %12s %10s %8s %8s %14s\n", "n", "max(e+t)", "bound", "within", "attains",
                "unique Turan");
    json records = json::array();
    for (const auto& row : report.rows) {
        std::printf("%4d %12llu %10lld %8s %8s %14s\n", row.n,
                    static_cast<unsigned long long>(row.max_value), static_cast<long long>(row.bound),
                    yesno(row.within_bound), yesno(row.attains_bound),
                    yesno(row.unique_turan_maximizer));
        json rec;
        rec["n"] = row.n;
        rec["max_edge_plus_triangle"] = row.max_value;
        rec["bound"] = row.bound;
        rec["within_bound"] = row.within_bound;
        rec["attains_bound"] = row.attains_bound;
        rec["unique_turan_maximizer"] = row.unique_turan_maximizer;
        rec["maximizers"] = graph_list_json(row.maximizer_examples, row.maximizers);
        records.push_back(std::move(rec));
    }
    if (report.onset)
        std::printf("onset within range: n = %d\n", *report.onset);
    else
        std::printf("onset within range: none\n");

    json summary;
    summary["onset"] = report.onset ? json(*report.onset) : json(nullptr);
    write_report(report_path, "verify lemma", {{"k", k}, {"n_from", n_from}, {"n_to", n_to}},
                 records, summary, ms);
    return kExitOk;  // pre-onset violations are reported, not asserted
}

int verify_erdos_gallai(const GlobalOptions& opts, int k_from, int k_to, int n_from, int n_to,
                        const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalLab lab = make_lab(opts);
    const ErdosGallaiReport report = lab.verify_erdos_gallai({k_from, k_to}, {n_from, n_to});
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::printf("%4s %4s %10s %10s %6s\n", "k", "n", "exact", "bound", "holds");
    json records = json::array();
    for (const auto& row : report.rows) {
        std::printf("%4d %4d %10llu %10.1f %6s\n", row.k, row.n,
                    static_cast<unsigned long long>(row.exact), row.bound, yesno(row.holds));
        json rec;
        rec["k"] = row.k;
        rec["n"] = row.n;
        rec["exact"] = row.exact;
        rec["bound"] = row.bound;
        rec["holds"] = row.holds;
        records.push_back(std::move(rec));
    }
    std::printf("all hold: %s\n", yesno(report.all_hold));
    write_report(report_path, "verify erdos-gallai",
                 {{"k_from", k_from}, {"k_to", k_to}, {"n_from", n_from}, {"n_to", n_to}}, records,
                 {{"all_hold", report.all_hold}}, ms);
    return report.all_hold ? kExitOk : kExitCheckFailed;
}

int verify_furedi_gunderson(const GlobalOptions& opts, int k, int n_from, int n_to,
                            const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalLab lab = make_lab(opts);
    const FurediGundersonReport report = lab.verify_furedi_gunderson(k, {n_from, n_to});
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::printf("%4s %10s %10s %7s %8s %8s\n", "n", "exact", "bound", "equal", "attains", "unique");
    json records = json::array();
    for (const auto& row : report.rows) {
        std::printf("%4d %10llu %10lld %7s %8s %8s\n", row.n,
                    static_cast<unsigned long long>(row.exact), static_cast<long long>(row.bound),
                    yesno(row.equals_bound), yesno(row.turan_attains), yesno(row.turan_unique));
        json rec;
        rec["n"] = row.n;
        rec["exact"] = row.exact;
        rec["bound"] = row.bound;
        rec["equals_bound"] = row.equals_bound;
        rec["turan_attains"] = row.turan_attains;
        rec["turan_unique"] = row.turan_unique;
        records.push_back(std::move(rec));
    }
    std::printf("all equal: %s\n", yesno(report.all_equal));
    write_report(report_path, "verify furedi-gunderson",
                 {{"k", k}, {"n_from", n_from}, {"n_to", n_to}}, records,
                 {{"all_equal", report.all_equal}}, ms);
    return report.all_equal ? kExitOk : kExitCheckFailed;
}

int verify_alon_shikhelman(const GlobalOptions& opts, int k, int n_from, int n_to,
                           const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalLab lab = make_lab(opts);
    const AlonShikhelmanReport report = lab.verify_alon_shikhelman(k, {n_from, n_to});
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::printf("%4s %12s %7s %14s %6s %16s\n", "n", "triangles", "half", "even-cycle ex", "holds",
                "even-cycle bound");
    json records = json::array();
    for (const auto& row : report.rows) {
        std::printf("%4d %12llu %7d %14llu %6s %16.1f\n", row.n,
                    static_cast<unsigned long long>(row.triangle_max), row.half_n,
                    static_cast<unsigned long long>(row.even_cycle_edge_max),
                    yesno(row.inequality_holds), row.even_cycle_bound);
        json rec;
        rec["n"] = row.n;
        rec["triangle_max"] = row.triangle_max;
        rec["half_n"] = row.half_n;
        rec["even_cycle_edge_max"] = row.even_cycle_edge_max;
        rec["inequality_holds"] = row.inequality_holds;
        rec["even_cycle_bound"] = row.even_cycle_bound;
        rec["even_cycle_bound_holds"] = row.even_cycle_bound_holds;
        records.push_back(std::move(rec));
    }
    std::printf("all hold: %s\n", yesno(report.all_hold));
    write_report(report_path, "verify alon-shikhelman",
                 {{"k", k}, {"n_from", n_from}, {"n_to", n_to}}, records,
                 {{"all_hold", report.all_hold}}, ms);
    return report.all_hold ? kExitOk : kExitCheckFailed;
}

int verify_stability(const GlobalOptions& opts, int k, int n, int slack,
                     const std::string& report_path) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalLab lab = make_lab(opts);
    const StabilityReport report = lab.stability_probe(k, n, slack);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::printf("edge floor %lld, %llu graphs considered, max deletion distance %d\n",
                static_cast<long long>(report.edge_floor),
                static_cast<unsigned long long>(report.graphs_considered), report.max_distance);
    json records = json::array();
    json rec;
    rec["edge_floor"] = report.edge_floor;
    rec["graphs_considered"] = report.graphs_considered;
    rec["max_distance"] = report.max_distance;
    rec["farthest"] = graph_list_json(report.farthest_examples, report.farthest);
    records.push_back(std::move(rec));
    write_report(report_path, "verify stability", {{"k", k}, {"n", n}, {"slack", slack}}, records,
                 {{"max_distance", report.max_distance}}, ms);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for generalized Turan numbers on small graphs"};
    app.require_subcommand(1);

    GlobalOptions opts;
    opts.cache_root = default_cache_root();
    std::string cache_override;
    app.add_option("--cache", cache_override,
                   "census cache directory (default TURANLAB_CACHE or ./.turanlab-cache)");
    app.add_flag("--no-cache", opts.no_cache, "disable the census cache");
    app.add_option("--workers", opts.workers, "enumeration worker threads (0 = auto)");
    app.add_option("--time-limit", opts.time_limit_seconds, "wall-clock budget in seconds (0 = none)");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named graph as graph6");
    std::string family, base_g6, construct_out;
    int c_n = 0, c_r = 2, c_ell = 1, c_m = 3, c_k = 1;
    std::vector<int> sizes;
    construct->add_option("family", family, "empty|complete|path|cycle|turan|extremal|blowup")
        ->required();
    construct->add_option("--n", c_n, "vertex count");
    construct->add_option("--r", c_r, "part count (turan)");
    construct->add_option("--ell", c_ell, "clique size (extremal)");
    construct->add_option("--m", c_m, "cycle length (cycle)");
    construct->add_option("--k", c_k, "path vertex count (path)");
    construct->add_option("--base", base_g6, "base graph in graph6 (blowup)");
    construct->add_option("--sizes", sizes, "part sizes (blowup)")->delimiter(',');
    construct->add_option("--out", construct_out, "output file (default stdout)");

    // count
    auto* count = app.add_subcommand("count", "count triangles/edges/cycles in graph6 input");
    std::string what = "triangles", count_in;
    count->add_option("--what", what, "triangles|edges|e_plus_t|cycles:M");
    count->add_option("--in", count_in, "graph6 input file (default stdin)");

    // check
    auto* check = app.add_subcommand("check", "search for vertex-disjoint cycle packings");
    int copies = 1, cycle_len = 3;
    std::string check_in;
    check->add_option("--copies", copies, "number of disjoint copies")->required();
    check->add_option("--cycle-len", cycle_len, "cycle length")->required();
    check->add_option("--in", check_in, "graph6 input file (default stdin)");

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "write a census of isomorphism classes");
    int e_n = 0;
    std::optional<int> free_copies, free_cycle_len, max_edges;
    std::string enum_out;
    enumerate_cmd->add_option("--n", e_n, "vertex count")->required();
    enumerate_cmd->add_option("--free-copies", free_copies, "forbidden family: copy count");
    enumerate_cmd->add_option("--free-cycle-len", free_cycle_len, "forbidden family: cycle length");
    enumerate_cmd->add_option("--max-edges", max_edges, "cap the edge count (bypasses the cache)");
    enumerate_cmd->add_option("--out", enum_out, "output census file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification target");
    verify->require_subcommand(1);
    int v_ell = 1, v_k = 1, v_k_from = 3, v_k_to = 6, v_n_from = 4, v_n_to = 8, v_n = 8,
        v_slack = 0;
    std::string report_path;

    auto* v_main = verify->add_subcommand("main", "exact maxima vs the join-construction formula");
    v_main->add_option("--ell", v_ell)->required();
    v_main->add_option("--k", v_k)->required();
    v_main->add_option("--n-from", v_n_from)->required();
    v_main->add_option("--n-to", v_n_to)->required();
    v_main->add_option("--report", report_path, "JSON report path");

    auto* v_lemma = verify->add_subcommand("lemma", "max of edges plus triangles vs floor(n^2/4)");
    v_lemma->add_option("--k", v_k)->required();
    v_lemma->add_option("--n-from", v_n_from)->required();
    v_lemma->add_option("--n-to", v_n_to)->required();
    v_lemma->add_option("--report", report_path, "JSON report path");

    auto* v_eg = verify->add_subcommand("erdos-gallai", "path Turan bound");
    v_eg->add_option("--k-from", v_k_from)->required();
    v_eg->add_option("--k-to", v_k_to)->required();
    v_eg->add_option("--n-from", v_n_from)->required();
    v_eg->add_option("--n-to", v_n_to)->required();
    v_eg->add_option("--report", report_path, "JSON report path");

    auto* v_fg = verify->add_subcommand("furedi-gunderson", "odd-cycle Turan equality");
    v_fg->add_option("--k", v_k)->required();
    v_fg->add_option("--n-from", v_n_from)->required();
    v_fg->add_option("--n-to", v_n_to)->required();
    v_fg->add_option("--report", report_path, "JSON report path");

    auto* v_as =
        verify->add_subcommand("alon-shikhelman", "triangle count vs even-cycle Turan bound");
    v_as->add_option("--k", v_k)->required();
    v_as->add_option("--n-from", v_n_from)->required();
    v_as->add_option("--n-to", v_n_to)->required();
    v_as->add_option("--report", report_path, "JSON report path");

    auto* v_st = verify->add_subcommand("stability", "bipartite distance of near-extremal graphs");
    v_st->add_option("--k", v_k)->required();
    v_st->add_option("--n", v_n)->required();
    v_st->add_option("--slack", v_slack)->required();
    v_st->add_option("--report", report_path, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!cache_override.empty()) opts.cache_root = cache_override;
    if (opts.time_limit_seconds > 0) {
        std::thread([limit = opts.time_limit_seconds] {
            std::this_thread::sleep_for(std::chrono::duration<double>(limit));
            std::fprintf(stderr, "time budget of %.1fs exceeded\n", limit);
            std::_Exit(kExitBudget);
        }).detach();
    }

    try {
        if (construct->parsed())
            return cmd_construct(family, c_n, c_r, c_ell, c_m, c_k, base_g6, sizes, construct_out);
        if (count->parsed()) return cmd_count(what, count_in);
        if (check->parsed()) return cmd_check(copies, cycle_len, check_in);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(opts, e_n, free_copies, free_cycle_len, max_edges, enum_out);
        if (verify->parsed()) {
            if (v_main->parsed()) return verify_main(opts, v_ell, v_k, v_n_from, v_n_to, report_path);
            if (v_lemma->parsed()) return verify_lemma(opts, v_k, v_n_from, v_n_to, report_path);
            if (v_eg->parsed())
                return verify_erdos_gallai(opts, v_k_from, v_k_to, v_n_from, v_n_to, report_path);
            if (v_fg->parsed())
                return verify_furedi_gunderson(opts, v_k, v_n_from, v_n_to, report_path);
            if (v_as->parsed())
                return verify_alon_shikhelman(opts, v_k, v_n_from, v_n_to, report_path);
            if (v_st->parsed()) return verify_stability(opts, v_k, v_n, v_slack, report_path);
        }
    } catch (const budget_error& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return kExitBudget;
    } catch (const graph6_parse_error& e) {
        std::fprintf(stderr, "graph6 parse error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
