// graphdot command-line driver: exact graph dot products, derived metrics,
// orthogonality scans, coordinates over graph bases, clustering, census and
// catalog queries. Results are JSON by default (with a schema_version field);
// --output csv/tsv renders the tabular core of each command instead. Errors
// always produce a JSON error record on stdout, a human-readable line on
// stderr, and a category-specific exit code.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <graphdot/graphdot.hpp>
#include <graphdot/json_io.hpp>

namespace {

using graphdot::Graph;
using graphdot::ordered_json;

constexpr int kSchemaVersion = 1;

// Process exit codes, one per error category.
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;  // also rejected argument values
constexpr int kExitOrderMismatch = 4;

struct Options {
    std::string format = "graph6";  // graph6 | edges
    std::string output = "json";    // json | csv | tsv
    std::string solver = "auto";    // auto | exhaustive | bnb | special
    bool no_phase = false;
    int max_order = 16;  // branch-and-bound cap
    int bounded_max = graphdot::kBoundedOrderMaxOrder;
    std::uint64_t seed = 0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) graphdot::fail(graphdot::errc::parse, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Reads every graph in a file: graph6 files hold one graph per line, edge-list
/// files hold exactly one graph. Parse errors are reported with file context.
std::vector<Graph> load_graph_file(const std::string& path, const Options& opt) {
    const std::string text = slurp(path);
    std::vector<Graph> out;
    if (opt.format == "edges") {
        try {
            out.push_back(graphdot::parse_edge_list(text));
        } catch (const graphdot::error& e) {
            graphdot::fail(e.kind(), path + ": " + e.what());
        }
        return out;
    }
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graphdot::parse_graph6(line));
        } catch (const graphdot::error& e) {
            graphdot::fail(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

Graph load_one(const std::string& path, const Options& opt) {
    std::vector<Graph> v = load_graph_file(path, opt);
    if (v.size() != 1)
        graphdot::fail(graphdot::errc::parse, path + ": expected exactly one graph, found " +
                                                  std::to_string(v.size()));
    return v.front();
}

std::vector<Graph> load_many(const std::vector<std::string>& paths, const Options& opt) {
    std::vector<Graph> out;
    for (const std::string& p : paths) {
        std::vector<Graph> v = load_graph_file(p, opt);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

graphdot::SolvePolicy policy_of(const Options& opt) {
    graphdot::SolvePolicy p;
    p.bnb_max = opt.max_order;
    p.bounded_max = opt.bounded_max;
    p.count_phase = !opt.no_phase;
    return p;
}

/// Forced special-family solve: either operand may be the recognized family;
/// when the host is the family member the witness is inverted back.
graphdot::DotRecord run_special(const Graph& g, const Graph& h) {
    using graphdot::SolverKind;
    if (const graphdot::FamilyMatch m = graphdot::recognize_family(h))
        return {graphdot::dot_special(g, h, m), SolverKind::special_family};
    if (const graphdot::FamilyMatch m = graphdot::recognize_family(g)) {
        graphdot::DotResult swapped = graphdot::dot_special(h, g, m);
        std::vector<int> inverted(swapped.witness.size());
        for (std::size_t x = 0; x < swapped.witness.size(); ++x)
            inverted[static_cast<std::size_t>(swapped.witness[x])] = static_cast<int>(x);
        swapped.witness = std::move(inverted);
        return {std::move(swapped), SolverKind::special_family};
    }
    graphdot::fail(graphdot::errc::invalid_input,
                   "solver=special: neither operand is a recognized polynomial family "
                   "(star, or clique plus independent set)");
}

/// Same-order or mixed-order dot under the CLI's solver selection. A smaller
/// second operand always routes through the mixed-order solver; the --solver
/// choice applies to same-order pairs.
graphdot::DotRecord run_dot(const Graph& g, const Graph& h, const Options& opt) {
    if (g.order() != h.order()) return graphdot::dot_any(g, h, policy_of(opt));
    if (opt.solver == "exhaustive")
        return {graphdot::dot_exhaustive(g, h, !opt.no_phase), graphdot::SolverKind::exhaustive};
    if (opt.solver == "bnb") {
        graphdot::BnbOptions b;
        b.max_order = opt.max_order;
        b.count_phase = !opt.no_phase;
        return {graphdot::dot_bnb(g, h, b), graphdot::SolverKind::branch_bound};
    }
    if (opt.solver == "special") return run_special(g, h);
    return graphdot::dot_any(g, h, policy_of(opt));
}

void require_same_order(const Graph& g, const Graph& h, const char* who) {
    if (g.order() != h.order())
        graphdot::fail(graphdot::errc::order_mismatch,
                       std::string(who) + ": operands have orders " + std::to_string(g.order()) +
                           " and " + std::to_string(h.order()));
}

ordered_json make_payload(const std::string& command) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

// ---- tabular rendering (--output csv|tsv) -----------------------------------

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string cell(std::int64_t v) { return std::to_string(v); }
std::string cell(bool b) { return b ? "true" : "false"; }
std::string cell(const std::optional<std::int64_t>& p) { return p ? std::to_string(*p) : ""; }
std::string cell(double d) { return ordered_json(d).dump(); }

std::string joined(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

void emit(const Options& opt, const ordered_json& payload, const Table& table) {
    if (opt.output == "json") {
        std::cout << payload.dump(2) << '\n';
        return;
    }
    const char sep = opt.output == "tsv" ? '\t' : ',';
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) std::cout << sep;
        std::cout << table.header[i];
    }
    std::cout << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << sep;
            std::cout << row[i];
        }
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph dot products, metric structure and graph coordinates"};
    app.require_subcommand(1);
    app.footer(
        "Graph arguments are file paths: graph6 files carry one graph per line,\n"
        "edge-list files (--format edges) carry a vertex count line followed by\n"
        "'i j' edge lines and describe a single graph.\n"
        "\n"
        "CSV/TSV columns per command:\n"
        "  dot          value,phase,witness,solver,ops\n"
        "  norm-dot     norm_dot,decimal,isomorphic\n"
        "  phase        phase,value\n"
        "  metric       d\n"
        "  ortho        orthogonal,dot,dot_with_complement,phase\n"
        "  ortho --scan index_a,index_b,graph6_a,graph6_b\n"
        "  ortho --quasi index_a,index_b,graph6_a,graph6_b,score\n"
        "  coords       basis,value,phase,solver\n"
        "  basis-verify order,class_count,values_only,injective,distinct_keys,collision_count\n"
        "  cluster      item,graph6,origin,cluster\n"
        "  census       class,count\n"
        "  rank         position,index,score\n"
        "  enumerate    index,graph6\n"
        "Phase cells are empty when maximizer counting is disabled or overflows.\n"
        "Errors emit a JSON record on stdout and a message on stderr; exit codes:\n"
        "  2 parse, 3 guard or invalid argument, 4 order mismatch.");

    Options opt;
    app.add_option("--format", opt.format, "graph input format")
        ->check(CLI::IsMember({"graph6", "edges"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "output rendering")
        ->check(CLI::IsMember({"json", "csv", "tsv"}))
        ->capture_default_str();
    app.add_option("--solver", opt.solver, "same-order solver selection")
        ->check(CLI::IsMember({"auto", "exhaustive", "bnb", "special"}))
        ->capture_default_str();
    app.add_flag("--no-phase", opt.no_phase, "skip counting the maximizers");
    app.add_option("--max-order", opt.max_order, "branch-and-bound order cap")
        ->capture_default_str();
    app.add_option("--bounded-max", opt.bounded_max, "mixed-order pattern cap")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized relabelings")
        ->capture_default_str();

    // ---- dot ----------------------------------------------------------------
    std::string dot_a, dot_b;
    CLI::App* cmd_dot = app.add_subcommand("dot", "dot product of two graphs");
    cmd_dot->add_option("G", dot_a, "first graph file")->required();
    cmd_dot->add_option("H", dot_b, "second graph file")->required();
    cmd_dot->callback([&] {
        const Graph g = load_one(dot_a, opt);
        const Graph h = load_one(dot_b, opt);
        const graphdot::DotRecord rec = run_dot(g, h, opt);
        ordered_json j = make_payload("dot");
        j["solver"] = graphdot::solver_kind_name(rec.solver);
        j.update(graphdot::json_of(rec.result));
        emit(opt, j,
             {{"value", "phase", "witness", "solver", "ops"},
              {{cell(rec.result.value), cell(rec.result.phase), joined(rec.result.witness),
                graphdot::solver_kind_name(rec.solver), cell(static_cast<std::int64_t>(rec.result.ops))}}});
    });

    // ---- norm-dot -----------------------------------------------------------
    std::string nd_a, nd_b;
    CLI::App* cmd_nd = app.add_subcommand("norm-dot", "normalized dot product (exact rational)");
    cmd_nd->add_option("G", nd_a, "first graph file")->required();
    cmd_nd->add_option("H", nd_b, "second graph file")->required();
    cmd_nd->callback([&] {
        const Graph g = load_one(nd_a, opt);
        const Graph h = load_one(nd_b, opt);
        require_same_order(g, h, "norm-dot");
        if (g.order() < 2)
            graphdot::fail(graphdot::errc::invalid_input,
                           "norm-dot: undefined below order 2 (zero norm)");
        Options quiet = opt;
        quiet.no_phase = true;
        const std::int64_t value = run_dot(g, h, quiet).result.value;
        const graphdot::Rational r(value, graphdot::norm_squared(g));
        ordered_json j = make_payload("norm-dot");
        j["norm_dot"] = r.str();
        const double dec = static_cast<double>(r.num()) / static_cast<double>(r.den());
        j["decimal"] = dec;
        const bool iso = r == graphdot::Rational(1);
        j["isomorphic"] = iso;
        emit(opt, j, {{"norm_dot", "decimal", "isomorphic"}, {{r.str(), cell(dec), cell(iso)}}});
    });

    // ---- phase ----------------------------------------------------------------
    std::string ph_a, ph_b;
    CLI::App* cmd_ph = app.add_subcommand("phase", "number of maximizing relabelings");
    cmd_ph->add_option("G", ph_a, "first graph file")->required();
    cmd_ph->add_option("H", ph_b, "second graph file")->required();
    cmd_ph->callback([&] {
        const Graph g = load_one(ph_a, opt);
        const Graph h = load_one(ph_b, opt);
        Options forced = opt;
        forced.no_phase = false;
        const graphdot::DotRecord rec = run_dot(g, h, forced);
        ordered_json j = make_payload("phase");
        j["phase"] = rec.result.phase ? ordered_json(*rec.result.phase) : ordered_json(nullptr);
        j["value"] = rec.result.value;
        emit(opt, j, {{"phase", "value"}, {{cell(rec.result.phase), cell(rec.result.value)}}});
    });

    // ---- metric ---------------------------------------------------------------
    std::string me_a, me_b;
    CLI::App* cmd_me = app.add_subcommand("metric", "squared embedding distance");
    cmd_me->add_option("G", me_a, "first graph file")->required();
    cmd_me->add_option("H", me_b, "second graph file")->required();
    cmd_me->callback([&] {
        const Graph g = load_one(me_a, opt);
        const Graph h = load_one(me_b, opt);
        require_same_order(g, h, "metric");
        Options quiet = opt;
        quiet.no_phase = true;
        const std::int64_t value = run_dot(g, h, quiet).result.value;
        const std::int64_t d = 2 * graphdot::norm_squared(g) - 2 * value;
        ordered_json j = make_payload("metric");
        j["d"] = d;
        emit(opt, j, {{"d"}, {{cell(d)}}});
    });

    // ---- ortho ---------------------------------------------------------------
    std::string or_a, or_b;
    int or_scan = 0, or_quasi = 0;
    CLI::App* cmd_or = app.add_subcommand("ortho", "orthogonality test or catalog scan");
    cmd_or->add_option("G", or_a, "first graph file");
    cmd_or->add_option("H", or_b, "second graph file");
    CLI::Option* scan_opt =
        cmd_or->add_option("--scan", or_scan, "scan all class pairs of this order");
    CLI::Option* quasi_opt =
        cmd_or->add_option("--quasi", or_quasi, "quasi-orthogonality scan of this order");
    scan_opt->excludes(quasi_opt);
    cmd_or->callback([&] {
        if (or_scan > 0) {
            const auto rep = graphdot::orthogonal_pairs_scan(or_scan);
            ordered_json j = make_payload("ortho-scan");
            j.update(graphdot::json_of(rep));
            Table t{{"index_a", "index_b", "graph6_a", "graph6_b"}, {}};
            for (const auto& [a, b] : rep.pairs) {
                const auto& codes = graphdot::enumerate_iso_classes(or_scan);
                t.rows.push_back({cell(static_cast<std::int64_t>(a)),
                                  cell(static_cast<std::int64_t>(b)),
                                  graphdot::write_graph6(Graph::from_edge_code(
                                      or_scan, codes[static_cast<std::size_t>(a)])),
                                  graphdot::write_graph6(Graph::from_edge_code(
                                      or_scan, codes[static_cast<std::size_t>(b)]))});
            }
            emit(opt, j, t);
            return;
        }
        if (or_quasi > 0) {
            const auto rep = graphdot::quasi_orthogonality_scan(or_quasi);
            ordered_json j = make_payload("ortho-quasi");
            j.update(graphdot::json_of(rep));
            Table t{{"index_a", "index_b", "graph6_a", "graph6_b", "score"}, {}};
            for (const auto& [a, b] : rep.minimizing_pairs) {
                const auto& codes = graphdot::enumerate_iso_classes(or_quasi);
                t.rows.push_back({cell(static_cast<std::int64_t>(a)),
                                  cell(static_cast<std::int64_t>(b)),
                                  graphdot::write_graph6(Graph::from_edge_code(
                                      or_quasi, codes[static_cast<std::size_t>(a)])),
                                  graphdot::write_graph6(Graph::from_edge_code(
                                      or_quasi, codes[static_cast<std::size_t>(b)])),
                                  cell(rep.min_value)});
            }
            emit(opt, j, t);
            return;
        }
        if (or_a.empty() || or_b.empty())
            graphdot::fail(graphdot::errc::invalid_input,
                           "ortho: give two graph files, or one of --scan/--quasi");
        const Graph g = load_one(or_a, opt);
        const Graph h = load_one(or_b, opt);
        require_same_order(g, h, "ortho");
        const graphdot::DotRecord rec = run_dot(g, h, opt);
        Options quiet = opt;
        quiet.no_phase = true;
        const std::int64_t dc = run_dot(g, h.complement(), quiet).result.value;
        const bool ortho = rec.result.value == 0 && dc == 0;
        ordered_json j = make_payload("ortho");
        j["orthogonal"] = ortho;
        j["dot"] = rec.result.value;
        j["dot_with_complement"] = dc;
        j["phase"] = rec.result.phase ? ordered_json(*rec.result.phase) : ordered_json(nullptr);
        emit(opt, j,
             {{"orthogonal", "dot", "dot_with_complement", "phase"},
              {{cell(ortho), cell(rec.result.value), cell(dc), cell(rec.result.phase)}}});
    });

    // ---- coords ---------------------------------------------------------------
    std::string co_host;
    std::vector<std::string> co_basis;
    CLI::App* cmd_co = app.add_subcommand("coords", "coordinates of a graph over a basis");
    cmd_co->add_option("G", co_host, "host graph file")->required();
    cmd_co->add_option("basis", co_basis, "basis files (one graph per line)")
        ->expected(-1)
        ->required();
    cmd_co->callback([&] {
        const Graph host = load_one(co_host, opt);
        const std::vector<Graph> basis = load_many(co_basis, opt);
        const graphdot::Coordinates c = graphdot::coordinates(host, basis, policy_of(opt));
        ordered_json j = make_payload("coords");
        j["graph"] = graphdot::write_graph6(host);
        j.update(graphdot::json_of(c, basis));
        Table t{{"basis", "value", "phase", "solver"}, {}};
        for (std::size_t i = 0; i < c.entries.size(); ++i)
            t.rows.push_back({graphdot::write_graph6(basis[i]), cell(c.entries[i].value),
                              cell(c.entries[i].phase),
                              graphdot::solver_kind_name(c.entries[i].solver)});
        emit(opt, j, t);
    });

    // ---- basis-verify -----------------------------------------------------------
    std::vector<std::string> bv_args;
    int bv_order = 0;
    bool bv_values_only = false;
    CLI::App* cmd_bv = app.add_subcommand("basis-verify",
                                          "check a basis separates all classes of an order");
    cmd_bv->add_option("basis", bv_args, "basis files (one graph per line)")->required();
    cmd_bv->add_option("-n,--order", bv_order, "catalog order to verify against")->required();
    cmd_bv->add_flag("--values-only", bv_values_only, "compare values, ignore phases");
    cmd_bv->callback([&] {
        const std::vector<Graph> basis = load_many(bv_args, opt);
        const auto rep = graphdot::verify_basis(basis, bv_order, bv_values_only, policy_of(opt));
        ordered_json j = make_payload("basis-verify");
        ordered_json ids = ordered_json::array();
        for (const Graph& b : basis) ids.push_back(graphdot::write_graph6(b));
        j["basis"] = std::move(ids);
        j.update(graphdot::json_of(rep));
        emit(opt, j,
             {{"order", "class_count", "values_only", "injective", "distinct_keys",
               "collision_count"},
              {{cell(static_cast<std::int64_t>(rep.order)), cell(rep.class_count),
                cell(rep.values_only), cell(rep.injective), cell(rep.distinct_keys),
                cell(static_cast<std::int64_t>(rep.collisions.size()))}}});
    });

    // ---- cluster ------------------------------------------------------------------
    std::vector<std::string> cl_items, cl_basis;
    int cl_relabel = 0;
    bool cl_values_only = false;
    CLI::App* cmd_cl = app.add_subcommand("cluster", "group graphs by coordinate key");
    cmd_cl->add_option("graphs", cl_items, "files with graphs to cluster")->required();
    cmd_cl->add_option("--basis", cl_basis, "basis files")->required();
    cmd_cl->add_option("--relabel", cl_relabel,
                       "append this many seeded relabelings of every input");
    cmd_cl->add_flag("--values-only", cl_values_only, "compare values, ignore phases");
    cmd_cl->callback([&] {
        std::vector<Graph> items = load_many(cl_items, opt);
        if (items.empty())
            graphdot::fail(graphdot::errc::invalid_input, "cluster: no input graphs");
        const std::vector<Graph> basis = load_many(cl_basis, opt);
        std::vector<int> origin(items.size());
        std::iota(origin.begin(), origin.end(), 0);
        if (cl_relabel > 0) {
            std::mt19937_64 rng(opt.seed);
            const std::size_t originals = items.size();
            for (std::size_t i = 0; i < originals; ++i) {
                for (int t = 0; t < cl_relabel; ++t) {
                    std::vector<int> perm(static_cast<std::size_t>(items[i].order()));
                    std::iota(perm.begin(), perm.end(), 0);
                    std::shuffle(perm.begin(), perm.end(), rng);
                    items.push_back(items[i].relabeled(graphdot::Permutation(perm)));
                    origin.push_back(static_cast<int>(i));
                }
            }
        }
        const graphdot::ClusterPartition part =
            graphdot::cluster(items, basis, cl_values_only, policy_of(opt));
        ordered_json j = make_payload("cluster");
        ordered_json ids = ordered_json::array();
        for (const Graph& g : items) ids.push_back(graphdot::write_graph6(g));
        j["items"] = std::move(ids);
        j["origin"] = origin;
        ordered_json bids = ordered_json::array();
        for (const Graph& b : basis) bids.push_back(graphdot::write_graph6(b));
        j["basis"] = std::move(bids);
        j.update(graphdot::json_of(part));
        Table t{{"item", "graph6", "origin", "cluster"}, {}};
        for (std::size_t i = 0; i < items.size(); ++i)
            t.rows.push_back({cell(static_cast<std::int64_t>(i)), graphdot::write_graph6(items[i]),
                              cell(static_cast<std::int64_t>(origin[i])),
                              cell(static_cast<std::int64_t>(part.assignment[i]))});
        emit(opt, j, t);
    });

    // ---- census ---------------------------------------------------------------------
    std::string ce_arg;
    int ce_k = 0;
    CLI::App* cmd_ce = app.add_subcommand("census", "induced-subgraph census coordinates");
    cmd_ce->add_option("G", ce_arg, "host graph file")->required();
    cmd_ce->add_option("-k,--sub-order", ce_k, "order of the counted subgraphs")->required();
    cmd_ce->callback([&] {
        const Graph g = load_one(ce_arg, opt);
        const auto rep = graphdot::subgraph_census(g, ce_k);
        ordered_json j = make_payload("census");
        j["graph"] = graphdot::write_graph6(g);
        j.update(graphdot::json_of(rep));
        const auto& codes = graphdot::enumerate_iso_classes(ce_k);
        Table t{{"class", "count"}, {}};
        for (std::size_t i = 0; i < rep.counts.size(); ++i)
            t.rows.push_back({graphdot::write_graph6(Graph::from_edge_code(ce_k, codes[i])),
                              cell(rep.counts[i])});
        emit(opt, j, t);
    });

    // ---- rank -----------------------------------------------------------------------
    std::string ra_query;
    std::vector<std::string> ra_cands;
    CLI::App* cmd_ra = app.add_subcommand("rank", "rank candidates by normalized dot");
    cmd_ra->add_option("G", ra_query, "query graph file")->required();
    cmd_ra->add_option("candidates", ra_cands, "candidate files (one graph per line)")
        ->expected(-1)
        ->required();
    cmd_ra->callback([&] {
        const Graph query = load_one(ra_query, opt);
        const std::vector<Graph> cands = load_many(ra_cands, opt);
        const auto ranking = graphdot::similarity_rank(query, cands, policy_of(opt));
        ordered_json j = make_payload("rank");
        j["query"] = graphdot::write_graph6(query);
        ordered_json ids = ordered_json::array();
        for (const Graph& c : cands) ids.push_back(graphdot::write_graph6(c));
        j["candidates"] = std::move(ids);
        j["ranking"] = graphdot::json_of(ranking);
        Table t{{"position", "index", "score"}, {}};
        for (std::size_t p = 0; p < ranking.size(); ++p)
            t.rows.push_back({cell(static_cast<std::int64_t>(p)),
                              cell(static_cast<std::int64_t>(ranking[p].index)),
                              ranking[p].score.str()});
        emit(opt, j, t);
    });

    // ---- enumerate --------------------------------------------------------------------
    int en_order = 0;
    CLI::App* cmd_en = app.add_subcommand("enumerate", "isomorphism-class catalog of an order");
    cmd_en->add_option("-n,--order", en_order, "vertex count")->required();
    cmd_en->callback([&] {
        const auto& codes = graphdot::enumerate_iso_classes(en_order);
        ordered_json j = make_payload("enumerate");
        j["order"] = en_order;
        j["class_count"] = codes.size();
        ordered_json classes = ordered_json::array();
        Table t{{"index", "graph6"}, {}};
        for (std::size_t i = 0; i < codes.size(); ++i) {
            const std::string g6 = graphdot::write_graph6(Graph::from_edge_code(en_order, codes[i]));
            classes.push_back(g6);
            t.rows.push_back({cell(static_cast<std::int64_t>(i)), g6});
        }
        j["classes"] = std::move(classes);
        emit(opt, j, t);
    });

    // Accept the global options in any position, including after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    } catch (const graphdot::error& e) {
        const char* kind = "invalid_input";
        int code = kExitGuard;
        switch (e.kind()) {
            case graphdot::errc::parse:
                kind = "parse";
                code = kExitParse;
                break;
            case graphdot::errc::order_mismatch:
                kind = "order_mismatch";
                code = kExitOrderMismatch;
                break;
            case graphdot::errc::guard:
                kind = "guard";
                code = kExitGuard;
                break;
            case graphdot::errc::invalid_input:
                break;
        }
        ordered_json rec;
        rec["schema_version"] = kSchemaVersion;
        rec["error"] = {{"kind", kind}, {"message", e.what()}};
        std::cout << rec.dump(2) << '\n';
        std::cerr << "error: " << e.what() << '\n';
        return code;
    }
    return 0;
}
