// wcm: command-line front end for the weighted chordal CM library.
//
// Exit status: 0 success, 1 a cross-check found a mismatch, 2 bad input
// (unreadable file, malformed JSON, unknown flag, non-chordal graph for
// `check`, size limit exceeded).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wcm/wcm.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw wcm::ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw wcm::ParseError(path + ": malformed JSON at byte " + std::to_string(e.byte));
    }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string describe_set(const wcm::WeightedGraph& g, const std::vector<int>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + wcm::vertex_name(g, vs[i]);
    return s + "}";
}

struct Options {
    bool pretty = false;
    std::string file;
    bool with_covers = false;
    bool decompose = false;
    std::string nzd;
    unsigned field = 0;
    int n = 5;
    int max_weight = 3;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::string output;
    std::vector<unsigned> fields{2, 3, 0};
};

int cmd_check(const Options& o, const wcm::Limits& limits) {
    const auto g = wcm::parse_graph(read_input(o.file));
    const auto chordality = wcm::is_chordal(g);
    if (!chordality.chordal) {
        emit({{"chordal", false}, {"chordlessCycle", chordality.chordless_cycle}, {"cm", nullptr}});
        std::cerr << "wcm: graph is not chordal (chordless cycle " << describe_set(g, chordality.chordless_cycle)
                  << "); the combinatorial criterion does not apply, use `wcm oracle`\n";
        return kInputError;
    }
    auto verdict = wcm::is_cohen_macaulay(g, limits);
    if (o.with_covers) {
        const auto u = wcm::is_unmixed(g, limits);
        verdict.unmixed = u.unmixed;
        verdict.cardinalities = u.cardinalities;
    }
    emit(wcm::verdict_to_json(verdict));
    if (o.pretty) {
        std::cerr << (verdict.cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << "\n";
        std::cerr << "  facets:";
        for (const auto& f : verdict.analysis.facets) std::cerr << " " << describe_set(g, f);
        std::cerr << "\n  free facets partition the vertices: " << (verdict.partition_holds ? "yes" : "no") << "\n";
        if (verdict.bad_forest) {
            const auto& bf = *verdict.bad_forest;
            std::cerr << "  bad forest on " << describe_set(g, verdict.analysis.facets[bf.facet_index]) << ":";
            for (const auto& c : bf.components)
                std::cerr << " tree rooted at " << wcm::vertex_name(g, c.root) << " with nu0 " << wcm::vertex_name(g, c.nu0) << ";";
            std::cerr << "\n";
        }
        if (verdict.unmixed) std::cerr << "  minimal cover cardinalities: " << join(verdict.cardinalities) << "\n";
    }
    if (verdict.unmixed && *verdict.unmixed != verdict.cm) {
        std::cerr << "wcm: MISMATCH: cm=" << verdict.cm << " but unmixed=" << *verdict.unmixed << "\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_covers(const Options& o, const wcm::Limits& limits) {
    const auto g = wcm::parse_graph(read_input(o.file));
    const auto s = wcm::enumerate_minimal_covers(g, limits);
    emit(wcm::cover_set_to_json(s));
    if (o.pretty) {
        std::cerr << s.covers.size() << " minimal weighted covers, cardinalities " << join(s.distinct_cardinalities()) << "\n";
        for (const auto& c : s.covers) {
            std::cerr << " ";
            for (const auto& [v, w] : c.weights()) std::cerr << " " << wcm::vertex_name(g, v) << "^" << w;
            std::cerr << "\n";
        }
    }
    return kOk;
}

// FILE may hold a graph (its weighted edge ideal is used) or an ideal.
int cmd_ideal(const Options& o) {
    const auto path = o.file;
    const auto j = parse_json(read_input(path), path);
    const auto a = j.is_object() && j.contains("vars") ? wcm::ideal_from_json(j) : wcm::weighted_edge_ideal(wcm::graph_from_json(j));
    json out;
    out["ideal"] = wcm::ideal_to_json(a);
    if (o.decompose) {
        if (a.is_zero()) throw wcm::ParseError("cannot decompose the zero ideal");
        json comps = json::array();
        for (const auto& c : wcm::irreducible_decomposition(a)) comps.push_back(wcm::ideal_to_json(c)["gens"]);
        out["components"] = comps;
    }
    if (!o.nzd.empty()) {
        std::vector<std::size_t> block;
        std::vector<std::string> names;
        std::stringstream ss(o.nzd);
        for (std::string name; std::getline(ss, name, ',');) {
            block.push_back(a.var_index(name));
            names.push_back(name);
        }
        if (a.is_zero()) throw wcm::ParseError("non-zerodivisor test needs a nonzero ideal");
        const auto witness = wcm::zerodivisor_witness(a, block);
        out["nzd"] = {{"block", names},
                      {"nonZeroDivisor", wcm::sum_nzd_check(a, block)},
                      {"witness", witness ? wcm::monomial_to_json(*witness, a.vars()) : json(nullptr)}};
    }
    emit(out);
    if (o.pretty) {
        std::cerr << a.gens().size() << " minimal generators";
        if (out.contains("components")) std::cerr << ", " << out["components"].size() << " irreducible components";
        if (out.contains("nzd")) std::cerr << "; sum of block is " << (out["nzd"]["nonZeroDivisor"].get<bool>() ? "" : "not ") << "a non-zerodivisor";
        std::cerr << "\n";
    }
    return kOk;
}

int cmd_oracle(const Options& o, const wcm::Limits& limits) {
    const auto g = wcm::parse_graph(read_input(o.file));
    const auto r = wcm::oracle_is_cm(g, wcm::FieldSpec(o.field), limits);
    emit(wcm::oracle_report_to_json(r));
    if (o.pretty)
        std::cerr << "over " << (o.field == 0 ? std::string("Q") : "GF(" + std::to_string(o.field) + ")") << ": "
                  << (r.cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << " (" << r.polarized_vars << " polarized variables)\n";
    return kOk;
}

int cmd_gen(const Options& o) {
    const auto g = wcm::generate_random_chordal(o.n, o.max_weight, o.seed);
    const auto text = wcm::serialize_graph(g);
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) throw wcm::ParseError("cannot write '" + o.output + "'");
        out << text;
    }
    if (o.pretty) std::cerr << "generated " << g.vertex_count() << " vertices, " << g.edges().size() << " edges\n";
    return kOk;
}

int cmd_cross_validate(const Options& o, const wcm::Limits& limits) {
    wcm::RunConfig cfg;
    cfg.seed = o.seed;
    cfg.n = o.n;
    cfg.max_weight = o.max_weight;
    cfg.trials = o.trials;
    cfg.limits = limits;
    cfg.fields = o.fields;
    for (unsigned p : cfg.fields) wcm::FieldSpec check(p);
    if (cfg.n < 0 || cfg.max_weight < 1) throw wcm::PreconditionError("need n >= 0 and max weight >= 1");
    const auto report = wcm::cross_validate(cfg);
    const auto j = wcm::report_to_json(report);
    if (o.output.empty() || o.output == "-") {
        emit(j);
    } else {
        std::ofstream out(o.output);
        if (!out) throw wcm::ParseError("cannot write '" + o.output + "'");
        out << j.dump() << "\n";
        emit({{"mismatches", j["mismatches"]}, {"oracleSkips", j["oracleSkips"]}, {"trials", report.trials.size()}});
    }
    if (o.pretty || !report.mismatches.empty()) {
        std::size_t cm = 0;
        for (const auto& t : report.trials) cm += t.cm ? 1 : 0;
        std::cerr << report.trials.size() << " trials, " << cm << " Cohen-Macaulay, " << report.oracle_skips
                  << " oracle skips, " << report.mismatches.size() << " mismatches, " << static_cast<long>(report.elapsed_ms) << " ms\n";
        for (const auto& m : report.mismatches)
            std::cerr << "  trial " << m.trial << " seed " << m.seed << " " << m.kind << ": " << m.detail << "\n    "
                      << wcm::serialize_graph(m.graph);
    }
    return report.mismatches.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulay test for weighted chordal graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--pretty", o.pretty, "Also print a human-readable summary to stderr");

    auto* check = app.add_subcommand("check", "Combinatorial Cohen-Macaulay verdict for a chordal graph");
    check->add_option("file", o.file, "Graph file ('-' for stdin)")->required();
    check->add_flag("--with-covers", o.with_covers, "Also decide unmixedness by cover enumeration");

    auto* covers = app.add_subcommand("covers", "Enumerate minimal weighted vertex covers");
    covers->add_option("file", o.file, "Graph file ('-' for stdin)")->required();

    auto* ideal = app.add_subcommand("ideal", "Weighted edge ideal or a given monomial ideal");
    ideal->add_option("file", o.file, "Graph or ideal file ('-' for stdin)")->required();
    ideal->add_flag("--decompose", o.decompose, "Irreducible decomposition");
    ideal->add_option("--nzd", o.nzd, "Comma-separated variables; test whether their sum is a non-zerodivisor");

    auto* oracle = app.add_subcommand("oracle", "Algebraic Cohen-Macaulay test (polarization and Reisner's criterion)");
    oracle->add_option("file", o.file, "Graph file ('-' for stdin)")->required();
    oracle->add_option("--field", o.field, "Characteristic: 0 or a prime")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Random weighted chordal graph");
    gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--max-weight", o.max_weight, "Largest edge weight")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", o.seed, "Seed")->required();
    gen->add_option("-o,--output", o.output, "Output file (default stdout)");

    auto* xv = app.add_subcommand("cross-validate", "Random campaign checking every route against every other");
    xv->add_option("--n", o.n, "Vertex count")->capture_default_str()->check(CLI::NonNegativeNumber);
    xv->add_option("--trials", o.trials, "Number of graphs")->capture_default_str();
    xv->add_option("--seed", o.seed, "Seed")->capture_default_str();
    xv->add_option("--max-weight", o.max_weight, "Largest edge weight")->capture_default_str()->check(CLI::PositiveNumber);
    xv->add_option("--fields", o.fields, "Oracle characteristics")->delimiter(',')->capture_default_str();
    xv->add_option("-o,--output", o.output, "Write the full report here and print a summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const auto limits = wcm::Limits::from_env();
        if (check->parsed()) return cmd_check(o, limits);
        if (covers->parsed()) return cmd_covers(o, limits);
        if (ideal->parsed()) return cmd_ideal(o);
        if (oracle->parsed()) return cmd_oracle(o, limits);
        if (gen->parsed()) return cmd_gen(o);
        if (xv->parsed()) return cmd_cross_validate(o, limits);
    } catch (const wcm::Error& e) {
        std::cerr << "wcm: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "wcm: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
