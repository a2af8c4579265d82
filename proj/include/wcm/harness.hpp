#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcm/cm_chordal.hpp"
#include "wcm/covers.hpp"
#include "wcm/ideal.hpp"
#include "wcm/random.hpp"
#include "wcm/simplicial.hpp"

namespace wcm {

struct RunConfig {
    std::uint64_t seed = 1;
    int n = 5;
    int max_weight = 3;
    std::size_t trials = 100;
    Limits limits;
    std::vector<unsigned> fields{2, 3, 0};
};

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    WeightedGraph graph;
    bool cm = false;
    bool unmixed = false;
    std::vector<std::size_t> cardinalities;
    std::map<unsigned, bool> oracle;  // by field characteristic; empty when skipped
    bool oracle_skipped = false;
    bool decomposition_identity = false;
    std::optional<bool> witness_ok;  // set when a bad forest was found
};

struct Mismatch {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string kind;
    std::string detail;
    WeightedGraph graph;
};

struct Report {
    RunConfig config;
    std::vector<TrialRecord> trials;
    std::vector<Mismatch> mismatches;
    std::size_t oracle_skips = 0;
    double elapsed_ms = 0;
};

// The two witness covers of a bad forest minimalize to cardinalities
// n - m and >= n - m + 1.
inline bool witness_covers_sound(const WeightedGraph& g, const FacetAnalysis& fa, const ForestCertificate& cert) {
    const auto w = mixed_witness_covers(g, fa, cert);
    if (!is_weighted_cover(g, w.large) || !is_weighted_cover(g, w.small)) return false;
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const std::size_t m = fa.facets_with_free.size();
    const auto large = minimalize_cover(g, w.large);
    const auto small = minimalize_cover(g, w.small);
    return small.cardinality() == n - m && large.cardinality() >= n - m + 1;
}

inline TrialRecord run_trial(const WeightedGraph& g, const RunConfig& cfg, std::vector<std::string>& problems) {
    TrialRecord t;
    t.graph = g;
    const auto verdict = is_cohen_macaulay(g, cfg.limits);
    t.cm = verdict.cm;
    const auto um = is_unmixed(g, cfg.limits);
    t.unmixed = um.unmixed;
    t.cardinalities = um.cardinalities;
    if (t.cm != t.unmixed)
        problems.push_back("cm-vs-unmixed: cm=" + std::string(t.cm ? "true" : "false") + " unmixed=" + (t.unmixed ? "true" : "false"));

    if (verdict.bad_forest) {
        t.witness_ok = witness_covers_sound(g, verdict.analysis, *verdict.bad_forest);
        if (!*t.witness_ok) problems.push_back("witness: bad-forest covers do not have the expected cardinalities");
    }

    if (polarized_variable_count(g) > cfg.limits.polarized_vars) {
        t.oracle_skipped = true;
    } else {
        for (unsigned p : cfg.fields) t.oracle[p] = oracle_is_cm(g, FieldSpec(p), cfg.limits).cm;
        for (const auto& [p, cm] : t.oracle)
            if (cm != t.cm)
                problems.push_back("oracle: field " + std::to_string(p) + " gives cm=" + (cm ? "true" : "false") +
                                   ", combinatorial cm=" + (t.cm ? "true" : "false"));
    }

    t.decomposition_identity = decomposition_identity(g, cfg.limits);
    if (!t.decomposition_identity) problems.push_back("decomposition: edge ideal differs from the intersection over minimal covers");
    return t;
}

// Random weighted chordal graphs checked against every independent route:
// combinatorial verdict, cover enumeration, algebraic oracle per field and
// the decomposition identity. Mismatches are reported, never thrown.
inline Report cross_validate(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.config = cfg;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        const std::uint64_t seed = SplitMix64::derive_seed(cfg.seed, i);
        const auto g = generate_random_chordal(cfg.n, cfg.max_weight, seed);
        std::vector<std::string> problems;
        auto t = run_trial(g, cfg, problems);
        t.trial = i;
        t.seed = seed;
        if (t.oracle_skipped) ++report.oracle_skips;
        for (auto& p : problems) {
            const auto colon = p.find(':');
            report.mismatches.push_back({i, seed, p.substr(0, colon), p.substr(colon + 2), g});
        }
        report.trials.push_back(std::move(t));
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["config"] = {{"seed", r.config.seed},
                   {"n", r.config.n},
                   {"maxWeight", r.config.max_weight},
                   {"trials", r.config.trials},
                   {"fields", r.config.fields},
                   {"limits", r.config.limits.to_json()}};
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : r.trials) {
        nlohmann::json o;
        o["trial"] = t.trial;
        o["seed"] = t.seed;
        o["cm"] = t.cm;
        o["unmixed"] = t.unmixed;
        o["cardinalities"] = t.cardinalities;
        if (t.oracle_skipped) {
            o["oracle"] = nullptr;
        } else {
            nlohmann::json oracle = nlohmann::json::object();
            for (const auto& [p, cm] : t.oracle) oracle[std::to_string(p)] = cm;
            o["oracle"] = oracle;
        }
        o["decompositionIdentity"] = t.decomposition_identity;
        if (t.witness_ok) o["witnessOk"] = *t.witness_ok;
        trials.push_back(std::move(o));
    }
    j["trials"] = trials;
    nlohmann::json mism = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mism.push_back({{"trial", m.trial}, {"seed", m.seed}, {"kind", m.kind}, {"detail", m.detail}, {"graph", graph_to_json(m.graph)}});
    j["mismatches"] = mism;
    j["oracleSkips"] = r.oracle_skips;
    j["elapsedMs"] = r.elapsed_ms;
    return j;
}

}  // namespace wcm
