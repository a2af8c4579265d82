#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcm/errors.hpp"

namespace wcm {

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    int weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple graph on vertices 1..n with a positive integer weight on every edge.
class WeightedGraph {
public:
    WeightedGraph() = default;

    explicit WeightedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1), weight_(cell_count(n), 0) {
        if (n < 0) throw PreconditionError("vertex count must be non-negative");
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    void add_edge(int i, int j, int w) {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw PreconditionError("edge endpoint out of range");
        if (i == j) throw PreconditionError("self-loops are not allowed");
        if (w < 1) throw PreconditionError("edge weight must be >= 1");
        if (adjacent(i, j)) throw PreconditionError("duplicate edge");
        if (i > j) std::swap(i, j);
        weight_[index(i, j)] = w;
        weight_[index(j, i)] = w;
        adj_[i].insert(std::upper_bound(adj_[i].begin(), adj_[i].end(), j), j);
        adj_[j].insert(std::upper_bound(adj_[j].begin(), adj_[j].end(), i), i);
        Edge e{i, j, w};
        edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e,
                                       [](const Edge& a, const Edge& b) {
                                           return a.u != b.u ? a.u < b.u : a.v < b.v;
                                       }),
                      e);
    }

    // 0 when i and j are not adjacent.
    int weight(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) return 0;
        return weight_[index(i, j)];
    }
    bool adjacent(int i, int j) const { return weight(i, j) != 0; }

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(int v) const { return neighbors(v).size(); }

    // Sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }

    int max_weight() const {
        int m = 0;
        for (const auto& e : edges_) m = std::max(m, e.weight);
        return m;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
            throw PreconditionError("label count must equal vertex count");
        labels_ = std::move(labels);
    }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Same vertex count, edges and weights. Labels and name are presentation only.
    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    static std::size_t cell_count(int n) {
        return n < 0 ? 0 : (static_cast<std::size_t>(n) + 1) * (static_cast<std::size_t>(n) + 1);
    }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * (static_cast<std::size_t>(n_) + 1) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_ = std::vector<std::vector<int>>(1);
    std::vector<int> weight_ = std::vector<int>(1, 0);
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::string name_;
};

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("graph: expected a JSON object at top level");
    if (!j.contains("n")) throw ParseError("graph: missing field 'n'");
    const auto& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<long long>() < 0) throw ParseError("graph: 'n' must be an integer >= 0");
    if (jn.get<long long>() > 1'000'000) throw ParseError("graph: 'n' is unreasonably large");
    const int n = jn.get<int>();
    WeightedGraph g(n);

    if (!j.contains("edges")) throw ParseError("graph: missing field 'edges'");
    const auto& jedges = j.at("edges");
    if (!jedges.is_array()) throw ParseError("graph: 'edges' must be an array");
    for (std::size_t k = 0; k < jedges.size(); ++k) {
        const std::string where = "graph: edges[" + std::to_string(k) + "]";
        const auto& e = jedges[k];
        if (!e.is_array() || e.size() != 3) throw ParseError(where + ": expected a triple [i, j, w]");
        for (const auto& x : e)
            if (!x.is_number_integer()) throw ParseError(where + ": entries must be integers");
        const long long i = e[0].get<long long>();
        const long long jj = e[1].get<long long>();
        const long long w = e[2].get<long long>();
        if (i < 1 || i > n || jj < 1 || jj > n) throw ParseError(where + ": vertex index out of range 1.." + std::to_string(n));
        if (i == jj) throw ParseError(where + ": self-loop");
        if (w < 1) throw ParseError(where + ": weight < 1");
        if (w > 1'000'000'000) throw ParseError(where + ": weight too large");
        if (g.adjacent(static_cast<int>(i), static_cast<int>(jj))) throw ParseError(where + ": duplicate edge");
        g.add_edge(static_cast<int>(i), static_cast<int>(jj), static_cast<int>(w));
    }

    if (j.contains("labels")) {
        const auto& jl = j.at("labels");
        if (!jl.is_array() || jl.size() != static_cast<std::size_t>(n))
            throw ParseError("graph: 'labels' must be an array of n strings");
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < jl.size(); ++k) {
            if (!jl[k].is_string()) throw ParseError("graph: labels[" + std::to_string(k) + "] is not a string");
            labels.push_back(jl[k].get<std::string>());
        }
        g.set_labels(std::move(labels));
    }
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("graph: 'name' must be a string");
        g.set_name(j.at("name").get<std::string>());
    }
    return g;
}

inline WeightedGraph parse_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph: malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return graph_from_json(j);
}

inline nlohmann::json graph_to_json(const WeightedGraph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.weight});
    if (!g.labels().empty()) j["labels"] = g.labels();
    if (!g.name().empty()) j["name"] = g.name();
    return j;
}

// Canonical text form: compact, keys sorted, edges sorted.
inline std::string serialize_graph(const WeightedGraph& g) { return graph_to_json(g).dump() + "\n"; }

inline std::string vertex_name(const WeightedGraph& g, int v) {
    if (!g.labels().empty()) return g.labels()[static_cast<std::size_t>(v - 1)];
    return std::to_string(v);
}

// Induced subgraph on `keep` (ascending), relabelled 1..|keep|.
inline WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& keep) {
    WeightedGraph h(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (int w = g.weight(keep[a], keep[b]); w != 0)
                h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1, w);
    return h;
}

// Vertex i of g becomes perm[i-1] (a permutation of 1..n).
inline WeightedGraph relabel(const WeightedGraph& g, const std::vector<int>& perm) {
    WeightedGraph h(g.vertex_count());
    for (const auto& e : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)], e.weight);
    return h;
}

}  // namespace wcm
