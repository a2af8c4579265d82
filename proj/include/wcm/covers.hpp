#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcm/errors.hpp"
#include "wcm/graph.hpp"

namespace wcm {

// A pair (V', delta') of a vertex subset and positive weights on it.
class WeightedCover {
public:
    WeightedCover() = default;
    WeightedCover(std::initializer_list<std::pair<const int, int>> init) : weights_(init) {}
    explicit WeightedCover(std::map<int, int> weights) : weights_(std::move(weights)) {}

    bool contains(int v) const { return weights_.count(v) != 0; }
    int weight(int v) const { return weights_.at(v); }
    void set(int v, int w) { weights_[v] = w; }
    void erase(int v) { weights_.erase(v); }

    std::size_t cardinality() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }
    const std::map<int, int>& weights() const { return weights_; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(weights_.size());
        for (const auto& [v, w] : weights_) out.push_back(v);
        return out;
    }

    friend bool operator==(const WeightedCover&, const WeightedCover&) = default;

    // Deterministic output order: by vertex set, then by weights.
    friend bool operator<(const WeightedCover& a, const WeightedCover& b) {
        auto va = a.vertices(), vb = b.vertices();
        if (va != vb) return va < vb;
        for (auto ia = a.weights_.begin(), ib = b.weights_.begin(); ia != a.weights_.end(); ++ia, ++ib)
            if (ia->second != ib->second) return ia->second < ib->second;
        return false;
    }

private:
    std::map<int, int> weights_;
};

inline bool is_weighted_cover(const WeightedGraph& g, const WeightedCover& c) {
    for (const auto& [v, w] : c.weights())
        if (v < 1 || v > g.vertex_count()) throw PreconditionError("cover vertex " + std::to_string(v) + " out of range");
    for (const auto& e : g.edges()) {
        const bool by_u = c.contains(e.u) && c.weight(e.u) <= e.weight;
        const bool by_v = c.contains(e.v) && c.weight(e.v) <= e.weight;
        if (!by_u && !by_v) return false;
    }
    return true;
}

// (V2, d2) <= (V1, d1) iff V2 is a subset of V1 and d2 >= d1 on V2.
inline bool cover_leq(const WeightedCover& c2, const WeightedCover& c1) {
    for (const auto& [v, w] : c2.weights()) {
        if (!c1.contains(v)) return false;
        if (w < c1.weight(v)) return false;
    }
    return true;
}

inline bool cover_less(const WeightedCover& c2, const WeightedCover& c1) { return cover_leq(c2, c1) && !(c2 == c1); }

namespace detail {

// Dense working form of a cover: weight 0 means "not in the cover".
struct DenseCover {
    std::vector<int> w;

    bool covers_from(int v, int lambda) const { return w[static_cast<std::size_t>(v)] != 0 && w[static_cast<std::size_t>(v)] <= lambda; }
};

inline DenseCover densify(const WeightedGraph& g, const WeightedCover& c) {
    DenseCover d{std::vector<int>(static_cast<std::size_t>(g.vertex_count()) + 1, 0)};
    for (const auto& [v, w] : c.weights()) d.w[static_cast<std::size_t>(v)] = w;
    return d;
}

inline WeightedCover sparsify(const DenseCover& d) {
    std::map<int, int> m;
    for (std::size_t v = 1; v < d.w.size(); ++v)
        if (d.w[v] != 0) m.emplace(static_cast<int>(v), d.w[v]);
    return WeightedCover(std::move(m));
}

// Raise-then-delete to a fixpoint. Raising sets a weight to the largest value
// that keeps every incident edge covered, capped at the largest incident edge
// weight; deletion drops vertices whose incident edges are all covered from
// the other side. Both passes scan vertices in increasing index.
inline void minimalize_in_place(const WeightedGraph& g, DenseCover& d) {
    const int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        changed = false;
        bool raised = true;
        while (raised) {
            raised = false;
            for (int v = 1; v <= n; ++v) {
                int& wv = d.w[static_cast<std::size_t>(v)];
                if (wv == 0 || g.degree(v) == 0) continue;
                int bound = 0;
                for (int u : g.neighbors(v)) bound = std::max(bound, g.weight(u, v));
                for (int u : g.neighbors(v)) {
                    const int lambda = g.weight(u, v);
                    if (!d.covers_from(u, lambda)) bound = std::min(bound, lambda);
                }
                if (bound > wv) {
                    wv = bound;
                    raised = true;
                    changed = true;
                }
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (d.w[static_cast<std::size_t>(v)] == 0) continue;
            bool needed = false;
            for (int u : g.neighbors(v))
                if (!d.covers_from(u, g.weight(u, v))) {
                    needed = true;
                    break;
                }
            if (!needed) {
                d.w[static_cast<std::size_t>(v)] = 0;
                changed = true;
            }
        }
    }
}

}  // namespace detail

// A minimal weighted cover below `c` in the cover order.
inline WeightedCover minimalize_cover(const WeightedGraph& g, const WeightedCover& c) {
    if (!is_weighted_cover(g, c)) throw PreconditionError("minimalize_cover: input is not a weighted vertex cover");
    auto d = detail::densify(g, c);
    detail::minimalize_in_place(g, d);
    return detail::sparsify(d);
}

struct CoverSet {
    std::vector<WeightedCover> covers;  // sorted, pairwise incomparable
    std::vector<std::size_t> cardinalities;  // multiset, parallel to `covers`

    std::vector<std::size_t> distinct_cardinalities() const {
        std::set<std::size_t> s(cardinalities.begin(), cardinalities.end());
        return {s.begin(), s.end()};
    }
};

// All minimal weighted vertex covers. Every minimal cover is induced by
// assigning each edge to an endpoint that covers it, so enumerating the
// 2^|E| assignments and minimalizing each induced cover finds them all.
inline CoverSet enumerate_minimal_covers(const WeightedGraph& g, const Limits& limits = {}) {
    const int n = g.vertex_count();
    if (static_cast<std::size_t>(n) > limits.cover_vertices)
        throw LimitError("cover enumeration: " + std::to_string(n) + " vertices exceeds limit " + std::to_string(limits.cover_vertices));
    if (g.edge_count() > limits.cover_edges)
        throw LimitError("cover enumeration: " + std::to_string(g.edge_count()) + " edges exceeds limit " + std::to_string(limits.cover_edges));

    const auto& edges = g.edges();
    std::set<std::vector<int>> induced;
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);

    // Depth-first over edge assignments; `w` holds the running minimum of
    // assigned edge weights per vertex.
    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == edges.size()) {
            induced.insert(w);
            return;
        }
        for (int endpoint : {edges[k].u, edges[k].v}) {
            int& slot = w[static_cast<std::size_t>(endpoint)];
            const int saved = slot;
            slot = saved == 0 ? edges[k].weight : std::min(saved, edges[k].weight);
            self(self, k + 1);
            slot = saved;
        }
    };
    recurse(recurse, 0);

    std::set<WeightedCover> minimal;
    for (const auto& start : induced) {
        detail::DenseCover d{start};
        detail::minimalize_in_place(g, d);
        minimal.insert(detail::sparsify(d));
    }

    CoverSet out;
    for (const auto& c : minimal) {
        bool dominated = false;
        for (const auto& other : minimal)
            if (cover_less(other, c)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            out.covers.push_back(c);
            out.cardinalities.push_back(c.cardinality());
        }
    }
    return out;
}

struct UnmixedResult {
    bool unmixed = true;
    std::vector<std::size_t> cardinalities;  // distinct, ascending
};

inline UnmixedResult is_unmixed(const WeightedGraph& g, const Limits& limits = {}) {
    auto set = enumerate_minimal_covers(g, limits);
    UnmixedResult r;
    r.cardinalities = set.distinct_cardinalities();
    r.unmixed = r.cardinalities.size() <= 1;
    return r;
}

inline nlohmann::json cover_to_json(const WeightedCover& c) {
    nlohmann::json vs = nlohmann::json::object();
    for (const auto& [v, w] : c.weights()) vs[std::to_string(v)] = w;
    return {{"vertices", vs}, {"cardinality", c.cardinality()}};
}

inline nlohmann::json cover_set_to_json(const CoverSet& s) {
    auto arr = nlohmann::json::array();
    for (const auto& c : s.covers) arr.push_back(cover_to_json(c));
    return arr;
}

}  // namespace wcm
