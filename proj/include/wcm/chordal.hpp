#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

// A perfect elimination ordering lists vertices so that each vertex is
// simplicial in the subgraph induced by itself and the vertices after it.
using EliminationOrder = std::vector<int>;

struct ChordalityResult {
    bool chordal = false;
    EliminationOrder order;              // set when chordal
    std::vector<int> chordless_cycle;    // set when not chordal; consecutive vertices adjacent, length >= 4
};

namespace detail {

inline std::vector<int> positions_of(const EliminationOrder& order, int n) {
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t k = 0; k < order.size(); ++k) pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    return pos;
}

// Shortest path from `from` to `to` avoiding vertices marked in `blocked`.
inline std::vector<int> shortest_path(const WeightedGraph& g, int from, int to, const std::vector<char>& blocked) {
    std::vector<int> prev(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<char> seen(blocked);
    std::deque<int> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == to) break;
        for (int y : g.neighbors(x)) {
            if (seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            prev[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    if (!seen[static_cast<std::size_t>(to)] || (to != from && prev[static_cast<std::size_t>(to)] == 0)) return {};
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(prev[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

// A graph has a chordless cycle through v iff two non-adjacent neighbours u, w
// of v are joined by a path avoiding the rest of N[v]; a shortest such path
// closes a chordless cycle.
inline std::vector<int> find_chordless_cycle(const WeightedGraph& g) {
    const int n = g.vertex_count();
    for (int v = 1; v <= n; ++v) {
        const auto& nv = g.neighbors(v);
        for (std::size_t a = 0; a < nv.size(); ++a) {
            for (std::size_t b = a + 1; b < nv.size(); ++b) {
                const int u = nv[a], w = nv[b];
                if (g.adjacent(u, w)) continue;
                std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
                blocked[static_cast<std::size_t>(v)] = 1;
                for (int x : nv) blocked[static_cast<std::size_t>(x)] = 1;
                blocked[static_cast<std::size_t>(u)] = 0;
                blocked[static_cast<std::size_t>(w)] = 0;
                auto path = shortest_path(g, u, w, blocked);
                if (path.empty()) continue;
                path.insert(path.begin(), v);
                return path;
            }
        }
    }
    return {};
}

}  // namespace detail

inline bool is_perfect_elimination_order(const WeightedGraph& g, const EliminationOrder& order) {
    const int n = g.vertex_count();
    if (order.size() != static_cast<std::size_t>(n)) return false;
    auto pos = detail::positions_of(order, n);
    for (int v = 1; v <= n; ++v)
        if (pos[static_cast<std::size_t>(v)] < 0) return false;
    for (int v : order) {
        const int pv = pos[static_cast<std::size_t>(v)];
        int parent = 0;
        for (int u : g.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > pv &&
                (parent == 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)]))
                parent = u;
        if (parent == 0) continue;
        for (int u : g.neighbors(v))
            if (u != parent && pos[static_cast<std::size_t>(u)] > pv && !g.adjacent(u, parent)) return false;
    }
    return true;
}

// Maximum cardinality search; the reverse visiting order is a perfect
// elimination ordering exactly when the graph is chordal. Ties are broken by
// smallest vertex index.
inline EliminationOrder maximum_cardinality_search(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
    EliminationOrder visit;
    visit.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = 0;
        for (int v = 1; v <= n; ++v)
            if (!done[static_cast<std::size_t>(v)] &&
                (best == 0 || count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(best)]))
                best = v;
        done[static_cast<std::size_t>(best)] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!done[static_cast<std::size_t>(u)]) ++count[static_cast<std::size_t>(u)];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

inline ChordalityResult is_chordal(const WeightedGraph& g) {
    ChordalityResult r;
    auto order = maximum_cardinality_search(g);
    if (is_perfect_elimination_order(g, order)) {
        r.chordal = true;
        r.order = std::move(order);
        return r;
    }
    r.chordless_cycle = detail::find_chordless_cycle(g);
    return r;
}

}  // namespace wcm
