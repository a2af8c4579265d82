#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive and shares no code with include/wcm
// beyond the graph and cover value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "wcm/covers.hpp"
#include "wcm/graph.hpp"

namespace oracle {

using wcm::WeightedCover;
using wcm::WeightedGraph;

inline std::vector<int> members(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (mask & (1u << (v - 1))) out.push_back(v);
    return out;
}

// Some vertex subset of size >= 4 induces a cycle.
inline bool has_chordless_cycle(const WeightedGraph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto s = members(mask, n);
        if (s.size() < 4) continue;
        bool two_regular = true;
        for (int v : s) {
            int d = 0;
            for (int u : s) d += g.adjacent(u, v) ? 1 : 0;
            if (d != 2) two_regular = false;
        }
        if (!two_regular) continue;
        // connected?
        std::set<int> seen{s[0]};
        std::vector<int> stack{s[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : s)
                if (g.adjacent(u, v) && seen.insert(u).second) stack.push_back(u);
        }
        if (seen.size() == s.size()) return true;
    }
    return false;
}

inline bool is_induced_cycle(const WeightedGraph& g, const std::vector<int>& cyc) {
    const std::size_t k = cyc.size();
    if (k < 4) return false;
    if (std::set<int>(cyc.begin(), cyc.end()).size() != k) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

inline std::vector<std::vector<int>> maximal_cliques(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto s = members(mask, n);
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = g.adjacent(s[i], s[j]);
        if (ok) cliques.push_back(mask);
    }
    std::vector<std::vector<int>> out;
    for (auto c : cliques)
        if (std::none_of(cliques.begin(), cliques.end(), [&](std::uint32_t d) { return d != c && (c & d) == c; }))
            out.push_back(members(c, n));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool covers(const WeightedGraph& g, const WeightedCover& c) {
    for (const auto& e : g.edges()) {
        const bool a = c.contains(e.u) && c.weight(e.u) <= e.weight;
        const bool b = c.contains(e.v) && c.weight(e.v) <= e.weight;
        if (!a && !b) return false;
    }
    return true;
}

// c2 <= c1: smaller vertex set, larger weights.
inline bool leq(const WeightedCover& c2, const WeightedCover& c1) {
    for (const auto& [v, w] : c2.weights())
        if (!c1.contains(v) || w < c1.weight(v)) return false;
    return true;
}

// Every weighted cover whose weights come from domain(v), for each vertex.
inline std::vector<WeightedCover> all_covers(const WeightedGraph& g, const std::function<std::vector<int>(int)>& domain) {
    const int n = g.vertex_count();
    std::vector<WeightedCover> out;
    WeightedCover cur;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            if (covers(g, cur)) out.push_back(cur);
            return;
        }
        rec(v + 1);
        for (int w : domain(v)) {
            cur.set(v, w);
            rec(v + 1);
            cur.erase(v);
        }
    };
    rec(1);
    return out;
}

inline std::vector<WeightedCover> minimal_among(const std::vector<WeightedCover>& all) {
    std::vector<WeightedCover> out;
    for (const auto& c : all) {
        bool minimal = true;
        for (const auto& d : all)
            if (!(d == c) && leq(d, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Weights 1..max+1 per vertex; with that domain the minimal elements are the
// true minimal covers.
inline std::vector<WeightedCover> minimal_covers_unrestricted(const WeightedGraph& g) {
    const int top = g.max_weight() + 1;
    std::vector<int> dom(static_cast<std::size_t>(top));
    std::iota(dom.begin(), dom.end(), 1);
    return minimal_among(all_covers(g, [&](int) { return dom; }));
}

inline std::vector<WeightedCover> minimal_covers_incident(const WeightedGraph& g) {
    return minimal_among(all_covers(g, [&](int v) {
        std::vector<int> dom;
        for (int u : g.neighbors(v)) dom.push_back(g.weight(u, v));
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        return dom;
    }));
}

// Classical minimal vertex covers, by size.
inline std::set<std::size_t> unweighted_cover_sizes(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> cs;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges())
            if (!(mask & (1u << (e.u - 1))) && !(mask & (1u << (e.v - 1)))) ok = false;
        if (ok) cs.push_back(mask);
    }
    std::set<std::size_t> sizes;
    for (auto c : cs)
        if (std::none_of(cs.begin(), cs.end(), [&](std::uint32_t d) { return d != c && (c & d) == d; }))
            sizes.insert(members(c, n).size());
    return sizes;
}

// Generate-and-test for a bad forest on `facet`. `free_v[v]` marks free
// vertices. Inner vertices are the ones with a child. When `distinct_trees`
// is set, the inner-inner inequality only compares vertices of different
// trees.
struct NaiveForest {
    std::map<int, int> parent;  // non-roots only
    std::map<int, int> nu0;     // root -> external vertex
};

inline bool naive_forest_ok(const WeightedGraph& g, const std::vector<int>& facet, const NaiveForest& f,
                            bool distinct_trees) {
    auto lam = [&](int a, int b) { return g.weight(a, b); };
    auto root_of = [&](int v) {
        while (f.parent.count(v)) v = f.parent.at(v);
        return v;
    };
    std::map<int, int> heaviest_child;
    for (const auto& [c, p] : f.parent) heaviest_child[p] = std::max(heaviest_child[p], lam(c, p));
    // every root-to-leaf path, read leaf upwards
    for (int v : facet) {
        if (heaviest_child.count(v)) continue;  // not a leaf
        std::vector<int> path{v};
        while (f.parent.count(path.back())) path.push_back(f.parent.at(path.back()));
        if (path.size() < 2) continue;
        path.push_back(f.nu0.at(path.back()));
        // path = leaf, ..., root, nu0: weights must increase going up
        for (std::size_t i = 0; i + 2 < path.size(); ++i)
            if (!(lam(path[i], path[i + 1]) < lam(path[i + 1], path[i + 2]))) return false;
    }
    std::vector<int> inner;
    for (const auto& [u, m] : heaviest_child) inner.push_back(u);
    for (int u : inner)
        for (int v : inner) {
            if (u >= v) continue;
            if (distinct_trees && root_of(u) == root_of(v)) continue;
            if (!(lam(u, v) > std::min(heaviest_child[u], heaviest_child[v]))) return false;
        }
    std::map<int, int> ext;  // external -> heaviest root edge among roots using it
    for (const auto& [r, x] : f.nu0) ext[x] = std::max(ext[x], lam(r, x));
    for (int u : inner)
        for (const auto& [x, m] : ext)
            if (g.adjacent(u, x) && !(lam(u, x) > std::min(heaviest_child[u], m))) return false;
    for (const auto& [x, mx] : ext)
        for (const auto& [y, my] : ext)
            if (x < y && g.adjacent(x, y) && !(lam(x, y) > std::min(mx, my))) return false;
    return true;
}

inline bool naive_bad_forest_exists(const WeightedGraph& g, const std::vector<int>& facet, const std::vector<char>& free_v,
                                    bool distinct_trees = false) {
    const std::size_t k = facet.size();
    // choice[i] == k: root; otherwise index of the parent in facet
    std::vector<std::size_t> choice(k, 0);
    std::function<bool(std::size_t)> pick = [&](std::size_t i) -> bool {
        if (i == k) {
            NaiveForest f;
            std::vector<int> roots;
            for (std::size_t j = 0; j < k; ++j) {
                if (choice[j] == k) roots.push_back(facet[j]);
                else f.parent[facet[j]] = facet[choice[j]];
            }
            // acyclic: every vertex reaches a root within k steps
            for (int v : facet) {
                int x = v;
                std::size_t steps = 0;
                while (f.parent.count(x) && steps <= k) x = f.parent.at(x), ++steps;
                if (steps > k) return false;
            }
            for (int r : roots)
                if (free_v[static_cast<std::size_t>(r)]) return false;
            if (roots.empty()) return false;
            std::vector<std::vector<int>> options;
            for (int r : roots) {
                std::vector<int> xs;
                for (int x = 1; x <= g.vertex_count(); ++x)
                    if (!std::count(facet.begin(), facet.end(), x) && !free_v[static_cast<std::size_t>(x)] && g.adjacent(x, r))
                        xs.push_back(x);
                if (xs.empty()) return false;
                options.push_back(xs);
            }
            std::vector<std::size_t> sel(roots.size(), 0);
            while (true) {
                for (std::size_t t = 0; t < roots.size(); ++t) f.nu0[roots[t]] = options[t][sel[t]];
                if (naive_forest_ok(g, facet, f, distinct_trees)) return true;
                std::size_t t = 0;
                while (t < sel.size() && ++sel[t] == options[t].size()) sel[t++] = 0;
                if (t == sel.size()) return false;
            }
        }
        for (std::size_t c = 0; c <= k; ++c) {
            if (c == i) continue;
            choice[i] = c;
            if (pick(i + 1)) return true;
        }
        return false;
    };
    return pick(0);
}

// Graphs on n vertices, one per isomorphism class, as edge lists.
inline std::vector<WeightedGraph> graphs_up_to_isomorphism(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> slot_of(static_cast<std::size_t>(n) + 1, std::vector<std::size_t>(static_cast<std::size_t>(n) + 1));
    for (std::size_t s = 0; s < slots.size(); ++s) {
        slot_of[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = s;
        slot_of[static_cast<std::size_t>(slots[s].second)][static_cast<std::size_t>(slots[s].first)] = s;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<std::uint32_t> seen;
    std::vector<WeightedGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        // canonical form: smallest mask over all relabelings
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = UINT32_MAX;
        do {
            std::uint32_t m = 0;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!(mask & (1u << s))) continue;
                const int a = perm[static_cast<std::size_t>(slots[s].first - 1)] + 1;
                const int b = perm[static_cast<std::size_t>(slots[s].second - 1)] + 1;
                m |= 1u << slot_of[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            }
            best = std::min(best, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(best).second) continue;
        WeightedGraph g(n);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (best & (1u << s)) g.add_edge(slots[s].first, slots[s].second, 1);
        out.push_back(std::move(g));
    }
    return out;
}

inline bool connected(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(u)]) seen[static_cast<std::size_t>(u)] = 1, ++count, stack.push_back(u);
    }
    return count == n;
}

inline WeightedGraph with_weights(const WeightedGraph& shape, const std::vector<int>& weights) {
    WeightedGraph g(shape.vertex_count());
    std::size_t k = 0;
    for (const auto& e : shape.edges()) g.add_edge(e.u, e.v, weights[k++]);
    return g;
}

}  // namespace oracle
