#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "wcm/chordal.hpp"
#include "wcm/graph.hpp"

namespace wcm {

using VertexSet = std::vector<int>;  // sorted ascending

// Facets of the clique complex (the maximal cliques of G) and the free
// vertices, i.e. those lying in exactly one facet.
//
// Note on terminology: the source literature calls these faces "stable
// subsets" while defining them as cliques (pairwise adjacent vertex sets).
// Cliques are what is computed here.
struct FacetAnalysis {
    std::vector<VertexSet> facets;            // sorted lexicographically
    std::vector<int> membership;              // index 1..n: number of facets containing v
    std::vector<std::size_t> facets_with_free;  // indices into `facets`, ascending

    bool is_free(int v) const { return membership.at(static_cast<std::size_t>(v)) == 1; }

    std::vector<int> free_vertices(std::size_t facet) const {
        std::vector<int> out;
        for (int v : facets.at(facet))
            if (is_free(v)) out.push_back(v);
        return out;
    }
};

inline bool is_clique(const WeightedGraph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

inline FacetAnalysis clique_facets(const WeightedGraph& g, const EliminationOrder& order) {
    if (!is_perfect_elimination_order(g, order))
        throw PreconditionError("clique_facets: order is not a perfect elimination ordering");
    const int n = g.vertex_count();
    auto pos = detail::positions_of(order, n);

    // Every maximal clique is {v} plus the neighbours of v later in the order.
    std::vector<VertexSet> candidates;
    candidates.reserve(static_cast<std::size_t>(n));
    for (int v : order) {
        VertexSet c{v};
        for (int u : g.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) c.push_back(u);
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
    }

    FacetAnalysis fa;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
            if (i == j || candidates[j].size() < candidates[i].size()) continue;
            if (candidates[j].size() == candidates[i].size() && j > i) continue;  // keep first of equal sets
            if (std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(), candidates[i].end()))
                maximal = false;
        }
        if (maximal) fa.facets.push_back(candidates[i]);
    }
    std::sort(fa.facets.begin(), fa.facets.end());

    fa.membership.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& f : fa.facets)
        for (int v : f) ++fa.membership[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < fa.facets.size(); ++i)
        if (std::any_of(fa.facets[i].begin(), fa.facets[i].end(), [&](int v) { return fa.is_free(v); }))
            fa.facets_with_free.push_back(i);
    return fa;
}

// Convenience: chordality check followed by facet analysis.
inline FacetAnalysis analyze_chordal(const WeightedGraph& g) {
    auto ch = is_chordal(g);
    if (!ch.chordal) throw NotChordalError("graph is not chordal");
    return clique_facets(g, ch.order);
}

// True iff the facets that contain a free vertex are pairwise disjoint and
// cover {1..n}.
inline bool partition_check(const FacetAnalysis& fa, int n) {
    std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i : fa.facets_with_free)
        for (int v : fa.facets[i]) {
            if (v < 1 || v > n) return false;
            if (++hits[static_cast<std::size_t>(v)] > 1) return false;
        }
    for (int v = 1; v <= n; ++v)
        if (hits[static_cast<std::size_t>(v)] != 1) return false;
    return true;
}

}  // namespace wcm
