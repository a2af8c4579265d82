#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcm/covers.hpp"
#include "wcm/facets.hpp"
#include "wcm/graph.hpp"

namespace wcm {

// One rooted tree of a spanning forest of a facet, together with the
// external vertex nu0 attached to its root.
struct ForestComponent {
    int root = 0;
    int nu0 = 0;
    std::map<int, int> parent;  // child -> parent, for non-root vertices of this tree

    std::vector<int> vertices() const {
        std::vector<int> out{root};
        for (const auto& [c, p] : parent) out.push_back(c);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const ForestComponent&, const ForestComponent&) = default;
};

// A rooted spanning forest of G[F] for a facet F with a free vertex, whose
// weights satisfy the strict-decrease and cross-inequality conditions. Its
// existence witnesses that the weighted graph is mixed.
struct ForestCertificate {
    std::size_t facet_index = 0;
    std::vector<ForestComponent> components;  // sorted by root

    friend bool operator==(const ForestCertificate&, const ForestCertificate&) = default;
};

// Which pairs of inner vertices the inner-inner inequality ranges over.
// `AllPairs` includes two inner vertices of the same tree; `DistinctTrees`
// only pairs from different trees.
enum class InnerPairScope { AllPairs, DistinctTrees };

// Returns a description of the first violated condition, or nullopt when the
// certificate is structurally valid and every weight condition holds.
inline std::optional<std::string> certificate_problem(const WeightedGraph& g, const FacetAnalysis& fa,
                                                      const ForestCertificate& cert,
                                                      InnerPairScope scope = InnerPairScope::AllPairs) {
    const int n = g.vertex_count();
    if (cert.facet_index >= fa.facets.size()) return "facet index out of range";
    const VertexSet& facet = fa.facets[cert.facet_index];
    if (std::none_of(facet.begin(), facet.end(), [&](int v) { return fa.is_free(v); }))
        return "facet has no free vertex";
    if (cert.components.empty()) return "forest has no components";

    std::map<int, std::size_t> tree_of;
    std::map<int, int> parent;  // across all trees
    for (std::size_t t = 0; t < cert.components.size(); ++t) {
        const auto& comp = cert.components[t];
        for (int v : comp.vertices()) {
            if (!std::binary_search(facet.begin(), facet.end(), v))
                return "vertex " + std::to_string(v) + " is not in the facet";
            if (!tree_of.emplace(v, t).second) return "vertex " + std::to_string(v) + " appears in two places";
        }
        for (const auto& [c, p] : comp.parent) {
            if (c == comp.root) return "root " + std::to_string(c) + " has a parent";
            if (c == p) return "vertex " + std::to_string(c) + " is its own parent";
            if (!std::binary_search(facet.begin(), facet.end(), p))
                return "parent " + std::to_string(p) + " is not in the facet";
            parent[c] = p;
        }
    }
    if (tree_of.size() != facet.size()) return "forest does not span the facet";
    for (const auto& [c, p] : parent) {
        auto it = tree_of.find(p);
        if (it == tree_of.end() || it->second != tree_of[c]) return "parent of " + std::to_string(c) + " lies in another tree";
    }
    // Every vertex must reach its root.
    for (const auto& comp : cert.components) {
        for (const auto& [c, p0] : comp.parent) {
            int x = c;
            std::size_t steps = 0;
            while (x != comp.root) {
                auto it = comp.parent.find(x);
                if (it == comp.parent.end() || ++steps > facet.size()) return "tree rooted at " + std::to_string(comp.root) + " has a cycle";
                x = it->second;
            }
        }
    }
    for (const auto& comp : cert.components) {
        if (fa.is_free(comp.root)) return "root " + std::to_string(comp.root) + " is free";
        const int x = comp.nu0;
        if (x < 1 || x > n) return "nu0 out of range";
        if (std::binary_search(facet.begin(), facet.end(), x)) return "nu0 " + std::to_string(x) + " lies in the facet";
        if (fa.is_free(x)) return "nu0 " + std::to_string(x) + " is free";
        if (!g.adjacent(x, comp.root)) return "nu0 " + std::to_string(x) + " is not adjacent to root " + std::to_string(comp.root);
    }

    // children and inner vertices
    std::map<int, std::vector<int>> children;
    for (const auto& [c, p] : parent) children[p].push_back(c);
    auto max_child_weight = [&](int u) {
        int m = 0;
        for (int c : children.at(u)) m = std::max(m, g.weight(u, c));
        return m;
    };

    // Strict decrease along every root-to-leaf path, starting at the nu0 edge.
    for (const auto& comp : cert.components) {
        std::vector<std::pair<int, int>> stack{{comp.root, g.weight(comp.nu0, comp.root)}};
        while (!stack.empty()) {
            auto [u, incoming] = stack.back();
            stack.pop_back();
            auto it = children.find(u);
            if (it == children.end()) continue;
            for (int c : it->second) {
                const int w = g.weight(u, c);
                if (!(incoming > w))
                    return "weights do not strictly decrease at edge " + std::to_string(u) + "-" + std::to_string(c);
                stack.emplace_back(c, w);
            }
        }
    }

    std::vector<int> inner;
    for (const auto& [u, cs] : children) inner.push_back(u);

    for (std::size_t a = 0; a < inner.size(); ++a)
        for (std::size_t b = a + 1; b < inner.size(); ++b) {
            const int u = inner[a], v = inner[b];
            if (scope == InnerPairScope::DistinctTrees && tree_of[u] == tree_of[v]) continue;
            if (!(g.weight(u, v) > std::min(max_child_weight(u), max_child_weight(v))))
                return "inner pair " + std::to_string(u) + "," + std::to_string(v) + " violates the inner-inner inequality";
        }

    // Largest weight from each external vertex to the roots that use it.
    std::map<int, int> nu0_max;
    for (const auto& comp : cert.components) {
        int& m = nu0_max[comp.nu0];
        m = std::max(m, g.weight(comp.nu0, comp.root));
    }
    for (int u : inner)
        for (const auto& [x, mx] : nu0_max)
            if (g.adjacent(u, x) && !(g.weight(u, x) > std::min(max_child_weight(u), mx)))
                return "inner vertex " + std::to_string(u) + " and nu0 " + std::to_string(x) + " violate the inner-external inequality";
    for (auto i = nu0_max.begin(); i != nu0_max.end(); ++i)
        for (auto j = std::next(i); j != nu0_max.end(); ++j)
            if (g.adjacent(i->first, j->first) && !(g.weight(i->first, j->first) > std::min(i->second, j->second)))
                return "external vertices " + std::to_string(i->first) + "," + std::to_string(j->first) + " violate the external-external inequality";
    return std::nullopt;
}

inline bool check_forest_certificate(const WeightedGraph& g, const FacetAnalysis& fa, const ForestCertificate& cert,
                                     InnerPairScope scope = InnerPairScope::AllPairs) {
    return !certificate_problem(g, fa, cert, scope).has_value();
}

namespace detail {

// Exhaustive search over parent functions of a facet, in the order: roots
// first, then parents ascending; nu0 choices ascending.
class BadForestSearch {
public:
    BadForestSearch(const WeightedGraph& g, const FacetAnalysis& fa, std::size_t facet_index, InnerPairScope scope)
        : g_(g), fa_(fa), facet_index_(facet_index), facet_(fa.facets[facet_index]), scope_(scope) {
        const std::size_t k = facet_.size();
        parent_.assign(k, kUnassigned);
        external_.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (fa_.is_free(facet_[i])) continue;
            for (int x : g_.neighbors(facet_[i]))
                if (!fa_.is_free(x) && !std::binary_search(facet_.begin(), facet_.end(), x)) external_[i].push_back(x);
        }
    }

    std::optional<ForestCertificate> run() {
        if (assign(0)) return result_;
        return std::nullopt;
    }

private:
    static constexpr int kUnassigned = -2;
    static constexpr int kRoot = -1;

    int lambda(std::size_t a, std::size_t b) const { return g_.weight(facet_[a], facet_[b]); }

    // Local strict-decrease checks involving vertex i, against the already
    // assigned vertices. Together these cover every grandparent-parent-child
    // triple, which also rules out parent cycles.
    bool consistent(std::size_t i) const {
        const int p = parent_[i];
        if (p >= 0) {
            const int gp = parent_[static_cast<std::size_t>(p)];
            if (gp >= 0 && !(lambda(static_cast<std::size_t>(gp), static_cast<std::size_t>(p)) > lambda(static_cast<std::size_t>(p), i)))
                return false;
        }
        if (p >= 0)
            for (std::size_t c = 0; c < facet_.size(); ++c)
                if (parent_[c] == static_cast<int>(i) && !(lambda(static_cast<std::size_t>(p), i) > lambda(i, c))) return false;
        return true;
    }

    bool assign(std::size_t i) {
        if (i == facet_.size()) return finish_forest();
        if (!fa_.is_free(facet_[i]) && !external_[i].empty()) {
            parent_[i] = kRoot;
            if (consistent(i) && assign(i + 1)) return true;
        }
        for (std::size_t p = 0; p < facet_.size(); ++p) {
            if (p == i) continue;
            parent_[i] = static_cast<int>(p);
            if (consistent(i) && assign(i + 1)) return true;
        }
        parent_[i] = kUnassigned;
        return false;
    }

    bool finish_forest() {
        const std::size_t k = facet_.size();
        max_child_.assign(k, 0);
        root_of_.assign(k, 0);
        for (std::size_t c = 0; c < k; ++c)
            if (parent_[c] >= 0) {
                auto& m = max_child_[static_cast<std::size_t>(parent_[c])];
                m = std::max(m, lambda(static_cast<std::size_t>(parent_[c]), c));
            }
        for (std::size_t v = 0; v < k; ++v) {
            std::size_t x = v, steps = 0;
            while (parent_[x] >= 0) {
                x = static_cast<std::size_t>(parent_[x]);
                if (++steps > k) return false;
            }
            root_of_[v] = x;
        }
        for (std::size_t u = 0; u < k; ++u) {
            if (max_child_[u] == 0) continue;
            for (std::size_t v = u + 1; v < k; ++v) {
                if (max_child_[v] == 0) continue;
                if (scope_ == InnerPairScope::DistinctTrees && root_of_[u] == root_of_[v]) continue;
                if (!(lambda(u, v) > std::min(max_child_[u], max_child_[v]))) return false;
            }
        }
        roots_.clear();
        candidates_.clear();
        for (std::size_t r = 0; r < k; ++r) {
            if (parent_[r] != kRoot) continue;
            std::vector<int> viable;
            for (int x : external_[r])
                if (g_.weight(x, facet_[r]) > max_child_[r]) viable.push_back(x);
            if (viable.empty()) return false;
            roots_.push_back(r);
            candidates_.push_back(std::move(viable));
        }
        nu0_.assign(roots_.size(), 0);
        return choose_external(0);
    }

    bool choose_external(std::size_t t) {
        if (t == roots_.size()) return check_external();
        for (int x : candidates_[t]) {
            nu0_[t] = x;
            if (choose_external(t + 1)) return true;
        }
        return false;
    }

    bool check_external() {
        std::map<int, int> nu0_max;
        for (std::size_t t = 0; t < roots_.size(); ++t) {
            int& m = nu0_max[nu0_[t]];
            m = std::max(m, g_.weight(nu0_[t], facet_[roots_[t]]));
        }
        for (std::size_t u = 0; u < facet_.size(); ++u) {
            if (max_child_[u] == 0) continue;
            for (const auto& [x, mx] : nu0_max)
                if (g_.adjacent(facet_[u], x) && !(g_.weight(facet_[u], x) > std::min(max_child_[u], mx))) return false;
        }
        for (auto i = nu0_max.begin(); i != nu0_max.end(); ++i)
            for (auto j = std::next(i); j != nu0_max.end(); ++j)
                if (g_.adjacent(i->first, j->first) && !(g_.weight(i->first, j->first) > std::min(i->second, j->second)))
                    return false;

        ForestCertificate cert;
        cert.facet_index = facet_index_;
        for (std::size_t t = 0; t < roots_.size(); ++t) {
            ForestComponent comp;
            comp.root = facet_[roots_[t]];
            comp.nu0 = nu0_[t];
            for (std::size_t c = 0; c < facet_.size(); ++c)
                if (parent_[c] >= 0 && root_of_[c] == roots_[t]) comp.parent[facet_[c]] = facet_[static_cast<std::size_t>(parent_[c])];
            cert.components.push_back(std::move(comp));
        }
        result_ = std::move(cert);
        return true;
    }

    const WeightedGraph& g_;
    const FacetAnalysis& fa_;
    std::size_t facet_index_;
    const VertexSet& facet_;
    InnerPairScope scope_;

    std::vector<int> parent_;
    std::vector<std::vector<int>> external_;  // nonfree neighbours outside the facet
    std::vector<int> max_child_;              // 0 for leaves
    std::vector<std::size_t> root_of_;
    std::vector<std::size_t> roots_;
    std::vector<std::vector<int>> candidates_;
    std::vector<int> nu0_;
    ForestCertificate result_;
};

}  // namespace detail

inline std::optional<ForestCertificate> find_bad_forest(const WeightedGraph& g, const FacetAnalysis& fa, std::size_t facet_index,
                                                        const Limits& limits = {},
                                                        InnerPairScope scope = InnerPairScope::AllPairs) {
    if (facet_index >= fa.facets.size()) throw PreconditionError("find_bad_forest: facet index out of range");
    const auto& facet = fa.facets[facet_index];
    if (std::none_of(facet.begin(), facet.end(), [&](int v) { return fa.is_free(v); }))
        throw PreconditionError("find_bad_forest: facet has no free vertex");
    if (facet.size() > limits.facet_size)
        throw LimitError("find_bad_forest: facet of size " + std::to_string(facet.size()) + " exceeds limit " +
                         std::to_string(limits.facet_size));
    return detail::BadForestSearch(g, fa, facet_index, scope).run();
}

struct CMVerdict {
    bool chordal = true;
    bool partition_holds = false;
    std::optional<ForestCertificate> bad_forest;
    std::optional<bool> unmixed;
    std::vector<std::size_t> cardinalities;  // filled together with `unmixed`
    bool cm = false;
    FacetAnalysis analysis;
};

// Combinatorial Cohen-Macaulay test for weighted chordal graphs: the facets
// with a free vertex partition the vertex set and none of them carries a bad
// forest.
inline CMVerdict is_cohen_macaulay(const WeightedGraph& g, const Limits& limits = {},
                                   InnerPairScope scope = InnerPairScope::AllPairs) {
    CMVerdict v;
    v.analysis = analyze_chordal(g);
    v.partition_holds = partition_check(v.analysis, g.vertex_count());
    if (!v.partition_holds) {
        v.cm = false;
        return v;
    }
    for (std::size_t i : v.analysis.facets_with_free) {
        if (auto cert = find_bad_forest(g, v.analysis, i, limits, scope)) {
            v.bad_forest = std::move(cert);
            break;
        }
    }
    v.cm = !v.bad_forest.has_value();
    return v;
}

// Smallest-index free vertex of each facet that has one.
inline std::vector<int> chosen_free_vertices(const FacetAnalysis& fa) {
    std::vector<int> out;
    for (std::size_t i : fa.facets_with_free) out.push_back(fa.free_vertices(i).front());
    return out;
}

// All vertices except one free vertex per free facet, each with weight 1.
// When the free facets partition [n] this is a minimal cover of size n - m.
inline WeightedCover small_witness_cover(const WeightedGraph& g, const FacetAnalysis& fa) {
    auto skip = chosen_free_vertices(fa);
    WeightedCover c;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (std::find(skip.begin(), skip.end(), v) == skip.end()) c.set(v, 1);
    return c;
}

// The cover built from a bad forest on facet F: leaves of the forest get
// weight 1, inner vertices one more than their heaviest child edge, each
// external vertex one more than its heaviest edge to a root that uses it.
// Free facets holding an external vertex are taken whole (weight 1 off the
// external vertices); every other free facet loses its chosen free vertex.
inline WeightedCover large_witness_cover(const WeightedGraph& g, const FacetAnalysis& fa, const ForestCertificate& cert) {
    WeightedCover c;
    std::map<int, int> max_child;
    for (const auto& comp : cert.components) {
        for (int v : comp.vertices()) max_child[v] = 0;
        for (const auto& [child, p] : comp.parent) max_child[p] = std::max(max_child[p], g.weight(p, child));
    }
    for (const auto& [v, m] : max_child) c.set(v, m == 0 ? 1 : m + 1);

    std::map<int, int> gamma;
    for (const auto& comp : cert.components) {
        int& x = gamma[comp.nu0];
        x = std::max(x, g.weight(comp.nu0, comp.root) + 1);
    }
    for (std::size_t i : fa.facets_with_free) {
        if (i == cert.facet_index) continue;
        const auto& f = fa.facets[i];
        const bool holds_external = std::any_of(f.begin(), f.end(), [&](int v) { return gamma.count(v) != 0; });
        const int skipped = holds_external ? 0 : fa.free_vertices(i).front();
        for (int v : f) {
            if (v == skipped) continue;
            auto it = gamma.find(v);
            c.set(v, it == gamma.end() ? 1 : it->second);
        }
    }
    return c;
}

struct WitnessCovers {
    WeightedCover large;  // minimalizes to cardinality >= n - m + 1
    WeightedCover small;  // minimalizes to cardinality n - m
};

inline WitnessCovers mixed_witness_covers(const WeightedGraph& g, const FacetAnalysis& fa, const ForestCertificate& cert) {
    if (!partition_check(fa, g.vertex_count()))
        throw PreconditionError("mixed_witness_covers: facets with a free vertex do not partition the vertex set");
    if (auto why = certificate_problem(g, fa, cert))
        throw PreconditionError("mixed_witness_covers: invalid certificate: " + *why);
    return {large_witness_cover(g, fa, cert), small_witness_cover(g, fa)};
}

inline nlohmann::json certificate_to_json(const FacetAnalysis& fa, const ForestCertificate& cert) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : cert.components) {
        nlohmann::json parent = nlohmann::json::object();
        for (const auto& [c, p] : comp.parent) parent[std::to_string(c)] = p;
        comps.push_back({{"root", comp.root}, {"nu0", comp.nu0}, {"parent", parent}});
    }
    return {{"facet", fa.facets.at(cert.facet_index)}, {"facetIndex", cert.facet_index}, {"components", comps}};
}

inline nlohmann::json verdict_to_json(const CMVerdict& v) {
    nlohmann::json j;
    j["chordal"] = v.chordal;
    j["partitionHolds"] = v.partition_holds;
    j["cm"] = v.cm;
    j["badForest"] = v.bad_forest ? certificate_to_json(v.analysis, *v.bad_forest) : nlohmann::json(nullptr);
    j["facets"] = v.analysis.facets;
    std::vector<int> free;
    for (std::size_t u = 1; u < v.analysis.membership.size(); ++u)
        if (v.analysis.membership[u] == 1) free.push_back(static_cast<int>(u));
    j["freeVertices"] = free;
    if (v.unmixed) {
        j["unmixed"] = *v.unmixed;
        j["cardinalities"] = v.cardinalities;
    }
    return j;
}

}  // namespace wcm
