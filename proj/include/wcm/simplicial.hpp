#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "wcm/errors.hpp"
#include "wcm/ideal.hpp"
#include "wcm/linalg.hpp"

namespace wcm {

// Coefficient field for homology: 0 means the rationals, otherwise a prime.
struct FieldSpec {
    unsigned characteristic = 0;

    explicit FieldSpec(unsigned p = 0) : characteristic(p) {
        if (p == 1 || (p > 1 && !is_prime(p))) throw PreconditionError("field characteristic must be 0 or a prime, got " + std::to_string(p));
        if (p >= (1u << 31)) throw PreconditionError("field characteristic must be below 2^31");
    }

    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
};

// Simplicial complex on vertices 0..vertex_count-1 given by its facets. No
// facets at all is the void complex; a single empty facet is {∅}.
struct SimplicialComplex {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> facets;  // each sorted; list sorted
};

using FaceMask = std::uint64_t;

namespace detail {

inline FaceMask to_mask(const std::vector<std::size_t>& face) {
    FaceMask m = 0;
    for (std::size_t v : face) m |= FaceMask{1} << v;
    return m;
}

inline std::vector<std::size_t> from_mask(FaceMask m) {
    std::vector<std::size_t> out;
    while (m != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline int dim_of(FaceMask m) { return std::popcount(m) - 1; }

// All faces of a complex, as bitmasks. Membership is a dense bitmap for up
// to 24 vertices and a hash set beyond that.
class FaceTable {
public:
    FaceTable() = default;

    static FaceTable from_facets(const SimplicialComplex& cx, std::size_t limit) {
        if (cx.vertex_count > 64) throw LimitError("simplicial complex: more than 64 vertices");
        FaceTable t(cx.vertex_count);
        for (const auto& f : cx.facets) {
            for (std::size_t v : f)
                if (v >= cx.vertex_count) throw PreconditionError("facet vertex out of range");
            const FaceMask full = to_mask(f);
            FaceMask sub = full;
            while (true) {
                if (t.insert(sub) && t.faces_.size() > limit)
                    throw LimitError("simplicial complex: more than " + std::to_string(limit) + " faces");
                if (sub == 0) break;
                sub = (sub - 1) & full;
            }
        }
        return t;
    }

    std::size_t vertex_count() const { return vertex_count_; }
    bool contains(FaceMask m) const {
        if (dense_) return m < bitmap_.size() && bitmap_[m] != 0;
        return set_.count(m) != 0;
    }
    bool empty() const { return faces_.empty(); }
    const std::vector<FaceMask>& faces() const { return faces_; }

    // Faces tau of link(sigma): tau ∩ sigma = ∅ and tau ∪ sigma a face.
    // `reach` receives the vertex set of the link.
    std::vector<FaceMask> link(FaceMask sigma, FaceMask& reach) const {
        reach = 0;
        std::vector<FaceMask> out;
        if (!contains(sigma)) return out;
        for (std::size_t v = 0; v < vertex_count_; ++v) {
            const FaceMask bit = FaceMask{1} << v;
            if (!(sigma & bit) && contains(sigma | bit)) reach |= bit;
        }
        FaceMask sub = reach;
        while (true) {
            if (contains(sub | sigma)) out.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & reach;
        }
        return out;
    }

private:
    explicit FaceTable(std::size_t vertex_count) : vertex_count_(vertex_count), dense_(vertex_count <= 24) {
        if (dense_) bitmap_.assign(std::size_t{1} << vertex_count, 0);
    }

    bool insert(FaceMask m) {
        if (dense_) {
            if (bitmap_[m]) return false;
            bitmap_[m] = 1;
        } else if (!set_.insert(m).second) {
            return false;
        }
        faces_.push_back(m);
        return true;
    }

    std::size_t vertex_count_ = 0;
    bool dense_ = true;
    std::vector<char> bitmap_;
    std::unordered_set<FaceMask> set_;
    std::vector<FaceMask> faces_;
};

// A link is a cone when some vertex v extends every face of it; cones have
// vanishing reduced homology.
inline bool link_is_cone(const FaceTable& t, FaceMask sigma, const std::vector<FaceMask>& link, FaceMask reach) {
    for (FaceMask rest = reach; rest != 0; rest &= rest - 1) {
        const FaceMask bit = rest & (~rest + 1);
        bool apex = true;
        for (FaceMask tau : link)
            if (!(tau & bit) && !t.contains(tau | bit | sigma)) {
                apex = false;
                break;
            }
        if (apex) return true;
    }
    return false;
}

// Reduced Betti numbers of the complex with the given faces, index k+1 for
// dimension k = -1..dim. Empty for the void complex.
template <class Ring>
std::vector<long> reduced_betti(const Ring& ring, const std::vector<FaceMask>& faces) {
    if (faces.empty()) return {};
    std::vector<std::pair<int, FaceMask>> keyed;
    keyed.reserve(faces.size());
    int top = -1;
    for (FaceMask m : faces) {
        keyed.emplace_back(dim_of(m), m);
        top = std::max(top, keyed.back().first);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(top) + 2);
    for (const auto& [d, m] : keyed) by_dim[static_cast<std::size_t>(d + 1)].push_back(m);

    // ranks[k+1] = rank of the boundary map from dimension k to k-1. Layers
    // go top down: a face that is the pivot row of a higher boundary is
    // itself a boundary, so its own column reduces to zero and is skipped.
    std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
    std::vector<char> cleared;
    for (std::size_t layer = by_dim.size() - 1; layer >= 1; --layer) {
        const auto& lower = by_dim[layer - 1];
        std::vector<linalg::SparseColumn<typename Ring::Coef>> cols(by_dim[layer].size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c < cleared.size() && cleared[c]) continue;
            const FaceMask f = by_dim[layer][c];
            auto& col = cols[c];
            int sign = 1;
            for (FaceMask rest = f; rest != 0; rest &= rest - 1) {
                const FaceMask bit = rest & (~rest + 1);
                auto it = std::lower_bound(lower.begin(), lower.end(), f & ~bit);
                if (it == lower.end() || *it != (f & ~bit)) throw PreconditionError("face set is not closed under subsets");
                col.emplace_back(static_cast<std::size_t>(it - lower.begin()), ring.from_int(sign));
                sign = -sign;
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        const auto pivots = linalg::reduce(ring, std::move(cols), cleared);
        ranks[layer] = pivots.size();
        cleared.assign(lower.size(), 0);
        for (std::size_t r : pivots) cleared[r] = 1;
    }
    std::vector<long> betti(by_dim.size(), 0);
    for (std::size_t layer = 0; layer < by_dim.size(); ++layer)
        betti[layer] = static_cast<long>(by_dim[layer].size()) - static_cast<long>(ranks[layer]) - static_cast<long>(ranks[layer + 1]);
    return betti;
}

inline std::vector<long> reduced_betti(const FieldSpec& f, const std::vector<FaceMask>& faces) {
    if (f.characteristic == 0) return reduced_betti(linalg::Integers{}, faces);
    return reduced_betti(linalg::ModP{static_cast<std::int64_t>(f.characteristic)}, faces);
}

inline bool low_homology_vanishes(const std::vector<long>& betti) {
    // betti[k+1] is dimension k; the top entry is the link's own dimension
    for (std::size_t layer = 0; layer + 1 < betti.size(); ++layer)
        if (betti[layer] != 0) return false;
    return true;
}

// Over Q the Betti numbers are bounded by those mod any prime, so a
// vanishing result mod a large prime settles it; exact integer reduction
// runs only otherwise.
inline bool low_homology_vanishes(const FieldSpec& f, const std::vector<FaceMask>& faces) {
    if (f.characteristic == 0) {
        if (low_homology_vanishes(reduced_betti(linalg::ModP{2147483647}, faces))) return true;
        return low_homology_vanishes(reduced_betti(linalg::Integers{}, faces));
    }
    return low_homology_vanishes(reduced_betti(f, faces));
}

// Facets are the faces with no one-vertex extension.
inline bool is_pure(const FaceTable& t) {
    int dim = -2;
    for (FaceMask m : t.faces()) {
        bool maximal = true;
        for (std::size_t v = 0; v < t.vertex_count() && maximal; ++v) {
            const FaceMask bit = FaceMask{1} << v;
            if (!(m & bit) && t.contains(m | bit)) maximal = false;
        }
        if (!maximal) continue;
        if (dim == -2) dim = dim_of(m);
        else if (dim != dim_of(m)) return false;
    }
    return true;
}

// Reisner: every link has vanishing reduced homology below its dimension.
// Faces are visited from the largest down so small links are tried first.
inline bool reisner_holds(const FieldSpec& f, const FaceTable& t) {
    if (!is_pure(t)) return false;
    std::vector<std::pair<int, FaceMask>> keyed;
    keyed.reserve(t.faces().size());
    for (FaceMask m : t.faces()) keyed.emplace_back(-dim_of(m), m);
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [neg_dim, sigma] : keyed) {
        FaceMask reach = 0;
        const auto lk = t.link(sigma, reach);
        if (link_is_cone(t, sigma, lk, reach)) continue;
        if (!low_homology_vanishes(f, lk)) return false;
    }
    return true;
}

}  // namespace detail

// Faces are the variable subsets that contain no generator's support.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& sq, const Limits& limits = {}) {
    if (!sq.is_squarefree()) throw PreconditionError("stanley_reisner_complex: ideal is not squarefree");
    const std::size_t nv = sq.nvars();
    if (nv > 30) throw LimitError("stanley_reisner_complex: more than 30 variables");
    // through[v]: supports of generators containing variable v
    std::vector<std::vector<FaceMask>> through(nv);
    for (const auto& g : sq.gens()) {
        const FaceMask m = detail::to_mask(g.support());
        for (std::size_t v : g.support()) through[v].push_back(m);
    }
    // m | v is a face, given that m is
    auto extends = [&](FaceMask m, std::size_t v) {
        const FaceMask with = m | (FaceMask{1} << v);
        return std::none_of(through[v].begin(), through[v].end(), [&](FaceMask g) { return (g & with) == g; });
    };
    SimplicialComplex cx;
    cx.vertex_count = nv;
    std::size_t face_count = 0;
    // Depth-first over faces, each grown by vertices above its largest one.
    std::vector<std::pair<FaceMask, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        const auto [m, from] = stack.back();
        stack.pop_back();
        if (++face_count > limits.faces)
            throw LimitError("stanley_reisner_complex: more than " + std::to_string(limits.faces) + " faces");
        bool maximal = true;
        for (std::size_t v = 0; v < nv; ++v) {
            if (m & (FaceMask{1} << v) || !extends(m, v)) continue;
            maximal = false;
            if (v >= from) stack.emplace_back(m | (FaceMask{1} << v), v + 1);
        }
        if (maximal) cx.facets.push_back(detail::from_mask(m));
    }
    std::sort(cx.facets.begin(), cx.facets.end());
    return cx;
}

// Ranks of reduced homology; index k+1 holds dimension k (k = -1..dim).
// Empty for the void complex.
inline std::vector<long> reduced_homology_ranks(const SimplicialComplex& cx, const FieldSpec& f, const Limits& limits = {}) {
    return detail::reduced_betti(f, detail::FaceTable::from_facets(cx, limits.faces).faces());
}

inline SimplicialComplex link_of(const SimplicialComplex& cx, const std::vector<std::size_t>& face, const Limits& limits = {}) {
    auto t = detail::FaceTable::from_facets(cx, limits.faces);
    const FaceMask sigma = detail::to_mask(face);
    FaceMask reach = 0;
    auto lk = t.link(sigma, reach);
    SimplicialComplex out;
    out.vertex_count = cx.vertex_count;
    for (FaceMask m : lk) {
        bool maximal = true;
        for (FaceMask rest = reach & ~m; rest != 0 && maximal; rest &= rest - 1) {
            const FaceMask bit = rest & (~rest + 1);
            if (t.contains(m | bit | sigma)) maximal = false;
        }
        if (maximal) out.facets.push_back(detail::from_mask(m));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

inline bool is_cm_reisner(const SimplicialComplex& cx, const FieldSpec& f, const Limits& limits = {}) {
    auto t = detail::FaceTable::from_facets(cx, limits.faces);
    return detail::reisner_holds(f, t);
}

struct OracleReport {
    unsigned field = 0;
    bool cm = false;
    std::size_t polarized_vars = 0;
};

// Cohen-Macaulayness of K[X]/I(G_lambda) over the given field, via
// polarization (which preserves the property) and Reisner's criterion on the
// Stanley-Reisner complex of the polarized ideal.
inline OracleReport oracle_is_cm(const WeightedGraph& g, const FieldSpec& f, const Limits& limits = {}) {
    OracleReport r;
    r.field = f.characteristic;
    const auto ideal = weighted_edge_ideal(g);
    if (ideal.is_zero()) {
        // Polynomial ring itself.
        r.cm = true;
        return r;
    }
    const auto pol = polarize(ideal);
    r.polarized_vars = pol.ideal.nvars();
    if (r.polarized_vars > limits.polarized_vars)
        throw LimitError("oracle: " + std::to_string(r.polarized_vars) + " polarized variables exceeds limit " +
                         std::to_string(limits.polarized_vars));
    const auto cx = stanley_reisner_complex(pol.ideal, limits);
    r.cm = is_cm_reisner(cx, f, limits);
    return r;
}

inline std::size_t polarized_variable_count(const WeightedGraph& g) {
    std::vector<int> m(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (const auto& e : g.edges()) {
        m[static_cast<std::size_t>(e.u)] = std::max(m[static_cast<std::size_t>(e.u)], e.weight);
        m[static_cast<std::size_t>(e.v)] = std::max(m[static_cast<std::size_t>(e.v)], e.weight);
    }
    std::size_t total = 0;
    for (int x : m) total += static_cast<std::size_t>(x);
    return total;
}

inline nlohmann::json oracle_report_to_json(const OracleReport& r) {
    return {{"field", r.field}, {"cm", r.cm}, {"polarizedVars", r.polarized_vars}};
}

}  // namespace wcm
