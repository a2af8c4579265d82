#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wcm/graph.hpp"

namespace wcm {

// SplitMix64. Output depends only on the seed, on every platform, which is
// what reproducible trial streams need (std distributions are
// implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform in [lo, hi].
    int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    bool coin() { return (next() >> 63) != 0; }

    // Independent stream for item `index` of a run seeded with `seed`.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 base(seed);
        const std::uint64_t a = base.next();
        SplitMix64 mixer(a ^ (index * 0xd1b54a32d192ed03ULL));
        return SplitMix64(mixer.next());
    }

    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return stream(seed, index).next(); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

// Random weighted chordal graph. Vertices are placed one at a time in a
// random order; each new vertex is joined to a clique of already placed
// vertices (so it is simplicial when eliminated, and the result is chordal).
// Weights are uniform in [1, max_weight].
inline WeightedGraph generate_random_chordal(int n, int max_weight, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("generate_random_chordal: n must be >= 0");
    if (max_weight < 1) throw PreconditionError("generate_random_chordal: max weight must be >= 1");
    SplitMix64 rng(seed);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    rng.shuffle(label);

    WeightedGraph g(n);
    std::vector<int> placed;
    for (int v : label) {
        std::vector<int> clique;
        // Occasionally start a new component.
        if (!placed.empty() && rng.below(8) != 0) {
            const int anchor = placed[rng.below(placed.size())];
            clique.push_back(anchor);
            std::vector<int> around;
            for (int u : g.neighbors(anchor))
                if (std::find(placed.begin(), placed.end(), u) != placed.end()) around.push_back(u);
            rng.shuffle(around);
            for (int u : around) {
                if (!rng.coin()) continue;
                if (std::all_of(clique.begin(), clique.end(), [&](int c) { return g.adjacent(c, u); })) clique.push_back(u);
            }
        }
        std::sort(clique.begin(), clique.end());
        for (int u : clique) g.add_edge(u, v, rng.uniform(1, max_weight));
        placed.push_back(v);
    }
    return g;
}

// Weighted Erdos-Renyi graph with edge probability 1/2; not necessarily chordal.
inline WeightedGraph generate_random_graph(int n, int max_weight, std::uint64_t seed) {
    SplitMix64 rng(seed);
    WeightedGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.coin()) g.add_edge(i, j, rng.uniform(1, max_weight));
    return g;
}

}  // namespace wcm
