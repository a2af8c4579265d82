#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wcm::linalg {

// Sparse column: (row, coefficient) pairs sorted by row, no zero entries.
template <class Coef>
using SparseColumn = std::vector<std::pair<std::size_t, Coef>>;

// Arithmetic over GF(p), p < 2^31.
struct ModP {
    using Coef = std::int64_t;
    std::int64_t p;

    explicit ModP(std::int64_t prime) : p(prime) {}

    Coef from_int(int x) const { return ((x % p) + p) % p; }
    bool is_zero(Coef a) const { return a == 0; }
    Coef inverse(Coef a) const {
        Coef result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }
    // col <- col - (col[r] / piv[r]) * piv
    void eliminate(SparseColumn<Coef>& col, const SparseColumn<Coef>& piv) const {
        const Coef factor = col.back().second * inverse(piv.back().second) % p;
        combine(col, piv, [&](Coef a, Coef b) { return ((a - factor * b) % p + p) % p; });
    }

    template <class F>
    void combine(SparseColumn<Coef>& col, const SparseColumn<Coef>& piv, F f) const {
        auto& out = scratch;
        out.clear();
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < piv.size()) {
            if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                Coef v = f(col[i].second, 0);
                if (v != 0) out.emplace_back(col[i].first, v);
                ++i;
            } else if (i == col.size() || piv[j].first < col[i].first) {
                Coef v = f(0, piv[j].second);
                if (v != 0) out.emplace_back(piv[j].first, v);
                ++j;
            } else {
                Coef v = f(col[i].second, piv[j].second);
                if (v != 0) out.emplace_back(col[i].first, v);
                ++i;
                ++j;
            }
        }
        col.swap(out);
    }

    mutable SparseColumn<Coef> scratch;
};

// Fraction-free arithmetic over the integers; rank over Z equals rank over Q.
struct Integers {
    using Coef = boost::multiprecision::cpp_int;

    Coef from_int(int x) const { return Coef(x); }
    bool is_zero(const Coef& a) const { return a == 0; }

    // col <- piv[r] * col - col[r] * piv, then divide by the content.
    void eliminate(SparseColumn<Coef>& col, const SparseColumn<Coef>& piv) const {
        const Coef a = piv.back().second;
        const Coef b = col.back().second;
        SparseColumn<Coef> out;
        out.reserve(col.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < piv.size()) {
            Coef v;
            std::size_t row;
            if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                row = col[i].first;
                v = a * col[i].second;
                ++i;
            } else if (i == col.size() || piv[j].first < col[i].first) {
                row = piv[j].first;
                v = -b * piv[j].second;
                ++j;
            } else {
                row = col[i].first;
                v = a * col[i].second - b * piv[j].second;
                ++i;
                ++j;
            }
            if (v != 0) out.emplace_back(row, std::move(v));
        }
        Coef content = 0;
        for (const auto& [r, v] : out) content = boost::multiprecision::gcd(content, v);
        if (content > 1)
            for (auto& [r, v] : out) v /= content;
        col = std::move(out);
    }
};

// Column reduction: reduce each column until its lowest nonzero row is not
// the pivot of an earlier column. Nonzero reduced columns have distinct
// pivots and are independent. Columns flagged in `skip` are known to reduce
// to zero and are not touched. Returns the pivot rows; their count is the rank.
template <class Ring>
std::vector<std::size_t> reduce(const Ring& ring, std::vector<SparseColumn<typename Ring::Coef>> columns,
                                const std::vector<char>& skip = {}) {
    std::unordered_map<std::size_t, std::size_t> pivot_of_row;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c < skip.size() && skip[c]) continue;
        auto& col = columns[c];
        while (!col.empty()) {
            auto it = pivot_of_row.find(col.back().first);
            if (it == pivot_of_row.end()) break;
            ring.eliminate(col, columns[it->second]);
        }
        if (!col.empty()) {
            pivot_of_row.emplace(col.back().first, c);
            pivots.push_back(col.back().first);
        }
    }
    return pivots;
}

template <class Ring>
std::size_t rank(const Ring& ring, std::vector<SparseColumn<typename Ring::Coef>> columns) {
    return reduce(ring, std::move(columns)).size();
}

}  // namespace wcm::linalg
