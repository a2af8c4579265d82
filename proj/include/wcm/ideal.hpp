#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "wcm/covers.hpp"
#include "wcm/errors.hpp"
#include "wcm/graph.hpp"

namespace wcm {

// Exponent vector over the variable list of the ideal it belongs to.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exp_(std::move(exps)) {}

    static Monomial pure_power(std::size_t nvars, std::size_t var, unsigned e) {
        Monomial m(nvars);
        m.exp_[var] = e;
        return m;
    }

    std::size_t nvars() const { return exp_.size(); }
    unsigned operator[](std::size_t i) const { return exp_[i]; }
    unsigned& operator[](std::size_t i) { return exp_[i]; }
    const std::vector<unsigned>& exponents() const { return exp_; }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exp_) d += e;
        return d;
    }
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] != 0) s.push_back(i);
        return s;
    }
    bool is_one() const { return degree() == 0; }
    bool is_pure_power() const { return support().size() == 1; }
    bool is_squarefree() const {
        return std::all_of(exp_.begin(), exp_.end(), [](unsigned e) { return e <= 1; });
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > other.exp_[i]) return false;
        return true;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        return m;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) m.exp_[i] = a.exp_[i] + b.exp_[i];
        return m;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exp_;
};

// Monomial ideal over a named variable list, stored by its minimal generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens = {})
        : vars_(std::move(vars)), gens_(std::move(gens)) {
        for (const auto& g : gens_)
            if (g.nvars() != vars_.size()) throw PreconditionError("monomial has wrong number of variables");
        normalize();
    }

    static MonomialIdeal unit(std::vector<std::string> vars) {
        const std::size_t k = vars.size();
        return MonomialIdeal(std::move(vars), {Monomial(k)});
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    std::size_t var_index(std::string_view name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw PreconditionError("unknown variable '" + std::string(name) + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }
    bool contains(const MonomialIdeal& other) const {
        return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& m) { return contains(m); });
    }

    // Irreducible ideals are generated by pure powers of distinct variables.
    bool is_irreducible() const {
        if (is_zero() || is_unit()) return false;
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_pure_power(); });
    }
    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
    }

    // Variables whose powers lie in the ideal; for an irreducible ideal this
    // generates its radical.
    std::vector<std::size_t> radical_support() const {
        std::vector<std::size_t> out;
        for (const auto& g : gens_)
            if (g.is_pure_power()) out.push_back(g.support().front());
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    void normalize() {
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        std::vector<Monomial> kept;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens_.size() && !redundant; ++j)
                if (i != j && gens_[j].divides(gens_[i])) redundant = true;
            if (!redundant) kept.push_back(gens_[i]);
        }
        gens_ = std::move(kept);
    }

    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

namespace detail {
inline void require_same_vars(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
    if (a.vars() != b.vars()) throw PreconditionError(std::string(op) + ": variable lists differ");
}
}  // namespace detail

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_vars(a, b, "ideal_sum");
    auto gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.vars(), std::move(gens));
}

inline MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_vars(a, b, "ideal_intersect");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) gens.push_back(lcm(x, y));
    return MonomialIdeal(a.vars(), std::move(gens));
}

inline bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require_same_vars(a, b, "ideal_equal");
    return a.gens() == b.gens();
}

// (a : x_var)
inline MonomialIdeal ideal_colon_variable(const MonomialIdeal& a, std::size_t var) {
    std::vector<Monomial> gens;
    for (auto m : a.gens()) {
        if (m[var] > 0) --m[var];
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(a.vars(), std::move(gens));
}

inline MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& parts, const std::vector<std::string>& vars) {
    MonomialIdeal acc = MonomialIdeal::unit(vars);
    for (const auto& p : parts) acc = ideal_intersect(acc, p);
    return acc;
}

// Irredundant decomposition into irreducible (pure-power) ideals. Splits a
// generator u*v with coprime u, v via (a, uv) = (a, u) ∩ (a, v) until every
// generator is a pure power, then drops components containing another.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a) {
    if (a.is_zero()) throw PreconditionError("irreducible_decomposition: zero ideal");
    if (a.is_unit()) return {};
    std::set<std::vector<Monomial>> leaves;
    std::vector<MonomialIdeal> work{a};
    std::set<std::vector<Monomial>> visited;
    while (!work.empty()) {
        MonomialIdeal cur = std::move(work.back());
        work.pop_back();
        if (!visited.insert(cur.gens()).second) continue;
        auto it = std::find_if(cur.gens().begin(), cur.gens().end(), [](const Monomial& m) { return !m.is_pure_power(); });
        if (it == cur.gens().end()) {
            leaves.insert(cur.gens());
            continue;
        }
        const std::size_t first = it->support().front();
        Monomial u = Monomial::pure_power(it->nvars(), first, (*it)[first]);
        Monomial v = *it;
        v[first] = 0;
        for (const auto& part : {u, v}) {
            auto gens = cur.gens();
            gens.push_back(part);
            work.emplace_back(cur.vars(), std::move(gens));
        }
    }
    std::vector<MonomialIdeal> comps;
    for (const auto& g : leaves) comps.emplace_back(a.vars(), g);
    std::vector<MonomialIdeal> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
            if (i != j && comps[i].contains(comps[j]) && !(comps[j].contains(comps[i]) && j > i)) redundant = true;
        if (!redundant) out.push_back(comps[i]);
    }
    return out;
}

// Whether the sum of the block variables is a non-zerodivisor modulo a. A
// linear form in the block lies in a monomial prime iff the prime contains
// every block variable, so the sum is a zerodivisor iff some irreducible
// component's radical contains the whole block.
inline bool sum_nzd_check(const MonomialIdeal& a, const std::vector<std::size_t>& block) {
    if (a.is_zero()) throw PreconditionError("sum_nzd_check: zero ideal");
    for (const auto& q : irreducible_decomposition(a)) {
        auto rad = q.radical_support();
        if (std::all_of(block.begin(), block.end(), [&](std::size_t v) { return std::binary_search(rad.begin(), rad.end(), v); }))
            return false;
    }
    return true;
}

// A monomial m outside a with x_i * m in a for every block variable x_i, so
// that (sum of block) * m lies in a. Exists exactly when the sum is a
// zerodivisor; computed from colon ideals, independently of the decomposition.
inline std::optional<Monomial> zerodivisor_witness(const MonomialIdeal& a, const std::vector<std::size_t>& block) {
    MonomialIdeal colon = MonomialIdeal::unit(a.vars());
    for (std::size_t v : block) colon = ideal_intersect(colon, ideal_colon_variable(a, v));
    for (const auto& m : colon.gens())
        if (!a.contains(m)) return m;
    return std::nullopt;
}

struct PolarizedIdeal {
    MonomialIdeal ideal;  // squarefree
    std::vector<std::pair<std::size_t, unsigned>> origin;  // polarized var -> (original var, copy 1..e)
};

// x_i^e becomes x_{i,1} ... x_{i,e}; each original variable gets as many
// copies as its largest exponent among the generators.
inline PolarizedIdeal polarize(const MonomialIdeal& a) {
    if (a.is_zero()) throw PreconditionError("polarize: zero ideal");
    std::vector<unsigned> maxexp(a.nvars(), 0);
    for (const auto& g : a.gens())
        for (std::size_t i = 0; i < a.nvars(); ++i) maxexp[i] = std::max(maxexp[i], g[i]);
    PolarizedIdeal p;
    std::vector<std::string> vars;
    std::vector<std::size_t> offset(a.nvars(), 0);
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        offset[i] = vars.size();
        for (unsigned k = 1; k <= maxexp[i]; ++k) {
            vars.push_back(a.vars()[i] + "_" + std::to_string(k));
            p.origin.emplace_back(i, k);
        }
    }
    std::vector<Monomial> gens;
    for (const auto& g : a.gens()) {
        Monomial m(vars.size());
        for (std::size_t i = 0; i < a.nvars(); ++i)
            for (unsigned k = 0; k < g[i]; ++k) m[offset[i] + k] = 1;
        gens.push_back(std::move(m));
    }
    p.ideal = MonomialIdeal(std::move(vars), std::move(gens));
    return p;
}

inline std::vector<std::string> graph_variables(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("X" + std::to_string(i));
    return vars;
}

// Generated by X_i^w X_j^w for every edge ij of weight w.
inline MonomialIdeal weighted_edge_ideal(const WeightedGraph& g) {
    const auto nv = static_cast<std::size_t>(g.vertex_count());
    std::vector<Monomial> gens;
    for (const auto& e : g.edges()) {
        Monomial m(nv);
        m[static_cast<std::size_t>(e.u - 1)] = static_cast<unsigned>(e.weight);
        m[static_cast<std::size_t>(e.v - 1)] = static_cast<unsigned>(e.weight);
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(graph_variables(g.vertex_count()), std::move(gens));
}

// (X_i^{delta(i)} : i in V')
inline MonomialIdeal cover_irreducible_ideal(const WeightedCover& c, const std::vector<std::string>& vars) {
    std::vector<Monomial> gens;
    for (const auto& [v, w] : c.weights()) {
        if (v < 1 || static_cast<std::size_t>(v) > vars.size()) throw PreconditionError("cover vertex out of variable range");
        gens.push_back(Monomial::pure_power(vars.size(), static_cast<std::size_t>(v - 1), static_cast<unsigned>(w)));
    }
    return MonomialIdeal(vars, std::move(gens));
}

// I(G_lambda) equals the intersection of the pure-power ideals of all minimal
// weighted vertex covers.
inline bool decomposition_identity(const WeightedGraph& g, const Limits& limits = {}) {
    const auto vars = graph_variables(g.vertex_count());
    auto covers = enumerate_minimal_covers(g, limits);
    std::vector<MonomialIdeal> parts;
    for (const auto& c : covers.covers) parts.push_back(cover_irreducible_ideal(c, vars));
    return ideal_equal(weighted_edge_ideal(g), intersect_all(parts, vars));
}

inline nlohmann::json monomial_to_json(const Monomial& m, const std::vector<std::string>& vars) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] != 0) j[vars[i]] = m[i];
    return j;
}

inline nlohmann::json ideal_to_json(const MonomialIdeal& a) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& m : a.gens()) gens.push_back(monomial_to_json(m, a.vars()));
    return {{"vars", a.vars()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) throw ParseError("ideal: expected {\"vars\":[...],\"gens\":[...]}");
    const auto& jv = j.at("vars");
    if (!jv.is_array()) throw ParseError("ideal: 'vars' must be an array");
    std::vector<std::string> vars;
    for (std::size_t k = 0; k < jv.size(); ++k) {
        if (!jv[k].is_string()) throw ParseError("ideal: vars[" + std::to_string(k) + "] is not a string");
        vars.push_back(jv[k].get<std::string>());
        if (std::count(vars.begin(), vars.end(), vars.back()) > 1) throw ParseError("ideal: duplicate variable '" + vars.back() + "'");
    }
    const auto& jg = j.at("gens");
    if (!jg.is_array()) throw ParseError("ideal: 'gens' must be an array");
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < jg.size(); ++k) {
        const std::string where = "ideal: gens[" + std::to_string(k) + "]";
        if (!jg[k].is_object()) throw ParseError(where + ": expected an object of exponents");
        Monomial m(vars.size());
        for (const auto& [name, e] : jg[k].items()) {
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw ParseError(where + ": unknown variable '" + name + "'");
            if (!e.is_number_unsigned()) throw ParseError(where + ": exponent of '" + name + "' must be a non-negative integer");
            m[static_cast<std::size_t>(it - vars.begin())] = e.get<unsigned>();
        }
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

}  // namespace wcm
