#include "catch_amalgamated.hpp"

#include "support/fixtures.hpp"
#include "wcm/cm_chordal.hpp"
#include "wcm/random.hpp"
#include "wcm/simplicial.hpp"

using namespace wcm;

namespace {

SimplicialComplex complex_of(std::size_t n, std::vector<std::vector<std::size_t>> facets) {
    return {n, std::move(facets)};
}

MonomialIdeal squarefree(std::size_t n, const std::vector<std::vector<std::size_t>>& supports) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("X" + std::to_string(i));
    std::vector<Monomial> gens;
    for (const auto& s : supports) {
        Monomial m(n);
        for (std::size_t v : s) m[v] = 1;
        gens.push_back(m);
    }
    return MonomialIdeal(vars, gens);
}

const std::vector<unsigned> kFields{2, 3, 0};

}  // namespace

TEST_CASE("field spec validation") {
    CHECK_NOTHROW(FieldSpec(0));
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(2147483647u));
    CHECK_THROWS_AS(FieldSpec(1), PreconditionError);
    CHECK_THROWS_AS(FieldSpec(4), PreconditionError);
}

TEST_CASE("Stanley-Reisner complex examples") {
    CHECK(stanley_reisner_complex(squarefree(2, {{0, 1}})).facets == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(stanley_reisner_complex(squarefree(3, {})).facets == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(stanley_reisner_complex(squarefree(3, {{0, 1}, {1, 2}})).facets == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    std::vector<std::string> v{"X1"};
    CHECK_THROWS_AS(stanley_reisner_complex(MonomialIdeal(v, {Monomial({2})})), PreconditionError);
}

TEST_CASE("reduced homology examples") {
    for (unsigned p : kFields) {
        FieldSpec f(p);
        CHECK(reduced_homology_ranks(complex_of(2, {{0}, {1}}), f) == std::vector<long>{0, 1});
        CHECK(reduced_homology_ranks(complex_of(3, {{0, 1}, {1, 2}, {0, 2}}), f) == std::vector<long>{0, 0, 1});
        CHECK(reduced_homology_ranks(complex_of(3, {{0, 1, 2}}), f) == std::vector<long>{0, 0, 0, 0});
        // {∅} has reduced homology in dimension -1; the void complex has none
        CHECK(reduced_homology_ranks(complex_of(0, {{}}), f) == std::vector<long>{1});
        CHECK(reduced_homology_ranks(complex_of(0, {}), f).empty());
    }
}

TEST_CASE("homology of the projective plane depends on the field") {
    // six-vertex triangulation of RP^2
    auto rp2 = complex_of(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
    CHECK(reduced_homology_ranks(rp2, FieldSpec(2)) == std::vector<long>{0, 0, 1, 1});
    CHECK(reduced_homology_ranks(rp2, FieldSpec(3)) == std::vector<long>{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(rp2, FieldSpec(0)) == std::vector<long>{0, 0, 0, 0});
    CHECK(is_cm_reisner(rp2, FieldSpec(0)));
    CHECK(is_cm_reisner(rp2, FieldSpec(3)));
    CHECK_FALSE(is_cm_reisner(rp2, FieldSpec(2)));
}

TEST_CASE("links") {
    auto cx = complex_of(4, {{0, 1, 2}, {2, 3}});
    CHECK(link_of(cx, {2}).facets == std::vector<std::vector<std::size_t>>{{0, 1}, {3}});
    CHECK(link_of(cx, {0, 1}).facets == std::vector<std::vector<std::size_t>>{{2}});
    CHECK(link_of(cx, {}).facets == cx.facets);
    CHECK(link_of(cx, {0, 3}).facets.empty());
}

TEST_CASE("Reisner criterion examples") {
    for (unsigned p : kFields) {
        FieldSpec f(p);
        CHECK(is_cm_reisner(complex_of(3, {{0, 1, 2}}), f));
        CHECK(is_cm_reisner(complex_of(2, {{0}, {1}}), f));
        CHECK_FALSE(is_cm_reisner(complex_of(3, {{0, 1}, {2}}), f));
        // a path of three edges is CM, two disjoint edges are not
        CHECK(is_cm_reisner(complex_of(4, {{0, 1}, {1, 2}, {2, 3}}), f));
        CHECK_FALSE(is_cm_reisner(complex_of(4, {{0, 1}, {2, 3}}), f));
        // a pure complex that fails at a vertex link: two triangles sharing a vertex
        CHECK_FALSE(is_cm_reisner(complex_of(5, {{0, 1, 2}, {0, 3, 4}}), f));
    }
}

TEST_CASE("face limit") {
    Limits tiny;
    tiny.faces = 7;
    CHECK_THROWS_AS(reduced_homology_ranks(complex_of(3, {{0, 1, 2}}), FieldSpec(2), tiny), LimitError);
    CHECK_NOTHROW(reduced_homology_ranks(complex_of(3, {{0, 1, 2}}), FieldSpec(2), Limits{}));
}

TEST_CASE("oracle examples") {
    for (unsigned p : kFields) {
        FieldSpec f(p);
        auto k2 = oracle_is_cm(fixture::complete(2, 2), f);
        CHECK(k2.cm);
        CHECK(k2.polarized_vars == 4);
        CHECK_FALSE(oracle_is_cm(fixture::path3(), f).cm);
        CHECK_FALSE(oracle_is_cm(fixture::mixed_example(1), f).cm);
        CHECK(oracle_is_cm(WeightedGraph(3), f).cm);
        CHECK(oracle_is_cm(fixture::whisker_triangle(1), f).cm);
        CHECK_FALSE(oracle_is_cm(fixture::whisker_triangle(2), f).cm);
        // non-chordal: C4 is not CM, C5 is
        CHECK_FALSE(oracle_is_cm(fixture::cycle(4), f).cm);
        CHECK(oracle_is_cm(fixture::cycle(5), f).cm);
    }
    Limits tight;
    tight.polarized_vars = 3;
    CHECK_THROWS_AS(oracle_is_cm(fixture::complete(2, 2), FieldSpec(2), tight), LimitError);
    CHECK(polarized_variable_count(fixture::mixed_example(3)) == 3 + 4 + 6 + 6);
}

TEST_CASE("oracle is field independent and matches the combinatorial verdict") {
    std::size_t compared = 0, cm = 0;
    for (std::uint64_t k = 0; k < 120; ++k) {
        const int n = 2 + static_cast<int>(k % 4);
        auto g = generate_random_chordal(n, 3, SplitMix64::derive_seed(41, k));
        if (polarized_variable_count(g) > 14) continue;
        INFO(serialize_graph(g));
        const bool expected = is_cohen_macaulay(g).cm;
        for (unsigned p : kFields) CHECK(oracle_is_cm(g, FieldSpec(p)).cm == expected);
        ++compared;
        cm += expected ? 1 : 0;
    }
    CHECK(compared > 80);
    CHECK(cm > 5);
}

TEST_CASE("oracle report JSON") {
    auto j = oracle_report_to_json(oracle_is_cm(fixture::complete(2, 2), FieldSpec(3)));
    CHECK(j.dump() == R"({"cm":true,"field":3,"polarizedVars":4})");
}
