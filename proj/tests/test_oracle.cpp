#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dupcode/codebook.hpp"
#include "dupcode/oracle.hpp"
#include "dupcode/transform.hpp"

using namespace dupcode;

namespace {

const ChannelParams p211(2, 1, Repetition::finite(1));

std::uint32_t index_of(const ConfusabilityGraph& g, const Word& w) {
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v] == w) return v;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("graph over S_2(3)") {
    const ConfusabilityGraph g = build_graph(p211, 3, Model::zero_insertion);
    REQUIRE(g.vertices.size() == 7);
    const std::vector<Word> expected{parse_word("1", 2),   parse_word("10", 2),  parse_word("11", 2),
                                     parse_word("100", 2), parse_word("101", 2), parse_word("110", 2),
                                     parse_word("111", 2)};
    CHECK(g.vertices == expected);
    CHECK(g.has_edge(index_of(g, parse_word("10", 2)), index_of(g, parse_word("100", 2))));
    CHECK_FALSE(g.has_edge(index_of(g, parse_word("1", 2)), index_of(g, parse_word("100", 2))));
    // symmetry, no self loops
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
        for (std::uint32_t u : g.adj[v]) {
            CHECK(u != v);
            CHECK(g.has_edge(u, v));
        }
    }
}

TEST_CASE("graph vertex count for q=3") {
    const ConfusabilityGraph g = build_graph(ChannelParams(3, 1, Repetition::finite(1)), 4, Model::zero_insertion);
    CHECK(g.vertices.size() == 2 + 6 + 18 + 54);
}

TEST_CASE("edge relation is identical under both channel backends") {
    for (std::uint32_t ell : {1u, 2u}) {
        const ChannelParams p(2, ell, Repetition::finite(1));
        const ConfusabilityGraph fast = build_graph(p, 6, Model::zero_insertion);
        GraphBudget brute_budget;
        brute_budget.brute_backend = true;
        const ConfusabilityGraph brute = build_graph(p, 6, Model::zero_insertion, brute_budget);
        REQUIRE(fast.vertices == brute.vertices);
        CHECK(fast.adj == brute.adj);
        CHECK(fast.edge_count == brute.edge_count);
    }
}

TEST_CASE("MIS on S_2(3) has size 4") {
    const ConfusabilityGraph g = build_graph(p211, 3, Model::zero_insertion);
    const MisResult mis = max_independent_set(g);
    CHECK(mis.size == 4);
    REQUIRE(mis.witness.size() == 4);
    // witness is independent
    for (std::size_t a = 0; a < mis.witness.size(); ++a)
        for (std::size_t b = a + 1; b < mis.witness.size(); ++b)
            CHECK_FALSE(g.has_edge(index_of(g, mis.witness[a]), index_of(g, mis.witness[b])));
}

TEST_CASE("MIS equals the DP count (Theorem 1 optimality)") {
    for (std::uint64_t n = 1; n <= 7; ++n) {
        const ConfusabilityGraph g = build_graph(p211, n, Model::zero_insertion);
        CHECK(BigInt(max_independent_set(g).size) == count(p211, n).code_size());
    }
    const ChannelParams p221(2, 2, Repetition::finite(1));
    for (std::uint64_t n = 1; n <= 7; ++n) {
        const ConfusabilityGraph g = build_graph(p221, n, Model::zero_insertion);
        CHECK(BigInt(max_independent_set(g).size) == count(p221, n).code_size());
    }
}

TEST_CASE("n=1 graph has no edges and MIS q-1") {
    const ConfusabilityGraph g = build_graph(ChannelParams(4, 1, Repetition::finite(1)), 1, Model::zero_insertion);
    CHECK(g.edge_count == 0);
    const MisResult mis = max_independent_set(g);
    CHECK(mis.size == 3);
}

TEST_CASE("codewords form an independent set in the graph") {
    const ConfusabilityGraph g = build_graph(p211, 7, Model::zero_insertion);
    const Codebook cb(p211, 7);
    std::vector<std::uint32_t> code_vertices;
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v)
        if (is_codeword(cb, g.vertices[v])) code_vertices.push_back(v);
    CHECK(BigInt(code_vertices.size()) == count(p211, 7).code_size());
    for (std::size_t a = 0; a < code_vertices.size(); ++a)
        for (std::size_t b = a + 1; b < code_vertices.size(); ++b)
            CHECK_FALSE(g.has_edge(code_vertices[a], code_vertices[b]));
}

TEST_CASE("brute zero-error check") {
    CHECK(brute_zero_error_check(p211, enumerate_codewords(Codebook(p211, 10)), Model::zero_insertion).zero_error);

    const std::vector<Word> bad{parse_word("10", 2), parse_word("100", 2)};
    const ZeroErrorReport report = brute_zero_error_check(p211, bad, Model::zero_insertion);
    CHECK_FALSE(report.zero_error);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->first == parse_word("10", 2));
    CHECK(report.witness->second == parse_word("100", 2));

    CHECK(brute_zero_error_check(p211, {parse_word("10", 2)}, Model::zero_insertion).zero_error);
    CHECK(brute_zero_error_check(p211, {}, Model::zero_insertion).zero_error);
}

TEST_CASE("brute zero-error check under the duplication model") {
    // phi_inverse maps C to a zero-error code for the duplication channel (ell = 1)
    const ChannelParams p(3, 1, Repetition::finite(2));
    std::vector<Word> dup_code;
    for (const Word& w : enumerate_codewords(Codebook(p, 5))) dup_code.push_back(phi_inverse(p, w));
    CHECK(brute_zero_error_check(p, dup_code, Model::duplication).zero_error);

    const std::vector<Word> bad{parse_word("11", 2), parse_word("111", 2)};
    CHECK_FALSE(brute_zero_error_check(ChannelParams(2, 1, Repetition::finite(1)), bad, Model::duplication).zero_error);
}

TEST_CASE("budgets") {
    CHECK_THROWS_AS(build_graph(p211, 20, Model::zero_insertion), BudgetError);
    const ConfusabilityGraph g = build_graph(p211, 8, Model::zero_insertion);
    MisBudget tiny;
    tiny.max_vertices = 10;
    CHECK_THROWS_AS(max_independent_set(g, tiny), BudgetError);
}
