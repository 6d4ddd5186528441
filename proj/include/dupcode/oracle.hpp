// Independent brute-force machinery: the confusability graph over S_q(n),
// exact maximum-independent-set search, and the exhaustive pairwise
// zero-error check used to certify the construction on small instances.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dupcode/channel.hpp"
#include "dupcode/core.hpp"

namespace dupcode {

struct GraphBudget {
    std::uint64_t max_vertices = 20'000;
    // Force the pattern-DFS backend for every edge test (cross-check mode).
    bool brute_backend = false;
};

struct ConfusabilityGraph {
    ChannelParams params;
    std::uint64_t n;
    Model model;
    std::vector<Word> vertices;                   // canonical order
    std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbor lists, no self-loops
    std::uint64_t edge_count = 0;

    bool has_edge(std::uint32_t a, std::uint32_t b) const noexcept;
};

ConfusabilityGraph build_graph(const ChannelParams& params, std::uint64_t n, Model model,
                               const GraphBudget& budget = {});

struct MisBudget {
    std::uint64_t max_vertices = 2'000;
};

struct MisResult {
    std::uint64_t size;
    std::vector<Word> witness;  // canonical order
};

// Exact maximum independent set: connected components, then branch and
// bound with a greedy coloring bound on each component. Deterministic.
MisResult max_independent_set(const ConfusabilityGraph& graph, const MisBudget& budget = {});

struct ZeroErrorReport {
    bool zero_error;
    std::optional<std::pair<Word, Word>> witness;  // first confusable pair found
};

// Pairwise output-set intersection over the given code.
ZeroErrorReport brute_zero_error_check(const ChannelParams& params, const std::vector<Word>& code,
                                       Model model, const EnumerationBudget& budget = {});

}  // namespace dupcode
