// Simulation and exhaustive enumeration for the (ell,r)-duplication and
// (ell,r)-0-insertion channels. output_set / confusable are the
// confusability primitives the code construction is certified against.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dupcode/core.hpp"

namespace dupcode {

enum class Model { duplication, zero_insertion };

std::string to_string(Model model);
Model parse_model(const std::string& text);

// Per-position insertion counts c_1..c_n.
struct InsertionPattern {
    std::vector<std::uint64_t> counts;
};

struct EnumerationBudget {
    std::uint64_t max_output_length = 64;
    std::uint64_t max_set_size = 10'000'000;
};

// Deduplicated fan-out of one input word, in canonical order.
struct OutputSet {
    ChannelParams params;
    Model model;
    Word source;
    std::vector<Word> words;

    bool contains(const Word& w) const noexcept;
    std::size_t size() const noexcept { return words.size(); }
};

// Insert c_i blocks 0^ell immediately after position i, for i = 1..n.
Word apply_zero_insertion(const ChannelParams& params, const Word& x, const InsertionPattern& pattern);

// Insert c_i copies of the original substring xt_{i-ell+1}..xt_i after
// position i, for i = ell..n; counts at positions i < ell must be 0.
Word apply_duplication(const ChannelParams& params, const Word& xt, const InsertionPattern& pattern);

struct SamplingOptions {
    // Maximum per-position count when r is unbounded; required in that case.
    std::optional<std::uint64_t> cap;
    // Probabilities of c_i = 0..r; must be strictly positive. Uniform if absent.
    std::optional<std::vector<double>> pmf;
};

Word sample_output(const ChannelParams& params, const Word& x, Model model, std::uint64_t seed,
                   const SamplingOptions& options = {});

// Exact output set. Zero-insertion inputs with nonzero first symbol go
// through per-segment run interval arithmetic; everything else through the
// generic pattern DFS.
OutputSet output_set(const ChannelParams& params, const Word& x, Model model,
                     const EnumerationBudget& budget = {});

// Generic DFS over insertion patterns; the model-agnostic oracle backend.
OutputSet output_set_brute(const ChannelParams& params, const Word& x, Model model,
                           const EnumerationBudget& budget = {});

bool confusable(const ChannelParams& params, const Word& x, const Word& y, Model model,
                const EnumerationBudget& budget = {});

// Run lengths reachable from a zero run of length u across one segment:
// {u, u+ell, ..., u + (u+1) * r * ell}.
std::uint64_t max_reachable_run(const ChannelParams& params, std::uint64_t u);

// Visit every distinct zero-insertion output of a word in S_q as a run form,
// without materializing the set. Each output appears exactly once (the
// per-segment run lengths determine the insertion counts). Only the output
// length budget applies; the caller owns the visit cost.
template <typename Visit>
void for_each_output_run_form(const ChannelParams& params, const Word& x, Visit&& visit,
                              const EnumerationBudget& budget = {}) {
    if (params.r.is_unbounded())
        throw std::invalid_argument("output enumeration requires a finite repetition bound");
    const std::uint64_t r = params.r.value();
    const unsigned __int128 max_len =
        static_cast<unsigned __int128>(x.size()) * (1 + static_cast<unsigned __int128>(r) * params.ell);
    if (max_len > budget.max_output_length) throw BudgetError("output length range exceeds budget");
    const RunForm base = to_run_form(x);
    RunForm current = base;
    std::vector<std::uint64_t> extra(base.segments.size(), 0);
    while (true) {
        visit(static_cast<const RunForm&>(current));
        std::size_t k = 0;
        for (; k < extra.size(); ++k) {
            if (extra[k] < (base.segments[k].zeros + 1) * r) {
                ++extra[k];
                current.segments[k].zeros += params.ell;
                break;
            }
            extra[k] = 0;
            current.segments[k].zeros = base.segments[k].zeros;
        }
        if (k >= extra.size()) break;
    }
}

}  // namespace dupcode
