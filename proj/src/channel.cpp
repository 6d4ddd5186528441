#include "dupcode/channel.hpp"

#include <algorithm>
#include <random>

namespace dupcode {

std::string to_string(Model model) {
    return model == Model::duplication ? "duplication" : "zero-insertion";
}

Model parse_model(const std::string& text) {
    if (text == "duplication" || text == "dup") return Model::duplication;
    if (text == "zero-insertion" || text == "0ins" || text == "zero_insertion") return Model::zero_insertion;
    throw std::invalid_argument("unknown channel model: " + text);
}

bool OutputSet::contains(const Word& w) const noexcept {
    return std::binary_search(words.begin(), words.end(), w, canonical_less);
}

namespace {

void check_pattern_bounds(const ChannelParams& params, const Word& x, const InsertionPattern& pattern) {
    if (pattern.counts.size() != x.size())
        throw std::invalid_argument("insertion pattern length must equal word length");
    if (!params.r.is_unbounded()) {
        for (std::uint64_t c : pattern.counts)
            if (c > params.r.value()) throw std::invalid_argument("insertion count exceeds repetition bound r");
    }
}

}  // namespace

Word apply_zero_insertion(const ChannelParams& params, const Word& x, const InsertionPattern& pattern) {
    validate_word(x, params.q);
    check_pattern_bounds(params, x, pattern);
    Word out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.insert(out.end(), pattern.counts[i] * params.ell, Symbol{0});
    }
    return out;
}

Word apply_duplication(const ChannelParams& params, const Word& xt, const InsertionPattern& pattern) {
    validate_word(xt, params.q);
    check_pattern_bounds(params, xt, pattern);
    const std::size_t ell = params.ell;
    for (std::size_t i = 0; i + 1 < ell && i < pattern.counts.size(); ++i)
        if (pattern.counts[i] != 0)
            throw std::invalid_argument("duplication cannot insert before position ell");
    Word out;
    out.reserve(xt.size());
    for (std::size_t i = 0; i < xt.size(); ++i) {
        out.push_back(xt[i]);
        if (i + 1 >= ell) {
            for (std::uint64_t c = 0; c < pattern.counts[i]; ++c)
                out.insert(out.end(), xt.begin() + (i + 1 - ell), xt.begin() + (i + 1));
        }
    }
    return out;
}

namespace {

// Deterministic bounded draw; distribution details never affect output sets.
std::uint64_t draw_count(std::mt19937_64& rng, std::uint64_t bound,
                         const std::optional<std::vector<double>>& pmf) {
    if (!pmf) return rng() % (bound + 1);
    long double u = static_cast<long double>(rng() >> 11) * 0x1p-53L;
    long double acc = 0;
    for (std::size_t k = 0; k < pmf->size(); ++k) {
        acc += static_cast<long double>((*pmf)[k]);
        if (u < acc) return k;
    }
    return pmf->size() - 1;
}

}  // namespace

Word sample_output(const ChannelParams& params, const Word& x, Model model, std::uint64_t seed,
                   const SamplingOptions& options) {
    std::uint64_t bound;
    if (params.r.is_unbounded()) {
        if (!options.cap)
            throw std::invalid_argument("sampling with unbounded r requires an explicit cap");
        bound = *options.cap;
    } else {
        bound = params.r.value();
    }
    if (options.pmf) {
        if (options.pmf->size() != bound + 1)
            throw std::invalid_argument("pmf must have r+1 entries");
        for (double p : *options.pmf)
            if (!(p > 0)) throw std::invalid_argument("pmf entries must be strictly positive");
    }

    std::mt19937_64 rng(seed);
    InsertionPattern pattern;
    pattern.counts.resize(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (model == Model::duplication && i + 1 < params.ell) continue;
        pattern.counts[i] = draw_count(rng, bound, options.pmf);
    }
    return model == Model::duplication ? apply_duplication(params, x, pattern)
                                       : apply_zero_insertion(params, x, pattern);
}

namespace {

void check_enumeration_budget(const ChannelParams& params, const Word& x, const EnumerationBudget& budget) {
    if (params.r.is_unbounded())
        throw std::invalid_argument("output-set enumeration requires a finite repetition bound");
    const std::uint64_t r = params.r.value();
    // max output length |x| (1 + r*ell); guard the multiply
    const std::uint64_t n = x.size();
    if (n > 0 && r * params.ell > (budget.max_output_length - 0) / n)
        throw BudgetError("output length range exceeds budget (" + std::to_string(budget.max_output_length) + ")");
    if (n * (1 + r * params.ell) > budget.max_output_length)
        throw BudgetError("output length range exceeds budget (" + std::to_string(budget.max_output_length) + ")");
}

std::uint64_t predicted_zero_insertion_size(const ChannelParams& params, const Word& x,
                                            const EnumerationBudget& budget) {
    // Exact for words in S_q: product over segments of (u+1) r + 1 reachable runs.
    const std::uint64_t r = params.r.value();
    std::uint64_t prod = 1;
    for (const Segment& seg : to_run_form(x).segments) {
        const std::uint64_t choices = (seg.zeros + 1) * r + 1;
        if (prod > budget.max_set_size / choices + 1) return budget.max_set_size + 1;
        prod *= choices;
        if (prod > budget.max_set_size) return budget.max_set_size + 1;
    }
    return prod;
}

void sorted_dedupe(std::vector<Word>& words) {
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

OutputSet output_set_brute(const ChannelParams& params, const Word& x, Model model,
                           const EnumerationBudget& budget) {
    check_enumeration_budget(params, x, budget);
    const std::uint64_t r = params.r.value();

    // (r+1)^k patterns over the insertable positions
    std::uint64_t positions = x.size();
    if (model == Model::duplication) positions = x.size() >= params.ell ? x.size() - params.ell + 1 : 0;
    long double patterns = 1.0L;
    for (std::uint64_t i = 0; i < positions; ++i) patterns *= static_cast<long double>(r + 1);
    if (patterns > static_cast<long double>(budget.max_set_size))
        throw BudgetError("pattern enumeration exceeds set-size budget");

    OutputSet result{params, model, x, {}};
    InsertionPattern pattern;
    pattern.counts.assign(x.size(), 0);
    while (true) {
        result.words.push_back(model == Model::duplication ? apply_duplication(params, x, pattern)
                                                           : apply_zero_insertion(params, x, pattern));
        // odometer increment over the insertable positions
        std::size_t i = model == Model::duplication ? params.ell - 1 : 0;
        for (; i < pattern.counts.size(); ++i) {
            if (pattern.counts[i] < r) {
                ++pattern.counts[i];
                break;
            }
            pattern.counts[i] = 0;
        }
        if (i >= pattern.counts.size()) break;
        if (x.empty()) break;
    }
    sorted_dedupe(result.words);
    if (result.words.size() > budget.max_set_size) throw BudgetError("output set exceeds budget");
    return result;
}

std::uint64_t max_reachable_run(const ChannelParams& params, std::uint64_t u) {
    return u + (u + 1) * params.r.value() * params.ell;
}

namespace {

// Cartesian product of per-segment run progressions {u, u+ell, ..., u+(u+1)r*ell}.
OutputSet output_set_run_form(const ChannelParams& params, const Word& x, const EnumerationBudget& budget) {
    check_enumeration_budget(params, x, budget);
    if (predicted_zero_insertion_size(params, x, budget) > budget.max_set_size)
        throw BudgetError("output set exceeds set-size budget");

    const RunForm rf = to_run_form(x);
    const std::uint64_t r = params.r.value();
    OutputSet result{params, Model::zero_insertion, x, {}};
    std::vector<std::uint64_t> extra(rf.segments.size(), 0);  // inserted blocks per segment
    while (true) {
        RunForm out = rf;
        for (std::size_t k = 0; k < out.segments.size(); ++k)
            out.segments[k].zeros += extra[k] * params.ell;
        result.words.push_back(to_word(out));
        std::size_t k = 0;
        for (; k < extra.size(); ++k) {
            if (extra[k] < (rf.segments[k].zeros + 1) * r) {
                ++extra[k];
                break;
            }
            extra[k] = 0;
        }
        if (k >= extra.size()) break;
    }
    sorted_dedupe(result.words);
    return result;
}

}  // namespace

OutputSet output_set(const ChannelParams& params, const Word& x, Model model, const EnumerationBudget& budget) {
    if (model == Model::zero_insertion && !x.empty() && x.front() != 0)
        return output_set_run_form(params, x, budget);
    return output_set_brute(params, x, model, budget);
}

namespace {

bool runs_overlap(const ChannelParams& params, std::uint64_t u, std::uint64_t v) {
    if (u % params.ell != v % params.ell) return false;
    const auto [lo, hi] = std::minmax(u, v);
    return hi <= max_reachable_run(params, lo);
}

}  // namespace

bool confusable(const ChannelParams& params, const Word& x, const Word& y, Model model,
                const EnumerationBudget& budget) {
    if (model == Model::zero_insertion && !x.empty() && !y.empty() && x.front() != 0 && y.front() != 0) {
        if (params.r.is_unbounded())
            throw std::invalid_argument("confusability requires a finite repetition bound");
        const RunForm a = to_run_form(x);
        const RunForm b = to_run_form(y);
        if (a.segments.size() != b.segments.size()) return false;
        for (std::size_t k = 0; k < a.segments.size(); ++k) {
            if (a.segments[k].sigma != b.segments[k].sigma) return false;
            if (!runs_overlap(params, a.segments[k].zeros, b.segments[k].zeros)) return false;
        }
        return true;
    }
    const OutputSet ox = output_set(params, x, model, budget);
    const OutputSet oy = output_set(params, y, model, budget);
    // both sorted in canonical order; walk for a common element
    std::size_t i = 0, j = 0;
    while (i < ox.words.size() && j < oy.words.size()) {
        if (ox.words[i] == oy.words[j]) return true;
        if (canonical_less(ox.words[i], oy.words[j]))
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace dupcode
