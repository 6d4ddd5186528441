#include "dupcode/codebook.hpp"

#include <algorithm>
#include <cmath>

namespace dupcode {

namespace {

// Next length in residue class i, or 0 on overflow past n.
std::uint64_t next_length(std::uint64_t length, std::uint64_t multiplier, std::uint64_t ell, std::uint64_t n) {
    const unsigned __int128 next = static_cast<unsigned __int128>(length) * multiplier + ell;
    if (next > n) return 0;
    return static_cast<std::uint64_t>(next);
}

}  // namespace

std::vector<std::uint64_t> block_lengths_up_to(const ChannelParams& params, std::uint64_t n) {
    std::vector<std::uint64_t> lengths;
    if (params.r.is_unbounded()) {
        for (std::uint64_t L = 1; L <= params.ell && L <= n; ++L) lengths.push_back(L);
        return lengths;
    }
    const std::uint64_t m = params.r.value() * params.ell + 1;
    for (std::uint32_t i = 1; i <= params.ell; ++i) {
        for (std::uint64_t L = i; L != 0 && L <= n; L = next_length(L, m, params.ell, n)) lengths.push_back(L);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::vector<BlockId> blocks_up_to(const ChannelParams& params, std::uint64_t n) {
    struct Entry {
        std::uint32_t i;
        std::uint64_t j;
        std::uint64_t length;
    };
    std::vector<Entry> entries;
    if (params.r.is_unbounded()) {
        for (std::uint32_t i = 1; i <= params.ell && i <= n; ++i) entries.push_back({i, 0, i});
    } else {
        const std::uint64_t m = params.r.value() * params.ell + 1;
        for (std::uint32_t i = 1; i <= params.ell; ++i) {
            std::uint64_t j = 0;
            for (std::uint64_t L = i; L != 0 && L <= n; L = next_length(L, m, params.ell, n)) entries.push_back({i, j++, L});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.length < b.length; });
    std::vector<BlockId> blocks;
    blocks.reserve(entries.size() * (params.q - 1));
    for (const Entry& e : entries)
        for (std::uint32_t sigma = 1; sigma < params.q; ++sigma)
            blocks.push_back({static_cast<Symbol>(sigma), e.i, e.j, e.length});
    return blocks;
}

bool is_valid_run(const ChannelParams& params, std::uint64_t u) {
    if (params.r.is_unbounded()) return u < params.ell;
    const std::uint64_t target = u + 1;
    const std::uint64_t m = params.r.value() * params.ell + 1;
    std::uint64_t L = u % params.ell + 1;  // class representative, L(i,0) = i
    while (L < target) {
        const std::uint64_t nxt = next_length(L, m, params.ell, target);
        if (nxt == 0) return false;
        L = nxt;
    }
    return L == target;
}

std::vector<std::uint64_t> greedy_block_construction(const ChannelParams& params, std::uint64_t max_run) {
    if (params.r.is_unbounded()) throw std::invalid_argument("greedy construction requires a finite r");
    const std::uint64_t r = params.r.value();
    const std::uint64_t ell = params.ell;
    std::vector<std::uint64_t> picked;
    for (std::uint64_t i = 1; i <= ell; ++i) {
        if (i - 1 >= max_run) continue;
        // candidate runs u = i-1, i-1+ell, ... below max_run
        const std::uint64_t classes = (max_run - (i - 1) + ell - 1) / ell;
        std::vector<bool> deleted(classes, false);
        for (std::uint64_t t = 0; t < classes; ++t) {
            if (deleted[t]) continue;
            const std::uint64_t u = (i - 1) + t * ell;
            picked.push_back(u);
            // fan-out {u + s*ell : 0 <= s <= (u+1) r}
            const std::uint64_t smax = (u + 1) * r;
            for (std::uint64_t s = 0; s <= smax && t + s < classes; ++s) deleted[t + s] = true;
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

bool is_codeword(const Codebook& cb, const Word& w) {
    if (w.empty() || w.size() > cb.n || w.front() == 0) return false;
    for (Symbol s : w)
        if (s >= cb.params.q) return false;
    for (const Segment& seg : to_run_form(w).segments)
        if (!is_valid_run(cb.params, seg.zeros)) return false;
    return true;
}

CountTable count(const ChannelParams& params, std::uint64_t n) {
    const auto lengths = block_lengths_up_to(params, n);
    CountTable table{params, n, {}};
    table.total.resize(n + 1);
    table.total[0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (std::uint64_t L : lengths) {
            if (L > m) break;
            acc += table.total[m - L];
        }
        table.total[m] = 1 + (params.q - 1) * acc;
    }
    return table;
}

WeightCountTable count_by_weight(const ChannelParams& params, std::uint64_t n, std::uint64_t wmax) {
    const auto lengths = block_lengths_up_to(params, n);
    WeightCountTable table{params, n, wmax, {}};
    table.counts.assign(wmax + 1, std::vector<BigInt>(n + 1));
    for (std::uint64_t m = 0; m <= n; ++m) table.counts[0][m] = 1;
    for (std::uint64_t w = 1; w <= wmax; ++w) {
        for (std::uint64_t m = 1; m <= n; ++m) {
            BigInt acc = 0;
            for (std::uint64_t L : lengths) {
                if (L > m) break;
                acc += table.counts[w - 1][m - L];
            }
            table.counts[w][m] = (params.q - 1) * acc;
        }
    }
    return table;
}

BigInt count_weight(const ChannelParams& params, std::uint64_t n, std::uint64_t w) {
    return count_by_weight(params, n, w).at(n, w);
}

std::vector<Word> enumerate_codewords(const Codebook& cb, std::optional<std::uint64_t> weight,
                                      const EnumerateBudget& budget) {
    const BigInt expected = weight ? count_weight(cb.params, cb.n, *weight) : count(cb.params, cb.n).code_size();
    if (expected > budget.max_words)
        throw BudgetError("codebook enumeration of " + expected.str() + " words exceeds budget " +
                          std::to_string(budget.max_words));

    const auto lengths = block_lengths_up_to(cb.params, cb.n);
    std::vector<Word> words;
    Word current;
    auto rec = [&](auto&& self, std::uint64_t used, std::uint64_t nblocks) -> void {
        if (!current.empty() && (!weight || nblocks == *weight)) words.push_back(current);
        if (weight && nblocks >= *weight) return;
        for (std::uint64_t L : lengths) {
            if (used + L > cb.n) break;
            for (std::uint32_t sigma = 1; sigma < cb.params.q; ++sigma) {
                current.push_back(static_cast<Symbol>(sigma));
                current.insert(current.end(), L - 1, Symbol{0});
                self(self, used + L, nblocks + 1);
                current.resize(current.size() - L);
            }
        }
    };
    rec(rec, 0, 0);
    std::sort(words.begin(), words.end(), canonical_less);
    return words;
}

namespace {

// Completions of exact remaining length s whose first block has one fixed
// sigma: D(s) = sum over block lengths L <= s of E(s - L).
BigInt completions_per_sigma(const CountTable& table, const std::vector<std::uint64_t>& lengths, std::uint64_t s) {
    BigInt acc = 0;
    for (std::uint64_t L : lengths) {
        if (L > s) break;
        acc += table.exact(s - L);
    }
    return acc;
}

}  // namespace

BigInt rank(const Codebook& cb, const Word& w) {
    if (!is_codeword(cb, w)) throw std::invalid_argument("rank requires a codeword");
    const CountTable table = count(cb.params, cb.n);
    const auto lengths = block_lengths_up_to(cb.params, cb.n);
    const std::uint64_t total_length = w.size();

    BigInt result = table.at(total_length - 1) - 1;  // all strictly shorter codewords
    // Within one total length the canonical (lex) order is: first-block sigma
    // ascending, then first-block length descending, then the tail recursively.
    std::uint64_t remaining = total_length;
    for (const Segment& seg : to_run_form(w).segments) {
        const std::uint64_t L = seg.zeros + 1;
        result += (seg.sigma - 1) * completions_per_sigma(table, lengths, remaining);
        for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
            if (*it > remaining) continue;
            if (*it <= L) break;
            result += table.exact(remaining - *it);
        }
        remaining -= L;
    }
    return result;
}

Word unrank(const Codebook& cb, const BigInt& k) {
    if (k < 0) throw std::invalid_argument("unrank index must be nonnegative");
    const CountTable table = count(cb.params, cb.n);
    if (k >= table.code_size()) throw std::invalid_argument("unrank index " + k.str() + " out of range");
    const auto lengths = block_lengths_up_to(cb.params, cb.n);

    std::uint64_t total_length = 1;
    while (table.at(total_length) - 1 <= k) ++total_length;
    BigInt rest = k - (table.at(total_length - 1) - 1);

    Word w;
    std::uint64_t remaining = total_length;
    while (remaining > 0) {
        const BigInt per_sigma = completions_per_sigma(table, lengths, remaining);
        if (per_sigma == 0) throw InvariantError("unrank: no completion for remaining length");
        const BigInt sigma_index = rest / per_sigma;
        const std::uint32_t sigma = 1 + sigma_index.convert_to<std::uint32_t>();
        rest -= sigma_index * per_sigma;
        bool placed = false;
        for (auto it = lengths.rbegin(); it != lengths.rend(); ++it) {
            if (*it > remaining) continue;
            const BigInt c = table.exact(remaining - *it);
            if (rest < c) {
                w.push_back(static_cast<Symbol>(sigma));
                w.insert(w.end(), *it - 1, Symbol{0});
                remaining -= *it;
                placed = true;
                break;
            }
            rest -= c;
        }
        if (!placed) throw InvariantError("unrank: failed to place a block");
    }
    if (rest != 0) throw InvariantError("unrank: residual index");
    return w;
}

bool is_codeword_prime(const CodebookPrime& cb, const Word& w) {
    const std::uint64_t ell = cb.params.ell;
    if (w.size() < ell || w.size() > cb.n) return false;
    for (Symbol s : w)
        if (s >= cb.params.q) return false;
    // leading zero run of the part after the arbitrary prefix is the Bbar factor
    std::size_t pos = ell;
    std::uint64_t u0 = 0;
    while (pos < w.size() && w[pos] == 0) {
        ++u0;
        ++pos;
    }
    if (!is_valid_run(cb.params, u0)) return false;
    if (pos == w.size()) return true;
    const Word tail(w.begin() + pos, w.end());
    for (const Segment& seg : to_run_form(tail).segments)
        if (!is_valid_run(cb.params, seg.zeros)) return false;
    return true;
}

BigInt count_prime(const CodebookPrime& cb) {
    const CountTable table = count(cb.params, cb.n);
    const std::uint64_t ell = cb.params.ell;
    BigInt prefixes = boost::multiprecision::pow(BigInt(cb.params.q), static_cast<unsigned>(ell));
    BigInt acc = 0;
    for (std::uint64_t L : block_lengths_up_to(cb.params, cb.n)) {
        const std::uint64_t u0 = L - 1;
        if (ell + u0 > cb.n) break;
        acc += table.at(cb.n - ell - u0);
    }
    return prefixes * acc;
}

std::vector<Word> enumerate_prime(const CodebookPrime& cb, const EnumerateBudget& budget) {
    const BigInt expected = count_prime(cb);
    if (expected > budget.max_words)
        throw BudgetError("C' enumeration of " + expected.str() + " words exceeds budget");

    const std::uint64_t ell = cb.params.ell;
    std::vector<Word> words;
    // tails: all B* concatenations of length <= n - ell, canonical recursion
    std::vector<Word> tails{Word{}};
    {
        const auto lengths = block_lengths_up_to(cb.params, cb.n);
        Word current;
        auto rec = [&](auto&& self, std::uint64_t used) -> void {
            if (!current.empty()) tails.push_back(current);
            for (std::uint64_t L : lengths) {
                if (used + L > cb.n - ell) break;
                for (std::uint32_t sigma = 1; sigma < cb.params.q; ++sigma) {
                    current.push_back(static_cast<Symbol>(sigma));
                    current.insert(current.end(), L - 1, Symbol{0});
                    self(self, used + L);
                    current.resize(current.size() - L);
                }
            }
        };
        if (cb.n >= ell) rec(rec, 0);
    }

    Word prefix(ell, 0);
    auto next_prefix = [&]() -> bool {
        for (std::size_t i = ell; i-- > 0;) {
            if (prefix[i] + 1u < cb.params.q) {
                ++prefix[i];
                return true;
            }
            prefix[i] = 0;
        }
        return false;
    };
    const auto runs = block_lengths_up_to(cb.params, cb.n);
    do {
        for (std::uint64_t L : runs) {
            const std::uint64_t u0 = L - 1;
            if (ell + u0 > cb.n) break;
            for (const Word& tail : tails) {
                if (ell + u0 + tail.size() > cb.n) continue;
                Word w = prefix;
                w.insert(w.end(), u0, Symbol{0});
                w.insert(w.end(), tail.begin(), tail.end());
                words.push_back(std::move(w));
            }
        }
    } while (next_prefix());
    std::sort(words.begin(), words.end(), canonical_less);
    return words;
}

long double log2_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2 of a nonpositive value");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 62) return std::log2(static_cast<long double>(v.convert_to<std::uint64_t>()));
    const BigInt shifted = v >> (bits - 62);
    return std::log2(static_cast<long double>(shifted.convert_to<std::uint64_t>())) +
           static_cast<long double>(bits - 62);
}

}  // namespace dupcode
