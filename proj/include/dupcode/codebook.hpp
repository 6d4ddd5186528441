// The block alphabet B_{q,ell,r}, the codes C_{q,ell,r}(n) built from it,
// exact big-integer counting, and rank/unrank enumerative coding.
//
// Block lengths follow L(i,0) = i, L(i,j+1) = L(i,j) (r*ell + 1) + ell for
// residue classes i = 1..ell; a block is a nonzero symbol followed by
// L(i,j) - 1 zeros. For unbounded r the alphabet collapses to lengths 1..ell.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dupcode/core.hpp"

namespace dupcode {

using BigInt = boost::multiprecision::cpp_int;

struct BlockId {
    Symbol sigma;          // nonzero symbol
    std::uint32_t i;       // residue class, 1..ell
    std::uint64_t j;       // level within the class
    std::uint64_t length;  // L(i,j); the block word is sigma 0^{length-1}

    friend bool operator==(const BlockId&, const BlockId&) = default;
};

// Distinct block lengths L <= n, ascending.
std::vector<std::uint64_t> block_lengths_up_to(const ChannelParams& params, std::uint64_t n);

// All blocks with L(i,j) <= n, sorted by (length, sigma).
std::vector<BlockId> blocks_up_to(const ChannelParams& params, std::uint64_t n);

// Whether a zero run of length u is admissible, i.e. u = L(i,j) - 1.
bool is_valid_run(const ChannelParams& params, std::uint64_t u);

// Fig. 1 greedy sweep over candidate runs u in [0, max_run), per residue
// class: pick the shortest unexplained run, delete its channel fan-out,
// repeat. Exists to test the closed form against the generative procedure.
// Returns the selected run lengths, ascending. Finite r only.
std::vector<std::uint64_t> greedy_block_construction(const ChannelParams& params, std::uint64_t max_run);

struct Codebook {
    ChannelParams params;
    std::uint64_t n;

    Codebook(ChannelParams p, std::uint64_t n_) : params(p), n(n_) {
        if (n < 1) throw std::invalid_argument("codebook length bound n must be >= 1");
    }
};

bool is_codeword(const Codebook& cb, const Word& w);

// N(m) = #(B* concatenations of total length <= m), empty word included.
struct CountTable {
    ChannelParams params;
    std::uint64_t n;
    std::vector<BigInt> total;  // N(0..n)

    const BigInt& at(std::uint64_t m) const { return total.at(m); }
    BigInt exact(std::uint64_t m) const {  // E(m): exact total length m
        return m == 0 ? BigInt(1) : total.at(m) - total.at(m - 1);
    }
    BigInt code_size() const { return total.at(n) - 1; }  // |C(n)|
};

CountTable count(const ChannelParams& params, std::uint64_t n);

// N(m, w): concatenations of exactly w blocks with total length <= m.
struct WeightCountTable {
    ChannelParams params;
    std::uint64_t n;
    std::uint64_t wmax;
    std::vector<std::vector<BigInt>> counts;  // [w][m]

    const BigInt& at(std::uint64_t m, std::uint64_t w) const { return counts.at(w).at(m); }
};

WeightCountTable count_by_weight(const ChannelParams& params, std::uint64_t n, std::uint64_t wmax);

// |C(n; w)| = N(n, w).
BigInt count_weight(const ChannelParams& params, std::uint64_t n, std::uint64_t w);

struct EnumerateBudget {
    std::uint64_t max_words = 1'000'000;
};

// All codewords (optionally of one weight) in canonical order.
std::vector<Word> enumerate_codewords(const Codebook& cb, std::optional<std::uint64_t> weight = {},
                                      const EnumerateBudget& budget = {});

// Enumerative coding under the canonical order; no materialized list.
BigInt rank(const Codebook& cb, const Word& w);
Word unrank(const Codebook& cb, const BigInt& k);

// Remark-2 variant C'(n) = (A_q^ell x Bbar x B*) truncated to length <= n:
// arbitrary length-ell prefix, then a zero run of length L(i,j) - 1, then
// B-blocks. Defined for n >= ell only.
struct CodebookPrime {
    ChannelParams params;
    std::uint64_t n;

    CodebookPrime(ChannelParams p, std::uint64_t n_) : params(p), n(n_) {
        if (n < p.ell) throw std::invalid_argument("C'(n) requires n >= ell");
    }
};

inline CodebookPrime code_prime(const ChannelParams& params, std::uint64_t n) { return {params, n}; }

bool is_codeword_prime(const CodebookPrime& cb, const Word& w);
BigInt count_prime(const CodebookPrime& cb);
std::vector<Word> enumerate_prime(const CodebookPrime& cb, const EnumerateBudget& budget = {});

// log2 of a positive big integer, to long double precision.
long double log2_big(const BigInt& v);

}  // namespace dupcode
