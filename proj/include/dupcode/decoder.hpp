// Closed-form zero-error decoder: shorten every zero run of the received
// word to the longest admissible block run not exceeding it.
#pragma once

#include <cstdint>

#include "dupcode/core.hpp"

namespace dupcode {

struct RunDecode {
    std::uint32_t i;    // residue class, i == u+1 (mod ell), i in 1..ell
    std::uint64_t j;    // level: largest j with L(i,j) <= u+1
    std::uint64_t run;  // shortened run length L(i,j) - 1

    friend bool operator==(const RunDecode&, const RunDecode&) = default;
};

// Exact integer arithmetic throughout; no floating-point logarithms.
RunDecode decode_run(const ChannelParams& params, std::uint64_t u);

// Total on S_q(|z|): every word decodes to a codeword; if z is an output of
// codeword x, the result is x.
Word decode(const ChannelParams& params, const Word& z);

// Remark-2 extension: keep the length-ell prefix verbatim, shorten the
// leading zero run after it and every later run.
Word decode_prime(const ChannelParams& params, const Word& z);

}  // namespace dupcode
