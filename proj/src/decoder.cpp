#include "dupcode/decoder.hpp"

namespace dupcode {

RunDecode decode_run(const ChannelParams& params, std::uint64_t u) {
    const std::uint64_t ell = params.ell;
    const std::uint32_t i = static_cast<std::uint32_t>(u % ell) + 1;  // i == u+1 (mod ell)
    if (params.r.is_unbounded()) return {i, 0, static_cast<std::uint64_t>(i) - 1};

    const std::uint64_t m = params.r.value() * ell + 1;
    const std::uint64_t target = u + 1;
    std::uint64_t length = i;  // L(i,0)
    std::uint64_t j = 0;
    while (true) {
        const unsigned __int128 next = static_cast<unsigned __int128>(length) * m + ell;
        if (next > target) break;
        length = static_cast<std::uint64_t>(next);
        ++j;
    }
    return {i, j, length - 1};
}

Word decode(const ChannelParams& params, const Word& z) {
    validate_word(z, params.q);
    RunForm rf = to_run_form(z);  // rejects empty or leading-zero input
    for (Segment& seg : rf.segments) seg.zeros = decode_run(params, seg.zeros).run;
    return to_word(rf);
}

Word decode_prime(const ChannelParams& params, const Word& z) {
    validate_word(z, params.q);
    const std::uint64_t ell = params.ell;
    if (z.size() < ell) throw std::invalid_argument("decode_prime requires |z| >= ell");

    Word out(z.begin(), z.begin() + ell);
    std::size_t pos = ell;
    std::uint64_t u0 = 0;
    while (pos < z.size() && z[pos] == 0) {
        ++u0;
        ++pos;
    }
    out.insert(out.end(), decode_run(params, u0).run, Symbol{0});
    if (pos < z.size()) {
        const Word tail(z.begin() + pos, z.end());
        const Word decoded_tail = decode(params, tail);
        out.insert(out.end(), decoded_tail.begin(), decoded_tail.end());
    }
    return out;
}

}  // namespace dupcode
