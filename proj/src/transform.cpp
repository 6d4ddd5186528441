#include "dupcode/transform.hpp"

namespace dupcode {

Word phi(const ChannelParams& params, const Word& xt) {
    validate_word(xt, params.q);
    const std::uint32_t q = params.q;
    const std::size_t ell = params.ell;
    Word x(xt.size());
    for (std::size_t i = 0; i < xt.size(); ++i) {
        const std::uint32_t prev = i >= ell ? xt[i - ell] : 0;
        // add q before reducing so the difference never goes negative
        x[i] = static_cast<Symbol>((xt[i] + q - prev) % q);
    }
    return x;
}

Word phi_inverse(const ChannelParams& params, const Word& x) {
    validate_word(x, params.q);
    const std::uint32_t q = params.q;
    const std::size_t ell = params.ell;
    Word xt(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::uint32_t prev = i >= ell ? xt[i - ell] : 0;
        xt[i] = static_cast<Symbol>((x[i] + prev) % q);
    }
    return xt;
}

}  // namespace dupcode
