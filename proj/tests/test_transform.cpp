#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dupcode/transform.hpp"

using namespace dupcode;

namespace {

Word random_word(std::mt19937_64& rng, std::uint32_t q, std::size_t len) {
    Word w(len);
    for (auto& s : w) s = static_cast<Symbol>(rng() % q);
    return w;
}

}  // namespace

TEST_CASE("phi on the paper's example pairs") {
    const Word xt = parse_word("1012212", 3);
    CHECK(phi(ChannelParams(3, 1, Repetition::finite(2)), xt) == parse_word("1211021", 3));
    CHECK(phi(ChannelParams(3, 3, Repetition::finite(2)), xt) == parse_word("1011200", 3));
    CHECK(phi_inverse(ChannelParams(3, 1, Repetition::finite(2)), parse_word("1211021", 3)) == xt);
    CHECK(phi_inverse(ChannelParams(3, 3, Repetition::finite(2)), parse_word("1011200", 3)) == xt);
}

TEST_CASE("phi trivia") {
    const ChannelParams p(2, 1, Repetition::finite(1));
    CHECK(phi(p, {}) == Word{});
    CHECK(phi_inverse(p, {1}) == Word{1});
    const Word zeros(9, 0);
    CHECK(phi(ChannelParams(5, 2, Repetition::finite(1)), zeros) == zeros);
}

TEST_CASE("phi is a length-preserving bijection") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        for (std::uint32_t ell : {1u, 2u, 3u}) {
            const ChannelParams p(q, ell, Repetition::finite(1));
            for (int iter = 0; iter < 300; ++iter) {
                const Word xt = random_word(rng, q, rng() % 20);
                const Word x = phi(p, xt);
                CHECK(x.size() == xt.size());
                CHECK(phi_inverse(p, x) == xt);
                CHECK(phi(p, phi_inverse(p, xt)) == xt);
            }
        }
    }
}
