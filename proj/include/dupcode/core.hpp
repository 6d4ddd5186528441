// Words over A_q, channel parameters, and the segment (run-form)
// decomposition x = sigma_1 0^{u_1} ... sigma_w 0^{u_w}.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dupcode {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

// Enumeration or search exceeded its configured budget (CLI exit code 3).
class BudgetError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a defect, not bad input (exit code 4).
class InvariantError : public std::logic_error {
    using std::logic_error::logic_error;
};

// Repetition bound r: a finite integer >= 1, or unbounded ("inf").
class Repetition {
   public:
    static Repetition finite(std::uint64_t r) {
        if (r < 1) throw std::invalid_argument("repetition bound must be >= 1");
        Repetition rep;
        rep.value_ = r;
        return rep;
    }
    static Repetition unbounded() { return Repetition{}; }

    bool is_unbounded() const noexcept { return !value_.has_value(); }
    std::uint64_t value() const {
        if (!value_) throw std::invalid_argument("repetition bound is unbounded");
        return *value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }
    static Repetition parse(const std::string& text);

    friend bool operator==(const Repetition&, const Repetition&) = default;

   private:
    Repetition() = default;
    std::optional<std::uint64_t> value_;
};

// (q, ell, r) triple governing every module. Validated on construction.
struct ChannelParams {
    std::uint32_t q;    // alphabet size, 2 <= q <= 65536
    std::uint32_t ell;  // duplication length, >= 1
    Repetition r;

    ChannelParams(std::uint32_t q_, std::uint32_t ell_, Repetition r_) : q(q_), ell(ell_), r(r_) {
        if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
        if (q > 65536) throw std::invalid_argument("alphabet size q must be <= 65536");
        if (ell < 1) throw std::invalid_argument("duplication length ell must be >= 1");
    }
};

struct Segment {
    Symbol sigma;        // nonzero symbol
    std::uint64_t zeros; // length of the zero run that follows

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Unique decomposition of a word with nonzero first symbol.
struct RunForm {
    std::vector<Segment> segments;

    std::uint64_t weight() const noexcept { return segments.size(); }
    std::uint64_t length() const noexcept {
        std::uint64_t len = 0;
        for (const auto& s : segments) len += 1 + s.zeros;
        return len;
    }

    friend bool operator==(const RunForm&, const RunForm&) = default;
};

RunForm to_run_form(const Word& w);
Word to_word(const RunForm& rf);

// S_q(n): words of length in [1, n] whose first symbol is nonzero.
struct SpaceSq {
    ChannelParams params;
    std::uint64_t n;

    SpaceSq(ChannelParams p, std::uint64_t n_) : params(p), n(n_) {
        if (n < 1) throw std::invalid_argument("space bound n must be >= 1");
    }

    bool contains(const Word& w) const noexcept {
        return !w.empty() && w.size() <= n && w.front() != 0;
    }
};

inline bool membership_Sq(const SpaceSq& space, const Word& w) noexcept { return space.contains(w); }

std::uint64_t hamming_weight(const Word& w) noexcept;

// Canonical order used everywhere: ascending length, then lexicographic.
bool canonical_less(const Word& a, const Word& b) noexcept;

void validate_word(const Word& w, std::uint32_t q);

// Text format: contiguous digit string for q <= 10, whitespace-separated
// decimal symbols for larger alphabets.
std::string format_word(const Word& w, std::uint32_t q);
Word parse_word(const std::string& text, std::uint32_t q);

}  // namespace dupcode
