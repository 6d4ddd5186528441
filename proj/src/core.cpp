#include "dupcode/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dupcode {

Repetition Repetition::parse(const std::string& text) {
    if (text == "inf" || text == "INF" || text == "Inf") return unbounded();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("repetition bound must be a positive integer or 'inf': " + text);
    return finite(v);
}

RunForm to_run_form(const Word& w) {
    if (w.empty()) throw std::invalid_argument("run form requires a non-empty word");
    if (w.front() == 0) throw std::invalid_argument("run form requires a nonzero first symbol");
    RunForm rf;
    std::size_t i = 0;
    while (i < w.size()) {
        Segment seg{w[i], 0};
        ++i;
        while (i < w.size() && w[i] == 0) {
            ++seg.zeros;
            ++i;
        }
        rf.segments.push_back(seg);
    }
    return rf;
}

Word to_word(const RunForm& rf) {
    Word w;
    w.reserve(rf.length());
    for (const auto& seg : rf.segments) {
        w.push_back(seg.sigma);
        w.insert(w.end(), seg.zeros, Symbol{0});
    }
    return w;
}

std::uint64_t hamming_weight(const Word& w) noexcept {
    return static_cast<std::uint64_t>(std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

bool canonical_less(const Word& a, const Word& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void validate_word(const Word& w, std::uint32_t q) {
    for (Symbol s : w)
        if (s >= q) throw std::invalid_argument("symbol " + std::to_string(s) + " out of range for q=" + std::to_string(q));
}

std::string format_word(const Word& w, std::uint32_t q) {
    std::string out;
    if (q <= 10) {
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

Word parse_word(const std::string& text, std::uint32_t q) {
    Word w;
    if (q <= 10) {
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\r') continue;
            if (c < '0' || c > '9') throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
            w.push_back(static_cast<Symbol>(c - '0'));
        }
    } else {
        std::istringstream in(text);
        std::uint64_t v;
        while (in >> v) {
            if (v >= q) throw std::invalid_argument("symbol " + std::to_string(v) + " out of range");
            w.push_back(static_cast<Symbol>(v));
        }
        if (!in.eof()) throw std::invalid_argument("invalid word text: " + text);
    }
    validate_word(w, q);
    return w;
}

}  // namespace dupcode
