// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Run a single criterion with --criterion N.
#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dupcode/capacity.hpp"
#include "dupcode/channel.hpp"
#include "dupcode/codebook.hpp"
#include "dupcode/decoder.hpp"
#include "dupcode/oracle.hpp"
#include "dupcode/transform.hpp"

using namespace dupcode;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string real_str(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9Lg", v);
    return buf;
}

// 1. rho(2,1,1) = 0.659 +- 0.001, C0 = 0.602 +- 0.001 bits/symbol
Outcome criterion1() {
    const CapacityResult res = solve_rho(ChannelParams(2, 1, Repetition::finite(1)), 1e-12L);
    const bool rho_ok = std::fabs(static_cast<double>(res.rho) - 0.659) <= 0.001;
    const bool c0_ok = std::fabs(static_cast<double>(res.c0) - 0.602) <= 0.001;
    return {rho_ok && c0_ok, "rho=" + real_str(res.rho) + " c0=" + real_str(res.c0)};
}

// 2. omega_star(2,1,1) = 0.519 +- 0.001 and |cw(omega*) - C0| < 1e-9
Outcome criterion2() {
    const ChannelParams p(2, 1, Repetition::finite(1));
    const OmegaStarResult star = omega_star(p, 1e-12L);
    const CapacityResult cap = solve_rho(p, 1e-12L);
    const CWCapacityResult at_star = cw_capacity(p, star.omega, 1e-12L);
    const Real equality_gap = std::fabs(at_star.c0_omega - cap.c0);
    const bool omega_ok = std::fabs(static_cast<double>(star.omega) - 0.519) <= 0.001;
    const bool equality_ok = equality_gap < 1e-9L;
    std::string detail = "omega_star=" + real_str(star.omega) + " |cw(omega*)-C0|=" + real_str(equality_gap);
    if (!omega_ok)
        detail += " ; omega_star is outside 0.519+-0.001: the Theorem 3 formula yields 0.520642 (the paper's"
                  " 0.519 comes from plugging the rounded rho~0.659 into it); cw equals C0 only at the formula value";
    return {omega_ok && equality_ok, detail};
}

// 3. |C_{2,1,1}(19; 2)| = 13 and the r = inf variant has 1 codeword
Outcome criterion3() {
    const BigInt finite = count_weight(ChannelParams(2, 1, Repetition::finite(1)), 19, 2);
    const BigInt unbounded = count_weight(ChannelParams(2, 1, Repetition::unbounded()), 19, 2);
    return {finite == 13 && unbounded == 1,
            "|C(19;2)|=" + finite.str() + " |C_inf(19;2)|=" + unbounded.str()};
}

// 4. C0(q,1,inf) = log2(q-1) within 1e-9 for q = 2..8; rho(2,2,inf) = (sqrt(5)-1)/2
Outcome criterion4() {
    for (std::uint32_t q = 2; q <= 8; ++q) {
        const CapacityResult res = solve_rho(ChannelParams(q, 1, Repetition::unbounded()), 1e-12L);
        const Real expected = std::log2(static_cast<Real>(q - 1));
        if (std::fabs(res.c0 - expected) >= 1e-9L)
            return {false, "C0(" + std::to_string(q) + ",1,inf) off: " + real_str(res.c0)};
    }
    const CapacityResult golden = solve_rho(ChannelParams(2, 2, Repetition::unbounded()), 1e-12L);
    const Real phi_root = (std::sqrt(5.0L) - 1) / 2;
    if (std::fabs(golden.rho - phi_root) >= 1e-9L)
        return {false, "rho(2,2,inf)=" + real_str(golden.rho) + " != " + real_str(phi_root)};
    return {true, "log2(q-1) matched for q=2..8; rho(2,2,inf)=" + real_str(golden.rho)};
}

const std::vector<ChannelParams> kSmallGrid = [] {
    std::vector<ChannelParams> grid;
    for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t ell : {1u, 2u})
            for (std::uint64_t r : {1u, 2u}) grid.emplace_back(q, ell, Repetition::finite(r));
    return grid;
}();

// 5. brute zero-error check of C(n), n <= 10, q in {2,3}, ell in {1,2}, r in {1,2}
Outcome criterion5() {
    std::uint64_t total = 0;
    for (const ChannelParams& p : kSmallGrid) {
        // C(m) is nested in C(10) for m <= 10, so n = 10 covers all n <= 10
        const auto code = enumerate_codewords(Codebook(p, 10));
        total += code.size();
        const ZeroErrorReport report = brute_zero_error_check(p, code, Model::zero_insertion);
        if (!report.zero_error)
            return {false, "confusable pair in C(10) at q=" + std::to_string(p.q) + " ell=" + std::to_string(p.ell) +
                               " r=" + p.r.to_string() + ": " + format_word(report.witness->first, p.q) + " / " +
                               format_word(report.witness->second, p.q)};
    }
    return {true, std::to_string(total) + " codewords pairwise non-confusable across 8 parameter sets"};
}

// 6. exact MIS equals the DP count for (2,1,1) and (2,2,1), n <= 8
Outcome criterion6() {
    std::string detail;
    for (std::uint32_t ell : {1u, 2u}) {
        const ChannelParams p(2, ell, Repetition::finite(1));
        for (std::uint64_t n = 1; n <= 8; ++n) {
            const ConfusabilityGraph g = build_graph(p, n, Model::zero_insertion);
            const MisResult mis = max_independent_set(g);
            const BigInt dp = count(p, n).code_size();
            if (BigInt(mis.size) != dp)
                return {false, "MIS=" + std::to_string(mis.size) + " but |C(" + std::to_string(n) + ")|=" + dp.str() +
                                   " at ell=" + std::to_string(ell)};
            if (n == 8) detail += "ell=" + std::to_string(ell) + ": MIS(8)=" + std::to_string(mis.size) + " ";
        }
    }
    return {true, detail + "- optimal at every n <= 8"};
}

// 7. decode(z) = x for every codeword x of C(10) and every z in output_set(x).
// Outputs are streamed as run forms ((3,2,2) alone fans out to 4.5e8 words);
// every output goes through the per-run decoding step, and every 256th one is
// additionally materialized and pushed through the full word-level decode.
Outcome criterion7() {
    std::uint64_t outputs = 0;
    std::uint64_t full_decodes = 0;
    for (const ChannelParams& p : kSmallGrid) {
        for (const Word& x : enumerate_codewords(Codebook(p, 10))) {
            const RunForm expected = to_run_form(x);
            bool ok = true;
            Word bad;
            for_each_output_run_form(
                p, x,
                [&](const RunForm& z) {
                    if (!ok) return;
                    for (std::size_t k = 0; k < z.segments.size(); ++k) {
                        if (decode_run(p, z.segments[k].zeros).run != expected.segments[k].zeros) {
                            ok = false;
                            bad = to_word(z);
                            return;
                        }
                    }
                    if (outputs % 256 == 0) {
                        ++full_decodes;
                        if (decode(p, to_word(z)) != x) {
                            ok = false;
                            bad = to_word(z);
                        }
                    }
                    ++outputs;
                },
                {128, 1u << 30});
            if (!ok)
                return {false, "decode failed at q=" + std::to_string(p.q) + " ell=" + std::to_string(p.ell) +
                                   " r=" + p.r.to_string() + " input " + format_word(bad, p.q)};
        }
    }
    return {true, std::to_string(outputs) + " outputs decoded per-run (" + std::to_string(full_decodes) +
                      " also through the full word path)"};
}

// 8. greedy construction equals the Eq. 6 closed form up to length 200
Outcome criterion8() {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        for (std::uint32_t ell : {1u, 2u, 3u}) {
            for (std::uint64_t r : {1u, 2u, 3u}) {
                const ChannelParams p(q, ell, Repetition::finite(r));
                const auto greedy = greedy_block_construction(p, 200);
                std::vector<std::uint64_t> closed;
                for (std::uint64_t L : block_lengths_up_to(p, 200)) closed.push_back(L - 1);
                if (greedy != closed)
                    return {false, "greedy/closed-form mismatch at q=" + std::to_string(q) +
                                       " ell=" + std::to_string(ell) + " r=" + std::to_string(r)};
            }
        }
    }
    return {true, "greedy sweep reproduces the closed form on all 27 parameter sets"};
}

// 9. |log2|C(2000)|/2000 - C0| < 0.01 for (2,1,1)
Outcome criterion9() {
    const ChannelParams p(2, 1, Repetition::finite(1));
    const Real c0 = solve_rho(p, 1e-12L).c0;
    const Real rate = log2_big(count(p, 2000).code_size()) / 2000.0L;
    const Real gap = std::fabs(rate - c0);
    return {gap < 0.01L, "rate(2000)=" + real_str(rate) + " C0=" + real_str(c0) + " gap=" + real_str(gap)};
}

// 10. monotonicity grid and Fig. 3 curve ordering. Neighboring capacities can
// differ by as little as ~1e-26 at the saturated corners (q=6, ell=4), below
// long-double resolution, so the grid uses the 50-digit solver.
Outcome criterion10() {
    std::vector<std::uint32_t> qs{2, 3, 4, 5, 6};
    std::vector<std::uint32_t> ells{1, 2, 3, 4};
    std::vector<std::uint64_t> rvals{1, 2, 3, 4, 5, 6, 7, 8};
    const BigReal tol("1e-36");
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, BigReal> c0;
    for (auto q : qs)
        for (auto ell : ells)
            for (auto r : rvals)
                c0[{q, ell, r}] = solve_rho_big(ChannelParams(q, ell, Repetition::finite(r)), tol).c0;
    for (auto q : qs)
        for (auto ell : ells)
            for (auto r : rvals) {
                if (q > 2 && !(c0[{q, ell, r}] > c0[{q - 1, ell, r}])) return {false, "not increasing in q"};
                if (ell > 1 && !(c0[{q, ell, r}] > c0[{q, ell - 1, r}])) return {false, "not increasing in ell"};
                if (r > 1 && !(c0[{q, ell, r}] < c0[{q, ell, r - 1}])) return {false, "not decreasing in r"};
            }
    // Fig. 3 data: for q = 2 and 4, the lowest curve is ell = 1
    std::vector<Repetition> reps;
    for (std::uint64_t r = 1; r <= 12; ++r) reps.push_back(Repetition::finite(r));
    const auto rows = capacity_table({2, 4}, {1, 2, 3, 4}, reps, 1e-12L);
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::string>, Real> fig;
    for (const auto& row : rows) fig[{row.q, row.ell, row.r.to_string()}] = row.c0;
    for (std::uint32_t q : {2u, 4u})
        for (std::uint64_t r = 1; r <= 12; ++r)
            for (std::uint32_t ell : {2u, 3u, 4u})
                if (!(fig[{q, 1, std::to_string(r)}] < fig[{q, ell, std::to_string(r)}]))
                    return {false, "ell=1 is not the lowest curve"};
    return {true, "strict monotonicity on 160 grid points; Fig. 3 ordering holds for 96 rows"};
}

// 11. phi round-trip on 1e5 random words; output-set equality under phi for
//     ell = 1 (subset for ell = 2), q <= 3, |xt| <= 6
Outcome criterion11() {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 100000; ++iter) {
        const std::uint32_t q = 2 + rng() % 4;
        const std::uint32_t ell = 1 + rng() % 3;
        const ChannelParams p(q, ell, Repetition::finite(1));
        Word xt(rng() % 30);
        for (auto& s : xt) s = static_cast<Symbol>(rng() % q);
        if (phi_inverse(p, phi(p, xt)) != xt) return {false, "phi round-trip failed"};
    }

    const auto image = [](const ChannelParams& p, const OutputSet& set) {
        std::set<Word> out;
        for (const Word& y : set.words) out.insert(phi(p, y));
        return out;
    };
    std::uint64_t checked = 0;
    for (std::uint32_t q : {2u, 3u}) {
        for (std::uint64_t r : {1u, 2u}) {
            for (std::size_t len = 0; len <= 6; ++len) {
                std::uint64_t total = 1;
                for (std::size_t i = 0; i < len; ++i) total *= q;
                for (std::uint64_t idx = 0; idx < total; ++idx) {
                    Word xt(len);
                    std::uint64_t v = idx;
                    for (std::size_t i = 0; i < len; ++i) {
                        xt[i] = static_cast<Symbol>(v % q);
                        v /= q;
                    }
                    // ell = 1: the phi image of the duplication fan-out equals
                    // the 0-insertion fan-out of the phi image
                    const ChannelParams p1(q, 1, Repetition::finite(r));
                    const auto dup = image(p1, output_set_brute(p1, xt, Model::duplication, {128, 1u << 22}));
                    const auto zi = output_set_brute(p1, phi(p1, xt), Model::zero_insertion, {128, 1u << 22});
                    if (dup != std::set<Word>(zi.words.begin(), zi.words.end()))
                        return {false, "ell=1 equivalence failed at " + format_word(xt, q)};
                    ++checked;
                    // ell = 2, r = 1: subset relation
                    if (r == 1) {
                        const ChannelParams p2(q, 2, Repetition::finite(1));
                        const auto dup2 = image(p2, output_set_brute(p2, xt, Model::duplication, {128, 1u << 22}));
                        const auto zi2 = output_set_brute(p2, phi(p2, xt), Model::zero_insertion, {128, 1u << 22});
                        const std::set<Word> zi2set(zi2.words.begin(), zi2.words.end());
                        for (const Word& y : dup2)
                            if (!zi2set.count(y)) return {false, "ell=2 subset relation failed at " + format_word(xt, q)};
                    }
                }
            }
        }
    }
    return {true, "100000 round trips; fan-out equivalence/subset verified on " + std::to_string(checked) + " words"};
}

// 12. rank/unrank round trip over all codewords, n <= 12
Outcome criterion12() {
    std::uint64_t total = 0;
    for (const ChannelParams& p : kSmallGrid) {
        const Codebook cb(p, 12);
        const auto words = enumerate_codewords(cb);
        for (std::size_t k = 0; k < words.size(); ++k) {
            if (rank(cb, words[k]) != k)
                return {false, "rank mismatch at q=" + std::to_string(p.q) + " ell=" + std::to_string(p.ell) +
                                   " r=" + p.r.to_string() + " word " + format_word(words[k], p.q)};
            if (unrank(cb, BigInt(k)) != words[k])
                return {false, "unrank mismatch at index " + std::to_string(k)};
        }
        total += words.size();
    }
    return {true, std::to_string(total) + " codewords round-tripped across 8 parameter sets"};
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*fn)();
};

const Criterion kCriteria[] = {
    {1, "capacity point values (2,1,1)", criterion1},
    {2, "constant-weight optimum omega*", criterion2},
    {3, "Fig. 2 constant-weight counts", criterion3},
    {4, "r = inf specializations", criterion4},
    {5, "zero-error property of C(n)", criterion5},
    {6, "optimality: exact MIS vs DP count", criterion6},
    {7, "decoder correctness on all outputs", criterion7},
    {8, "greedy/closed-form agreement", criterion8},
    {9, "rate convergence at n = 2000", criterion9},
    {10, "monotonicity grid and Fig. 3 ordering", criterion10},
    {11, "transform equivalence", criterion11},
    {12, "enumerative coding round trip", criterion12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.fn();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count() /
            1000.0;
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%7.2fs", seconds);
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  [" << timing << "]  " << c.title
                  << " -- " << outcome.detail << "\n";
        if (!outcome.pass) ++failures;
    }
    if (only == 0)
        std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
                  << "\n";
    return failures;
}
