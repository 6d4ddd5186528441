#include "dupcode/capacity.hpp"

#include <algorithm>
#include <cmath>

namespace dupcode {

namespace {

constexpr std::uint32_t kMaxLevels = 400;
constexpr std::uint64_t kExponentCap = std::uint64_t{1} << 62;
constexpr Real kTinyTail = 0x1p-70L;

}  // namespace

CharSeries::CharSeries(const ChannelParams& params) : params_(params) {
    if (params_.r.is_unbounded()) {
        for (std::uint64_t L = 1; L <= params_.ell; ++L) exponents_.push_back(L);
        exhausted_ = true;
        return;
    }
    ensure_levels(4);
}

void CharSeries::ensure_levels(std::uint32_t levels) {
    if (exhausted_ || levels <= levels_) return;
    levels_ = std::min(levels, kMaxLevels);
    regenerate();
}

void CharSeries::regenerate() {
    exponents_.clear();
    next_exponent_ = kExponentCap;
    const std::uint64_t m = params_.r.value() * params_.ell + 1;
    for (std::uint32_t i = 1; i <= params_.ell; ++i) {
        std::uint64_t L = i;
        bool overflowed = false;
        for (std::uint32_t j = 0; j < levels_; ++j) {
            exponents_.push_back(L);
            const unsigned __int128 next = static_cast<unsigned __int128>(L) * m + params_.ell;
            if (next > kExponentCap) {
                overflowed = true;
                break;
            }
            L = static_cast<std::uint64_t>(next);
        }
        if (!overflowed) next_exponent_ = std::min(next_exponent_, L);
    }
    std::sort(exponents_.begin(), exponents_.end());
}

VEval eval_v(const CharSeries& series, Real x) {
    if (x >= 1 && !series.exhausted())
        throw std::invalid_argument("v(x) diverges for x >= 1");
    const Real mult = static_cast<Real>(series.params().q - 1);
    Real value = 0;
    const auto& exps = series.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it)
        value += mult * std::pow(x, static_cast<Real>(*it));
    Real tail = 0;
    if (!series.exhausted())
        tail = mult * std::pow(x, static_cast<Real>(series.next_exponent())) / (1 - x);
    return {value, tail};
}

namespace {

enum class Side { below, above };

Side classify_v(CharSeries& series, Real x) {
    while (true) {
        const VEval ev = eval_v(series, x);
        if (ev.value > 1) return Side::above;
        if (ev.value + ev.tail_bound < 1) return Side::below;
        if (ev.tail_bound < kTinyTail) return ev.value >= 1 ? Side::above : Side::below;
        if (series.exhausted() || series.levels() >= kMaxLevels)
            throw InvariantError("cannot certify v(x) against 1");
        series.ensure_levels(series.levels() + 8);
    }
}

// q = 2, finite r: upper end of the bracket sits just below 1.
Real find_upper_bracket(CharSeries& series) {
    for (Real eps : {0x1p-20L, 0x1p-40L}) {
        const Real x = 1.0L - eps;
        while (true) {
            if (eval_v(series, x).value > 1) return x;
            if (series.levels() >= kMaxLevels) break;
            series.ensure_levels(series.levels() + 8);
        }
    }
    throw InvariantError("failed to bracket the capacity root from above");
}

}  // namespace

namespace {

// Shared with the 50-digit variant below.
template <typename R>
struct VEvalT {
    R value;
    R tail_bound;
};

template <typename R>
VEvalT<R> eval_v_t(const CharSeries& series, const R& x) {
    using std::pow;
    const R mult = static_cast<R>(series.params().q - 1);
    R value = 0;
    const auto& exps = series.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) value += mult * pow(x, static_cast<R>(*it));
    R tail = 0;
    if (!series.exhausted()) tail = mult * pow(x, static_cast<R>(series.next_exponent())) / (1 - x);
    return {value, tail};
}

template <typename R>
Side classify_v_t(CharSeries& series, const R& x, const R& tiny_tail) {
    while (true) {
        const VEvalT<R> ev = eval_v_t<R>(series, x);
        if (ev.value > 1) return Side::above;
        if (ev.value + ev.tail_bound < 1) return Side::below;
        if (ev.tail_bound < tiny_tail) return ev.value >= 1 ? Side::above : Side::below;
        if (series.exhausted() || series.levels() >= kMaxLevels)
            throw InvariantError("cannot certify v(x) against 1");
        series.ensure_levels(series.levels() + 8);
    }
}

}  // namespace

BigCapacityResult solve_rho_big(const ChannelParams& params, const BigReal& tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (params.r.is_unbounded() && static_cast<std::uint64_t>(params.q - 1) * params.ell == 1)
        return {BigReal(1), BigReal(0), true};

    CharSeries series(params);
    const BigReal tiny_tail("1e-60");
    BigReal lo = BigReal(1) / params.q;
    BigReal hi;
    if (params.r.is_unbounded()) {
        hi = 1;
    } else if (params.q >= 3) {
        hi = BigReal(1) / (params.q - 1);
    } else {
        hi = 0;
        for (int scale : {20, 60, 120}) {
            const BigReal x = 1 - boost::multiprecision::pow(BigReal(2), -scale);
            while (true) {
                if (eval_v_t<BigReal>(series, x).value > 1) {
                    hi = x;
                    break;
                }
                if (series.levels() >= kMaxLevels) break;
                series.ensure_levels(series.levels() + 8);
            }
            if (hi != 0) break;
        }
        if (hi == 0) throw InvariantError("failed to bracket the capacity root from above");
    }

    if (classify_v_t<BigReal>(series, lo, tiny_tail) != Side::below)
        throw InvariantError("lower bracket end not below the root");
    if (classify_v_t<BigReal>(series, hi, tiny_tail) != Side::above)
        throw InvariantError("upper bracket end not above the root");

    while (hi - lo > tol) {
        const BigReal mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (classify_v_t<BigReal>(series, mid, tiny_tail) == Side::above)
            hi = mid;
        else
            lo = mid;
    }
    const BigReal rho = lo + (hi - lo) / 2;
    return {rho, -boost::multiprecision::log(rho) / boost::multiprecision::log(BigReal(2)), false};
}

CapacityResult solve_rho(const ChannelParams& params, Real tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (params.r.is_unbounded() && static_cast<std::uint64_t>(params.q - 1) * params.ell == 1)
        return {1.0L, 0.0L, 0, 0.0L, true};

    CharSeries series(params);
    Real lo = 1.0L / params.q;
    Real hi;
    if (params.r.is_unbounded())
        hi = 1.0L;
    else if (params.q >= 3)
        hi = 1.0L / (params.q - 1);
    else
        hi = find_upper_bracket(series);

    if (classify_v(series, lo) != Side::below) throw InvariantError("lower bracket end not below the root");
    if (classify_v(series, hi) != Side::above) throw InvariantError("upper bracket end not above the root");

    while (hi - lo > tol) {
        const Real mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // long double resolution reached
        if (classify_v(series, mid) == Side::above)
            hi = mid;
        else
            lo = mid;
    }
    const Real rho = lo + (hi - lo) / 2;
    return {rho, -std::log2(rho), series.levels(), (hi - lo) / 2, false};
}

namespace {

struct GEval {
    Real value;
    Real tail_bound;  // upper bound on the dropped (positive) tail
};

// g(x) = sum over exponents of (L - 1/omega) x^L; the (q-1) multiplicity
// cancels in the root equation.
GEval eval_g(const CharSeries& series, Real x, Real inv_omega) {
    Real value = 0;
    const auto& exps = series.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it)
        value += (static_cast<Real>(*it) - inv_omega) * std::pow(x, static_cast<Real>(*it));
    Real tail = 0;
    if (!series.exhausted() && x < 1) {
        const Real T = static_cast<Real>(series.next_exponent());
        const Real p = std::pow(x, T);
        tail = p * (T * (1 - x) + x) / ((1 - x) * (1 - x));
    }
    return {value, tail};
}

Side classify_g(CharSeries& series, Real x, Real inv_omega) {
    while (true) {
        const GEval ev = eval_g(series, x, inv_omega);
        if (ev.value > 0) return Side::above;
        if (ev.value + ev.tail_bound < 0) return Side::below;
        if (ev.tail_bound < kTinyTail) return ev.value >= 0 ? Side::above : Side::below;
        if (series.exhausted() || series.levels() >= kMaxLevels)
            throw InvariantError("cannot certify the weighted series sign");
        series.ensure_levels(series.levels() + 8);
    }
}

// Truncation must reach past 1/omega so every dropped term is positive.
void cover_inv_omega(CharSeries& series, Real inv_omega) {
    while (!series.exhausted() && static_cast<Real>(series.next_exponent()) <= inv_omega) {
        if (series.levels() >= kMaxLevels) throw InvariantError("weight too small for the level cap");
        series.ensure_levels(series.levels() + 8);
    }
}

}  // namespace

CWCapacityResult cw_capacity(const ChannelParams& params, Real omega, Real tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (!(omega >= 0 && omega <= 1)) throw std::invalid_argument("omega must lie in [0, 1]");
    const Real log_qm1 = std::log2(static_cast<Real>(params.q - 1));
    if (omega == 0) return {0.0L, 0.0L, 0.0L, true};
    if (omega == 1) return {1.0L, 0.0L, log_qm1, true};

    const Real inv_omega = 1.0L / omega;
    if (params.r.is_unbounded()) {
        // blocks no longer than ell make weights below 1/ell infeasible
        if (omega * params.ell < 1) return {omega, 0.0L, 0.0L, true};
        if (omega * params.ell == 1) return {omega, 0.0L, omega * log_qm1, true};
    }

    CharSeries series(params);
    cover_inv_omega(series, inv_omega);

    Real lo = 0.5L;
    while (classify_g(series, lo, inv_omega) != Side::below) {
        lo /= 2;
        if (lo < 0x1p-200L) throw InvariantError("failed to bracket the weighted root from below");
    }
    Real hi;
    if (params.r.is_unbounded()) {
        hi = 1.0L;
        while (eval_g(series, hi, inv_omega).value <= 0) {
            hi *= 2;
            if (hi > 0x1p40L) throw InvariantError("failed to bracket the weighted root from above");
        }
    } else {
        hi = 0;
        for (Real eps : {0x1p-20L, 0x1p-40L}) {
            const Real x = 1.0L - eps;
            while (true) {
                if (eval_g(series, x, inv_omega).value > 0) {
                    hi = x;
                    break;
                }
                if (series.levels() >= kMaxLevels) break;
                series.ensure_levels(series.levels() + 8);
            }
            if (hi != 0) break;
        }
        if (hi == 0) throw InvariantError("failed to bracket the weighted root from above");
    }
    if (lo >= hi) throw InvariantError("degenerate weighted-root bracket");

    while (hi - lo > tol) {
        const Real mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (classify_g(series, mid, inv_omega) == Side::above)
            hi = mid;
        else
            lo = mid;
    }
    const Real rho_omega = lo + (hi - lo) / 2;

    // rate = omega log2((q-1) sum rho^(L - 1/omega)), tail forced negligible
    Real sum;
    while (true) {
        sum = 0;
        const auto& exps = series.exponents();
        for (auto it = exps.rbegin(); it != exps.rend(); ++it)
            sum += std::pow(rho_omega, static_cast<Real>(*it) - inv_omega);
        if (series.exhausted()) break;
        const Real tail = std::pow(rho_omega, static_cast<Real>(series.next_exponent()) - inv_omega) /
                          (1 - rho_omega);
        if (tail <= sum * 0x1p-60L || series.levels() >= kMaxLevels) break;
        series.ensure_levels(series.levels() + 8);
    }
    const Real c0 = omega * std::log2(static_cast<Real>(params.q - 1) * sum);
    return {omega, rho_omega, c0, false};
}

OmegaStarResult omega_star(const ChannelParams& params, Real tol) {
    const CapacityResult cap = solve_rho(params, tol);
    if (cap.degenerate) return {1.0L, true};

    CharSeries series(params);
    Real sum;
    while (true) {
        sum = 0;
        const auto& exps = series.exponents();
        for (auto it = exps.rbegin(); it != exps.rend(); ++it)
            sum += static_cast<Real>(*it) * std::pow(cap.rho, static_cast<Real>(*it));
        if (series.exhausted()) break;
        const Real T = static_cast<Real>(series.next_exponent());
        const Real tail = std::pow(cap.rho, T) * (T * (1 - cap.rho) + cap.rho) /
                          ((1 - cap.rho) * (1 - cap.rho));
        if (tail <= sum * 0x1p-60L || series.levels() >= kMaxLevels) break;
        series.ensure_levels(series.levels() + 8);
    }
    const Real omega = 1.0L / (static_cast<Real>(params.q - 1) * sum);

    // golden-section sanity scan: the cw curve must not beat cw(omega*)
    Real a = 0.001L, b = 0.999L;
    if (params.r.is_unbounded()) a = 1.0L / params.ell + 0x1p-16L;
    const Real invphi = 0.6180339887498948482L;
    Real c = b - invphi * (b - a);
    Real d = a + invphi * (b - a);
    Real fc = cw_capacity(params, c, tol).c0_omega;
    Real fd = cw_capacity(params, d, tol).c0_omega;
    while (b - a > 1e-6L) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = cw_capacity(params, c, tol).c0_omega;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = cw_capacity(params, d, tol).c0_omega;
        }
    }
    const Real scan_best = std::max(fc, fd);
    const Real at_star = cw_capacity(params, omega, tol).c0_omega;
    if (scan_best > at_star + 1e-9L)
        throw InvariantError("cw curve exceeds its value at omega*");
    return {omega, false};
}

std::vector<CapacityRow> capacity_table(const std::vector<std::uint32_t>& qs,
                                        const std::vector<std::uint32_t>& ells,
                                        const std::vector<Repetition>& rs, Real tol) {
    std::vector<CapacityRow> rows;
    for (std::uint32_t q : qs) {
        for (std::uint32_t ell : ells) {
            const CapacityResult inf = solve_rho(ChannelParams(q, ell, Repetition::unbounded()), tol);
            for (const Repetition& r : rs) {
                const CapacityResult res = solve_rho(ChannelParams(q, ell, r), tol);
                rows.push_back({q, ell, r, res.rho, res.c0, inf.c0, res.c0 - inf.c0});
            }
        }
    }
    return rows;
}

}  // namespace dupcode
