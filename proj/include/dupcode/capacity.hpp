// Numerical evaluation of the characteristic series v_{q,ell,r}, the
// capacity root rho with C0 = -log2(rho), the constant-weight capacity
// curve with its optimum omega*, and parameter-grid tables.
//
// All truncated series come with explicit tail bounds; the bisections only
// classify a point once the certified interval excludes the threshold.
#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dupcode/core.hpp"

namespace dupcode {

using Real = long double;
using BigReal = boost::multiprecision::cpp_bin_float_50;

// Lazily generated exponents L(i,j) of v (each carries multiplicity q-1).
class CharSeries {
   public:
    explicit CharSeries(const ChannelParams& params);

    const ChannelParams& params() const noexcept { return params_; }
    // Included j-levels per residue class (finite r); unbounded series are
    // complete from the start.
    std::uint32_t levels() const noexcept { return levels_; }
    void ensure_levels(std::uint32_t levels);

    const std::vector<std::uint64_t>& exponents() const noexcept { return exponents_; }
    bool exhausted() const noexcept { return exhausted_; }
    // Smallest exponent not yet included (meaningful when !exhausted()).
    std::uint64_t next_exponent() const noexcept { return next_exponent_; }

   private:
    void regenerate();

    ChannelParams params_;
    std::uint32_t levels_ = 0;
    bool exhausted_ = false;
    std::uint64_t next_exponent_ = 0;
    std::vector<std::uint64_t> exponents_;
};

struct VEval {
    Real value;       // truncated sum
    Real tail_bound;  // certified bound on the dropped tail (0 if exhausted)
};

// v at the series' current truncation. Throws for x >= 1 on an infinite series.
VEval eval_v(const CharSeries& series, Real x);

struct CapacityResult {
    Real rho;
    Real c0;  // -log2(rho), bits per symbol
    std::uint32_t truncation_levels;
    Real root_tolerance;  // |rho - rho_true| bound
    bool degenerate;      // rho == 1, C0 == 0 (only (q-1)*ell == 1 with r unbounded)
};

CapacityResult solve_rho(const ChannelParams& params, Real tol = 1e-12L);

struct BigCapacityResult {
    BigReal rho;
    BigReal c0;
    bool degenerate;
};

// 50-digit variant for comparisons that sit below long-double resolution
// (neighboring grid points whose capacities differ by ~1e-26).
BigCapacityResult solve_rho_big(const ChannelParams& params, const BigReal& tol);

struct CWCapacityResult {
    Real omega;
    Real rho_omega;
    Real c0_omega;
    bool degenerate;  // boundary or infeasible-weight result, no root involved
};

// Constant-weight capacity C0(omega); boundaries omega = 0, 1 return exact
// values. For unbounded r the feasible weights are [1/ell, 1].
CWCapacityResult cw_capacity(const ChannelParams& params, Real omega, Real tol = 1e-12L);

struct OmegaStarResult {
    Real omega;
    bool degenerate;  // C0 == 0; the curve has no interior maximum
};

// omega* = 1 / ((q-1) sum L rho^L), then a golden-section sanity scan that
// the cw curve is maximized there.
OmegaStarResult omega_star(const ChannelParams& params, Real tol = 1e-12L);

struct CapacityRow {
    std::uint32_t q;
    std::uint32_t ell;
    Repetition r;
    Real rho;
    Real c0;
    Real c0_inf;   // r -> infinity limit for the same (q, ell)
    Real penalty;  // log2(rho_inf / rho) = c0 - c0_inf
};

std::vector<CapacityRow> capacity_table(const std::vector<std::uint32_t>& qs,
                                        const std::vector<std::uint32_t>& ells,
                                        const std::vector<Repetition>& rs, Real tol = 1e-12L);

}  // namespace dupcode
