//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_NUMERICS_HPP
#define MPOLYLOG_NUMERICS_HPP

#include <mpolylog/asymptotics.hpp>
#include <mpolylog/domains.hpp>
#include <mpolylog/ratfield.hpp>
#include <mpolylog/types.hpp>

#include <map>
#include <string>
#include <vector>

namespace mpolylog::numerics {

using cyclo::RootOfUnity;
using domains::IndexProfile;

/// Raised when an evaluation point sits on (or too close to) a candidate
/// polar hyperplane or a coefficient denominator.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct EvalConfig {
    int precision = int(kWorkingDigits);  // decimal digits (30..60)
    Real tolerance = Real("1e-8");        // identity-residual tolerance
    Real delta = Real("1e-3");            // pole-avoidance offset scale
    long long n_max = 2000000;            // hard cap on any summation sweep
    long long grid_start = 50;            // first fit sample N
    long long grid_span = 3000;           // approximate last fit sample N
    double oversample = 2.5;              // fit rows per model column
    asymptotics::Caps caps{};             // tail/model caps
    int taylor_degree = 4;                // total-degree cap of Li^Reg Taylor
    int taylor_degree_per_var = 6;        // per-variable cap
    int averaging_passes = 3;             // oscillation-cancelling passes
    long long averaging_base = 3000;      // window start for li_value
    unsigned seed = 0x5eed;               // deterministic redraw seed

    void validate() const;
};

/// Exact rational partial sum for z in {1,-1}, integer exponents, no log
/// weights: the finite-identity path.
Rational partial_sum_exact(const std::vector<RootOfUnity>& z,
                           const std::vector<long long>& a, long long N);

/// Partial sum over N > n_1 > ... > n_r > 0 of z^n (log n)^k / n^s,
/// O(N r) via the prefix recursion. Depth 0 returns 1.
Complex partial_sum(const std::vector<RootOfUnity>& z,
                    const std::vector<Complex>& s,
                    const std::vector<unsigned>& k_vec, long long N);

/// Same, evaluated at every N in the sorted list in a single sweep.
std::vector<Complex> partial_sum_sweep(const std::vector<RootOfUnity>& z,
                                       const std::vector<Complex>& s,
                                       const std::vector<unsigned>& k_vec,
                                       const std::vector<long long>& Ns);

/// Finite weak-ordered sum over M > n_1 >= ... >= n_r >= N. Empty range = 0.
Complex star_sum_range(const std::vector<RootOfUnity>& z,
                       const std::vector<Complex>& s, long long N, long long M);

struct TailEstimate {
    Complex value;
    Real bound;       // estimated remainder beyond the cut / after corrections
    long long m_cut;  // where summation stopped
};

/// The star tail over M_cut > n_1 >= ... >= N together with the iterated
/// integral estimate of the discarded remainder. Requires s in U_r.
TailEstimate star_tail(const std::vector<RootOfUnity>& z,
                       const std::vector<Complex>& s, long long N,
                       long long M_cut, const EvalConfig& cfg);

/// Fully corrected star tail (summation + elementary tail corrections),
/// adaptive in the cut. Requires s strictly inside U_r with some margin.
TailEstimate star_tail_full(const std::vector<RootOfUnity>& z,
                            const std::vector<Complex>& s, long long N,
                            const EvalConfig& cfg);

struct RegularizedValue {
    std::vector<RootOfUnity> z;
    std::vector<long long> a;
    std::vector<unsigned> k_vec;
    Complex value;
    Real residual;        // held-out residual of the primary grid
    Real grid_agreement;  // |constant(grid A) - constant(grid B)|
    bool ok = false;
    std::string message;
    asymptotics::AsymptoticModel model;
    std::vector<Complex> coefficients;  // primary-grid fit, aligned with model
    std::vector<std::pair<long long, Complex>> samples;  // primary grid
};

/// The regularised value l_{[k]}^{(a)}(z): the constant slot of the fitted
/// decomposition of the partial-sum sequence, validated on two grids.
RegularizedValue regularized_value(const std::vector<RootOfUnity>& z,
                                   const std::vector<long long>& a,
                                   const std::vector<unsigned>& k_vec,
                                   const EvalConfig& cfg);

/// All Taylor coefficients l_{[k]}^{(a)}(z) with |k| <= degree (and per-var
/// cap), sharing one sample grid and one factorisation. Keys are k-vectors.
std::map<std::vector<unsigned>, RegularizedValue> regularized_taylor_table(
    const std::vector<RootOfUnity>& z, const std::vector<long long>& a,
    int degree, const EvalConfig& cfg);

/// Multiple polylogarithm value at s (off candidate polar hyperplanes):
/// cutoff identity + non-oscillatory tail corrections + iterated averaging.
/// Depth 0 returns 1.
Complex li_value(const std::vector<RootOfUnity>& z,
                 const std::vector<Complex>& s, const EvalConfig& cfg);

struct VerifyReport {
    std::string identity;
    std::string inputs;
    Real residual;
    Real tolerance;
    bool pass = false;
    std::string detail;
};

/// Translation formula (both sides independently summed).
VerifyReport verify_translation(const std::vector<RootOfUnity>& z,
                                const std::vector<Complex>& s, long long N,
                                const EvalConfig& cfg);

/// Cutoff identity: partial sum versus the alternating star-tail sum.
VerifyReport verify_combi(const std::vector<RootOfUnity>& z,
                          const std::vector<Complex>& s, long long N,
                          const EvalConfig& cfg);

/// Laurent-type expansion at s = a + delta * generic direction: li_value
/// versus the exact coefficients combined with fitted Li^Reg Taylor values.
VerifyReport verify_expansion(const std::vector<RootOfUnity>& z,
                              const std::vector<long long>& a,
                              ratfield::ExpansionMode mode,
                              const EvalConfig& cfg);

/// Holomorphic-point check: li_value(a) versus the regularised value.
VerifyReport verify_corollary_vrz(const std::vector<RootOfUnity>& z,
                                  const std::vector<long long>& a,
                                  const EvalConfig& cfg);

/// Taylor evaluation of Li^Reg_(z;a) at a nearby point from fitted
/// coefficients; diagnostics carry the truncation estimate.
struct RegTaylorValue {
    Complex value;
    Real fit_error;    // accumulated fit residual estimate
    Real trunc_error;  // estimated Taylor truncation
    bool ok = true;    // every underlying fit passed its diagnostics
};
RegTaylorValue li_reg_taylor(const std::vector<RootOfUnity>& z,
                             const std::vector<long long>& a,
                             const std::vector<Complex>& s,
                             const EvalConfig& cfg);

}  // namespace mpolylog::numerics

#endif
