//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_ASYMPTOTICS_HPP
#define MPOLYLOG_ASYMPTOTICS_HPP

#include <mpolylog/domains.hpp>
#include <mpolylog/ratfield.hpp>
#include <mpolylog/types.hpp>

#include <memory>
#include <string>
#include <vector>

namespace mpolylog::asymptotics {

using domains::IndexProfile;

/// Caps for the truncated tail sum and the fit model. Negative i_max/j_max
/// mean "derive from the profile and anchor".
struct Caps {
    int k_total = 10;
    int l_max = 120;
    int i_max = -1;
    int j_max = -1;
    int m_max = 3;
};

/// One basis sequence xi^N N^p (log N)^l; p < 0 are the decaying slots kept
/// to absorb the o(1) part.
struct BasisTerm {
    cyclo::RootOfUnity xi;
    int npow = 0;
    int logpow = 0;

    bool is_constant_slot() const { return xi.is_one() && npow == 0 && logpow == 0; }
    bool is_decaying() const { return npow < 0; }
    bool operator==(const BasisTerm&) const = default;
    std::string str() const;
};

/// The finite comparison-scale model for a given tuple/anchor/log-profile:
/// every xi from the product closure S, N-powers from -m_max..i_max and
/// log-powers 0..j_max.
struct AsymptoticModel {
    std::vector<cyclo::RootOfUnity> roots;
    std::vector<BasisTerm> terms;
    int i_max = 0, j_max = 0, m_max = 0;

    static AsymptoticModel build(const IndexProfile& profile,
                                 const std::vector<long long>& a,
                                 const std::vector<unsigned>& k_vec,
                                 const Caps& caps);
    int constant_index() const;
    /// Numeric value of term t at N.
    Complex term_value(const BasisTerm& t, long long N) const;
};

/// h*_{(l,k)} of the star-tail asymptotic expansion, as an exact rational
/// function of s_1..s_r. The profile must already be in the tail's own
/// orientation (the consumer of the combinatorial identity passes the
/// reversed prefix; the reversal is the caller's responsibility).
ratfield::RatFunc h_star(int l, const std::vector<unsigned>& k_vec,
                         const IndexProfile& profile,
                         const std::vector<long long>& a);

/// Same coefficient evaluated numerically at a point (throws
/// std::domain_error when a Pochhammer factor sits on its pole).
Complex h_star_numeric(int l, const std::vector<unsigned>& k_vec,
                       const IndexProfile& profile,
                       const std::vector<long long>& a,
                       const std::vector<Complex>& s);

struct TailValue {
    Complex value;
    Real precision_bound;  // heuristic size of the first omitted k-layer
    int x_min = 0;         // smallest N-exponent present: |a| - Q_{[1,r]}
    long long terms = 0;
};

/// Numeric evaluation of the truncated formal asymptotic expansion
/// sum h*_{(l,k)}(s) (log N)^l N^{-(|a|+|k|-Q_{[1,r]})} over all terms within
/// caps: the non-oscillatory part of the star tail at s near a. Throws when
/// the caps admit no terms.
TailValue truncated_tail(const IndexProfile& profile,
                         const std::vector<long long>& a,
                         const std::vector<Complex>& s, long long N,
                         const Caps& caps);

/// Same tail at every N in the window, sharing the coefficient evaluation
/// (the h* values depend on s only).
std::vector<TailValue> truncated_tail_window(const IndexProfile& profile,
                                             const std::vector<long long>& a,
                                             const std::vector<Complex>& s,
                                             const std::vector<long long>& Ns,
                                             const Caps& caps);

struct FitResult {
    std::vector<Complex> coefficients;  // aligned with model.terms
    Complex constant;
    Real max_residual = 0;   // over the held-out sample suffix
    bool ok = false;
    std::string message;
};

/// Least-squares solver for one model on one sample grid: the QR
/// factorisation is built once and reused across right-hand sides (the
/// Taylor tables solve dozens of fits on the same grid).
class SequenceFitter {
public:
    SequenceFitter(AsymptoticModel model, std::vector<long long> grid);
    ~SequenceFitter();
    SequenceFitter(SequenceFitter&&) noexcept;
    SequenceFitter& operator=(SequenceFitter&&) noexcept;
    SequenceFitter(const SequenceFitter&) = delete;

    /// values aligned with the grid; the trailing samples are held out and
    /// the result is flagged when their residual exceeds the tolerance.
    FitResult fit(const std::vector<Complex>& values, const Real& tolerance) const;

    const AsymptoticModel& model() const { return model_; }
    const std::vector<long long>& grid() const { return grid_; }

private:
    AsymptoticModel model_;
    std::vector<long long> grid_;
    int nfit_ = 0, held_ = 0;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Least-squares decomposition of (N, value) samples over the model basis at
/// working precision. Requires #samples >= #terms + margin; the trailing
/// samples are held out and the result is flagged (never silently returned)
/// when their residual exceeds the tolerance.
FitResult decompose_sequence(const std::vector<std::pair<long long, Complex>>& samples,
                             const AsymptoticModel& model, const Real& tolerance);

}  // namespace mpolylog::asymptotics

#endif
