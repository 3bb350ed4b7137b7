//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_DOMAINS_HPP
#define MPOLYLOG_DOMAINS_HPP

#include <mpolylog/cyclo.hpp>
#include <mpolylog/types.hpp>

#include <set>
#include <vector>

namespace mpolylog::domains {

using cyclo::RootOfUnity;

/// A candidate polar hyperplane s_1 + ... + s_{last_index} = level.
struct Hyperplane {
    int last_index;
    long long level;
    bool operator==(const Hyperplane&) const = default;
};

/// Finite description of an infinite family of candidate hyperplanes:
/// s_1 + ... + s_{last_index} = n for all integers n <= max_level, or a
/// single plane when single_level is set.
struct HyperplaneFamily {
    int last_index;
    long long max_level;
    bool single_level;
    bool covers(int i, long long n) const {
        return i == last_index && (single_level ? n == max_level : n <= max_level);
    }
};

/// All interval-product combinatorics of a fixed root tuple z, precomputed:
/// q_{[j,i]}, Q_{[j,i]}, J_i, J'_i, t_i, a(z)_i, q(z), I(z). Immutable after
/// construction; every query is pure.
class IndexProfile {
public:
    explicit IndexProfile(std::vector<RootOfUnity> z);

    int depth() const { return r_; }
    const std::vector<RootOfUnity>& roots() const { return z_; }

    /// z_{[j,i]} (1-based, j <= i).
    RootOfUnity interval(int j, int i) const { return interval_[idx_(j, i)]; }
    /// q_{[j,i]} = 1 iff z_{[j,i]} = 1.
    int q_interval(int j, int i) const { return interval_[idx_(j, i)].is_one() ? 1 : 0; }
    /// Q_{[j,i]} = q_{[j,i]} + q_{[j+1,i]} + ... + q_{[i,i]}; Q_{[i+1,i]} = 0.
    int Q_suffix(int j, int i) const;
    /// Q_i(z) = |J_i| = Q_{[1,i]}; Q_0 = 0.
    int Q(int i) const { return i == 0 ? 0 : Q_suffix(1, i); }
    /// Prefix flavour used by the asymptotic expansion: q_{[1,j]} and its
    /// running count.
    int q_prefix(int j) const { return q_interval(1, j); }
    int Q_prefix(int i) const;

    /// J_i = { j <= i : z_{[j,i]} = 1 },  J'_i its complement in [1, i].
    std::vector<int> J(int i) const;
    std::vector<int> J_prime(int i) const;

    /// t_i: the unique index with z_{[t_i,i]} != 1, or 0 when all interval
    /// products ending at i are 1. Throws when more than one such index
    /// exists (the H-factors are ill-posed there).
    int t(int i) const;
    /// Number of indices t <= i with z_{[t,i]} != 1.
    int t_count(int i) const { return i - Q(i); }

    /// a(z)_i: 0 iff z_1 = ... = z_i = 1; a(z)_0 = 0.
    int a_flag(int i) const;
    /// q(z): smallest i with z_i != 1, or r+1 if none.
    int q_flag() const { return q_flag_; }

    /// I(z) = {0} union { i : z_{[1,i]} = 1 } (general-point index set).
    const std::vector<int>& index_set_I_z() const { return I_z_; }

    /// Profile of the suffix tuple (z_{i+1}, ..., z_r).
    IndexProfile suffix(int i) const;
    /// Profile of the reversed prefix (z_i, ..., z_1), the orientation the
    /// star-tail asymptotics are stated in.
    IndexProfile reversed_prefix(int i) const;

private:
    int r_;
    std::vector<RootOfUnity> z_;
    std::vector<RootOfUnity> interval_;  // packed upper-triangular (j <= i)
    int q_flag_;
    std::vector<int> I_z_;

    size_t idx_(int j, int i) const;
};

/// I(z, a): indices 0 <= i <= r with z_{[1,i]} = 1, at most one t with
/// z_{[t,i]} != 1, and a_1 + ... + a_i = i - a(z)_i. Always contains 0.
std::vector<int> index_set_I(const IndexProfile& p, const std::vector<long long>& a);

/// I'(z, a): indices 1 <= i <= r with z_1 != 1, z_2 = ... = z_i = 1 and
/// a_1 + ... + a_i = i - 1. Disjoint from I(z, a).
std::vector<int> index_set_I_prime(const IndexProfile& p,
                                   const std::vector<long long>& a);

/// Strict membership tests for the nested convergence regions. Complex
/// points compare real parts with the working-precision slack; the exact
/// integer overloads are used by the closure tests.
bool in_U(const std::vector<Complex>& s);
bool in_U_z(const IndexProfile& p, const std::vector<Complex>& s);
bool in_V_z(const IndexProfile& p, const std::vector<Complex>& s);
bool in_V_z(const IndexProfile& p, const std::vector<long long>& a);

/// a in Z^r intersect closure(U_r(z)): the non-strict variant of the U_r(z)
/// inequalities (polyhedral closure of the strict half-spaces).
bool in_closure_U_z(const IndexProfile& p, const std::vector<long long>& a);

/// Candidate polar hyperplanes of Li_z per the meromorphic-continuation
/// classification: empty iff z_{[1,i]} != 1 for every i; otherwise the
/// families s_1 = 1 (when the first unit prefix is i_1 = 1) and
/// s_1+...+s_{i_j} = n for integers n <= j.
std::vector<HyperplaneFamily> polar_hyperplanes(const IndexProfile& p);

/// Is s_1 + ... + s_i = n a candidate plane?
bool is_candidate_pole(const std::vector<HyperplaneFamily>& fams, int i, long long n);

/// Distance (in the |.| sense) from the point to the nearest candidate
/// hyperplane; used by the evaluator's pole guard.
Real pole_distance(const std::vector<HyperplaneFamily>& fams,
                   const std::vector<Complex>& s, Hyperplane* nearest = nullptr);

}  // namespace mpolylog::domains

#endif
