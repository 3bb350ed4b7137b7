//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_CYCLO_HPP
#define MPOLYLOG_CYCLO_HPP

#include <mpolylog/types.hpp>

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace mpolylog::cyclo {

/// A root of unity e^{2*pi*i*p/q}, stored as the reduced turn fraction p/q
/// with q >= 1 and 0 <= p < q. Multiplication and conjugation are exact and
/// allocation-free; this is the carrier for the tuple entries z_i and the
/// interval products z_{[j,i]}.
class RootOfUnity {
public:
    RootOfUnity() : p_(0), q_(1) {}
    RootOfUnity(long long p, long long q) {
        if (q == 0) throw std::invalid_argument("RootOfUnity: q = 0");
        if (q < 0) { p = -p; q = -q; }
        p %= q;
        if (p < 0) p += q;
        long long g = gcd_ll(p, q);
        if (g > 1) { p /= g; q /= g; }
        p_ = p; q_ = q;
    }

    long long turn_num() const { return p_; }
    long long turn_den() const { return q_; }
    long long order() const { return q_; }

    bool is_one() const { return p_ == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const {
        long long q = lcm_ll(q_, o.q_);
        return RootOfUnity(p_ * (q / q_) + o.p_ * (q / o.q_), q);
    }
    RootOfUnity conjugate() const { return RootOfUnity(q_ - p_, q_); }
    RootOfUnity pow(long long e) const {
        long long pe = (p_ % q_) * (e % q_) % q_;
        return RootOfUnity(pe, q_);
    }

    bool operator==(const RootOfUnity& o) const { return p_ == o.p_ && q_ == o.q_; }
    auto operator<=>(const RootOfUnity& o) const {
        if (auto c = q_ <=> o.q_; c != 0) return c;
        return p_ <=> o.p_;
    }

    Complex embed() const;

    /// Text form "zeta(q)^p".
    std::string str() const {
        return "zeta(" + std::to_string(q_) + ")^" + std::to_string(p_);
    }

private:
    long long p_, q_;
};

inline RootOfUnity make_root(long long p, long long q) { return RootOfUnity(p, q); }

/// Product z_j * ... * z_i of consecutive tuple entries (1-based, j <= i).
RootOfUnity interval_product(const std::vector<RootOfUnity>& z, int j, int i);

/// Closure of {1, z_1, ..., z_r} under multiplication: the finite value set S
/// of all products z_1^{k_1}...z_r^{k_r}, k_i >= 0.
std::set<RootOfUnity> distinct_products(const std::vector<RootOfUnity>& z);

/// Dictionary-order-smallest exponent tuple (k_1..k_r) with z^k = xi,
/// k_i < order(z_i). Labels the basis elements of C_z; nothing downstream
/// depends on the choice.
std::vector<long long> exponent_of(const std::vector<RootOfUnity>& z,
                                   const RootOfUnity& xi);

/// An element of the m-th cyclotomic field Q(zeta_m), stored as a sparse
/// polynomial in zeta_m reduced modulo the m-th cyclotomic polynomial
/// (degree < phi(m)). Mixed-order arithmetic lifts both operands to the lcm
/// order. Exact field operations throughout; this carries every coefficient
/// that is a sum or quotient of roots of unity (C_i entries, matrix entries,
/// Eulerian values at conjugate roots).
class CycloNumber {
public:
    CycloNumber() : order_(1) {}
    CycloNumber(const Rational& c) : order_(1) {
        if (c != 0) coeffs_[0] = c;
    }
    CycloNumber(long long c) : CycloNumber(Rational(c)) {}
    static CycloNumber from_root(const RootOfUnity& z);

    long long order() const { return order_; }
    const std::map<long long, Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }
    Rational rational_value() const {
        if (coeffs_.empty()) return Rational(0);
        if (!is_rational()) throw std::domain_error("CycloNumber: not rational");
        return coeffs_.begin()->second;
    }

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator/(const CycloNumber& o) const;
    CycloNumber operator-() const;
    CycloNumber inverse() const;
    CycloNumber conjugate() const;

    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
    CycloNumber& operator/=(const CycloNumber& o) { return *this = *this / o; }

    bool operator==(const CycloNumber& o) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    std::strong_ordering cmp_key(const CycloNumber& o) const;

    Complex embed() const;

    /// Rational-coefficient polynomial in "zeta(m)", e.g. "1/2 - 1/2*zeta(4)^1".
    std::string str() const;

private:
    // Invariant: exponents in [0, phi(order_)), no zero coefficients; order
    // demoted to 1 whenever the value is rational.
    long long order_;
    std::map<long long, Rational> coeffs_;

    CycloNumber lifted(long long m) const;  // re-express in Q(zeta_m), order_ | m
    void reduce_();                         // mod cyclotomic polynomial + demote
    friend CycloNumber raw_cyclo(long long, std::map<long long, Rational>);
};

/// phi(m)
long long euler_phi(long long m);

/// Coefficients of the m-th cyclotomic polynomial (exact integers, index =
/// power of x). Memoized.
const std::vector<Rational>& cyclotomic_polynomial(long long m);

}  // namespace mpolylog::cyclo

#endif
