//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_TYPES_HPP
#define MPOLYLOG_TYPES_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/math/constants/constants.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mpolylog {

// Working precision of the numeric layer, in decimal digits. The exact layer
// (rationals, cyclotomics) is unbounded; this only bounds floating evaluation.
inline constexpr unsigned kWorkingDigits = 60;

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;
using Real     = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkingDigits>>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::mpfr_float_backend<kWorkingDigits>>>;

inline Real to_real(const Rational& q) { return q.convert_to<Real>(); }

inline Real pi_value() {
    return boost::math::constants::pi<Real>();
}

inline Real machine_tail() {
    // 10^-(digits-5): the comparison slack used wherever exact inputs are
    // evaluated at working precision.
    static const Real t = pow(Real(10), -int(kWorkingDigits) + 5);
    return t;
}

inline std::string real_str(const Real& x, int digits = 20) {
    return x.str(digits);
}

inline std::string complex_str(const Complex& z, int digits = 20) {
    return real(z).str(digits) + (imag(z) < 0 ? "" : "+") + imag(z).str(digits) + "i";
}

// n! as an exact rational (used in coefficient prefactors).
inline Rational factorial_q(unsigned n) {
    Rational f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= int(i);
    return f;
}

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

}  // namespace mpolylog

#endif
