//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_SPECIALSEQ_HPP
#define MPOLYLOG_SPECIALSEQ_HPP

#include <mpolylog/cyclo.hpp>
#include <mpolylog/types.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace mpolylog::specialseq {

/// Dense univariate polynomial with rational coefficients, index = power.
/// Trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim_(); }

    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < int(c_.size())) ? c_[k] : Rational(0);
    }

    Rational eval(const Rational& t) const;
    cyclo::CycloNumber eval(const cyclo::CycloNumber& t) const;
    Rational coeff_sum() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly derivative() const;

private:
    std::vector<Rational> c_;
    void trim_() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
};

/// Star Bernoulli number B*_k, from x/(e^x - 1) = sum (-1)^k B*_k x^k / k!.
/// Memoized; the generating function induces the triangular recurrence
/// realised in the source.
Rational star_bernoulli(unsigned k);

/// Eulerian polynomial A_n(t), from (1-t)/(e^{(t-1)y} - t) = sum A_n(t) y^n/n!.
/// Memoized.
const IntPoly& eulerian_poly(unsigned n);

/// A*_n(c) = (-1)^n A_n(c), evaluated in the cyclotomic field.
cyclo::CycloNumber eulerian_star_at(unsigned n, const cyclo::CycloNumber& c);

/// A linear form c_1 s_1 + ... + c_r s_r + c_0 over the Dirichlet variables.
/// Variables are 1-based; absent indices have coefficient 0.
struct LinearForm {
    std::map<int, Rational> coeffs;  // variable index -> coefficient
    Rational constant{0};

    LinearForm() = default;
    static LinearForm variable(int i) {
        LinearForm f;
        f.coeffs[i] = 1;
        return f;
    }
    static LinearForm constant_form(const Rational& c) {
        LinearForm f;
        f.constant = c;
        return f;
    }

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator+=(const Rational& c) { constant += c; return *this; }
    LinearForm shifted(const Rational& c) const {
        LinearForm f = *this;
        f.constant += c;
        return f;
    }

    bool operator==(const LinearForm& o) const;

    /// Evaluate at a point (s_1..s_r); indices beyond the point are an error.
    Complex eval(const std::vector<Complex>& s) const;
};

/// Pochhammer symbol (base)_length with the length -1 extension
/// (base)_{-1} = 1/(base - 1). Lengths below -1 are rejected.
struct PochhammerTerm {
    LinearForm base;
    int length = 0;  // >= -1

    PochhammerTerm(LinearForm b, int len) : base(std::move(b)), length(len) {
        if (len < -1) throw std::invalid_argument("PochhammerTerm: length < -1");
    }
};

/// Numeric Pochhammer (s)_k for k >= -1. k = -1 evaluates 1/(s-1) and throws
/// std::domain_error at the pole s = 1.
Complex pochhammer(const Complex& base, int length);

/// Rational Pochhammer for exact integer/rational bases, same contract.
Rational pochhammer(const Rational& base, int length);

}  // namespace mpolylog::specialseq

#endif
