//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/specialseq.hpp>

#include <mutex>

namespace mpolylog::specialseq {

Rational IntPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

cyclo::CycloNumber IntPoly::eval(const cyclo::CycloNumber& t) const {
    cyclo::CycloNumber acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + cyclo::CycloNumber(*it);
    return acc;
}

Rational IntPoly::coeff_sum() const {
    Rational s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * int(i);
    return IntPoly(std::move(c));
}

namespace {
std::mutex g_seq_mutex;
constexpr unsigned kMemoBound = 64;
}

Rational star_bernoulli(unsigned k) {
    static std::vector<Rational> memo;  // memo[n] = (-1)^n B*_n / n!
    std::lock_guard<std::mutex> lock(g_seq_mutex);
    if (memo.empty()) memo.push_back(Rational(1));
    while (memo.size() <= std::max(k, kMemoBound)) {
        // x/(e^x-1) * (e^x-1)/x = 1: with b_n the series of the left factor,
        // sum_{j=0..n} b_j / (n-j+1)! = 0 for n >= 1.
        unsigned n = unsigned(memo.size());
        Rational acc = 0;
        for (unsigned j = 0; j < n; ++j)
            acc += memo[j] / factorial_q(n - j + 1);
        memo.push_back(-acc);
    }
    Rational b = memo[k] * factorial_q(k);
    return (k % 2 == 1) ? -b : b;
}

const IntPoly& eulerian_poly(unsigned n) {
    static std::vector<IntPoly> memo;
    std::lock_guard<std::mutex> lock(g_seq_mutex);
    if (memo.empty()) memo.push_back(IntPoly({Rational(1)}));
    while (memo.size() <= std::max(n, kMemoBound)) {
        // A_{m+1}(t) = (1 + m t) A_m(t) + t (1 - t) A'_m(t)
        unsigned m = unsigned(memo.size()) - 1;
        const IntPoly& a = memo.back();
        IntPoly lin({Rational(1), Rational((long long)m)});
        IntPoly tq({Rational(0), Rational(1), Rational(-1)});
        memo.push_back(lin * a + tq * a.derivative());
    }
    return memo[n];
}

cyclo::CycloNumber eulerian_star_at(unsigned n, const cyclo::CycloNumber& c) {
    cyclo::CycloNumber v = eulerian_poly(n).eval(c);
    return (n % 2 == 1) ? -v : v;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (auto& [i, c] : o.coeffs) {
        auto [it, fresh] = coeffs.emplace(i, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        } else if (it->second == 0) {
            coeffs.erase(it);
        }
    }
    constant += o.constant;
    return *this;
}

bool LinearForm::operator==(const LinearForm& o) const {
    return constant == o.constant && coeffs == o.coeffs;
}

Complex LinearForm::eval(const std::vector<Complex>& s) const {
    Complex acc(to_real(constant), Real(0));
    for (auto& [i, c] : coeffs) {
        if (i < 1 || i > int(s.size()))
            throw std::out_of_range("LinearForm: variable outside point");
        acc += s[i - 1] * to_real(c);
    }
    return acc;
}

Complex pochhammer(const Complex& base, int length) {
    if (length < -1) throw std::invalid_argument("pochhammer: length < -1");
    if (length == -1) {
        Complex d = base - Real(1);
        if (abs(d) == 0) throw std::domain_error("pochhammer: pole at base = 1");
        return Real(1) / d;
    }
    Complex acc(Real(1), Real(0));
    for (int j = 0; j < length; ++j) acc *= base + Real(j);
    return acc;
}

Rational pochhammer(const Rational& base, int length) {
    if (length < -1) throw std::invalid_argument("pochhammer: length < -1");
    if (length == -1) {
        if (base == 1) throw std::domain_error("pochhammer: pole at base = 1");
        return Rational(1) / (base - 1);
    }
    Rational acc = 1;
    for (int j = 0; j < length; ++j) acc *= base + j;
    return acc;
}

}  // namespace mpolylog::specialseq
