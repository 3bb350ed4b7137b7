//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/cyclo.hpp>

#include <algorithm>
#include <mutex>

namespace mpolylog::cyclo {

Complex RootOfUnity::embed() const {
    Real angle = 2 * pi_value() * Real(p_) / Real(q_);
    return Complex(cos(angle), sin(angle));
}

RootOfUnity interval_product(const std::vector<RootOfUnity>& z, int j, int i) {
    if (j < 1 || i < j || i > int(z.size()))
        throw std::out_of_range("interval_product: need 1 <= j <= i <= r");
    RootOfUnity w;
    for (int k = j; k <= i; ++k) w = w * z[k - 1];
    return w;
}

std::set<RootOfUnity> distinct_products(const std::vector<RootOfUnity>& z) {
    std::set<RootOfUnity> s{RootOfUnity()};
    // Multiplicative closure by fixed-point iteration; finite since all
    // generators have finite order.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RootOfUnity> cur(s.begin(), s.end());
        for (const auto& a : cur)
            for (const auto& g : z)
                if (s.insert(a * g).second) grew = true;
    }
    return s;
}

std::vector<long long> exponent_of(const std::vector<RootOfUnity>& z,
                                   const RootOfUnity& xi) {
    const int r = int(z.size());
    std::vector<long long> k(r, 0);
    // Dictionary-order enumeration with k_i < order(z_i); the first match is
    // the smallest exponent.
    while (true) {
        RootOfUnity w;
        for (int i = 0; i < r; ++i) w = w * z[i].pow(k[i]);
        if (w == xi) return k;
        int i = r - 1;
        while (i >= 0) {
            if (++k[i] < z[i].order()) break;
            k[i] = 0;
            --i;
        }
        if (i < 0) throw std::domain_error("exponent_of: xi not generated by z");
    }
}

long long euler_phi(long long m) {
    long long result = m;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

std::map<long long, std::vector<Rational>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long long m) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(m);
    if (it != g_cyclo_cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod of Phi_d over proper divisors d; fill the
    // cache divisor-by-divisor, smallest first, to keep the lock simple.
    std::vector<long long> divisors;
    for (long long d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (long long d : divisors) {
        if (g_cyclo_cache.count(d)) continue;
        if (d == 1) {
            g_cyclo_cache[1] = {Rational(-1), Rational(1)};
            continue;
        }
        std::vector<Rational> num(d + 1, Rational(0));
        num[0] = -1;
        num[d] = 1;
        for (long long e : divisors) {
            if (e >= d || d % e != 0) continue;
            const std::vector<Rational>& phi_e = g_cyclo_cache.at(e);
            std::vector<Rational> quot(num.size() - phi_e.size() + 1, Rational(0));
            std::vector<Rational> rem = num;
            for (long long i = (long long)quot.size() - 1; i >= 0; --i) {
                Rational c = rem[i + phi_e.size() - 1];
                quot[i] = c;
                if (c == 0) continue;
                for (size_t j = 0; j < phi_e.size(); ++j)
                    rem[i + j] -= c * phi_e[j];
            }
            num = std::move(quot);
        }
        g_cyclo_cache[d] = std::move(num);
    }
    return g_cyclo_cache.at(m);
}

CycloNumber raw_cyclo(long long order, std::map<long long, Rational> coeffs) {
    CycloNumber x;
    x.order_ = order;
    x.coeffs_ = std::move(coeffs);
    x.reduce_();
    return x;
}

CycloNumber CycloNumber::from_root(const RootOfUnity& z) {
    std::map<long long, Rational> c;
    c[z.turn_num()] = 1;
    return raw_cyclo(z.order(), std::move(c));
}

void CycloNumber::reduce_() {
    const long long m = order_;
    // Fold exponents into [0, m) first.
    {
        std::map<long long, Rational> folded;
        for (auto& [e, c] : coeffs_) {
            long long ee = e % m;
            if (ee < 0) ee += m;
            auto [it, fresh] = folded.emplace(ee, c);
            if (!fresh) it->second += c;
        }
        coeffs_ = std::move(folded);
    }
    // Remainder modulo Phi_m: repeatedly rewrite the top power.
    const std::vector<Rational>& phi = cyclotomic_polynomial(m);
    const long long d = (long long)phi.size() - 1;  // = phi(m)
    while (!coeffs_.empty()) {
        auto top = std::prev(coeffs_.end());
        if (top->first < d) break;
        long long e = top->first;
        Rational c = top->second;
        coeffs_.erase(top);
        if (c == 0) continue;
        // zeta^e = -c * (phi - x^d) * zeta^{e-d}
        for (long long j = 0; j < d; ++j) {
            if (phi[j] == 0) continue;
            Rational add = -c * phi[j];
            long long ee = e - d + j;
            auto [it, fresh] = coeffs_.emplace(ee, add);
            if (!fresh) {
                it->second += add;
                if (it->second == 0) coeffs_.erase(it);
            } else if (it->second == 0) {
                coeffs_.erase(it);
            }
        }
    }
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) it = coeffs_.erase(it);
        else ++it;
    }
    if (is_rational() && order_ != 1) {
        order_ = 1;  // demote: equality and printing get the canonical order
    }
}

CycloNumber CycloNumber::lifted(long long m) const {
    if (m == order_) return *this;
    long long k = m / order_;
    std::map<long long, Rational> c;
    for (auto& [e, v] : coeffs_) c[e * k] = v;
    return raw_cyclo(m, std::move(c));
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    // Merge raw exponent maps in the common order; going through lifted()
    // values here would be wrong because reduce_ demotes rationals back to
    // order 1.
    long long m = lcm_ll(order_, o.order_);
    std::map<long long, Rational> merged;
    auto add_terms = [&](const CycloNumber& x) {
        long long k = m / x.order_;
        for (auto& [e, v] : x.coeffs_) {
            auto [it, fresh] = merged.emplace(e * k, v);
            if (!fresh) it->second += v;
        }
    };
    add_terms(*this);
    add_terms(o);
    return raw_cyclo(m, std::move(merged));
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber a = *this;
    for (auto& [e, v] : a.coeffs_) v = -v;
    return a;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    long long m = lcm_ll(order_, o.order_);
    CycloNumber a = lifted(m), b = o.lifted(m);
    std::map<long long, Rational> prod;
    for (auto& [e1, v1] : a.coeffs_)
        for (auto& [e2, v2] : b.coeffs_) {
            long long e = (e1 + e2) % m;
            Rational v = v1 * v2;
            auto [it, fresh] = prod.emplace(e, v);
            if (!fresh) it->second += v;
        }
    return raw_cyclo(m, std::move(prod));
}

namespace {

// Polynomials over Q as coefficient vectors, for the extended gcd below.
using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    qp_trim(c);
    return c;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        qp_trim(a);
    }
    qp_trim(q);
    return {q, a};
}

}  // namespace

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNumber: division by zero");
    if (is_rational()) return CycloNumber(Rational(1) / rational_value());
    // Extended Euclid in Q[x] against the cyclotomic modulus: find u with
    // u*f = 1 mod Phi_m.
    const long long m = order_;
    QPoly f(euler_phi(m), Rational(0));
    for (auto& [e, v] : coeffs_) f[e] = v;
    qp_trim(f);
    QPoly g = cyclotomic_polynomial(m);

    QPoly r0 = g, r1 = f;
    QPoly s0 = {}, s1 = {Rational(1)};  // s tracks the f-cofactor
    while (!r1.empty()) {
        auto [q, r2] = qp_divmod(r0, r1);
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // r0 = gcd = nonzero constant (Phi_m is irreducible over Q).
    if (r0.size() != 1)
        throw std::domain_error("CycloNumber: inverse failed (non-constant gcd)");
    Rational lead = r0[0];
    std::map<long long, Rational> c;
    for (size_t i = 0; i < s0.size(); ++i)
        if (s0[i] != 0) c[(long long)i] = s0[i] / lead;
    return raw_cyclo(m, std::move(c));
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const {
    return *this * o.inverse();
}

CycloNumber CycloNumber::conjugate() const {
    std::map<long long, Rational> c;
    for (auto& [e, v] : coeffs_) {
        long long ee = (order_ - e) % order_;
        auto [it, fresh] = c.emplace(ee, v);
        if (!fresh) it->second += v;
    }
    return raw_cyclo(order_, std::move(c));
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    long long m = lcm_ll(order_, o.order_);
    CycloNumber a = lifted(m), b = o.lifted(m);
    return a.coeffs_ == b.coeffs_;
}

std::strong_ordering CycloNumber::cmp_key(const CycloNumber& o) const {
    long long m = lcm_ll(order_, o.order_);
    CycloNumber a = lifted(m), b = o.lifted(m);
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    auto it = a.coeffs_.begin(), jt = b.coeffs_.begin();
    for (; it != a.coeffs_.end(); ++it, ++jt) {
        if (auto c = it->first <=> jt->first; c != 0) return c;
        if (it->second < jt->second) return std::strong_ordering::less;
        if (jt->second < it->second) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Complex CycloNumber::embed() const {
    Complex acc(Real(0), Real(0));
    for (auto& [e, v] : coeffs_)
        acc += RootOfUnity(e, order_).embed() * to_real(v);
    return acc;
}

std::string CycloNumber::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, v] : coeffs_) {
        std::string coeff = v.str();
        if (!first) {
            if (coeff[0] == '-') { out += "-"; coeff = coeff.substr(1); }
            else out += "+";
        }
        first = false;
        if (e == 0) { out += coeff; continue; }
        if (coeff == "1") {}
        else if (coeff == "-1") out += "-";
        else out += coeff + "*";
        out += "zeta(" + std::to_string(order_) + ")^" + std::to_string(e);
    }
    return out;
}

}  // namespace mpolylog::cyclo
