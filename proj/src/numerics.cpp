//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/numerics.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpolylog::numerics {

using asymptotics::Caps;
using asymptotics::TailValue;

void EvalConfig::validate() const {
    if (precision < 30 || precision > int(kWorkingDigits))
        throw std::invalid_argument("EvalConfig: precision must be in [30, " +
                                    std::to_string(kWorkingDigits) + "]");
    if (!(tolerance > pow(Real(10), -precision / 2)))
        throw std::invalid_argument("EvalConfig: tolerance must exceed 10^(-precision/2)");
    if (!(delta > 0)) throw std::invalid_argument("EvalConfig: delta must be positive");
}

namespace {

std::string vec_str(const std::vector<Complex>& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + complex_str(s[i], 6);
    return out + ")";
}

std::string roots_str(const std::vector<RootOfUnity>& z) {
    std::string out = "(";
    for (size_t i = 0; i < z.size(); ++i) out += (i ? "," : "") + z[i].str();
    return out + ")";
}

std::string ivec_str(const std::vector<long long>& a) {
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i)
        out += (i ? "," : "") + std::to_string(a[i]);
    return out + ")";
}

// Per-variable weight w(n) = z^n (log n)^k n^{-s}, with an integer fast path
// for the exponent.
class Weight {
public:
    Weight(const RootOfUnity& z, const Complex& s, unsigned logpow)
        : s_(s), logpow_(logpow) {
        order_ = z.order();
        zpow_.reserve(size_t(order_));
        for (long long t = 0; t < order_; ++t) zpow_.push_back(z.pow(t).embed());
        Real re = real(s), im = imag(s);
        Real rounded = floor(re + Real(1) / 2);
        is_int_ = (abs(im) < machine_tail() && abs(re - rounded) < machine_tail() &&
                   abs(rounded) < Real(1000000));
        int_exponent_ = is_int_ ? llround(rounded.convert_to<double>()) : 0;
    }

    // log n supplied by the sweep so it is computed once per n.
    Complex operator()(long long n, const Real& logn) const {
        Complex v = zpow_[size_t(n % order_)];
        if (is_int_) {
            if (int_exponent_ > 0) v /= pow(Real(n), int(int_exponent_));
            else if (int_exponent_ < 0) v *= pow(Real(n), int(-int_exponent_));
        } else {
            v *= exp(-s_ * logn);
        }
        for (unsigned t = 0; t < logpow_; ++t) v *= logn;
        return v;
    }

private:
    long long order_;
    std::vector<Complex> zpow_;
    Complex s_;
    bool is_int_;
    long long int_exponent_;
    unsigned logpow_;
};

std::vector<Weight> make_weights(const std::vector<RootOfUnity>& z,
                                 const std::vector<Complex>& s,
                                 const std::vector<unsigned>& k_vec) {
    std::vector<Weight> w;
    w.reserve(z.size());
    for (size_t j = 0; j < z.size(); ++j)
        w.emplace_back(z[j], s[j], k_vec.empty() ? 0u : k_vec[j]);
    return w;
}

long long lcm_of_orders(const std::vector<RootOfUnity>& z) {
    long long l = 1;
    for (const auto& zi : z) l = lcm_ll(l, zi.order());
    return l;
}

}  // namespace

Rational partial_sum_exact(const std::vector<RootOfUnity>& z,
                           const std::vector<long long>& a, long long N) {
    const int r = int(z.size());
    if (int(a.size()) != r)
        throw std::invalid_argument("partial_sum_exact: dimension mismatch");
    std::vector<int> sign(r);
    for (int j = 0; j < r; ++j) {
        if (z[j].order() == 1) sign[j] = 1;
        else if (z[j].order() == 2) sign[j] = -1;
        else throw std::invalid_argument("partial_sum_exact: roots must be +-1");
        if (a[j] > 0)
            throw std::invalid_argument("partial_sum_exact: exponents must be <= 0");
    }
    if (r == 0) return Rational(1);
    std::vector<Rational> acc(size_t(r) + 1, Rational(0));
    acc[size_t(r)] = 1;
    for (long long n = 1; n < N; ++n) {
        // Strict ordering: A_j(n+1) = A_j(n) + w_j(n) A_{j+1}(n); updating j
        // in increasing order keeps A_{j+1} at its previous value.
        for (int j = 0; j < r; ++j) {
            Rational w = 1;
            for (long long t = 0; t < -a[size_t(j)]; ++t) w *= n;
            if (sign[size_t(j)] == -1 && (n % 2)) w = -w;
            acc[size_t(j)] += w * acc[size_t(j) + 1];
        }
    }
    return acc[0];
}

std::vector<Complex> partial_sum_sweep(const std::vector<RootOfUnity>& z,
                                       const std::vector<Complex>& s,
                                       const std::vector<unsigned>& k_vec,
                                       const std::vector<long long>& Ns) {
    const int r = int(z.size());
    if (int(s.size()) != r || (!k_vec.empty() && int(k_vec.size()) != r))
        throw std::invalid_argument("partial_sum_sweep: dimension mismatch");
    std::vector<Complex> out(Ns.size(), Complex(Real(0), Real(0)));
    if (Ns.empty()) return out;
    if (r == 0) {
        std::fill(out.begin(), out.end(), Complex(Real(1), Real(0)));
        return out;
    }
    std::vector<long long> sorted = Ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const long long maxN = sorted.back();

    std::vector<Weight> w = make_weights(z, s, k_vec);
    std::vector<Complex> acc(size_t(r) + 1, Complex(Real(0), Real(0)));
    acc[size_t(r)] = Complex(Real(1), Real(0));

    std::map<long long, Complex> at;
    for (long long v : sorted)
        if (v <= 1) at[v] = Complex(Real(0), Real(0));
    for (long long n = 1; n < maxN; ++n) {
        Real logn = log(Real(n));
        for (int j = 0; j < r; ++j)
            acc[size_t(j)] += w[size_t(j)](n, logn) * acc[size_t(j) + 1];
        long long reached = n + 1;
        if (std::binary_search(sorted.begin(), sorted.end(), reached))
            at[reached] = acc[0];
    }
    for (size_t i = 0; i < Ns.size(); ++i)
        out[i] = (Ns[i] <= 1) ? Complex(Real(0), Real(0)) : at.at(Ns[i]);
    return out;
}

Complex partial_sum(const std::vector<RootOfUnity>& z,
                    const std::vector<Complex>& s,
                    const std::vector<unsigned>& k_vec, long long N) {
    return partial_sum_sweep(z, s, k_vec, {N})[0];
}

Complex star_sum_range(const std::vector<RootOfUnity>& z,
                       const std::vector<Complex>& s, long long N, long long M) {
    const int r = int(z.size());
    if (int(s.size()) != r)
        throw std::invalid_argument("star_sum_range: dimension mismatch");
    if (r == 0) return Complex(Real(1), Real(0));
    if (N < 1) N = 1;
    if (M <= N) return Complex(Real(0), Real(0));
    std::vector<Weight> w = make_weights(z, s, {});
    // C_j(m) = sum over m >= n_j >= ... >= n_r >= N; updating j in decreasing
    // order makes C_{j+1}(m) current at level j.
    std::vector<Complex> c(size_t(r) + 1, Complex(Real(0), Real(0)));
    c[size_t(r)] = Complex(Real(1), Real(0));
    for (long long m = N; m < M; ++m) {
        Real logm = log(Real(m));
        for (int j = r - 1; j >= 0; --j)
            c[size_t(j)] += w[size_t(j)](m, logm) * c[size_t(j) + 1];
    }
    return c[0];
}

// ---------------------------------------------------------------------------
// Elementary tail corrections (independent of the expansion machinery)

namespace {

// sum_{m > M} m^{-s}: midpoint rule with one curvature correction.
Complex real_power_tail(const Complex& s, long long M) {
    Real x = Real(M) + Real(1) / 2;
    Real logx = log(x);
    Complex lead = exp(-(s - Real(1)) * logx) / (s - Real(1));
    Complex corr = -s * exp(-(s + Real(1)) * logx) / 24;
    return lead + corr;
}

// sum_{m > M} z^m m^{-s} for z != 1, by repeated summation by parts:
// S(K) = z^K f(K)/(1-z) + (z/(1-z)) sum z^m Df(m), iterated.
Complex root_power_tail(const RootOfUnity& z, const Complex& s, long long M,
                        Real* bound_out) {
    const int parts = 5;
    const long long K = M + 1;
    Complex zc = z.embed();
    Complex one(Real(1), Real(0));
    Complex factor = zc / (one - zc);
    std::vector<Complex> delta(parts + 1);
    for (int i = 0; i <= parts; ++i)
        delta[size_t(i)] = exp(-s * log(Real(K + i)));
    Complex lead = z.pow(K).embed() / (one - zc);
    Complex acc(Real(0), Real(0));
    Complex partpow = one;
    for (int j = 0; j < parts; ++j) {
        acc += lead * partpow * delta[0];
        for (size_t i = 0; i + 1 < delta.size(); ++i)
            delta[i] = delta[i + 1] - delta[i];
        delta.pop_back();
        partpow *= factor;
    }
    if (bound_out) {
        Real sig = real(s);
        Real mag = abs(specialseq::pochhammer(s, parts)) *
                   pow(Real(K), -(sig + parts - 1).convert_to<double>());
        *bound_out = mag * pow(abs(factor), parts) /
                     std::max(Real(Real(1) / 2), Real(sig + parts - 1));
    }
    return acc;
}

struct DeepTail {
    Complex value;
    Real bound;
    long long m_cut = 0;
};

// Full weak-ordered tail at a point with positive prefix margins: range
// summation to an adaptive cut, outer-variable correction against the inner
// limit (supplied recursively).
DeepTail star_tail_deep(const std::vector<RootOfUnity>& z,
                        const std::vector<Complex>& s, long long N,
                        const Real& target, long long n_max) {
    const int r = int(z.size());
    DeepTail out;
    out.value = Complex(Real(1), Real(0));
    out.bound = 0;
    out.m_cut = N;
    if (r == 0) return out;

    DeepTail inner;
    if (r == 1) {
        inner.value = Complex(Real(1), Real(0));
        inner.bound = 0;
    } else {
        inner = star_tail_deep({z.begin() + 1, z.end()}, {s.begin() + 1, s.end()},
                               N, target / 4, n_max);
    }

    std::vector<Weight> w = make_weights(z, s, {});
    std::vector<Complex> c(size_t(r) + 1, Complex(Real(0), Real(0)));
    c[size_t(r)] = Complex(Real(1), Real(0));
    long long M = std::max<long long>(4 * N, 2000);
    long long m = N;
    Real dev_prev = -1;
    while (true) {
        for (; m < M; ++m) {
            Real logm = log(Real(m));
            for (int j = r - 1; j >= 0; --j)
                c[size_t(j)] += w[size_t(j)](m, logm) * c[size_t(j) + 1];
        }
        const Complex c2_inf = inner.value;
        const Real dev = (r == 1) ? Real(0) : abs(c[1] - c2_inf);
        Complex corr;
        Real corr_bound;
        if (z[0].is_one()) {
            corr = c2_inf * real_power_tail(s[0], M - 1);
            corr_bound = abs(corr) * 40 / (Real(M) * Real(M));
        } else {
            Real b = 0;
            corr = c2_inf * root_power_tail(z[0], s[0], M - 1, &b);
            corr_bound = abs(c2_inf) * b;
        }
        // Deviation part: |sum_{m>=M} w_1 (C_2 - C_2inf)|; its decay rate is
        // estimated from the previous doubling.
        Real sigma1 = real(s[0]);
        Real dev_slope = 1;
        if (dev_prev > 0 && dev > 0 && dev < dev_prev)
            dev_slope = log(dev_prev / dev) / log(Real(2));
        Real dev_bound = dev * Real(M) * pow(Real(M), -sigma1.convert_to<double>()) /
                         std::max(Real(Real(1) / 2), Real(sigma1 + dev_slope - 1));
        Real total = corr_bound + dev_bound + inner.bound * (Real(1) + abs(corr));
        if (total < target || 2 * M > n_max) {
            out.value = c[0] + corr;
            out.bound = total;
            out.m_cut = M;
            return out;
        }
        dev_prev = dev;
        M *= 2;
    }
}

// Values of Li*(s_1+k, s_2, ...)_{>= N} for k = 0..K in one shared sweep.
std::vector<DeepTail> shifted_tails(const std::vector<RootOfUnity>& z,
                                    const std::vector<Complex>& s, long long N,
                                    int K, const Real& target, long long n_max) {
    const int r = int(z.size());
    DeepTail inner;
    if (r == 1) {
        inner.value = Complex(Real(1), Real(0));
        inner.bound = 0;
    } else {
        inner = star_tail_deep({z.begin() + 1, z.end()}, {s.begin() + 1, s.end()},
                               N, target / 4, n_max);
    }
    std::vector<Weight> w = make_weights(z, s, {});
    std::vector<Complex> c(size_t(r) + 1, Complex(Real(0), Real(0)));
    c[size_t(r)] = Complex(Real(1), Real(0));
    std::vector<Complex> acc(size_t(K) + 1, Complex(Real(0), Real(0)));
    long long M = std::max<long long>(4 * N, 2000);
    long long m = N;
    Real dev_prev = -1;
    while (true) {
        for (; m < M; ++m) {
            Real logm = log(Real(m));
            for (int j = r - 1; j >= 1; --j)
                c[size_t(j)] += w[size_t(j)](m, logm) * c[size_t(j) + 1];
            Complex inner_v = (r == 1) ? Complex(Real(1), Real(0)) : c[1];
            Complex base = w[0](m, logm) * inner_v;
            Real invm = Real(1) / Real(m);
            for (int k = 0; k <= K; ++k) {
                acc[size_t(k)] += base;
                if (k < K) base *= invm;
            }
        }
        const Complex c2_inf = inner.value;
        const Real dev = (r == 1) ? Real(0) : abs(c[1] - c2_inf);
        Real sigma1 = real(s[0]);
        Real dev_slope = 1;
        if (dev_prev > 0 && dev > 0 && dev < dev_prev)
            dev_slope = log(dev_prev / dev) / log(Real(2));
        Real dev_bound = dev * Real(M) * pow(Real(M), -sigma1.convert_to<double>()) /
                         std::max(Real(Real(1) / 2), Real(sigma1 + dev_slope - 1));
        // Corrections per shift (outer exponent s_1 + k).
        std::vector<DeepTail> out(size_t(K) + 1);
        Real worst = 0;
        for (int k = 0; k <= K; ++k) {
            Complex corr;
            Real corr_bound;
            Complex sk = s[0] + Real(k);
            if (z[0].is_one()) {
                corr = c2_inf * real_power_tail(sk, M - 1);
                corr_bound = abs(corr) * 40 / (Real(M) * Real(M));
            } else {
                Real b = 0;
                corr = c2_inf * root_power_tail(z[0], sk, M - 1, &b);
                corr_bound = abs(c2_inf) * b;
            }
            Real total = corr_bound + dev_bound * pow(Real(M), -double(k)) +
                         inner.bound * (Real(1) + abs(corr));
            out[size_t(k)] = {acc[size_t(k)] + corr, total, M};
            if (k == 0) worst = total;
        }
        if (worst < target || 2 * M > n_max) return out;
        dev_prev = dev;
        M *= 2;
    }
}

// Lemma-5-style iterated bound for the remainder of the weak sum beyond M
// (real parts only; reported as a diagnostic).
Real weak_remainder_bound(const std::vector<Complex>& s, long long M) {
    Real inner_growth = 0;
    Real inner_const = 1;
    for (size_t j = 1; j < s.size(); ++j) {
        Real sig = real(s[j]);
        if (sig > 1) {
            inner_const *= sig / (sig - 1);
        } else {
            inner_growth += Real(1) - sig;
            inner_const *= 4;
        }
    }
    Real e = real(s[0]) - inner_growth;
    if (e <= 1) return Real("1e9");
    // first term + integral of the outer envelope
    return inner_const * (pow(Real(M), (-e).convert_to<double>()) +
                          pow(Real(M), (Real(1) - e).convert_to<double>()) / (e - 1));
}

}  // namespace

TailEstimate star_tail(const std::vector<RootOfUnity>& z,
                       const std::vector<Complex>& s, long long N,
                       long long M_cut, const EvalConfig& cfg) {
    (void)cfg;
    if (!z.empty() && !domains::in_U(s))
        throw std::domain_error("star_tail: point outside U_r (use the asymptotic tail)");
    TailEstimate out;
    out.value = star_sum_range(z, s, N, M_cut);
    out.m_cut = M_cut;
    out.bound = (M_cut <= N || z.empty()) ? Real(0) : weak_remainder_bound(s, M_cut);
    return out;
}

TailEstimate star_tail_full(const std::vector<RootOfUnity>& z,
                            const std::vector<Complex>& s, long long N,
                            const EvalConfig& cfg) {
    if (!z.empty() && !domains::in_U(s))
        throw std::domain_error("star_tail_full: point outside U_r");
    DeepTail d = star_tail_deep(z, s, N, cfg.tolerance / 100, cfg.n_max);
    return {d.value, d.bound, d.m_cut};
}

// ---------------------------------------------------------------------------
// Regularised values

namespace {

struct Grid {
    std::vector<long long> points;
};

Grid make_grid(long long start, long long span, long long count, long long L,
               long long offset_bump) {
    Grid g;
    long long n0 = start + offset_bump;
    long long h = std::max<long long>(1, (span - n0) / std::max<long long>(count, 1));
    while (gcd_ll(h, L) != 1) ++h;
    for (long long i = 0; i < count; ++i) g.points.push_back(n0 + i * h);
    return g;
}

}  // namespace

RegularizedValue regularized_value(const std::vector<RootOfUnity>& z,
                                   const std::vector<long long>& a,
                                   const std::vector<unsigned>& k_vec,
                                   const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    if (int(a.size()) != r || int(k_vec.size()) != r)
        throw std::invalid_argument("regularized_value: dimension mismatch");
    IndexProfile profile(z);
    RegularizedValue out;
    out.z = z;
    out.a = a;
    out.k_vec = k_vec;
    if (r == 0) {
        out.value = Complex(Real(1), Real(0));
        out.ok = true;
        return out;
    }

    std::vector<Complex> spoint;
    for (long long av : a) spoint.push_back(Complex(Real(av), Real(0)));
    const long long L = lcm_of_orders(z);
    const Real fit_tol = cfg.tolerance / 10;
    Caps caps = cfg.caps;
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto model = asymptotics::AsymptoticModel::build(profile, a, k_vec, caps);
        long long cols = (long long)model.terms.size();
        long long count = (long long)std::ceil(cfg.oversample * double(cols)) + 10;
        long long span = cfg.grid_span * (attempt + 1);
        Grid ga = make_grid(cfg.grid_start, span, count, L, 0);
        Grid gb = make_grid(cfg.grid_start, span, count, L, 23);
        std::vector<std::pair<long long, Complex>> samples_a;
        auto run = [&](const Grid& g, bool keep) {
            std::vector<Complex> v = partial_sum_sweep(z, spoint, k_vec, g.points);
            std::vector<std::pair<long long, Complex>> samples;
            for (size_t i = 0; i < g.points.size(); ++i)
                samples.emplace_back(g.points[i], v[i]);
            if (keep) samples_a = samples;
            return asymptotics::decompose_sequence(samples, model, fit_tol);
        };
        auto fa = run(ga, true);
        auto fb = run(gb, false);
        out.samples = std::move(samples_a);
        out.value = fa.constant;
        out.residual = fa.max_residual;
        out.grid_agreement = abs(fa.constant - fb.constant);
        out.model = model;
        out.coefficients = fa.coefficients;
        out.ok = fa.ok && fb.ok && out.grid_agreement <= 10 * fit_tol;
        if (out.ok) return out;
        out.message = "fit diagnostics: residual " + out.residual.str(3) +
                      ", grid agreement " + out.grid_agreement.str(3);
        caps.m_max += 2;  // absorb more of the o(1) part and retry
    }
    return out;
}

std::map<std::vector<unsigned>, RegularizedValue> regularized_taylor_table(
    const std::vector<RootOfUnity>& z, const std::vector<long long>& a,
    int degree, const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    std::map<std::vector<unsigned>, RegularizedValue> table;
    if (r == 0) return table;
    IndexProfile profile(z);
    const long long L = lcm_of_orders(z);
    const Real fit_tol = cfg.tolerance / 10;

    // Group the k-vectors by total degree: each group gets the tightest log
    // cap j_max = r + |k| (surplus log columns trade the constant against
    // truncation junk) and shares one factorisation per grid. The low-order
    // coefficients carry the whole Taylor weight, so the grids sit deeper
    // and keep more decaying columns than the plain single-value fit.
    Caps caps = cfg.caps;
    caps.m_max = std::max(caps.m_max, 5);
    const long long start = std::max<long long>(cfg.grid_start, 150);
    const long long span = std::max<long long>(cfg.grid_span, 6000);

    std::vector<std::vector<std::vector<unsigned>>> by_total(size_t(degree) + 1);
    std::vector<unsigned> k(size_t(r), 0);
    while (true) {
        int tot = 0;
        for (unsigned v : k) tot += int(v);
        by_total[size_t(tot)].push_back(k);
        int idx = r - 1;
        while (idx >= 0) {
            ++k[size_t(idx)];
            int t = 0;
            for (unsigned v : k) t += int(v);
            if (t <= degree && int(k[size_t(idx)]) <= cfg.taylor_degree_per_var) break;
            k[size_t(idx)] = 0;
            --idx;
        }
        if (idx < 0) break;
    }

    std::vector<Complex> spoint;
    for (long long av : a) spoint.push_back(Complex(Real(av), Real(0)));
    for (int tot = 0; tot <= degree; ++tot) {
        if (by_total[size_t(tot)].empty()) continue;
        Caps group_caps = caps;
        group_caps.j_max = r + tot;
        auto model = asymptotics::AsymptoticModel::build(
            profile, a, by_total[size_t(tot)].front(), group_caps);
        long long cols = (long long)model.terms.size();
        long long count = (long long)std::ceil(cfg.oversample * double(cols)) + 10;
        Grid ga = make_grid(start, span, count, L, 0);
        Grid gb = make_grid(start, span, count, L, 23);
        asymptotics::SequenceFitter fitter_a(model, ga.points);
        asymptotics::SequenceFitter fitter_b(model, gb.points);
        for (const auto& kv : by_total[size_t(tot)]) {
            auto fa = fitter_a.fit(partial_sum_sweep(z, spoint, kv, ga.points), fit_tol);
            auto fb = fitter_b.fit(partial_sum_sweep(z, spoint, kv, gb.points), fit_tol);
            RegularizedValue rv;
            rv.z = z;
            rv.a = a;
            rv.k_vec = kv;
            rv.value = fa.constant;
            rv.residual = fa.max_residual;
            rv.grid_agreement = abs(fa.constant - fb.constant);
            rv.model = model;
            rv.coefficients = fa.coefficients;
            rv.ok = fa.ok && fb.ok && rv.grid_agreement <= 10 * fit_tol;
            if (!rv.ok)
                rv.message = "fit diagnostics: residual " + rv.residual.str(3) +
                             ", grid agreement " + rv.grid_agreement.str(3);
            table.emplace(kv, std::move(rv));
        }
    }
    return table;
}

RegTaylorValue li_reg_taylor(const std::vector<RootOfUnity>& z,
                             const std::vector<long long>& a,
                             const std::vector<Complex>& s,
                             const EvalConfig& cfg) {
    const int r = int(z.size());
    RegTaylorValue out;
    out.value = Complex(Real(1), Real(0));
    out.fit_error = 0;
    out.trunc_error = 0;
    out.ok = true;
    if (r == 0) return out;
    auto table = regularized_taylor_table(z, a, cfg.taylor_degree, cfg);
    std::vector<Complex> ds(s.size());
    Real dmax = 0;
    for (int j = 0; j < r; ++j) {
        ds[size_t(j)] = s[size_t(j)] - Real(a[size_t(j)]);
        dmax = std::max(dmax, abs(ds[size_t(j)]));
    }
    Complex acc(Real(0), Real(0));
    Real biggest_ell = 0;
    for (const auto& [kv, rv] : table) {
        int kv_tot = 0;
        for (unsigned v : kv) kv_tot += int(v);
        // Only the low orders carry real Taylor weight; higher orders feed
        // the error budget through their delta powers.
        if (!rv.ok && kv_tot <= 1) out.ok = false;
        int tot = 0;
        Complex term = rv.value;
        Rational pref = 1;
        for (int j = 0; j < r; ++j) {
            tot += int(kv[size_t(j)]);
            pref /= factorial_q(kv[size_t(j)]);
            for (unsigned e = 0; e < kv[size_t(j)]; ++e) term *= ds[size_t(j)];
        }
        if (tot % 2 == 1) pref = -pref;
        acc += term * to_real(pref);
        out.fit_error += (rv.residual + rv.grid_agreement) * pow(dmax, tot);
        biggest_ell = std::max(biggest_ell, abs(rv.value));
    }
    out.value = acc;
    out.trunc_error = biggest_ell * pow(dmax, cfg.taylor_degree + 1) *
                      Real(1 << std::min(cfg.taylor_degree + r, 20));
    return out;
}

// ---------------------------------------------------------------------------
// li_value

namespace {

// One averaging pass over windows of one oscillation period.
std::vector<Complex> average_pass(const std::vector<Complex>& v, long long L) {
    if (L <= 1 || v.size() < size_t(L)) return v;
    std::vector<Complex> out(v.size() - size_t(L) + 1, Complex(Real(0), Real(0)));
    for (size_t i = 0; i < out.size(); ++i) {
        Complex acc(Real(0), Real(0));
        for (long long j = 0; j < L; ++j) acc += v[i + size_t(j)];
        out[i] = acc / Real(L);
    }
    return out;
}

}  // namespace

namespace {

Complex li_value_impl(const std::vector<RootOfUnity>& z,
                      const std::vector<Complex>& s, const EvalConfig& cfg);

}  // namespace

Complex li_value(const std::vector<RootOfUnity>& z,
                 const std::vector<Complex>& s, const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    if (int(s.size()) != r) throw std::invalid_argument("li_value: dimension mismatch");
    if (r == 0) return Complex(Real(1), Real(0));

    IndexProfile profile(z);
    auto fams = domains::polar_hyperplanes(profile);
    domains::Hyperplane nearest{0, 0};
    Real dist = domains::pole_distance(fams, s, &nearest);
    // Rejects exact (and near-machine) hits only; points a deliberate tiny
    // offset away evaluate fine at working precision.
    if (dist < pow(Real(10), -int(kWorkingDigits) + 12))
        throw PoleError("point lies on candidate polar hyperplane s_1+...+s_" +
                        std::to_string(nearest.last_index) + " = " +
                        std::to_string(nearest.level));

    try {
        return li_value_impl(z, s, cfg);
    } catch (const std::domain_error&) {
    } catch (const PoleError&) {
    }
    // The point is off every candidate hyperplane of Li itself, so a pole on
    // the way (a star-tail factor, or a suffix function evaluated on its own
    // polar set) is a removable route degeneracy: the paired terms of the
    // cutoff identity cancel. Evaluate symmetrically around the point; the
    // O(rho) parts cancel and the error is O(rho^2).
    Real rho = cfg.delta / Real("1e9");
    Real dir = 1;
    std::vector<Complex> sp = s, sm = s;
    for (int j = 0; j < r; ++j) {
        Complex off(Real(0), rho * dir);
        sp[size_t(j)] += off;
        sm[size_t(j)] -= off;
        dir /= pi_value();
    }
    return (li_value_impl(z, sp, cfg) + li_value_impl(z, sm, cfg)) / Real(2);
}

namespace {

Complex li_value_impl(const std::vector<RootOfUnity>& z,
                      const std::vector<Complex>& s, const EvalConfig& cfg) {
    const int r = int(z.size());
    IndexProfile profile(z);

    std::vector<Complex> suffix_li(size_t(r) + 1, Complex(Real(1), Real(0)));
    for (int i = 1; i < r; ++i) {
        std::vector<RootOfUnity> zs(z.begin() + i, z.end());
        std::vector<Complex> ss(s.begin() + i, s.end());
        suffix_li[size_t(i)] = li_value(zs, ss, cfg);
    }

    const long long L = lcm_of_orders(z);
    const int passes = (L == 1) ? 0 : cfg.averaging_passes;
    const long long W = passes * (L - 1) + 1;
    const long long N0 = cfg.averaging_base;

    std::vector<long long> Ns(size_t(W), 0);
    for (long long i = 0; i < W; ++i) Ns[size_t(i)] = N0 + i;
    std::vector<unsigned> kzero(size_t(r), 0);
    std::vector<Complex> E = partial_sum_sweep(z, s, kzero, Ns);

    // Cutoff identity: Li = Li_{<N} - sum_{i>=1} (-1)^i Tail_i(N) Li(suffix_i)
    // with the oscillation-free tail parts; the oscillatory remainder is
    // cancelled by the averaging below.
    for (int i = 1; i <= r; ++i) {
        IndexProfile wprof = profile.reversed_prefix(i);
        if (wprof.q_prefix(i) == 0) continue;  // expansion identically zero
        std::vector<Complex> t_pt;
        std::vector<long long> anchor;
        t_pt.resize(size_t(i));
        anchor.resize(size_t(i));
        for (int j = 0; j < i; ++j) {
            t_pt[size_t(j)] = s[size_t(i - 1 - j)];
            anchor[size_t(j)] = llround(real(t_pt[size_t(j)]).convert_to<double>());
        }
        auto tails = asymptotics::truncated_tail_window(wprof, anchor, t_pt, Ns, cfg.caps);
        Real sign = (i % 2 == 0) ? Real(1) : Real(-1);
        for (size_t wdx = 0; wdx < Ns.size(); ++wdx)
            E[wdx] -= sign * tails[wdx].value * suffix_li[size_t(i)];
    }

    std::vector<Complex> avg = E;
    for (int p = 0; p < passes; ++p) avg = average_pass(avg, L);
    return avg[0];
}

}  // namespace

// ---------------------------------------------------------------------------
// Verification suites

VerifyReport verify_translation(const std::vector<RootOfUnity>& z,
                                const std::vector<Complex>& s, long long N,
                                const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    if (r < 1 || int(s.size()) != r)
        throw std::invalid_argument("verify_translation: bad inputs");
    if (!domains::in_U(s))
        throw std::domain_error("verify_translation: s must lie in U_r");

    VerifyReport rep;
    rep.identity = "translation";
    rep.inputs = "z=" + roots_str(z) + " s=" + vec_str(s) + " N=" + std::to_string(N);
    rep.tolerance = cfg.tolerance;

    Complex lhs(Real(0), Real(0));
    Real lhs_bound = 0;
    if (!z[0].is_one()) {
        std::vector<Complex> shifted = s;
        shifted[0] -= Real(1);
        DeepTail t = star_tail_deep(z, shifted, N, cfg.tolerance / 20, cfg.n_max);
        Complex zinv = z[0].conjugate().embed();
        lhs += (Complex(Real(1), Real(0)) - zinv) * t.value;
        lhs_bound += t.bound * 2;
    }
    if (r == 1) {
        lhs += z[0].pow(N - 1).embed() * exp(-(s[0] - Real(1)) * log(Real(N)));
    } else {
        std::vector<RootOfUnity> merged_z;
        merged_z.push_back(z[0] * z[1]);
        for (int j = 2; j < r; ++j) merged_z.push_back(z[size_t(j)]);
        std::vector<Complex> merged_s;
        merged_s.push_back(s[0] + s[1] - Real(1));
        for (int j = 2; j < r; ++j) merged_s.push_back(s[size_t(j)]);
        DeepTail t = star_tail_deep(merged_z, merged_s, N, cfg.tolerance / 20, cfg.n_max);
        lhs += z[0].conjugate().embed() * t.value;
        lhs_bound += t.bound;
    }

    // Right side: the k-series with all shifted tails from one sweep; the
    // dropped k > K remainder is controlled by the uniform-convergence bound.
    const int K = std::max<int>(12, int(std::ceil(
        (double(cfg.precision) / 2) / std::max(1.0, std::log10(double(N))))));
    auto tails = shifted_tails(z, s, N, K, cfg.tolerance / 40, cfg.n_max);
    Complex rhs(Real(0), Real(0));
    Real rhs_bound = 0;
    Complex pochacc = s[0] - Real(1);  // (s_1 - 1)_{k+1}
    Real factk = 1;
    Real tail_mag = 0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            pochacc *= s[0] - Real(1) + Real(k);
            factk *= k;
        }
        Complex coeff = pochacc / (factk * (k + 1));
        if (k % 2 == 1) coeff = -coeff;
        Complex term = coeff * tails[size_t(k)].value;
        rhs += term;
        rhs_bound += tails[size_t(k)].bound * abs(coeff);
        if (k == K) tail_mag = abs(term);
    }
    rhs_bound += tail_mag;  // geometric remainder of the k-series

    rep.residual = abs(lhs - rhs);
    rep.pass = rep.residual < cfg.tolerance;
    rep.detail = "bounds: lhs " + lhs_bound.str(3) + ", rhs " + rhs_bound.str(3);
    return rep;
}

VerifyReport verify_combi(const std::vector<RootOfUnity>& z,
                          const std::vector<Complex>& s, long long N,
                          const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    if (r < 1 || int(s.size()) != r)
        throw std::invalid_argument("verify_combi: bad inputs");

    VerifyReport rep;
    rep.identity = "cutoff";
    rep.inputs = "z=" + roots_str(z) + " s=" + vec_str(s) + " N=" + std::to_string(N);
    rep.tolerance = cfg.tolerance;

    std::vector<unsigned> kzero(size_t(r), 0);
    Complex lhs = partial_sum(z, s, kzero, N);

    Complex rhs(Real(0), Real(0));
    for (int i = 0; i <= r; ++i) {
        Complex tail(Real(1), Real(0));
        if (i >= 1) {
            std::vector<RootOfUnity> zrev(z.begin(), z.begin() + i);
            std::reverse(zrev.begin(), zrev.end());
            std::vector<Complex> srev(s.begin(), s.begin() + i);
            std::reverse(srev.begin(), srev.end());
            if (!domains::in_U(srev))
                throw std::domain_error(
                    "verify_combi: reversed prefix outside U_i (pick a deeper point)");
            DeepTail t = star_tail_deep(zrev, srev, N, cfg.tolerance / 20, cfg.n_max);
            tail = t.value;
        }
        Complex suffix(Real(1), Real(0));
        if (i < r) {
            std::vector<RootOfUnity> zs(z.begin() + i, z.end());
            std::vector<Complex> ss(s.begin() + i, s.end());
            suffix = li_value(zs, ss, cfg);
        }
        Complex term = tail * suffix;
        if (i % 2 == 1) term = -term;
        rhs += term;
    }
    rep.residual = abs(lhs - rhs);
    rep.pass = rep.residual < cfg.tolerance;
    return rep;
}

VerifyReport verify_expansion(const std::vector<RootOfUnity>& z,
                              const std::vector<long long>& a,
                              ratfield::ExpansionMode mode,
                              const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    if (r < 1 || int(a.size()) != r)
        throw std::invalid_argument("verify_expansion: bad inputs");

    IndexProfile profile(z);
    ratfield::LaurentExpansion lex = ratfield::laurent_expansion(profile, a, mode);

    VerifyReport rep;
    rep.identity = (mode == ratfield::ExpansionMode::Boundary) ? "laurent-boundary"
                                                               : "laurent-general";
    rep.inputs = "z=" + roots_str(z) + " a=" + ivec_str(a);

    // s = a + delta (1, 1/pi, 1/pi^2, ...) with a deterministic redraw when
    // the direction lands on a coefficient denominator.
    unsigned redraw = 0;
    while (true) {
        Real scale = cfg.delta * (Real(100 + 37 * redraw) / 100);
        std::vector<Complex> s(a.size());
        Real dir = 1;
        for (int j = 0; j < r; ++j) {
            s[size_t(j)] = Complex(Real(a[size_t(j)]) + scale * dir, Real(0));
            dir /= pi_value();
        }
        try {
            Complex lhs = li_value(z, s, cfg);
            Complex rhs(Real(0), Real(0));
            Real budget = cfg.tolerance;
            bool fits_ok = true;
            for (size_t t = 0; t < lex.indices.size(); ++t) {
                int i = lex.indices[t];
                Complex c = lex.coeff[t].eval(s);
                std::vector<RootOfUnity> zs(z.begin() + i, z.end());
                std::vector<long long> as(a.begin() + i, a.end());
                std::vector<Complex> ss(s.begin() + i, s.end());
                RegTaylorValue reg = li_reg_taylor(zs, as, ss, cfg);
                fits_ok = fits_ok && reg.ok;
                rhs += c * reg.value;
                budget += (reg.fit_error + reg.trunc_error) * abs(c);
            }
            rep.residual = abs(lhs - rhs);
            rep.tolerance = budget;
            rep.pass = fits_ok && rep.residual < budget;
            rep.detail = "s = a + " + scale.str(3) + "*(1,1/pi,...)" +
                         (fits_ok ? "" : "; fit diagnostics flagged");
            return rep;
        } catch (const std::domain_error&) {
            if (++redraw > 8) throw;
        } catch (const PoleError&) {
            if (++redraw > 8) throw;
        }
    }
}

VerifyReport verify_corollary_vrz(const std::vector<RootOfUnity>& z,
                                  const std::vector<long long>& a,
                                  const EvalConfig& cfg) {
    cfg.validate();
    const int r = int(z.size());
    IndexProfile profile(z);
    // Hyperplane-free tuples are holomorphic everywhere and the agreement
    // holds at every integer point, not just inside V_r(z).
    bool hyperplane_free = domains::polar_hyperplanes(profile).empty();
    if (!hyperplane_free && !domains::in_V_z(profile, a))
        throw std::invalid_argument("verify_corollary_vrz: a not in V_r(z)");
    VerifyReport rep;
    rep.identity = "holomorphic-point";
    rep.inputs = "z=" + roots_str(z) + " a=" + ivec_str(a);
    rep.tolerance = cfg.tolerance;
    std::vector<Complex> s;
    for (long long av : a) s.push_back(Complex(Real(av), Real(0)));
    Complex li = li_value(z, s, cfg);
    std::vector<unsigned> kzero(size_t(r), 0);
    RegularizedValue rv = regularized_value(z, a, kzero, cfg);
    rep.residual = abs(li - rv.value);
    rep.pass = rep.residual < cfg.tolerance && rv.ok;
    if (!rv.ok) rep.detail = rv.message;
    return rep;
}

}  // namespace mpolylog::numerics
