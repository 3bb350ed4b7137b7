//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/asymptotics.hpp>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <stdexcept>

namespace mpolylog::asymptotics {

using cyclo::CycloNumber;
using ratfield::Poly;
using ratfield::RatFunc;
using specialseq::LinearForm;

std::string BasisTerm::str() const {
    std::string out = xi.is_one() ? "" : xi.str() + "^N";
    if (npow != 0) out += (out.empty() ? "" : "*") + std::string("N^") + std::to_string(npow);
    if (logpow != 0) out += (out.empty() ? "" : "*") + std::string("log(N)^") + std::to_string(logpow);
    return out.empty() ? "1" : out;
}

AsymptoticModel AsymptoticModel::build(const IndexProfile& profile,
                                       const std::vector<long long>& a,
                                       const std::vector<unsigned>& k_vec,
                                       const Caps& caps) {
    const int r = profile.depth();
    if (int(a.size()) != r || int(k_vec.size()) != r)
        throw std::invalid_argument("AsymptoticModel: dimension mismatch");
    AsymptoticModel m;
    m.roots = profile.roots();
    // N-power cap: the partial sums grow at most like N^(Q_i - a_1-..-a_i)
    // over the prefixes i (the exponent bookkeeping of the star-tail
    // expansion fed through the cutoff identity).
    int imax = 0;
    long long asum = 0;
    for (int i = 1; i <= r; ++i) {
        asum += a[i - 1];
        imax = std::max<long long>(imax, profile.Q(i) - asum);
    }
    if (caps.i_max >= 0) imax = caps.i_max;
    unsigned ktot = 0;
    for (unsigned k : k_vec) ktot += k;
    int jmax = (caps.j_max >= 0) ? caps.j_max : r + int(ktot);
    m.i_max = imax;
    m.j_max = jmax;
    m.m_max = caps.m_max;
    for (const auto& xi : cyclo::distinct_products(profile.roots()))
        for (int p = -caps.m_max; p <= imax; ++p)
            for (int l = 0; l <= jmax; ++l)
                m.terms.push_back({xi, p, l});
    return m;
}

int AsymptoticModel::constant_index() const {
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].is_constant_slot()) return int(i);
    throw std::logic_error("AsymptoticModel: no constant slot");
}

Complex AsymptoticModel::term_value(const BasisTerm& t, long long N) const {
    Complex v = t.xi.is_one() ? Complex(Real(1), Real(0)) : t.xi.pow(N).embed();
    if (t.npow != 0) v *= pow(Real(N), t.npow);
    if (t.logpow != 0) v *= pow(log(Real(N)), t.logpow);
    return v;
}

namespace {

// Shared by the symbolic and numeric h* paths: the scalar prefactor
// (everything except the Pochhammer chain and the (|s|-|a|)^l power).
CycloNumber h_star_scalar(int l, const std::vector<unsigned>& k_vec,
                          const IndexProfile& profile) {
    const int r = profile.depth();
    Rational pref = Rational(1) / factorial_q(unsigned(l));
    if (l % 2 == 1) pref = -pref;
    for (int j = 1; j <= r; ++j) pref /= factorial_q(k_vec[j - 1]);
    CycloNumber coeff{pref};
    for (int j = 1; j <= r; ++j) {
        unsigned kj = k_vec[j - 1];
        if (profile.q_prefix(j)) {
            coeff *= CycloNumber(specialseq::star_bernoulli(kj));
        } else {
            CycloNumber zb = CycloNumber::from_root(profile.interval(1, j).conjugate());
            CycloNumber den(1);
            for (unsigned e = 0; e <= kj; ++e) den *= zb - CycloNumber(1);
            coeff *= zb * specialseq::eulerian_star_at(kj, zb) / den;
        }
    }
    return coeff;
}

}  // namespace

RatFunc h_star(int l, const std::vector<unsigned>& k_vec,
               const IndexProfile& profile, const std::vector<long long>& a) {
    const int r = profile.depth();
    if (int(k_vec.size()) != r || int(a.size()) != r)
        throw std::invalid_argument("h_star: dimension mismatch");
    if (l < 0) throw std::invalid_argument("h_star: l < 0");
    if (r == 0) return RatFunc(l == 0 ? 1 : 0);
    if (profile.q_prefix(r) == 0) return RatFunc(0);

    RatFunc out{h_star_scalar(l, k_vec, profile)};
    long long khead = 0;
    for (int j = 1; j <= r; ++j) {
        LinearForm base = ratfield::var_range_sum(
            1, j, Rational(khead - profile.Q_prefix(j - 1)));
        out *= ratfield::pochhammer_symbolic(base, int(k_vec[j - 1]) - profile.q_prefix(j));
        khead += k_vec[j - 1];
    }
    if (l > 0) {
        LinearForm diff = ratfield::var_range_sum(1, r);
        long long asum = 0;
        for (long long x : a) asum += x;
        diff.constant = Rational(-asum);
        Poly dp = Poly::from_linear_form(diff);
        Poly powed(1);
        for (int e = 0; e < l; ++e) powed *= dp;
        out *= RatFunc(powed);
    }
    return out;
}

Complex h_star_numeric(int l, const std::vector<unsigned>& k_vec,
                       const IndexProfile& profile,
                       const std::vector<long long>& a,
                       const std::vector<Complex>& s) {
    const int r = profile.depth();
    if (r == 0) return Complex(Real(l == 0 ? 1 : 0), Real(0));
    if (profile.q_prefix(r) == 0) return Complex(Real(0), Real(0));
    Complex out = h_star_scalar(l, k_vec, profile).embed();
    Complex acc_s(Real(0), Real(0));
    long long khead = 0;
    for (int j = 1; j <= r; ++j) {
        acc_s += s[j - 1];
        Complex base = acc_s + Real(khead - profile.Q_prefix(j - 1));
        out *= specialseq::pochhammer(base, int(k_vec[j - 1]) - profile.q_prefix(j));
        khead += k_vec[j - 1];
    }
    if (l > 0) {
        long long asum = 0;
        for (long long x : a) asum += x;
        Complex diff = acc_s - Real(asum);
        for (int e = 0; e < l; ++e) out *= diff;
    }
    return out;
}

std::vector<TailValue> truncated_tail_window(const IndexProfile& profile,
                                             const std::vector<long long>& a,
                                             const std::vector<Complex>& s,
                                             const std::vector<long long>& Ns,
                                             const Caps& caps) {
    const int r = profile.depth();
    if (int(a.size()) != r || int(s.size()) != r)
        throw std::invalid_argument("truncated_tail: dimension mismatch");
    if (caps.k_total < 0 || caps.l_max < 0)
        throw std::invalid_argument("truncated_tail: caps admit no terms");
    const int Q = profile.Q_prefix(r);
    long long asum = 0;
    for (long long x : a) asum += x;

    std::vector<TailValue> out(Ns.size());
    for (auto& tv : out) {
        tv.value = Complex(Real(0), Real(0));
        tv.precision_bound = 0;
        tv.x_min = int(asum - Q);
    }
    if (r == 0 || profile.q_prefix(r) == 0) return out;

    // Coefficients h*_{(0,k)}(s) are N-free: evaluate once per k.
    std::vector<std::pair<Complex, int>> layers;  // (h0, |k|)
    Real biggest = 0;
    std::vector<unsigned> k(r, 0);
    while (true) {
        unsigned ktot = 0;
        for (unsigned v : k) ktot += v;
        Complex h0 = h_star_numeric(0, k, profile, a, s);
        if (!(abs(h0) == 0)) {
            layers.emplace_back(h0, int(ktot));
            Real mag = abs(h0);
            if (mag > biggest) biggest = mag;
        }
        int idx = r - 1;
        while (idx >= 0) {
            ++k[idx];
            unsigned t = 0;
            for (unsigned v : k) t += v;
            if (t <= unsigned(caps.k_total)) break;
            k[idx] = 0;
            --idx;
        }
        if (idx < 0) break;
    }

    Complex acc_s(Real(0), Real(0));
    for (auto& v : s) acc_s += v;
    for (size_t w = 0; w < Ns.size(); ++w) {
        const long long N = Ns[w];
        Real logN = log(Real(N));
        // The l-sum of h*_{(l,k)} (log N)^l factors exactly into
        // h*_{(0,k)} * sum_l (-(|s|-|a|) log N)^l / l!.
        Complex x = -(acc_s - Real(asum)) * logN;
        Complex expsum(Real(0), Real(0));
        Complex xp(Real(1), Real(0));
        Real fact = 1;
        for (int l = 0; l <= caps.l_max; ++l) {
            if (l > 0) { xp *= x; fact *= l; }
            expsum += xp / fact;
        }
        for (auto& [h0, ktot] : layers) {
            Real xexp = Real(asum) + Real(ktot) - Real(Q);
            out[w].value += h0 * pow(Real(N), -xexp) * expsum;
            out[w].terms++;
        }
        // First omitted k-layer: |k| = k_total + 1.
        out[w].precision_bound =
            biggest * pow(Real(N), -(Real(asum) + Real(caps.k_total + 1) - Real(Q))) *
            (Real(1) + abs(x) * abs(x)) * (Real(1) + logN);
    }
    return out;
}

TailValue truncated_tail(const IndexProfile& profile,
                         const std::vector<long long>& a,
                         const std::vector<Complex>& s, long long N,
                         const Caps& caps) {
    return truncated_tail_window(profile, a, s, {N}, caps)[0];
}

using FitMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using FitVec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

struct SequenceFitter::Impl {
    Eigen::ColPivHouseholderQR<FitMat> qr;
    FitMat held_rows;
};

SequenceFitter::SequenceFitter(AsymptoticModel model, std::vector<long long> grid)
    : model_(std::move(model)), grid_(std::move(grid)), impl_(new Impl) {
    const int m = int(model_.terms.size());
    const int n = int(grid_.size());
    held_ = std::max(3, n / 8);
    nfit_ = n - held_;
    if (nfit_ < m + 2)
        throw std::invalid_argument("SequenceFitter: too few samples for model (" +
                                    std::to_string(n) + " samples, " +
                                    std::to_string(m) + " terms)");
    FitMat A(nfit_, m);
    for (int i = 0; i < nfit_; ++i)
        for (int j = 0; j < m; ++j)
            A(i, j) = model_.term_value(model_.terms[size_t(j)], grid_[size_t(i)]);
    impl_->qr.compute(A);
    impl_->held_rows.resize(held_, m);
    for (int i = 0; i < held_; ++i)
        for (int j = 0; j < m; ++j)
            impl_->held_rows(i, j) =
                model_.term_value(model_.terms[size_t(j)], grid_[size_t(nfit_ + i)]);
}

SequenceFitter::~SequenceFitter() = default;
SequenceFitter::SequenceFitter(SequenceFitter&&) noexcept = default;
SequenceFitter& SequenceFitter::operator=(SequenceFitter&&) noexcept = default;

FitResult SequenceFitter::fit(const std::vector<Complex>& values,
                              const Real& tolerance) const {
    const int m = int(model_.terms.size());
    if (int(values.size()) != nfit_ + held_)
        throw std::invalid_argument("SequenceFitter: values/grid size mismatch");
    FitVec b(nfit_);
    for (int i = 0; i < nfit_; ++i) b(i) = values[size_t(i)];
    FitVec x = impl_->qr.solve(b);

    FitResult out;
    out.coefficients.assign(size_t(m), Complex());
    for (int j = 0; j < m; ++j) out.coefficients[size_t(j)] = x(j);
    out.constant = x(model_.constant_index());
    Real max_res = 0;
    for (int i = 0; i < held_; ++i) {
        Complex pred(Real(0), Real(0));
        for (int j = 0; j < m; ++j) pred += x(j) * impl_->held_rows(i, j);
        Real res = abs(pred - values[size_t(nfit_ + i)]);
        if (res > max_res) max_res = res;
    }
    out.max_residual = max_res;
    out.ok = max_res <= tolerance;
    if (!out.ok)
        out.message = "held-out residual " + max_res.str(3) + " above tolerance";
    return out;
}

FitResult decompose_sequence(const std::vector<std::pair<long long, Complex>>& samples,
                             const AsymptoticModel& model, const Real& tolerance) {
    std::vector<long long> grid;
    std::vector<Complex> values;
    grid.reserve(samples.size());
    values.reserve(samples.size());
    for (const auto& [n, v] : samples) {
        grid.push_back(n);
        values.push_back(v);
    }
    SequenceFitter fitter(model, std::move(grid));
    return fitter.fit(values, tolerance);
}

}  // namespace mpolylog::asymptotics
