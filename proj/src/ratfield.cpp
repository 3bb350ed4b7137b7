//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/ratfield.hpp>

#include <algorithm>
#include <stdexcept>

namespace mpolylog::ratfield {

// ---------------------------------------------------------------------------
// Mono

Mono Mono::operator*(const Mono& o) const {
    std::vector<unsigned> e(std::max(exps.size(), o.exps.size()), 0u);
    for (size_t i = 0; i < exps.size(); ++i) e[i] += exps[i];
    for (size_t i = 0; i < o.exps.size(); ++i) e[i] += o.exps[i];
    return Mono(std::move(e));
}

std::optional<Mono> Mono::divide(const Mono& o) const {
    if (o.exps.size() > exps.size()) return std::nullopt;
    std::vector<unsigned> e = exps;
    for (size_t i = 0; i < o.exps.size(); ++i) {
        if (e[i] < o.exps[i]) return std::nullopt;
        e[i] -= o.exps[i];
    }
    return Mono(std::move(e));
}

// ---------------------------------------------------------------------------
// Poly

Poly raw_poly(std::map<Mono, CycloNumber> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.prune_();
    return p;
}

void Poly::prune_() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

Poly Poly::variable(int i) {
    std::vector<unsigned> e(i, 0u);
    e[i - 1] = 1;
    std::map<Mono, CycloNumber> t;
    t[Mono(std::move(e))] = CycloNumber(1);
    return raw_poly(std::move(t));
}

Poly Poly::from_linear_form(const LinearForm& f) {
    std::map<Mono, CycloNumber> t;
    if (f.constant != 0) t[Mono{}] = CycloNumber(f.constant);
    for (auto& [i, c] : f.coeffs) {
        std::vector<unsigned> e(i, 0u);
        e[i - 1] = 1;
        t[Mono(std::move(e))] = CycloNumber(c);
    }
    return raw_poly(std::move(t));
}

CycloNumber Poly::constant_value() const {
    if (terms_.empty()) return CycloNumber(0);
    if (!is_constant()) throw std::domain_error("Poly: not constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

const Mono& Poly::leading_mono() const {
    if (terms_.empty()) throw std::domain_error("Poly: zero has no leading term");
    return terms_.rbegin()->first;
}

const CycloNumber& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("Poly: zero has no leading term");
    return terms_.rbegin()->second;
}

Poly Poly::operator+(const Poly& o) const {
    std::map<Mono, CycloNumber> t = terms_;
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = t.emplace(m, c);
        if (!fresh) it->second += c;
    }
    return raw_poly(std::move(t));
}

Poly Poly::operator-() const {
    std::map<Mono, CycloNumber> t = terms_;
    for (auto& [m, c] : t) c = -c;
    return raw_poly(std::move(t));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    std::map<Mono, CycloNumber> t;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            Mono m = m1 * m2;
            CycloNumber c = c1 * c2;
            auto [it, fresh] = t.emplace(std::move(m), c);
            if (!fresh) it->second += c;
        }
    return raw_poly(std::move(t));
}

Poly Poly::scaled(const CycloNumber& c) const {
    if (c.is_zero()) return Poly();
    std::map<Mono, CycloNumber> t = terms_;
    for (auto& [m, v] : t) v *= c;
    return raw_poly(std::move(t));
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = *this;
    std::map<Mono, CycloNumber> quot;
    while (!rem.is_zero()) {
        auto m = rem.leading_mono().divide(d.leading_mono());
        if (!m) return std::nullopt;
        CycloNumber c = rem.leading_coeff() / d.leading_coeff();
        std::map<Mono, CycloNumber> one_term;
        one_term[*m] = c;
        Poly t = raw_poly(std::move(one_term));
        quot[*m] = c;
        rem -= t * d;
    }
    return raw_poly(std::move(quot));
}

Complex Poly::eval(const std::vector<Complex>& s) const {
    Complex acc(Real(0), Real(0));
    for (auto& [m, c] : terms_) {
        Complex term = c.embed();
        for (size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (i >= s.size()) throw std::out_of_range("Poly::eval: point too short");
            for (unsigned e = 0; e < m.exps[i]; ++e) term *= s[i];
        }
        acc += term;
    }
    return acc;
}

std::strong_ordering Poly::cmp(const Poly& o) const {
    if (auto c = terms_.size() <=> o.terms_.size(); c != 0) return c;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first < jt->first) return std::strong_ordering::less;
        if (jt->first < it->first) return std::strong_ordering::greater;
        if (auto c = it->second.cmp_key(jt->second); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

// Display order: highest variable index first, so sums print as the familiar
// s3+s2+s1-2.
bool display_before(const Mono& a, const Mono& b) {
    size_t n = std::max(a.exps.size(), b.exps.size());
    for (size_t i = n; i-- > 0;) {
        unsigned ea = i < a.exps.size() ? a.exps[i] : 0;
        unsigned eb = i < b.exps.size() ? b.exps[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

std::string mono_str(const Mono& m) {
    std::string out;
    for (size_t i = m.exps.size(); i-- > 0;) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "s" + std::to_string(i + 1);
        if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
    }
    return out;
}

// A coefficient string with an interior sign (a cyclotomic sum) needs parens
// when prefixing a monomial.
bool coeff_needs_parens(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || (s[i] == '-' && s[i - 1] != '(' && s[i - 1] != '^'))
            return true;
    return false;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Mono, CycloNumber>*> order;
    for (auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return display_before(a->first, b->first); });
    std::string out;
    for (auto* t : order) {
        std::string c = t->second.str();
        bool neg = false;
        if (!coeff_needs_parens(c) && c[0] == '-') {
            neg = true;
            c = c.substr(1);
        }
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? "-" : "+";
        std::string ms = mono_str(t->first);
        if (ms.empty()) { out += c; continue; }
        if (c == "1") out += ms;
        else if (coeff_needs_parens(c)) out += "(" + c + ")*" + ms;
        else out += c + "*" + ms;
    }
    return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, std::vector<std::pair<Poly, int>> den_factors)
    : num_(std::move(num)), den_(std::move(den_factors)) {
    normalize_();
}

void RatFunc::normalize_() {
    for (auto& [f, m] : den_) {
        if (f.is_zero()) throw std::domain_error("RatFunc: zero denominator factor");
        if (m < 0) throw std::domain_error("RatFunc: negative multiplicity");
    }
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    // Fold constants and make every factor monic w.r.t. its lex-leading term.
    CycloNumber scale(1);
    std::vector<std::pair<Poly, int>> kept;
    for (auto& [f, m] : den_) {
        if (m == 0) continue;
        if (f.is_constant()) {
            CycloNumber c = f.constant_value();
            for (int j = 0; j < m; ++j) scale *= c;
            continue;
        }
        CycloNumber lc = f.leading_coeff();
        Poly monic = f;
        if (!(lc == CycloNumber(1))) {
            monic = f.scaled(lc.inverse());
            for (int j = 0; j < m; ++j) scale *= lc;
        }
        kept.emplace_back(std::move(monic), m);
    }
    if (!(scale == CycloNumber(1))) num_ = num_.scaled(scale.inverse());
    // Cancel shared factors by exact division.
    for (auto& [f, m] : kept) {
        while (m > 0) {
            auto q = num_.divide_exact(f);
            if (!q) break;
            num_ = std::move(*q);
            --m;
        }
    }
    std::erase_if(kept, [](const auto& fm) { return fm.second == 0; });
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        return a.first.cmp(b.first) == std::strong_ordering::less;
    });
    den_.clear();
    for (auto& fm : kept) {
        if (!den_.empty() && den_.back().first == fm.first)
            den_.back().second += fm.second;
        else
            den_.push_back(std::move(fm));
    }
}

Poly RatFunc::den_expanded() const {
    Poly d(1);
    for (auto& [f, m] : den_)
        for (int j = 0; j < m; ++j) d *= f;
    return d;
}

RatFunc RatFunc::from_pochhammer(const PochhammerTerm& t) {
    return pochhammer_symbolic(t.base, t.length);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    std::vector<std::pair<Poly, int>> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RatFunc(num_ * o.num_, std::move(den));
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    // Common denominator: factor-multiset union with max multiplicities.
    std::vector<std::pair<Poly, int>> common = den_;
    for (auto& [f, m] : o.den_) {
        bool found = false;
        for (auto& [g, n] : common) {
            if (g == f) {
                n = std::max(n, m);
                found = true;
                break;
            }
        }
        if (!found) common.emplace_back(f, m);
    }
    auto cofactor = [&common](const std::vector<std::pair<Poly, int>>& own) {
        Poly c(1);
        for (auto& [f, m] : common) {
            int have = 0;
            for (auto& [g, n] : own)
                if (g == f) { have = n; break; }
            for (int j = 0; j < m - have; ++j) c *= f;
        }
        return c;
    };
    Poly num = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    return RatFunc(std::move(num), std::move(common));
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("RatFunc: reciprocal of zero");
    return RatFunc(den_expanded(), {{num_, 1}});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.reciprocal(); }

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_expanded() == o.num_ * den_expanded();
}

Complex RatFunc::eval(const std::vector<Complex>& s) const {
    Complex acc = num_.eval(s);
    for (auto& [f, m] : den_) {
        Complex v = f.eval(s);
        if (abs(v) < machine_tail())
            throw std::domain_error("RatFunc::eval: denominator zero at point (factor " +
                                    f.str() + ")");
        for (int j = 0; j < m; ++j) acc /= v;
    }
    return acc;
}

std::string RatFunc::str() const {
    std::string n = num_.str();
    if (den_.empty()) return n;
    bool wrap_num = n[0] == '-' || coeff_needs_parens(n) ||
                    n.find('/') != std::string::npos;
    if (wrap_num) n = "(" + n + ")";
    std::string d;
    for (auto& [f, m] : den_) {
        if (!d.empty()) d += "*";
        d += "(" + f.str() + ")";
        if (m > 1) d += "^" + std::to_string(m);
    }
    bool wrap_den = den_.size() > 1 || den_[0].second > 1;
    if (wrap_den) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix RatMatrix::identity(std::vector<long long> labels) {
    RatMatrix m;
    int n = int(labels.size());
    m.labels = std::move(labels);
    m.entry.assign(n, std::vector<RatFunc>(n, RatFunc(0)));
    for (int i = 0; i < n; ++i) m.entry[i][i] = RatFunc(1);
    m.shape = MatrixShape::Unitriangular;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (size() != o.size()) throw std::invalid_argument("RatMatrix: size mismatch");
    RatMatrix out;
    out.labels = labels;
    out.shape = shape;
    int n = size();
    out.entry.assign(n, std::vector<RatFunc>(n, RatFunc(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RatFunc acc(0);
            for (int k = i; k <= j; ++k) acc += entry[i][k] * o.entry[k][j];
            out.entry[i][j] = acc;
        }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (entry[i][j] != o.entry[i][j]) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (i == j && !entry[i][j].is_one()) return false;
            if (i != j && !entry[i][j].is_zero()) return false;
        }
    return true;
}

RatMatrix invert_unitriangular(const RatMatrix& m) {
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        if (!m.entry[i][i].is_one())
            throw std::invalid_argument("invert_unitriangular: diagonal != 1");
        for (int j = 0; j < i; ++j)
            if (!m.entry[i][j].is_zero())
                throw std::invalid_argument("invert_unitriangular: not upper triangular");
    }
    RatMatrix inv = RatMatrix::identity(m.labels);
    for (int c = 0; c < n; ++c)
        for (int r = c - 1; r >= 0; --r) {
            RatFunc acc(0);
            for (int t = r + 1; t <= c; ++t) acc += m.entry[r][t] * inv.entry[t][c];
            inv.entry[r][c] = -acc;
        }
    if (!(m * inv).is_identity())
        throw std::logic_error("invert_unitriangular: verification failed");
    return inv;
}

// ---------------------------------------------------------------------------
// Paper operations

LinearForm var_range_sum(int j, int i, const Rational& constant) {
    LinearForm f;
    for (int v = j; v <= i; ++v) f.coeffs[v] = 1;
    f.constant = constant;
    return f;
}

RatFunc pochhammer_symbolic(const LinearForm& base, int length) {
    if (length < -1) throw std::invalid_argument("pochhammer_symbolic: length < -1");
    if (length == -1)
        return RatFunc(Poly(1), {{Poly::from_linear_form(base.shifted(-1)), 1}});
    Poly acc(1);
    for (int j = 0; j < length; ++j)
        acc *= Poly::from_linear_form(base.shifted(j));
    return RatFunc(acc);
}

RatFunc h_factor(int i, int j, const IndexProfile& profile, int var_offset) {
    if (j < 1 || j > i || i > profile.depth())
        throw std::out_of_range("h_factor: need 1 <= j <= i <= r");
    int t = profile.t(i);  // throws when more than one non-unit product
    if (j == t) {
        CycloNumber z = CycloNumber::from_root(profile.interval(t, i));
        return RatFunc(CycloNumber(1) - z);
    }
    long long shift = (j < t) ? -(i - j) : -(i - j + 1);
    return RatFunc(Poly::from_linear_form(
        var_range_sum(var_offset + j, var_offset + i, Rational(shift))));
}

RatFunc boundary_term(int i, const IndexProfile& profile, int var_offset) {
    if (i == 0) return RatFunc(1);
    RatFunc acc((i % 2 == 0) ? 1 : -1);
    for (int j = 1; j <= i; ++j)
        acc = acc / h_factor(i, j, profile, var_offset);
    return acc;
}

namespace {

CycloNumber cyclo_pow(const CycloNumber& c, int e) {
    CycloNumber acc(1);
    for (int j = 0; j < e; ++j) acc *= c;
    return acc;
}

}  // namespace

RatFunc c_rational(int i, const IndexProfile& profile,
                   const std::vector<long long>& a, int var_offset) {
    if (i == 0) return RatFunc(1);
    if (i > profile.depth() || int(a.size()) < i)
        throw std::out_of_range("c_rational: index/anchor mismatch");
    if (profile.q_interval(1, i) == 0) return RatFunc(0);
    long long budget = profile.Q_suffix(1, i);
    for (int t = 1; t <= i; ++t) budget -= a[t - 1];
    if (budget < 0) return RatFunc(0);

    RatFunc total(0);
    std::vector<long long> k(i, 0);
    k[i - 1] = budget;  // start at the last composition slot
    // Enumerate all k in N^i with sum = budget.
    auto advance = [&]() -> bool {
        // classic composition step: move one unit left of the last nonzero
        int idx = i - 1;
        while (idx >= 0 && k[idx] == 0) --idx;
        if (idx <= 0) return false;
        long long tail = k[idx] - 1;
        ++k[idx - 1];
        k[idx] = 0;
        k[i - 1] = tail;
        return true;
    };
    while (true) {
        Rational pref = 1;
        for (int t = 0; t < i; ++t) pref /= factorial_q(unsigned(k[t]));
        CycloNumber coeff(pref);
        for (int j = 1; j <= i; ++j) {
            unsigned kj = unsigned(k[j - 1]);
            if (profile.q_interval(j, i)) {
                coeff *= CycloNumber(specialseq::star_bernoulli(kj));
            } else {
                CycloNumber zb = CycloNumber::from_root(profile.interval(j, i).conjugate());
                coeff *= zb * specialseq::eulerian_star_at(kj, zb) /
                         cyclo_pow(zb - CycloNumber(1), int(kj) + 1);
            }
        }
        if (!coeff.is_zero()) {
            RatFunc term(coeff);
            long long ktail = 0;  // k_{j+1} + ... + k_i
            for (int j = i; j >= 1; --j) {
                LinearForm base = var_range_sum(var_offset + j, var_offset + i,
                                                Rational(ktail - profile.Q_suffix(j + 1, i)));
                int len = int(k[j - 1]) - profile.q_interval(j, i);
                term *= pochhammer_symbolic(base, len);
                ktail += k[j - 1];
            }
            total += term;
        }
        if (budget == 0) break;
        if (!advance()) break;
    }
    return total;
}

RatMatrix build_matrix_boundary(const IndexProfile& profile,
                                const std::vector<long long>& a) {
    if (!domains::in_closure_U_z(profile, a))
        throw std::invalid_argument(
            "build_matrix_boundary: anchor outside closure(U_r(z))");
    std::vector<int> I = domains::index_set_I(profile, a);
    RatMatrix m = RatMatrix::identity(std::vector<long long>(I.begin(), I.end()));
    for (size_t ri = 0; ri < I.size(); ++ri) {
        int i = I[ri];
        IndexProfile sp = profile.suffix(i);
        for (size_t ci = ri + 1; ci < I.size(); ++ci) {
            int col = I[ci];
            m.entry[ri][ci] = boundary_term(col - i, sp, i);
        }
    }
    return m;
}

RatMatrix build_matrix_general(const IndexProfile& profile,
                               const std::vector<long long>& a) {
    if (int(a.size()) != profile.depth())
        throw std::invalid_argument("build_matrix_general: |a| != depth");
    const std::vector<int>& I = profile.index_set_I_z();
    RatMatrix m = RatMatrix::identity(std::vector<long long>(I.begin(), I.end()));
    for (size_t ri = 0; ri < I.size(); ++ri) {
        int i = I[ri];
        IndexProfile sp = profile.suffix(i);
        std::vector<long long> sa(a.begin() + i, a.end());
        for (size_t ci = ri + 1; ci < I.size(); ++ci) {
            int col = I[ci];
            RatFunc c = c_rational(col - i, sp, sa, i);
            if ((col - i) % 2 == 1) c = -c;
            m.entry[ri][ci] = c;
        }
    }
    return m;
}

LaurentExpansion laurent_expansion(const IndexProfile& profile,
                                   const std::vector<long long>& a,
                                   ExpansionMode mode) {
    RatMatrix m = (mode == ExpansionMode::Boundary)
                      ? build_matrix_boundary(profile, a)
                      : build_matrix_general(profile, a);
    RatMatrix inv = invert_unitriangular(m);
    LaurentExpansion e;
    e.z = profile.roots();
    e.anchor = a;
    e.mode = mode;
    for (long long l : inv.labels) e.indices.push_back(int(l));
    e.coeff = inv.entry.empty() ? std::vector<RatFunc>{} : inv.entry[0];
    if (e.coeff.empty()) {  // depth-0 guard: expansion of the empty product
        e.indices = {0};
        e.coeff = {RatFunc(1)};
    }
    return e;
}

// ---------------------------------------------------------------------------
// Translation matrices

RatMatrix matrix_A(int s_var, const RootOfUnity& z, int k0) {
    if (z.is_one()) throw std::invalid_argument("matrix_A: z = 1");
    if (k0 < 1) throw std::invalid_argument("matrix_A: k0 < 1");
    std::vector<long long> labels(k0);
    for (int i = 0; i < k0; ++i) labels[i] = i;

    // Nilpotent M with superdiagonal s, s+1, ..., s+k0-2.
    auto M_entry = [&](int i, int j) -> RatFunc {
        if (j != i + 1) return RatFunc(0);
        return RatFunc(Poly::from_linear_form(
            var_range_sum(s_var, s_var, Rational(i))));
    };
    RatMatrix M;
    M.labels = labels;
    M.shape = MatrixShape::UpperTriangular;
    M.entry.assign(k0, std::vector<RatFunc>(k0, RatFunc(0)));
    for (int i = 0; i < k0; ++i)
        for (int j = 0; j < k0; ++j) M.entry[i][j] = M_entry(i, j);

    // exp(-M) as the terminating series over the nilpotent M.
    RatMatrix expm = RatMatrix::identity(labels);
    RatMatrix power = RatMatrix::identity(labels);
    Rational fact = 1;
    for (int n = 1; n < k0; ++n) {
        power = power * M;
        fact *= n;
        Rational c = Rational((n % 2 == 0) ? 1 : -1) / fact;
        for (int i = 0; i < k0; ++i)
            for (int j = 0; j < k0; ++j)
                expm.entry[i][j] += power.entry[i][j] * RatFunc(c);
    }
    CycloNumber zbar = CycloNumber::from_root(z.conjugate());
    RatMatrix A;
    A.labels = labels;
    A.shape = MatrixShape::UpperTriangular;
    A.entry.assign(k0, std::vector<RatFunc>(k0, RatFunc(0)));
    for (int i = 0; i < k0; ++i)
        for (int j = 0; j < k0; ++j) {
            RatFunc diag = (i == j) ? RatFunc(zbar) : RatFunc(0);
            A.entry[i][j] = diag - expm.entry[i][j];
        }
    return A;
}

RatMatrix matrix_A_inverse(int s_var, const RootOfUnity& z, int k0) {
    if (z.is_one()) throw std::invalid_argument("matrix_A_inverse: z = 1");
    if (k0 < 1) throw std::invalid_argument("matrix_A_inverse: k0 < 1");
    CycloNumber zbar = CycloNumber::from_root(z.conjugate());
    CycloNumber zm1 = zbar - CycloNumber(1);
    std::vector<long long> labels(k0);
    for (int i = 0; i < k0; ++i) labels[i] = i;
    RatMatrix inv;
    inv.labels = labels;
    inv.shape = MatrixShape::UpperTriangular;
    inv.entry.assign(k0, std::vector<RatFunc>(k0, RatFunc(0)));
    for (int i = 0; i < k0; ++i)
        for (int j = i; j < k0; ++j) {
            int n = j - i;
            CycloNumber c = specialseq::eulerian_star_at(unsigned(n), zbar) /
                            (cyclo_pow(zm1, n + 1) * CycloNumber(factorial_q(unsigned(n))));
            RatFunc entry = RatFunc(c) * pochhammer_symbolic(
                var_range_sum(s_var, s_var, Rational(i)), n);
            inv.entry[i][j] = entry;
        }
    return inv;
}

RatMatrix matrix_B(int s_var, int k0) {
    if (k0 < 1) throw std::invalid_argument("matrix_B: k0 < 1");
    std::vector<long long> labels(k0);
    for (int i = 0; i < k0; ++i) labels[i] = i;
    RatMatrix B;
    B.labels = labels;
    B.shape = MatrixShape::UpperTriangular;
    B.entry.assign(k0, std::vector<RatFunc>(k0, RatFunc(0)));
    for (int i = 0; i < k0; ++i)
        for (int j = i; j < k0; ++j) {
            int n = j - i;
            Rational c = Rational((n % 2 == 0) ? 1 : -1) / factorial_q(unsigned(n + 1));
            B.entry[i][j] = RatFunc(c) * pochhammer_symbolic(
                var_range_sum(s_var, s_var, Rational(i - 1)), n + 1);
        }
    return B;
}

RatMatrix matrix_B_inverse(int s_var, int k0) {
    if (k0 < 1) throw std::invalid_argument("matrix_B_inverse: k0 < 1");
    std::vector<long long> labels(k0);
    for (int i = 0; i < k0; ++i) labels[i] = i;
    RatMatrix inv;
    inv.labels = labels;
    inv.shape = MatrixShape::UpperTriangular;
    inv.entry.assign(k0, std::vector<RatFunc>(k0, RatFunc(0)));
    for (int i = 0; i < k0; ++i)
        for (int j = i; j < k0; ++j) {
            int n = j - i;
            Rational c = specialseq::star_bernoulli(unsigned(n)) / factorial_q(unsigned(n));
            inv.entry[i][j] = RatFunc(c) * pochhammer_symbolic(
                var_range_sum(s_var, s_var, Rational(i)), n - 1);
        }
    return inv;
}

}  // namespace mpolylog::ratfield
