//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_RATFIELD_HPP
#define MPOLYLOG_RATFIELD_HPP

#include <mpolylog/cyclo.hpp>
#include <mpolylog/domains.hpp>
#include <mpolylog/specialseq.hpp>
#include <mpolylog/types.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mpolylog::ratfield {

using cyclo::CycloNumber;
using cyclo::RootOfUnity;
using domains::IndexProfile;
using specialseq::LinearForm;
using specialseq::PochhammerTerm;

/// Monomial in s_1..s_r: exponent vector, trailing zeros trimmed. Ordered
/// lexicographically with s_1 most significant.
struct Mono {
    std::vector<unsigned> exps;

    Mono() = default;
    explicit Mono(std::vector<unsigned> e) : exps(std::move(e)) { trim(); }
    void trim() { while (!exps.empty() && exps.back() == 0) exps.pop_back(); }

    unsigned exp(int var) const {  // var is 1-based
        return (var >= 1 && var <= int(exps.size())) ? exps[var - 1] : 0;
    }
    int degree() const {
        int d = 0;
        for (unsigned e : exps) d += int(e);
        return d;
    }
    bool is_constant() const { return exps.empty(); }

    Mono operator*(const Mono& o) const;
    /// Componentwise division; nullopt when not divisible.
    std::optional<Mono> divide(const Mono& o) const;

    bool operator==(const Mono& o) const { return exps == o.exps; }
    bool operator<(const Mono& o) const {  // lex, s_1 first
        size_t n = std::max(exps.size(), o.exps.size());
        for (size_t i = 0; i < n; ++i) {
            unsigned a = i < exps.size() ? exps[i] : 0;
            unsigned b = i < o.exps.size() ? o.exps[i] : 0;
            if (a != b) return a < b;
        }
        return false;
    }
};

/// Sparse multivariate polynomial over the cyclotomic rationals.
class Poly {
public:
    Poly() = default;
    Poly(const CycloNumber& c) {
        if (!c.is_zero()) terms_[Mono{}] = c;
    }
    Poly(const Rational& c) : Poly(CycloNumber(c)) {}
    Poly(long long c) : Poly(CycloNumber(c)) {}
    static Poly variable(int i);
    static Poly from_linear_form(const LinearForm& f);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    CycloNumber constant_value() const;
    int num_terms() const { return int(terms_.size()); }
    int total_degree() const;
    const std::map<Mono, CycloNumber>& terms() const { return terms_; }

    /// Lex-leading monomial/coefficient (s_1 most significant).
    const Mono& leading_mono() const;
    const CycloNumber& leading_coeff() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const CycloNumber& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Exact division: q with *this = q * d, or nullopt.
    std::optional<Poly> divide_exact(const Poly& d) const;

    Complex eval(const std::vector<Complex>& s) const;

    /// Canonical text: terms ordered with the highest variable index first
    /// (matching the customary display s3+s2+s1-2).
    std::string str() const;

    std::strong_ordering cmp(const Poly& o) const;

private:
    std::map<Mono, CycloNumber> terms_;
    void prune_();
    friend Poly raw_poly(std::map<Mono, CycloNumber>);
};

/// Rational function num / (prod factor_i^mult_i), numerator expanded and
/// denominator kept factored (the displayed entries are factored, and the
/// evaluator's pole guard wants the linear forms). Normal form: factors
/// monic w.r.t. the lex-leading coefficient, sorted, multiplicities merged,
/// constants folded into the numerator; shared factors cancelled by exact
/// division. Equality is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(0) {}
    RatFunc(const Poly& num) : num_(num) {}
    RatFunc(const CycloNumber& c) : num_(c) {}
    RatFunc(const Rational& c) : num_(c) {}
    RatFunc(long long c) : num_(c) {}
    RatFunc(Poly num, std::vector<std::pair<Poly, int>> den_factors);

    static RatFunc one() { return RatFunc(1); }
    static RatFunc from_pochhammer(const PochhammerTerm& t);

    const Poly& num() const { return num_; }
    const std::vector<std::pair<Poly, int>>& den_factors() const { return den_; }
    Poly den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_ == Poly(1); }
    bool is_polynomial() const { return den_.empty(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc reciprocal() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Throws std::domain_error on denominator zero within working slack.
    Complex eval(const std::vector<Complex>& s) const;

    std::string str() const;

private:
    Poly num_;
    std::vector<std::pair<Poly, int>> den_;
    void normalize_();
};

enum class MatrixShape { Unitriangular, UpperTriangular };

/// Square upper-triangular matrix over the rational-function field, with
/// rows/columns labelled by the index set that produced it (the §-style
/// indexing by elements of I rather than 0..n).
struct RatMatrix {
    std::vector<long long> labels;
    std::vector<std::vector<RatFunc>> entry;
    MatrixShape shape = MatrixShape::Unitriangular;

    int size() const { return int(labels.size()); }
    const RatFunc& at(int row, int col) const { return entry[row][col]; }
    static RatMatrix identity(std::vector<long long> labels);
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const;
    bool is_identity() const;
};

/// Exact inverse of a unitriangular matrix by back substitution; the product
/// with the input is verified to be the identity before returning.
RatMatrix invert_unitriangular(const RatMatrix& m);

/// Symbolic Pochhammer of a linear form, lengths >= -1.
RatFunc pochhammer_symbolic(const LinearForm& base, int length);

/// H_j^{(i)}: the denominator factor of the boundary expansion, as a degree
/// <= 1 rational function: s_j+...+s_i-(i-j) below t_i, the constant
/// 1 - z_{[t_i,i]} at t_i, s_j+...+s_i-(i-j+1) above. var_offset shifts the
/// variable names (entry built for a suffix tuple uses the global names).
RatFunc h_factor(int i, int j, const IndexProfile& profile, int var_offset = 0);

/// (-1)^i / prod_j H_j^{(i)}; i = 0 gives 1.
RatFunc boundary_term(int i, const IndexProfile& profile, int var_offset = 0);

/// C_i of the general-point identity: the constrained sum over k-vectors of
/// Eulerian/star-Bernoulli products times the chained Pochhammer factors.
/// C_0 = 1; identically 0 when q_{[1,i]} = 0 or the constraint set is empty.
RatFunc c_rational(int i, const IndexProfile& profile,
                   const std::vector<long long>& a, int var_offset = 0);

/// The boundary (M) matrix: rows/columns indexed by I(z, a); row i is the
/// boundary expansion of the regularised function at the suffix point.
/// Requires a in closure(U_r(z)).
RatMatrix build_matrix_boundary(const IndexProfile& profile,
                                const std::vector<long long>& a);

/// The general-point (N) matrix over I(z); entries (-1)^i' C_i' of suffix
/// profiles. Any integer a.
RatMatrix build_matrix_general(const IndexProfile& profile,
                               const std::vector<long long>& a);

enum class ExpansionMode { Boundary, General };

/// Laurent-type expansion Li_z = sum_i D_i . Li^Reg(suffix): the first row
/// of the inverted matrix. D_0 = 1.
struct LaurentExpansion {
    std::vector<RootOfUnity> z;
    std::vector<long long> anchor;
    ExpansionMode mode;
    std::vector<int> indices;
    std::vector<RatFunc> coeff;  // aligned with indices
};

LaurentExpansion laurent_expansion(const IndexProfile& profile,
                                   const std::vector<long long>& a,
                                   ExpansionMode mode);

/// The translation matrix A(s) = conj(z) I - exp(-M(s)) of the depth-one
/// tail system (nilpotent exponential evaluated as a terminating series) and
/// its closed-form inverse with Eulerian entries. z must not be 1.
RatMatrix matrix_A(int s_var, const RootOfUnity& z, int k0);
RatMatrix matrix_A_inverse(int s_var, const RootOfUnity& z, int k0);

/// The z = 1 counterpart B(s) with star-Bernoulli closed-form inverse.
RatMatrix matrix_B(int s_var, int k0);
RatMatrix matrix_B_inverse(int s_var, int k0);

/// Sum of consecutive variables s_j + ... + s_i plus a constant.
LinearForm var_range_sum(int j, int i, const Rational& constant = Rational(0));

}  // namespace mpolylog::ratfield

#endif
