//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/domains.hpp>

#include <algorithm>
#include <stdexcept>

namespace mpolylog::domains {

IndexProfile::IndexProfile(std::vector<RootOfUnity> z)
    : r_(int(z.size())), z_(std::move(z)) {
    interval_.reserve(size_t(r_) * (r_ + 1) / 2);
    for (int i = 1; i <= r_; ++i) {
        // interval_[idx(j,i)] for j = 1..i; built from the previous row:
        // z_{[j,i]} = z_{[j,i-1]} * z_i.
        for (int j = 1; j <= i; ++j) {
            RootOfUnity v = (j == i) ? z_[i - 1] : interval_[idx_(j, i - 1)] * z_[i - 1];
            interval_.push_back(v);
        }
    }
    q_flag_ = r_ + 1;
    for (int i = 1; i <= r_; ++i) {
        if (!z_[i - 1].is_one()) { q_flag_ = i; break; }
    }
    I_z_.push_back(0);
    for (int i = 1; i <= r_; ++i)
        if (q_interval(1, i) == 1) I_z_.push_back(i);
}

size_t IndexProfile::idx_(int j, int i) const {
    if (j < 1 || i < j || i > r_)
        throw std::out_of_range("IndexProfile: interval index");
    return size_t(i - 1) * i / 2 + (j - 1);
}

int IndexProfile::Q_suffix(int j, int i) const {
    if (j == i + 1) return 0;
    int q = 0;
    for (int k = j; k <= i; ++k) q += q_interval(k, i);
    return q;
}

int IndexProfile::Q_prefix(int i) const {
    int q = 0;
    for (int j = 1; j <= i; ++j) q += q_prefix(j);
    return q;
}

std::vector<int> IndexProfile::J(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= i; ++j)
        if (q_interval(j, i)) out.push_back(j);
    return out;
}

std::vector<int> IndexProfile::J_prime(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= i; ++j)
        if (!q_interval(j, i)) out.push_back(j);
    return out;
}

int IndexProfile::t(int i) const {
    int found = 0;
    for (int j = 1; j <= i; ++j) {
        if (!q_interval(j, i)) {
            if (found) throw std::domain_error("t_i: more than one non-unit interval product");
            found = j;
        }
    }
    return found;
}

int IndexProfile::a_flag(int i) const {
    if (i == 0) return 0;
    return (q_flag_ <= i) ? 1 : 0;
}

IndexProfile IndexProfile::suffix(int i) const {
    return IndexProfile(std::vector<RootOfUnity>(z_.begin() + i, z_.end()));
}

IndexProfile IndexProfile::reversed_prefix(int i) const {
    std::vector<RootOfUnity> w(z_.begin(), z_.begin() + i);
    std::reverse(w.begin(), w.end());
    return IndexProfile(std::move(w));
}

std::vector<int> index_set_I(const IndexProfile& p, const std::vector<long long>& a) {
    if (int(a.size()) != p.depth())
        throw std::invalid_argument("index_set_I: |a| != depth");
    std::vector<int> out{0};
    long long asum = 0;
    for (int i = 1; i <= p.depth(); ++i) {
        asum += a[i - 1];
        if (p.q_interval(1, i) != 1) continue;
        if (p.t_count(i) > 1) continue;
        if (asum == i - p.a_flag(i)) out.push_back(i);
    }
    return out;
}

std::vector<int> index_set_I_prime(const IndexProfile& p,
                                   const std::vector<long long>& a) {
    if (int(a.size()) != p.depth())
        throw std::invalid_argument("index_set_I_prime: |a| != depth");
    std::vector<int> out;
    if (p.depth() == 0 || p.roots()[0].is_one()) return out;
    long long asum = 0;
    bool tail_ones = true;
    for (int i = 1; i <= p.depth(); ++i) {
        asum += a[i - 1];
        if (i >= 2 && !p.roots()[i - 1].is_one()) tail_ones = false;
        if (tail_ones && asum == i - 1) out.push_back(i);
    }
    return out;
}

namespace {
bool gt_with_slack(const Real& lhs, long long rhs) {
    return lhs > Real(rhs) + machine_tail();
}
}

bool in_U(const std::vector<Complex>& s) {
    Real acc = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        acc += real(s[i]);
        if (!gt_with_slack(acc, (long long)i + 1)) return false;
    }
    return true;
}

bool in_U_z(const IndexProfile& p, const std::vector<Complex>& s) {
    Real acc = 0;
    for (int i = 1; i <= int(s.size()); ++i) {
        acc += real(s[i - 1]);
        long long bound = (i < p.q_flag()) ? i : i - 1;
        if (!gt_with_slack(acc, bound)) return false;
    }
    return true;
}

bool in_V_z(const IndexProfile& p, const std::vector<Complex>& s) {
    Real acc = 0;
    for (int i = 1; i <= int(s.size()); ++i) {
        acc += real(s[i - 1]);
        if (!gt_with_slack(acc, p.Q(i))) return false;
    }
    return true;
}

bool in_V_z(const IndexProfile& p, const std::vector<long long>& a) {
    long long acc = 0;
    for (int i = 1; i <= int(a.size()); ++i) {
        acc += a[i - 1];
        if (!(acc > p.Q(i))) return false;
    }
    return true;
}

bool in_closure_U_z(const IndexProfile& p, const std::vector<long long>& a) {
    long long acc = 0;
    for (int i = 1; i <= int(a.size()); ++i) {
        acc += a[i - 1];
        long long bound = (i < p.q_flag()) ? i : i - 1;
        if (acc < bound) return false;
    }
    return true;
}

std::vector<HyperplaneFamily> polar_hyperplanes(const IndexProfile& p) {
    std::vector<int> unit_prefix;  // indices i with z_{[1,i]} = 1
    for (int i = 1; i <= p.depth(); ++i)
        if (p.q_interval(1, i)) unit_prefix.push_back(i);
    std::vector<HyperplaneFamily> fams;
    if (unit_prefix.empty()) return fams;
    if (unit_prefix[0] == 1) {
        fams.push_back({1, 1, true});
        for (size_t j = 2; j <= unit_prefix.size(); ++j)
            fams.push_back({unit_prefix[j - 1], (long long)j, false});
    } else {
        for (size_t j = 1; j <= unit_prefix.size(); ++j)
            fams.push_back({unit_prefix[j - 1], (long long)j, false});
    }
    return fams;
}

bool is_candidate_pole(const std::vector<HyperplaneFamily>& fams, int i, long long n) {
    for (const auto& f : fams)
        if (f.covers(i, n)) return true;
    return false;
}

Real pole_distance(const std::vector<HyperplaneFamily>& fams,
                   const std::vector<Complex>& s, Hyperplane* nearest) {
    Real best = -1;
    Complex acc(Real(0), Real(0));
    for (int i = 1; i <= int(s.size()); ++i) {
        acc += s[i - 1];
        for (const auto& f : fams) {
            if (f.last_index != i) continue;
            long long n;
            if (f.single_level) {
                n = f.max_level;
            } else {
                // Nearest admissible integer level below the bound.
                Real re = real(acc);
                long long rounded = llround(re.convert_to<double>());
                n = std::min(rounded, f.max_level);
            }
            Real d = abs(acc - Real(n));
            if (best < 0 || d < best) {
                best = d;
                if (nearest) *nearest = {i, n};
            }
        }
    }
    if (best < 0) best = Real(1e9);  // holomorphic everywhere
    return best;
}

}  // namespace mpolylog::domains
