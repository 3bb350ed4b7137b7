//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/suites.hpp>

#include <random>

namespace mpolylog::suites {

using cyclo::RootOfUnity;
using cyclo::make_root;

namespace {

const std::vector<RootOfUnity>& root_pool() {
    static const std::vector<RootOfUnity> pool = {
        make_root(0, 1), make_root(1, 2), make_root(1, 4), make_root(1, 3),
        make_root(2, 3), make_root(3, 4),
    };
    return pool;
}

}  // namespace

std::vector<ExpansionCase> boundary_examples() {
    return {
        {{make_root(0, 1)}, {1}},
        {{make_root(0, 1), make_root(1, 2)}, {1, 1}},
        {{make_root(0, 1), make_root(1, 2), make_root(1, 2)}, {1, 1, 0}},
    };
}

std::vector<ExpansionCase> general_examples() {
    return {
        {{make_root(1, 2), make_root(0, 1), make_root(1, 2), make_root(0, 1)},
         {0, 1, 0, 1}},
    };
}

SuiteResult run_translation_suite(const numerics::EvalConfig& cfg,
                                  int points_per_depth) {
    SuiteResult out;
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    // Pinned points first.
    out.add(numerics::verify_translation({make_root(1, 2)},
                                         {Complex(Real(5) / 2, Real(0))}, 50, cfg));
    out.add(numerics::verify_translation(
        {make_root(0, 1), make_root(1, 2)},
        {Complex(Real(22) / 10, Real(0)), Complex(Real(13) / 10, Real(0))}, 50, cfg));
    for (int depth = 1; depth <= 2; ++depth) {
        for (int p = 0; p < points_per_depth; ++p) {
            std::vector<RootOfUnity> z;
            std::vector<Complex> s;
            for (int j = 0; j < depth; ++j) {
                z.push_back(root_pool()[rng() % root_pool().size()]);
                // Margins >= 1.2 on every prefix keep the direct tails cheap.
                s.push_back(Complex(Real(25 + int(15 * uni(rng))) / 10, Real(0)));
            }
            out.add(numerics::verify_translation(z, s, 40 + int(rng() % 20), cfg));
        }
    }
    return out;
}

SuiteResult run_combi_suite(const numerics::EvalConfig& cfg, int points_per_depth) {
    SuiteResult out;
    std::mt19937 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    // Pinned: depth-1 exact rearrangement, the depth-2 and depth-3 anchors.
    out.add(numerics::verify_combi({make_root(1, 2)}, {Complex(Real(2), Real(0))},
                                   25, cfg));
    out.add(numerics::verify_combi({make_root(0, 1), make_root(1, 2)},
                                   {Complex(Real(3), Real(0)), Complex(Real(2), Real(0))},
                                   30, cfg));
    out.add(numerics::verify_combi(
        {make_root(0, 1), make_root(0, 1), make_root(0, 1)},
        {Complex(Real(4), Real(0)), Complex(Real(3), Real(0)), Complex(Real(2), Real(0))},
        20, cfg));
    for (int depth = 1; depth <= 3; ++depth) {
        for (int p = 0; p < points_per_depth; ++p) {
            std::vector<RootOfUnity> z;
            std::vector<Complex> s;
            for (int j = 0; j < depth; ++j) {
                z.push_back(root_pool()[rng() % root_pool().size()]);
                s.push_back(Complex(Real(23 + int(16 * uni(rng))) / 10, Real(0)));
            }
            out.add(numerics::verify_combi(z, s, 20 + int(rng() % 15), cfg));
        }
    }
    return out;
}

SuiteResult run_boundary_suite(const numerics::EvalConfig& cfg) {
    SuiteResult out;
    for (const auto& c : boundary_examples())
        out.add(numerics::verify_expansion(c.z, c.a, ratfield::ExpansionMode::Boundary, cfg));
    return out;
}

SuiteResult run_general_suite(const numerics::EvalConfig& cfg) {
    SuiteResult out;
    for (const auto& c : general_examples())
        out.add(numerics::verify_expansion(c.z, c.a, ratfield::ExpansionMode::General, cfg));
    return out;
}

SuiteResult run_vrz_suite(const numerics::EvalConfig& cfg, int count) {
    SuiteResult out;
    std::mt19937 rng(cfg.seed + 2);
    // Small-order roots keep the fit-model basis (indexed by the product
    // closure S) small enough for the regularised-value solves.
    const std::vector<RootOfUnity> pool = {make_root(0, 1), make_root(1, 2),
                                           make_root(1, 4)};
    int produced = 0;
    while (produced < count) {
        int depth = 1 + int(rng() % 3);
        std::vector<RootOfUnity> z;
        for (int j = 0; j < depth; ++j)
            z.push_back(pool[rng() % pool.size()]);
        domains::IndexProfile profile(z);
        std::vector<long long> a(z.size(), 0);
        for (auto& av : a) av = -3 + (long long)(rng() % 7);
        if (!domains::in_V_z(profile, a)) continue;
        out.add(numerics::verify_corollary_vrz(z, a, cfg));
        ++produced;
    }
    return out;
}

}  // namespace mpolylog::suites
