//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_SUITES_HPP
#define MPOLYLOG_SUITES_HPP

#include <mpolylog/numerics.hpp>

#include <vector>

namespace mpolylog::suites {

struct SuiteResult {
    std::vector<numerics::VerifyReport> reports;
    bool pass = true;
    void add(numerics::VerifyReport rep) {
        pass = pass && rep.pass;
        reports.push_back(std::move(rep));
    }
};

/// Worked boundary-mode expansion anchors.
struct ExpansionCase {
    std::vector<cyclo::RootOfUnity> z;
    std::vector<long long> a;
};
std::vector<ExpansionCase> boundary_examples();
std::vector<ExpansionCase> general_examples();

/// Translation formula at the pinned points plus deterministic random
/// samples, depths 1-2.
SuiteResult run_translation_suite(const numerics::EvalConfig& cfg,
                                  int points_per_depth = 10);

/// Cutoff identity, depths 1-3 (pinned + deterministic random points).
SuiteResult run_combi_suite(const numerics::EvalConfig& cfg,
                            int points_per_depth = 4);

/// Laurent expansions at the worked anchors.
SuiteResult run_boundary_suite(const numerics::EvalConfig& cfg);
SuiteResult run_general_suite(const numerics::EvalConfig& cfg);

/// Holomorphic-point agreement on sampled integer anchors in V_r(z).
SuiteResult run_vrz_suite(const numerics::EvalConfig& cfg, int count = 10);

}  // namespace mpolylog::suites

#endif
