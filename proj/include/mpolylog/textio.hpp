//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#ifndef MPOLYLOG_TEXTIO_HPP
#define MPOLYLOG_TEXTIO_HPP

#include <mpolylog/domains.hpp>
#include <mpolylog/numerics.hpp>
#include <mpolylog/ratfield.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace mpolylog::textio {

/// Parse one root: "1", "-1", "i", "-i", or a turn fraction "p/q"
/// (e^{2 pi i p/q}).
cyclo::RootOfUnity parse_root(const std::string& text);

/// Comma-separated list of roots.
std::vector<cyclo::RootOfUnity> parse_roots(const std::string& text);

std::vector<long long> parse_ints(const std::string& text);
std::vector<unsigned> parse_uints(const std::string& text);
std::vector<Complex> parse_reals(const std::string& text);

/// "N,re,im" rows for the (N, partial sum) samples behind a fit.
void write_samples_csv(const std::string& path,
                       const std::vector<std::pair<long long, Complex>>& samples);

nlohmann::json profile_json(const domains::IndexProfile& p);
nlohmann::json hyperplanes_json(const std::vector<domains::HyperplaneFamily>& fams);
nlohmann::json expansion_json(const ratfield::LaurentExpansion& e);
nlohmann::json regvalue_json(const numerics::RegularizedValue& rv);
nlohmann::json report_json(const numerics::VerifyReport& rep);

}  // namespace mpolylog::textio

#endif
