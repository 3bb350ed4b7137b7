//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

#include <mpolylog/textio.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpolylog::textio {

using cyclo::RootOfUnity;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty list entry in '" + text + "'");
        parts.push_back(item.substr(b, e - b + 1));
    }
    if (parts.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return parts;
}

}  // namespace

RootOfUnity parse_root(const std::string& text) {
    if (text == "1") return cyclo::make_root(0, 1);
    if (text == "-1") return cyclo::make_root(1, 2);
    if (text == "i") return cyclo::make_root(1, 4);
    if (text == "-i") return cyclo::make_root(3, 4);
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("root '" + text +
                                    "': expected 1, -1, i, -i or a turn p/q");
    long long p = std::stoll(text.substr(0, slash));
    long long q = std::stoll(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("root '" + text + "': zero denominator");
    return cyclo::make_root(p, q);
}

std::vector<RootOfUnity> parse_roots(const std::string& text) {
    std::vector<RootOfUnity> out;
    for (const auto& part : split_commas(text)) out.push_back(parse_root(part));
    return out;
}

std::vector<long long> parse_ints(const std::string& text) {
    std::vector<long long> out;
    for (const auto& part : split_commas(text)) out.push_back(std::stoll(part));
    return out;
}

std::vector<unsigned> parse_uints(const std::string& text) {
    std::vector<unsigned> out;
    for (const auto& part : split_commas(text)) {
        long long v = std::stoll(part);
        if (v < 0) throw std::invalid_argument("expected non-negative integer: " + part);
        out.push_back(unsigned(v));
    }
    return out;
}

std::vector<Complex> parse_reals(const std::string& text) {
    std::vector<Complex> out;
    for (const auto& part : split_commas(text))
        out.push_back(Complex(Real(part), Real(0)));
    return out;
}

void write_samples_csv(const std::string& path,
                       const std::vector<std::pair<long long, Complex>>& samples) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << "N,re,im\n";
    for (const auto& [n, v] : samples)
        out << n << "," << real(v).str(40) << "," << imag(v).str(40) << "\n";
}

nlohmann::json profile_json(const domains::IndexProfile& p) {
    nlohmann::json j;
    const int r = p.depth();
    j["depth"] = r;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& z : p.roots()) roots.push_back(z.str());
    j["z"] = roots;
    j["q_of_z"] = p.q_flag();
    j["index_set_I_z"] = p.index_set_I_z();
    nlohmann::json per_i = nlohmann::json::array();
    for (int i = 1; i <= r; ++i) {
        nlohmann::json e;
        e["i"] = i;
        e["J"] = p.J(i);
        e["J_prime"] = p.J_prime(i);
        e["Q"] = p.Q(i);
        e["a_flag"] = p.a_flag(i);
        if (p.t_count(i) <= 1) e["t"] = p.t(i);
        per_i.push_back(e);
    }
    j["per_index"] = per_i;
    nlohmann::json qtab = nlohmann::json::array();
    for (int i = 1; i <= r; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 1; jj <= i; ++jj) row.push_back(p.q_interval(jj, i));
        qtab.push_back(row);
    }
    j["q_interval"] = qtab;
    return j;
}

nlohmann::json hyperplanes_json(const std::vector<domains::HyperplaneFamily>& fams) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : fams) {
        nlohmann::json e;
        e["sum_upto"] = f.last_index;
        if (f.single_level) {
            e["level"] = f.max_level;
        } else {
            e["max_level"] = f.max_level;
            e["all_integers_below"] = true;
        }
        arr.push_back(e);
    }
    return arr;
}

nlohmann::json expansion_json(const ratfield::LaurentExpansion& e) {
    nlohmann::json j;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& z : e.z) roots.push_back(z.str());
    j["z"] = roots;
    j["anchor"] = e.anchor;
    j["mode"] = (e.mode == ratfield::ExpansionMode::Boundary) ? "boundary" : "general";
    j["indices"] = e.indices;
    nlohmann::json coeffs;
    for (size_t t = 0; t < e.indices.size(); ++t)
        coeffs[std::to_string(e.indices[t])] = e.coeff[t].str();
    j["coefficients"] = coeffs;
    return j;
}

nlohmann::json regvalue_json(const numerics::RegularizedValue& rv) {
    nlohmann::json j;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& z : rv.z) roots.push_back(z.str());
    j["z"] = roots;
    j["a"] = rv.a;
    j["k"] = rv.k_vec;
    j["value_re"] = real(rv.value).str(30);
    j["value_im"] = imag(rv.value).str(30);
    j["residual"] = rv.residual.str(5);
    j["grid_agreement"] = rv.grid_agreement.str(5);
    j["ok"] = rv.ok;
    if (!rv.message.empty()) j["message"] = rv.message;
    nlohmann::json coeffs = nlohmann::json::array();
    for (size_t t = 0; t < rv.model.terms.size(); ++t) {
        if (t >= rv.coefficients.size()) break;
        if (abs(rv.coefficients[t]) < Real("1e-12")) continue;
        nlohmann::json e;
        e["term"] = rv.model.terms[t].str();
        e["re"] = real(rv.coefficients[t]).str(20);
        e["im"] = imag(rv.coefficients[t]).str(20);
        coeffs.push_back(e);
    }
    j["coefficients"] = coeffs;
    return j;
}

nlohmann::json report_json(const numerics::VerifyReport& rep) {
    nlohmann::json j;
    j["identity"] = rep.identity;
    j["inputs"] = rep.inputs;
    j["residual"] = rep.residual.str(5);
    j["tolerance"] = rep.tolerance.str(5);
    j["pass"] = rep.pass;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    return j;
}

}  // namespace mpolylog::textio
