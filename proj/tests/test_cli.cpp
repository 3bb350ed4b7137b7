//  (C) Copyright 2026 the mpolylog authors.
//  Use, modification and distribution are subject to the
//  Boost Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)

//  End-to-end checks of the command-line tool: golden values, the canonical
//  expansion grammar, JSON output and the documented exit codes.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAILED: " << what << "\n";
        ++g_failures;
    }
}

void expect_near(const std::string& text, double value, double tol,
                 const std::string& what) {
    try {
        double got = std::stod(text);
        expect(std::abs(got - value) < tol, what + " (got " + text + ")");
    } catch (...) {
        expect(false, what + " (unparsable '" + text + "')");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    {
        auto r = run("eval --z -1 --s 2 --format json");
        expect(r.exit_code == 0, "eval -1 s=2 exits 0");
        auto j = nlohmann::json::parse(r.out);
        expect_near(j["value_re"], -0.82246703342411, 1e-8, "eval -1 s=2 = -pi^2/12");
    }
    {
        auto r = run("eval --z 1 --s 2 --format json");
        auto j = nlohmann::json::parse(r.out);
        expect_near(j["value_re"], 1.64493406684823, 1e-8, "eval 1 s=2 = zeta(2)");
    }
    {
        auto r = run("eval --z 1 --s 1");
        expect(r.exit_code == 4, "eval on the hyperplane s_1 = 1 exits 4");
    }
    {
        auto r = run("eval --z bogus --s 2");
        expect(r.exit_code == 3, "invalid root spec exits 3");
    }
    {
        auto r = run("eval --z 1,-1 --s 2");
        expect(r.exit_code == 3, "length mismatch exits 3");
    }
    {
        auto r = run("reg --z -1 --a 0 --format json");
        expect(r.exit_code == 0, "reg -1 a=0 exits 0");
        auto j = nlohmann::json::parse(r.out);
        expect_near(j["value_re"], -0.5, 1e-12, "reg -1 a=0 = -1/2");
    }
    {
        auto r = run("reg --z 1,-1 --a 1,-1 --format json");
        auto j = nlohmann::json::parse(r.out);
        expect_near(j["value_re"], -0.067590713, 1e-7, "reg (1,-1) a=(1,-1)");
    }
    {
        auto r = run("reg --z 1 --a 1 --k 0 --format json");
        auto j = nlohmann::json::parse(r.out);
        expect_near(j["value_re"], 0.5772156649, 1e-8, "reg 1 a=1 k=0 = gamma_0");
    }
    {
        auto r = run("expand --z 1,-1,-1 --a 1,1,0 --format json");
        expect(r.exit_code == 0, "expand exits 0");
        auto j = nlohmann::json::parse(r.out);
        expect(j["mode"] == "boundary", "expand picks boundary mode in the closure");
        expect(j["coefficients"]["1"] == "1/(s1-1)", "expand D_1 grammar");
        expect(j["coefficients"]["3"] == "(-1/2)/((s1-1)*(s3+s2+s1-2))",
               "expand D_3 grammar");
    }
    {
        auto r = run("expand --z -1,-1 --a 1,1 --format json");
        auto j = nlohmann::json::parse(r.out);
        expect(j["indices"].size() == 1 && j["indices"][0] == 0,
               "expand (-1,-1) a=(1,1) has only the trivial index");
    }
    {
        auto r = run("expand --z -1,1,-1,1 --a 0,1,0,1 --mode general --format json");
        auto j = nlohmann::json::parse(r.out);
        expect(j["coefficients"]["3"] == "(1/4)/(s3+s2+s1-1)", "expand general D_3");
        expect(j["coefficients"]["4"] == "(1/4)/((s3+s2+s1-1)*(s4+s3+s2+s1-2))",
               "expand general D_4");
    }
    {
        auto r = run("verify --suite combi --z 1,-1 --s 3,2 --N 30 --format json");
        expect(r.exit_code == 0, "single-point combi verify exits 0");
        auto j = nlohmann::json::parse(r.out);
        expect(j["pass"] == true, "single-point combi verify passes");
    }
    {
        auto r = run("poles --z 1,-1 --format json");
        auto j = nlohmann::json::parse(r.out);
        expect(j["families"].size() == 1 && j["families"][0]["level"] == 1,
               "poles of (1,-1) is s_1 = 1 only");
    }
    {
        auto r = run("domains --z 1,-1,-1 --a 1,1,0 --format json");
        auto j = nlohmann::json::parse(r.out);
        expect(j["index_set_I"] == nlohmann::json::array({0, 1, 3}),
               "domains reports I(z,a) = {0,1,3}");
    }
    {
        auto r = run("reg --z -1 --a 0 --precision 10");
        expect(r.exit_code == 3, "precision below 30 exits 3");
    }
    {
        // config file overrides, CSV sample dump
        std::string dir = "/tmp/mpolylog_cli_test";
        std::system(("mkdir -p " + dir).c_str());
        std::string cfgfile = dir + "/cfg.txt";
        FILE* f = fopen(cfgfile.c_str(), "w");
        fputs("tolerance=1e-6\ngrid_span=2500\n", f);
        fclose(f);
        std::string csv = dir + "/samples.csv";
        auto r = run("reg --z -1 --a 0 --config " + cfgfile + " --dump-samples " + csv +
                     " --format json");
        expect(r.exit_code == 0, "reg with config file exits 0");
        FILE* c = fopen(csv.c_str(), "r");
        expect(c != nullptr, "sample dump exists");
        if (c) {
            char head[16] = {0};
            expect(fread(head, 1, 8, c) == 8 && std::string(head, 8) == "N,re,im\n",
                   "sample dump header");
            fclose(c);
        }
        FILE* g = fopen(cfgfile.c_str(), "w");
        fputs("no_such_key=1\n", g);
        fclose(g);
        auto r2 = run("reg --z -1 --a 0 --config " + cfgfile);
        expect(r2.exit_code == 3, "unknown config key exits 3");
    }

    if (g_failures == 0) std::cout << "test_cli: all checks passed\n";
    return g_failures == 0 ? 0 : 1;
}
