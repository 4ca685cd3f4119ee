// Command-line front end for the eudoxus library. Talks to the shared
// library exclusively through the C API in eudoxus/eudoxus.h.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eudoxus/eudoxus.h"

namespace {

using nlohmann::json;

int exit_for(eud_status s) {
    switch (s) {
        case EUD_OK:
            return 0;
        case EUD_PARSE_ERROR:
            return 1;
        case EUD_EVAL_ERROR:
            return 2;
        case EUD_BUDGET_EXCEEDED:
            return 3;
        default:
            return 2;
    }
}

int report_failure(eud_status s) {
    std::fprintf(stderr, "error: %s\n", eud_last_error());
    return exit_for(s);
}

struct RealHandle {
    eud_real* h = nullptr;
    ~RealHandle() { eud_real_release(h); }
};

struct StringOut {
    char* s = nullptr;
    ~StringOut() { eud_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

int default_budget_exponent() {
    if (const char* env = std::getenv("EUDOXUS_BUDGET")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 64;
}

int run_eval(const std::string& expr, int ndigits, int budget, bool json_out) {
    RealHandle r;
    eud_status s = eud_real_from_expr(expr.c_str(), budget, &r.h);
    if (s != EUD_OK) return report_failure(s);
    StringOut d;
    s = eud_real_digits(r.h, ndigits, budget, &d.s);
    if (s != EUD_OK) return report_failure(s);
    if (json_out) {
        std::string text = d.str();
        bool pinned = true;
        auto marker = text.find(' ');
        if (marker != std::string::npos) {
            pinned = false;
            text = text.substr(0, marker);
        }
        json j{{"expr", expr}, {"digits", text}, {"pinned", pinned}};
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s\n", d.str().c_str());
    }
    return 0;
}

int run_colonnade(const std::string& expr, int count, int budget,
                  bool json_out) {
    RealHandle r;
    eud_status s = eud_real_from_expr(expr.c_str(), budget, &r.h);
    if (s != EUD_OK) return report_failure(s);
    StringOut lines;
    s = eud_real_colonnade(r.h, count, budget, &lines.s);
    if (s != EUD_OK) return report_failure(s);
    if (json_out) {
        int p = 1;
        for (const std::string& v : split_lines(lines.str())) {
            json j{{"p", p++}, {"value", v}};
            std::printf("%s\n", j.dump().c_str());
        }
    } else {
        std::fputs(lines.str().c_str(), stdout);
    }
    return 0;
}

int run_certify(const std::string& expr, long range, long samples, int budget,
                unsigned long seed, bool json_out) {
    RealHandle r;
    eud_status s = eud_real_from_expr(expr.c_str(), budget, &r.h);
    if (s != EUD_OK) return report_failure(s);
    StringOut line;
    int violated = 0;
    std::string label = strip_spaces(expr);
    s = eud_real_certify(r.h, label.c_str(), range, samples, seed, &violated,
                         &line.s);
    if (s != EUD_OK) return report_failure(s);
    if (json_out) {
        StringOut cert;
        eud_real_cert(r.h, &cert.s);
        // line format: label cert max_observed samples verdict
        std::vector<std::string> parts;
        std::string text = line.str();
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t sp = text.find(' ', pos);
            if (sp == std::string::npos) sp = text.size();
            parts.push_back(text.substr(pos, sp - pos));
            pos = sp + 1;
        }
        json j{{"label", label},
               {"cert", parts.size() > 1 ? parts[parts.size() - 4] : ""},
               {"max_observed",
                parts.size() > 2 ? parts[parts.size() - 3] : ""},
               {"samples", parts.size() > 3 ? parts[parts.size() - 2] : ""},
               {"verdict", parts.empty() ? "" : parts.back()}};
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s\n", line.str().c_str());
    }
    return violated ? 4 : 0;
}

int run_matrix_recover(const std::string& path, long noise,
                       const std::string& eps, unsigned long seed, int budget,
                       bool json_out) {
    int all = 0;
    StringOut text;
    eud_status s =
        eud_matrix_recover_report(path.c_str(), noise, eps.c_str(), seed,
                                  budget, json_out ? 1 : 0, &all, &text.s);
    if (s != EUD_OK && !text.s) return report_failure(s);
    std::fputs(text.str().c_str(), stdout);
    if (s != EUD_OK) return report_failure(s);
    return 0;
}

int run_bench(const std::string& suite, int budget) {
    using clock = std::chrono::steady_clock;
    long ops = 0;
    clock::time_point t0, t1;

    eud_status s = EUD_OK;
    if (suite == "digits") {
        // 50 digits needs evaluation arguments around 4*10^50, beyond the
        // default 2^64 cap; the workload carries its own budget.
        int digits_budget = budget < 192 ? 192 : budget;
        RealHandle x;
        s = eud_real_from_expr("sqrt(2)", digits_budget, &x.h);
        if (s != EUD_OK) return report_failure(s);
        t0 = clock::now();
        StringOut d;
        s = eud_real_digits(x.h, 50, digits_budget, &d.s);
        if (s != EUD_OK) return report_failure(s);
        t1 = clock::now();
        ops = 1;
    } else if (suite == "mul") {
        RealHandle x, y;
        if ((s = eud_real_from_expr("sqrt(2)", budget, &x.h)) != EUD_OK ||
            (s = eud_real_from_ratio("3", "7", &y.h)) != EUD_OK)
            return report_failure(s);
        t0 = clock::now();
        for (int i = 0; i < 1000; ++i) {
            RealHandle m;
            if ((s = eud_real_mul(x.h, y.h, &m.h)) != EUD_OK)
                return report_failure(s);
        }
        t1 = clock::now();
        ops = 1000;
    } else if (suite == "recip") {
        t0 = clock::now();
        for (int i = 0; i < 100; ++i) {
            RealHandle x, r;
            std::string num = std::to_string((i % 89) + 2);
            if ((s = eud_real_from_ratio(num.c_str(), "7", &x.h)) != EUD_OK ||
                (s = eud_real_recip(x.h, budget, &r.h)) != EUD_OK)
                return report_failure(s);
        }
        t1 = clock::now();
        ops = 100;
    } else {
        std::fprintf(stderr, "error: unknown bench suite '%s'\n",
                     suite.c_str());
        return 1;
    }

    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    json j{{"suite", suite}, {"ops", ops}, {"wall_ms", ms}};
    std::printf("%s\n", j.dump().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eudoxus: exact real arithmetic on certified integer "
                 "sequences"};
    app.require_subcommand(1);

    int budget = default_budget_exponent();
    unsigned long seed = 0;
    std::string output = "plain";
    app.add_option("--budget", budget,
                   "evaluation budget exponent (arguments up to 2^N)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for audits and noise");
    app.add_option("--output", output, "output format")
        ->check(CLI::IsMember({"plain", "json-lines"}));

    std::string expr;
    int ndigits = 10;
    auto* cmd_eval = app.add_subcommand(
        "eval", "evaluate an expression to N decimal digits");
    cmd_eval->fallthrough();
    cmd_eval->add_option("expr", expr, "expression (note: INT/INT is an exact "
                                       "rational literal; any other '/' is "
                                       "division)")
        ->required();
    cmd_eval->add_option("--digits", ndigits, "decimal digits")
        ->check(CLI::PositiveNumber);

    int count = 10;
    auto* cmd_colonnade = app.add_subcommand(
        "colonnade", "print f(1..M) of the normal-form representative");
    cmd_colonnade->fallthrough();
    cmd_colonnade->add_option("expr", expr, "expression")->required();
    cmd_colonnade->add_option("--count", count, "how many values")
        ->check(CLI::PositiveNumber);

    long range = 1000, samples = 10000;
    auto* cmd_certify = app.add_subcommand(
        "certify", "audit the certificate of an evaluated expression");
    cmd_certify->fallthrough();
    cmd_certify->add_option("expr", expr, "expression")->required();
    cmd_certify->add_option("--range", range, "sample window [-R, R]")
        ->check(CLI::PositiveNumber);
    cmd_certify->add_option("--samples", samples, "random sample count")
        ->check(CLI::PositiveNumber);

    std::string path, eps = "1/100";
    long noise = 0;
    auto* cmd_matrix = app.add_subcommand(
        "matrix-recover", "lift a rational matrix with noise and recover it");
    cmd_matrix->fallthrough();
    cmd_matrix->add_option("--file", path, "matrix grid file")->required();
    cmd_matrix->add_option("--noise", noise, "noise amplitude k");
    cmd_matrix->add_option("--eps", eps, "target interval width");

    std::string suite;
    auto* cmd_bench =
        app.add_subcommand("bench", "time a fixed workload (json-lines)");
    cmd_bench->fallthrough();
    cmd_bench->add_option("--suite", suite, "digits | mul | recip")
        ->required();

    CLI11_PARSE(app, argc, argv);

    const bool json_out = output == "json-lines";
    if (cmd_eval->parsed()) return run_eval(expr, ndigits, budget, json_out);
    if (cmd_colonnade->parsed())
        return run_colonnade(expr, count, budget, json_out);
    if (cmd_certify->parsed())
        return run_certify(expr, range, samples, budget, seed, json_out);
    if (cmd_matrix->parsed())
        return run_matrix_recover(path, noise, eps, seed, budget, json_out);
    if (cmd_bench->parsed()) return run_bench(suite, budget);
    return 0;
}
