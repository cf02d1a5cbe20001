// Command-line front end: parses input files, runs the classification
// pipeline and the convexity harness, and emits text or JSON reports.
//
// Exit codes: 0 LVM / pass, 1 input error, 2 LVMB-not-LVM, 3 not-LVMB,
// 4 harness failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lvmb/builtin.hpp"
#include "lvmb/json_io.hpp"
#include "lvmb/lp.hpp"
#include "lvmb/moment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitLvmbNotLvm = 2;
constexpr int kExitNotLvmb = 3;
constexpr int kExitHarnessFailure = 4;

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    bool timings = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const Options& opt, const std::string& content) {
    if (opt.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.output + "'");
    out << content;
}

// Numbers rendered through the JSON serializer so the two formats carry
// byte-identical values.
std::string num(double x) { return nlohmann::json(x).dump(); }

int verdict_exit(lvmb::Verdict v) {
    switch (v) {
        case lvmb::Verdict::LVM: return kExitOk;
        case lvmb::Verdict::LvmbNotLvm: return kExitLvmbNotLvm;
        case lvmb::Verdict::NotLvmb: return kExitNotLvmb;
    }
    return kExitInputError;
}

std::string conditions_text(const lvmb::LvmbCheckReport& rep) {
    std::ostringstream os;
    os << "condition (1) p|_h injective:        " << (rep.injectivity.ok ? "ok" : "FAILED")
       << "  [" << rep.injectivity.detail << "]\n";
    os << "condition (2) q(Delta) complete fan: " << (rep.quotient_fan.ok ? "ok" : "FAILED")
       << "  [" << rep.quotient_fan.detail << "]\n";
    return os.str();
}

std::string classification_text(const lvmb::ClassificationReport& rep) {
    std::ostringstream os;
    os << "verdict: " << to_string(rep.verdict) << "\n" << conditions_text(rep.lvmb);
    os << "quotient dimension n = " << rep.quotient.n() << " (m = " << rep.quotient.m() << ")\n";
    if (rep.support_certificate)
        os << "support LP optimum t* = " << lvmb::to_string(rep.support_certificate->objective_value)
           << "\n";
    if (rep.offsets) {
        os << "offsets a =";
        for (const auto& a : *rep.offsets) os << " " << lvmb::to_string(a);
        os << "\n";
    }
    if (rep.polytope) {
        os << "normal polytope: " << rep.polytope->normals.size() << " inequalities in R^"
           << rep.polytope->dim << "\n";
        for (const auto& [cone, v] : vertices(*rep.polytope, *rep.quotient_fan)) {
            os << "  vertex (";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? "," : "") << lvmb::to_string(v[i]);
            os << ") at cone {";
            for (std::size_t i = 0; i < cone.size(); ++i) os << (i ? "," : "") << cone[i];
            os << "}\n";
        }
    }
    if (rep.strict_infeasibility)
        os << "t >= 1 is infeasible (Farkas certificate attached in JSON output)\n";
    return os.str();
}

std::string harness_text(const lvmb::ConvexityReport& h) {
    std::ostringstream os;
    os << "harness: samples = " << h.samples << ", seed = " << h.seed << ", tol = " << num(h.tol)
       << "\n";
    os << "  max membership violation = " << num(h.max_membership_violation)
       << (h.membership_ok ? " (ok)" : " (FAILED)") << "\n";
    os << "  max lift residual        = " << num(h.max_lift_residual) << "\n";
    os << "  vertex images exact:     " << (h.vertex_images_exact ? "ok" : "FAILED") << "\n";
    os << "  normal-fan round trip:   " << (h.normality_ok ? "ok" : "FAILED") << "\n";
    os << "  every inequality tight:  " << (h.tightness_ok ? "ok" : "FAILED") << "\n";
    std::size_t ok_dirs = 0;
    for (const auto& d : h.directions)
        if (d.min_ok && d.face_match && d.spread_ok) ++ok_dirs;
    os << "  directions: " << ok_dirs << "/" << h.directions.size() << " ok\n";
    for (const auto& d : h.directions) {
        if (d.min_ok && d.face_match && d.spread_ok) continue;
        os << "    FAILED direction qv = (";
        for (std::size_t i = 0; i < d.qv.size(); ++i)
            os << (i ? "," : "") << lvmb::to_string(d.qv[i]);
        os << ") min_ok=" << d.min_ok << " face_match=" << d.face_match
           << " spread_ok=" << d.spread_ok << "\n";
    }
    if (!h.failure.empty()) os << "  failure: " << h.failure << "\n";
    os << "result: " << (h.all_ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

int run_check(const Options& opt) {
    lvmb::LVMBData data = lvmb::parse_input_json(read_input(opt.input));
    lvmb::LvmbCheckReport rep = lvmb::check_lvmb(data);
    if (opt.format == "json") {
        nlohmann::json j;
        j["conditions"] = {
            {"injectivity", {{"ok", rep.injectivity.ok}, {"detail", rep.injectivity.detail}}},
            {"quotient_fan", {{"ok", rep.quotient_fan.ok}, {"detail", rep.quotient_fan.detail}}},
        };
        j["lvmb"] = rep.ok();
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, conditions_text(rep) +
                      (rep.ok() ? "input is LVMB data\n" : "input is not LVMB data\n"));
    }
    return rep.ok() ? kExitOk : kExitNotLvmb;
}

int run_classify(const Options& opt, bool polytope_only) {
    auto t0 = std::chrono::steady_clock::now();
    lvmb::LVMBData data = lvmb::parse_input_json(read_input(opt.input));
    lvmb::ClassificationReport rep = lvmb::classify(data);
    auto t1 = std::chrono::steady_clock::now();

    lvmb::ReportRendering rr;
    rr.include_runtime = opt.timings;
    rr.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (polytope_only) {
        if (!rep.polytope) {
            std::cerr << "no polytope: verdict is " << to_string(rep.verdict) << "\n";
            return verdict_exit(rep.verdict);
        }
        auto verts = vertices(*rep.polytope, *rep.quotient_fan);
        emit(opt, lvmb::polytope_to_json(*rep.polytope, &verts));
        return kExitOk;
    }
    emit(opt, opt.format == "json" ? lvmb::classification_to_json(rep, rr)
                                   : classification_text(rep));
    return verdict_exit(rep.verdict);
}

int run_normal_fan(const Options& opt) {
    lvmb::HPolytope p = lvmb::parse_polytope_json(read_input(opt.input));
    try {
        lvmb::Fan nf = lvmb::normal_fan(p);
        emit(opt, lvmb::fan_to_json(nf));
        return kExitOk;
    } catch (const lvmb::PolytopeError& e) {
        std::cerr << "normal-fan: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run_verify(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    lvmb::LVMBData data = lvmb::parse_input_json(read_input(opt.input));
    lvmb::ClassificationReport rep = lvmb::classify(data);
    if (rep.verdict != lvmb::Verdict::LVM) {
        emit(opt, opt.format == "json" ? lvmb::classification_to_json(rep)
                                       : classification_text(rep));
        return verdict_exit(rep.verdict);
    }
    lvmb::ConvexityReport harness = lvmb::verify_convexity(rep, opt.samples, opt.seed, opt.tol);
    auto t1 = std::chrono::steady_clock::now();

    lvmb::ReportRendering rr;
    rr.include_runtime = opt.timings;
    rr.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    emit(opt, opt.format == "json" ? lvmb::convexity_to_json(rep, harness, rr)
                                   : classification_text(rep) + harness_text(harness));
    return harness.all_ok() ? kExitOk : kExitHarnessFailure;
}

int run_example(const Options& opt, const std::string& name) {
    lvmb::LVMBData data = lvmb::builtin_example(name);
    emit(opt, lvmb::input_to_json(data));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LVMB/LVM transverse-Kahler classifier"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "Write the report to a file instead of stdout");
    app.add_option("--samples", opt.samples, "Harness sample count")->capture_default_str();
    app.add_option("--seed", opt.seed, "Harness random seed")->capture_default_str();
    app.add_option("--tol", opt.tol, "Float tolerance for sampled checks")
        ->capture_default_str();
    app.add_flag("--timings", opt.timings,
                 "Include runtimes in JSON reports (breaks byte-for-byte determinism)");

    auto* check = app.add_subcommand("check", "Evaluate the LVMB conditions (1)-(2)");
    auto* classify = app.add_subcommand("classify", "Classify as LVM / LVMB-not-LVM / not-LVMB");
    auto* polytope = app.add_subcommand("polytope", "Emit the inner normal polytope as JSON");
    auto* nfan = app.add_subcommand("normal-fan", "Normal fan of a polytope JSON file");
    auto* verify = app.add_subcommand("verify-convexity",
                                      "Classify, then run the sampled convexity harness");
    auto* example = app.add_subcommand("example", "Print a built-in example input");

    std::string input, name;
    for (CLI::App* sc : {check, classify, polytope, nfan, verify})
        sc->add_option("input", input, "Input JSON file ('-' for stdin)")->required();
    example->add_option("name", name, "Example name")->required();

    CLI11_PARSE(app, argc, argv);
    opt.input = input;

    if (const char* log = std::getenv("LVMB_LOG")) {
        std::string level = log;
        if (level == "debug" || level == "trace")
            lvmb::set_simplex_trace([](const std::string& s) { std::cerr << s; },
                                    level == "trace");
    }

    try {
        if (*check) return run_check(opt);
        if (*classify) return run_classify(opt, false);
        if (*polytope) return run_classify(opt, true);
        if (*nfan) return run_normal_fan(opt);
        if (*verify) return run_verify(opt);
        if (*example) return run_example(opt, name);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHarnessFailure;
    }
    return kExitInputError;
}
