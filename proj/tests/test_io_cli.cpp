#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "lvmb/builtin.hpp"
#include "lvmb/json_io.hpp"
#include "lvmb/moment.hpp"

using namespace lvmb;
using namespace lvmb::testing;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(LVMB_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("input JSON round trips") {
    for (const char* name :
         {"projective-space-2", "calabi-eckmann", "hopf", "nonpolytopal-fan"}) {
        LVMBData data = builtin_example(name);
        LVMBData back = parse_input_json(input_to_json(data));
        CHECK(back.m == data.m);
        CHECK(back.h_basis == data.h_basis);
        if (data.sigma) {
            REQUIRE(back.sigma.has_value());
            CHECK(back.sigma->faces() == data.sigma->faces());
        } else {
            REQUIRE(back.ambient_fan.has_value());
            CHECK(fans_equal(*back.ambient_fan, *data.ambient_fan));
        }
    }
}

TEST_CASE("rational literal forms") {
    LVMBData d = parse_input_json(
        R"({"m":2,"maximal_faces":[[1],[2]],"h_basis":[[{"re":"1/2","im":-3},"2/4"]]})");
    CHECK(d.h_basis[0][0] == GaussianRational(rat(1, 2), rat(-3)));
    CHECK(d.h_basis[0][1] == GaussianRational(rat(1, 2), rat(0)));
}

TEST_CASE("malformed inputs are rejected with diagnostics") {
    CHECK_THROWS_WITH_AS(parse_input_json("{"), doctest::Contains("not valid JSON"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_input_json("{\"maximal_faces\":[]}"),
                         doctest::Contains("missing field 'm'"), std::invalid_argument);
    CHECK_THROWS_AS(parse_input_json(R"({"m":2,"maximal_faces":[[0,1,2]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_input_json(R"({"m":2,"maximal_faces":[[1]],"h_basis":[["1"]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_input_json(R"({"m":2,"maximal_faces":[[1]],"h_basis":[["1/0","0"]]})"),
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_fan_json(R"({"ambient_dim":2,"rays":[[2,0]],"cones":[[0]]})"),
        doctest::Contains("invalid fan"), std::invalid_argument);
}

TEST_CASE("fan and polytope JSON round trips") {
    Fan f = square_fan();
    Fan back = parse_fan_json(fan_to_json(f));
    CHECK(fans_equal(f, back));

    auto rep = classify(builtin_example("calabi-eckmann"));
    auto verts = vertices(*rep.polytope, *rep.quotient_fan);
    HPolytope p2 = parse_polytope_json(polytope_to_json(*rep.polytope, &verts));
    CHECK(p2.dim == rep.polytope->dim);
    CHECK(p2.normals == rep.polytope->normals);
    CHECK(p2.offsets == rep.polytope->offsets);
}

TEST_CASE("LP problems serialize in the rational format") {
    LPProblem p = support_function_lp(square_fan());
    LPProblem back = parse_lp_json(lp_to_json(p));
    CHECK(back.num_vars == p.num_vars);
    CHECK(back.sense == p.sense);
    CHECK(back.objective == p.objective);
    REQUIRE(back.constraints.size() == p.constraints.size());
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        CHECK(back.constraints[i].coeffs == p.constraints[i].coeffs);
        CHECK(back.constraints[i].rel == p.constraints[i].rel);
        CHECK(back.constraints[i].rhs == p.constraints[i].rhs);
    }
    CHECK(solve(back).objective_value == solve(p).objective_value);
}

TEST_CASE("classification and harness reports serialize") {
    auto rep = classify(builtin_example("calabi-eckmann"));
    std::string j = classification_to_json(rep);
    CHECK(j.find("\"verdict\": \"LVM\"") != std::string::npos);
    CHECK(j.find("runtime") == std::string::npos);  // opt-in only

    auto conv = verify_convexity(rep, 50, 0, 1e-9);
    std::string hj = convexity_to_json(rep, conv);
    CHECK(hj.find("\"pass\": true") != std::string::npos);

    ReportRendering rr;
    rr.include_runtime = true;
    rr.runtime_ms = 1.25;
    CHECK(classification_to_json(rep, rr).find("runtime_ms") != std::string::npos);
}

TEST_CASE("cli exit codes follow the verdict taxonomy") {
    const std::string dir = "/tmp/lvmb_cli_test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);

    spit(dir + "/ce.json", input_to_json(builtin_example("calabi-eckmann")));
    spit(dir + "/np.json", input_to_json(builtin_example("nonpolytopal-fan")));
    spit(dir + "/hopf.json", input_to_json(builtin_example("hopf")));
    spit(dir + "/bad-h.json",
         R"({"m":2,"maximal_faces":[[1],[2]],"h_basis":[["1","0"],[{"re":"0","im":"1"},"0"]]})");
    spit(dir + "/garbage.json", "{nope");

    CHECK(run_cli("classify " + dir + "/ce.json") == 0);
    CHECK(run_cli("classify " + dir + "/np.json") == 2);
    CHECK(run_cli("check " + dir + "/ce.json") == 0);
    CHECK(run_cli("check " + dir + "/bad-h.json") == 3);

    // The negative branch carries its t* = 0 evidence in the JSON report.
    CHECK(run_cli("classify " + dir + "/np.json --format json --output " + dir +
                  "/np-report.json") == 2);
    std::string np_report = slurp(dir + "/np-report.json");
    CHECK(np_report.find("\"verdict\": \"LVMB-not-LVM\"") != std::string::npos);
    CHECK(np_report.find("\"objective_value\": \"0\"") != std::string::npos);
    CHECK(np_report.find("strict_infeasibility") != std::string::npos);
    CHECK(run_cli("classify " + dir + "/garbage.json") == 1);
    CHECK(run_cli("classify " + dir + "/missing.json") == 1);
    CHECK(run_cli("example no-such-example") == 1);
    CHECK(run_cli("example calabi-eckmann") == 0);
    CHECK(run_cli("verify-convexity " + dir + "/hopf.json --samples 100") == 0);
    CHECK(run_cli("polytope " + dir + "/ce.json --output " + dir + "/ce-poly.json") == 0);
    CHECK(run_cli("normal-fan " + dir + "/ce-poly.json") == 0);
}

TEST_CASE("same input and seed give byte-identical JSON reports") {
    const std::string dir = "/tmp/lvmb_cli_test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    spit(dir + "/ce.json", input_to_json(builtin_example("calabi-eckmann")));

    std::string base = "verify-convexity " + dir + "/ce.json --samples 200 --seed 7 "
                       "--format json --output ";
    CHECK(run_cli(base + dir + "/r1.json") == 0);
    CHECK(run_cli(base + dir + "/r2.json") == 0);
    CHECK(slurp(dir + "/r1.json") == slurp(dir + "/r2.json"));

    // A different seed changes sampled numbers but not the verdict.
    CHECK(run_cli("verify-convexity " + dir + "/ce.json --samples 200 --seed 8 "
                  "--format json --output " +
                  dir + "/r3.json") == 0);
    CHECK(slurp(dir + "/r3.json").find("\"verdict\": \"LVM\"") != std::string::npos);
}

TEST_CASE("text and json outputs carry identical verdicts and numbers") {
    const std::string dir = "/tmp/lvmb_cli_test";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    spit(dir + "/ce.json", input_to_json(builtin_example("calabi-eckmann")));

    CHECK(run_cli("verify-convexity " + dir + "/ce.json --samples 100 --seed 3 "
                  "--format text --output " +
                  dir + "/t.txt") == 0);
    CHECK(run_cli("verify-convexity " + dir + "/ce.json --samples 100 --seed 3 "
                  "--format json --output " +
                  dir + "/t.json") == 0);
    std::string text = slurp(dir + "/t.txt");
    std::string json = slurp(dir + "/t.json");

    CHECK(text.find("verdict: LVM") != std::string::npos);
    CHECK(json.find("\"verdict\": \"LVM\"") != std::string::npos);

    // The text rendering prints numbers through the JSON serializer, so the
    // violation value appears verbatim in both.
    auto grab = [&](const std::string& s, const std::string& key) {
        std::size_t at = s.find(key);
        REQUIRE(at != std::string::npos);
        at = s.find('=', at);
        std::size_t end = s.find('\n', at);
        std::string v = s.substr(at + 1, end - at - 1);
        if (auto sp = v.find(" (ok)"); sp != std::string::npos) v = v.substr(0, sp);
        while (!v.empty() && v.front() == ' ') v.erase(v.begin());
        return v;
    };
    std::string viol = grab(text, "max membership violation");
    CHECK(json.find("\"max_membership_violation\": " + viol) != std::string::npos);
}
