#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperpot/cli.hpp"

using hyperpot::cli_main;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/hyperpot_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kCirclePoly = R"({"nvars":2,"terms":[
    {"exp":[2,0],"coeff":1},{"exp":[0,2],"coeff":1},{"exp":[0,0],"coeff":-1}]})";

} // namespace

TEST_CASE("milnor subcommand emits the rank report") {
    RunResult r = run({"milnor", "--d", "2", "--n", "3"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rank_H"] == "6");
    CHECK(j["mu_tilde"] == "1");
    CHECK(j["mu"] == "5");
    CHECK(j["nu"] == "6");
}

TEST_CASE("usage errors exit 2") {
    RunResult r = run({"zones", "--grid", "11"}); // missing --poly/--box
    CHECK(r.code == 2);
    RunResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("domain errors are machine readable on stderr with exit 1") {
    std::string poly = write_temp("circle.json", kCirclePoly);
    RunResult r = run({"hyperbolic", "--poly", poly, "--point", "1,0"});
    CHECK(r.code == 1);
    json j = json::parse(r.err);
    CHECK(j["error"]["code"] == "point-on-surface");
    CHECK(j["error"].contains("message"));
}

TEST_CASE("reflection requested on a skew lattice fails with the documented error") {
    std::string lat = write_temp("skew.json", R"({"gram":[[0,1],[-1,0]],"symmetry":"skew"})");
    std::string gens = write_temp("skewgens.json", R"({"generators":[[0,1]]})");
    RunResult r = run({"orbit", "--lattice", lat, "--generators", gens, "--start", "1,0",
                       "--action", "reflect"});
    CHECK(r.code == 1);
    json j = json::parse(r.err);
    CHECK(j["error"]["code"] == "symmetric-required");
    CHECK(std::string(j["error"]["message"]).find("symmetric") != std::string::npos);
}

TEST_CASE("hyperbolic subcommand") {
    std::string poly = write_temp("circle2.json", kCirclePoly);
    RunResult inside = run({"hyperbolic", "--poly", poly, "--point", "0,0", "--ndirs", "64"});
    CHECK(inside.code == 0);
    json j = json::parse(inside.out);
    CHECK(j["is_hyperbolic"] == true);
    CHECK(j["tested_directions"] == 64);
    CHECK(j["witness_direction"].is_null());

    RunResult outside = run({"hyperbolic", "--poly", poly, "--point", "3,0", "--ndirs", "64"});
    json jo = json::parse(outside.out);
    CHECK(jo["is_hyperbolic"] == false);
    CHECK(jo["witness_direction"].is_array());
}

TEST_CASE("orbit subcommand with spectrum") {
    std::string lat = write_temp("a1.json", R"({"gram":[[2]],"symmetry":"symmetric"})");
    std::string gens = write_temp("a1gens.json", R"({"generators":[[1]]})");
    RunResult r = run({"orbit", "--lattice", lat, "--generators", gens, "--start", "1", "--form",
                       "1", "--emit-vectors"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["size"] == 2);
    CHECK(j["status"] == "closed");
    CHECK(j["spectrum"] == json::array({"-1", "1"}));
    CHECK(j["vectors"].size() == 2);
}

TEST_CASE("probe subcommand on the hyperbolic counterexample") {
    std::string lat = write_temp("hyp.json", R"({"gram":[[2,-3],[-3,2]],"symmetry":"symmetric"})");
    std::string gens = write_temp("hypgens.json", R"({"generators":[[1,0],[0,1]]})");
    RunResult r = run({"probe", "--lattice", lat, "--generators", gens, "--start", "1,0",
                       "--form", "1,0", "--schedule", "4,8,16,32"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "growth-consistent-with-infinite");
    CHECK(j["value_counts"].size() == 4);
}

TEST_CASE("model subcommand") {
    RunResult dt = run({"model", "--kind", "dtilde", "--m", "4"});
    CHECK(dt.code == 0);
    CHECK(json::parse(dt.out)["kernel_rank"] == 1);

    RunResult hyp = run({"model", "--kind", "hyperbolic", "--k", "3", "--total", "5"});
    CHECK(json::parse(hyp.out)["self_pairing"] == "6");

    RunResult pc = run({"model", "--kind", "plane-curve", "--d", "2", "--eta", "0", "--kzone", "1"});
    json jpc = json::parse(pc.out);
    CHECK(jpc["orbit_size"] == 4);
    CHECK(jpc["spectrum_size"] == 4);
}

TEST_CASE("zones subcommand emits CSV rows") {
    std::string poly = write_temp("circle3.json", kCirclePoly);
    RunResult r = run({"zones", "--poly", poly, "--box", "-2,2,-2,2", "--grid", "9"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "x1,x2,k");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows > 50); // 81 grid points minus the on-surface ones
}

TEST_CASE("ray scan emits the documented CSV header, header-only when empty") {
    std::string poly = write_temp("circle4.json", kCirclePoly);
    RunResult empty = run({"force", "--poly", poly, "--box", "-2,2,-2,2", "--grid", "9", "--ray",
                           "0,0;1,0;0,0.5,0"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "t,potential,force_norm,zone\n");
}

TEST_CASE("potential with a density file") {
    std::string poly = write_temp("sphere_d.json", R"({"nvars":3,"terms":[
        {"exp":[2,0,0],"coeff":1},{"exp":[0,2,0],"coeff":1},
        {"exp":[0,0,2],"coeff":1},{"exp":[0,0,0],"coeff":-1}]})");
    std::string density = write_temp("z2.json", R"({"nvars":3,"terms":[
        {"exp":[0,0,2],"coeff":1}]})");
    RunResult r = run({"potential", "--poly", poly, "--density", density, "--point", "0,0,0",
                       "--box", "-2,2,-2,2,-2,2", "--grid", "9", "--tol", "1e-8"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    // G(1) * (1/2) * integral of z^2 over the unit sphere = -1/(4pi) * 2pi/3
    CHECK(double(j["value"]) == doctest::Approx(-1.0 / 6).epsilon(1e-7));
}

TEST_CASE("sphere ray scan shows the plateau and the 1/r tail") {
    std::string poly = write_temp("sphere.json", R"({"nvars":3,"terms":[
        {"exp":[2,0,0],"coeff":1},{"exp":[0,2,0],"coeff":1},
        {"exp":[0,0,2],"coeff":1},{"exp":[0,0,0],"coeff":-1}]})");
    RunResult r = run({"potential", "--poly", poly, "--box", "-2,2,-2,2,-2,2", "--grid", "9",
                       "--ray", "0,0,0;1,0,0;0.5,3,2", "--tol", "1e-7"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, inside, outside;
    std::getline(lines, header);
    std::getline(lines, inside);
    std::getline(lines, outside);
    CHECK(header == "t,potential,force_norm,zone");
    // t=0.5: plateau value -1/2 in zone 0; t=3: -1/(2r) in zone 1
    CHECK(inside.find(",0") != std::string::npos);
    double u_in = std::stod(inside.substr(inside.find(',') + 1));
    CHECK(u_in == doctest::Approx(-0.5).epsilon(1e-6));
    double u_out = std::stod(outside.substr(outside.find(',') + 1));
    CHECK(u_out == doctest::Approx(-1.0 / 6).epsilon(1e-6));
    CHECK(outside.back() == '1');
}

TEST_CASE("identical configurations produce byte-identical output") {
    std::string poly = write_temp("circle5.json", kCirclePoly);
    auto args = std::vector<std::string>{"hyperbolic", "--poly", poly, "--point", "0,0",
                                         "--ndirs", "128", "--seed", "5"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto margs = std::vector<std::string>{"milnor", "--d", "7", "--n", "9"};
    CHECK(run(margs).out == run(margs).out);
}

TEST_CASE("verify subcommand rejects unknown suites and runs milnor") {
    RunResult bad = run({"verify", "nonsense"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.err)["error"]["code"] == "unknown-suite");

    RunResult ok = run({"verify", "milnor"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[PASS]") != std::string::npos);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);
}
