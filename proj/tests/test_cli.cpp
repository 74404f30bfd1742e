#define DOCTEST_CONFIG_IMPLEMENT
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "cli_runner.hpp"

using testcli::lines_of;
using testcli::run;
using nlohmann::ordered_json;

namespace {

std::filesystem::path write_temp(const std::string& stem, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / stem;
    std::ofstream out(path);
    out << body;
    return path;
}

// Every numeric JSON line the CLI emits must re-serialize to the same bytes.
void check_roundtrip(const std::string& line) {
    const auto j = ordered_json::parse(line);
    CHECK(j.dump() == line);
}

}  // namespace

TEST_CASE("gamma from velocity") {
    const auto r = run("gamma --velocity 0.6c");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("kind").get<std::string>() == "kinematic");
    CHECK(j.at("lambda").get<double>() == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(j.at("gamma").get<double>() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(j.at("fractional_shift").get<double>() ==
          doctest::Approx(0.2).epsilon(1e-12));
    check_roundtrip(lines_of(r.out).at(0));
}

TEST_CASE("gamma from a massless source is the identity") {
    const auto r = run("gamma --mass 0 --radius 6.371e6");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("gamma").get<double>() == 1.0);
    CHECK(j.at("lambda").get<double>() == 1.0);
    CHECK(j.at("kind").get<std::string>() == "gravitational");
}

TEST_CASE("gamma at earth's surface") {
    const auto r = run("gamma --mass 5.9722e24 --radius 6.371e6");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    const double shift = j.at("fractional_shift").get<double>();
    CHECK(shift == doctest::Approx(6.96e-10).epsilon(5e-3));
}

TEST_CASE("superluminal velocity exits 2") {
    const auto r = run("gamma --velocity 1.0c");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("superluminal") != std::string::npos);
    CHECK(run("gamma --velocity 3.1e8").exit_code == 2);
}

TEST_CASE("inside the horizon exits 2") {
    // 2GM/c^2 = 1 m for this mass; R = 0.5 m sits inside.
    const auto r = run("gamma --mass 6.7327807766e26 --radius 0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("horizon") != std::string::npos);
}

TEST_CASE("gamma input validation") {
    CHECK(run("gamma").exit_code == 2);
    CHECK(run("gamma --mass 1e24").exit_code == 2);
    CHECK(run("gamma --velocity 100 --mass 1e24 --radius 1e7").exit_code == 2);
    CHECK(run("gamma --velocity nonsense").exit_code == 2);
}

TEST_CASE("alter mass") {
    const auto r = run("alter --mass 1 --gamma 0.8");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("quantity").get<std::string>() == "mass_kg");
    CHECK(j.at("s_value").get<double>() == 1.0);
    CHECK(j.at("m_value").get<double>() == 1.25);
    CHECK(j.at("rule").get<std::string>() == "M_m = M_s / gamma");
    check_roundtrip(lines_of(r.out).at(0));
}

TEST_CASE("alter frequency via velocity") {
    const auto r = run("alter --frequency 1e15 --velocity 0.6c");
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("quantity").get<std::string>() == "frequency_Hz");
    CHECK(j.at("m_value").get<double>() ==
          doctest::Approx(8e14).epsilon(1e-12));
}

TEST_CASE("alter validation") {
    const auto neg = run("alter --frequency -1 --gamma 0.8");
    CHECK(neg.exit_code == 2);
    CHECK(neg.err.find("negative-frequency") != std::string::npos);
    CHECK(run("alter --mass 1 --gamma 0.8 --lambda 0.64").exit_code == 2);
    CHECK(run("alter --mass 1").exit_code == 2);
    CHECK(run("alter --gamma 0.8").exit_code == 2);
    CHECK(run("alter --mass 1 --mass 2 --gamma 0.8 --frequency 1").exit_code == 2);
}

TEST_CASE("alter csv format") {
    const auto r = run("alter --mass 1 --gamma 0.8 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "quantity,s_value,m_value,gamma,rule");
    CHECK(lines[1].find("mass_kg,1,1.25,0.8,") == 0);
}

TEST_CASE("verify laplacian sweep (worked example)") {
    const auto r = run("verify --op laplacian --n 1000 --modes 5 --gamma 0.5,0.9,0.999");
    REQUIRE(r.exit_code == 0);
    CHECK(r.err.empty());
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 15);
    for (const auto& line : lines) {
        const auto j = ordered_json::parse(line);
        CHECK(j.size() == 7);
        CHECK(j.at("pass").get<bool>());
        check_roundtrip(line);
    }
    // Modes increase slowest, gammas cycle fastest, both in argument order.
    CHECK(ordered_json::parse(lines[0]).at("mode_index").get<int>() == 0);
    CHECK(ordered_json::parse(lines[0]).at("gamma").get<double>() == 0.5);
    CHECK(ordered_json::parse(lines[1]).at("gamma").get<double>() == 0.9);
    CHECK(ordered_json::parse(lines[14]).at("mode_index").get<int>() == 4);
}

TEST_CASE("verify identity frame on the tiny grid (worked example)") {
    const auto r = run("verify --op laplacian --n 3 --modes 3 --gamma 1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) {
        const auto j = ordered_json::parse(line);
        CHECK(j.at("pass").get<bool>());
        CHECK(j.at("gamma").get<double>() == 1.0);
        CHECK(j.at("lambda_m").get<double>() == j.at("lambda_s").get<double>());
    }
    CHECK(ordered_json::parse(lines[1]).at("lambda_s").get<double>() == -32.0);
}

TEST_CASE("verify hj mass invariance (worked example)") {
    const auto r = run("verify --op hj --gamma 0.8");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    const auto j = ordered_json::parse(lines[0]);
    CHECK(j.size() == 10);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("mass_m").get<double>() == 1.25);
    CHECK(j.at("lambda1_m").get<double>() == 3.2);
    check_roundtrip(lines[0]);
}

TEST_CASE("verify hj with a family sweep") {
    const auto r = run("verify --op hj --gamma 0.9 --mass 2.5 --families 25 --seed 7");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    const auto sweep = ordered_json::parse(lines[1]);
    CHECK(sweep.at("families").get<int>() == 25);
    CHECK(sweep.at("pass").get<bool>());
    CHECK(sweep.at("max_residual").get<double>() <= 1e-9);
}

TEST_CASE("verify schrodinger with constant potential") {
    const auto r = run("verify --op schrodinger --n 200 --modes 3 --potential 1.0 "
                       "--gamma 0.9");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines)
        CHECK(ordered_json::parse(line).at("pass").get<bool>());
}

TEST_CASE("verify csv output") {
    const auto r = run("verify --op laplacian --n 50 --modes 2 --gamma 0.9 "
                       "--format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "mode_index,lambda_s,gamma,lambda_m,abs_err,rel_err,pass");
    CHECK(lines[1].back() == 'e');  // ...,true
    CHECK(lines[1].find("true") != std::string::npos);
}

TEST_CASE("verify custom matrix from csv") {
    const auto path = write_temp("relalt_cli_matrix.csv",
                                 "0.0,1.0\n"
                                 "1.0,0.0\n");
    const auto r = run("verify --op custom --matrix " + path.string() +
                       " --modes 2 --gamma 0.5");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    const auto j = ordered_json::parse(lines[0]);
    CHECK(j.at("lambda_s").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j.at("pass").get<bool>());
    std::filesystem::remove(path);

    CHECK(run("verify --op custom --modes 1 --gamma 0.5").exit_code == 2);
}

TEST_CASE("eigen dump") {
    const auto r = run("eigen --op laplacian --n 3 --modes 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "mode_index,eigenvalue,residual");
    CHECK(lines[1].rfind("0,", 0) == 0);
    CHECK(lines[2].rfind("1,-32,", 0) == 0);

    const auto rm = run("eigen --op laplacian --n 5 --modes 2 --with-modes");
    REQUIRE(rm.exit_code == 0);
    const auto mlines = lines_of(rm.out);
    REQUIRE(mlines.size() == 2);
    // mode_index, eigenvalue, residual, then 5 components.
    CHECK(std::count(mlines[0].begin(), mlines[0].end(), ',') == 7);
}

TEST_CASE("constants file changes the unit system") {
    const auto path = write_temp("relalt_cli_constants.json",
                                 R"({"G": 1.0, "c": 1.0, "h_planck": 1.0})");
    const auto r = run("gamma --velocity 0.6c --constants " + path.string());
    REQUIRE(r.exit_code == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j.at("gamma").get<double>() == doctest::Approx(0.8).epsilon(1e-12));

    const auto r2 = run("gamma --velocity 0.6 --constants " + path.string());
    REQUIRE(r2.exit_code == 0);
    CHECK(ordered_json::parse(r2.out).at("gamma").get<double>() ==
          doctest::Approx(0.8).epsilon(1e-12));
    std::filesystem::remove(path);
}

TEST_CASE("config file tolerances are honored") {
    const auto path = write_temp("relalt_cli_config.json",
                                 R"({"tolerances": {"eigen_residual": 1e-15}})");
    // An impossibly tight residual tolerance turns a passing sweep into
    // exit 1 and leaves a diagnostic on stderr.
    const auto r = run("verify --op laplacian --n 50 --modes 1 --gamma 0.9 "
                       "--config " + path.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("eigen-residual") != std::string::npos);

    // The flag overrides the file and restores the pass.
    const auto r2 = run("verify --op laplacian --n 50 --modes 1 --gamma 0.9 "
                        "--config " + path.string() + " --tol-eigen 1e-10");
    CHECK(r2.exit_code == 0);
    CHECK(r2.err.empty());
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("--nonsense").exit_code == 2);
    CHECK(run("gamma --no-such-flag 1").exit_code == 2);
    CHECK(run("verify --op warp").exit_code == 2);
    CHECK(run("verify --op laplacian --n 2").exit_code == 2);
    CHECK(run("verify --op laplacian --modes 0").exit_code == 2);
    CHECK(run("eigen --op laplacian --n 10 --modes 99").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("verify --help").exit_code == 0);
}

int cli_test_main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-relalt-binary> [doctest args]\n",
                     argv[0]);
        return 1;
    }
    testcli::cli_path() = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}

int main(int argc, char** argv) { return cli_test_main(argc, argv); }
