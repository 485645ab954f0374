// Copyright 2026 The qmatops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Spawns the installed CLI binary and checks reports, exit codes, and
// byte-level determinism.

#include <catch2/catch_amalgamated.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qmatops/matrix_json.hpp"
#include "qmatops/oracle.hpp"
#include "test_support.hpp"

using namespace qmatops;
using Catch::Approx;

namespace {

namespace fs = std::filesystem;

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "qmatops_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const fs::path path = work_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

std::string write_matrix(const std::string& name, const ComplexMatrix<double>& a) {
    return write_file(name, matrix_to_json(a).dump());
}

int run_cli(const std::string& args) {
    const std::string command = std::string(QMATOPS_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("hadamard run writes a full report and exits 0", "[cli]") {
    auto rng = test_support::make_rng(71);
    auto a = test_support::random_matrix(rng, 2, 4);
    auto b = test_support::random_matrix(rng, 2, 4);
    const std::string fa = write_matrix("a.json", a);
    const std::string fb = write_matrix("b.json", b);
    const std::string out = (work_dir() / "report.json").string();

    REQUIRE(run_cli("hadamard " + fa + " " + fb + " --trace --out " + out) == 0);

    Json report = Json::parse(read_file(out));
    CHECK(report["algorithm"] == "hadamard");
    CHECK(report["success_probability"].get<double>() ==
          Approx(expected_probability(Algorithm::hadamard, a, b)).margin(1e-10));
    CHECK(report["gate_stats"]["depth_layers"] == 7);
    CHECK(report["trace"].size() == 7);
    CHECK(report["trace"][0]["stage"] == "Phi0");

    // The decoded output is proportional to the classical product.
    auto decoded = matrix_from_json(report["decoded_matrix"]);
    auto expected = classical_hadamard_product(a, b);
    CHECK(test_support::rescaled_diff(expected, decoded) < 1e-9);
}

TEST_CASE("verify subcommand checks against the classical reference", "[cli]") {
    auto rng = test_support::make_rng(72);
    auto a = test_support::random_matrix(rng, 4, 4);
    auto b = test_support::random_matrix(rng, 4, 4);
    const std::string fa = write_matrix("va.json", a);
    const std::string fb = write_matrix("vb.json", b);
    const std::string out = (work_dir() / "verify.json").string();

    REQUIRE(run_cli("verify hadamard " + fa + " " + fb + " --out " + out) == 0);
    Json report = Json::parse(read_file(out));
    CHECK(report["oracle"]["max_abs_diff"].get<double>() < 1e-9);

    REQUIRE(run_cli("verify col-swap " + fa + " --k 1 --l 3 --out " + out) == 0);
    report = Json::parse(read_file(out));
    CHECK(report["oracle"]["probability_expected"].get<double>() == Approx(1.0 / 24));

    REQUIRE(run_cli("verify kron " + fa + " " + fb + " --out " + out) == 0);
}

TEST_CASE("reports are byte-identical for a fixed seed", "[cli]") {
    auto rng = test_support::make_rng(73);
    auto a = test_support::random_matrix(rng, 4, 4);
    const std::string fa = write_matrix("det.json", a);
    const std::string out1 = (work_dir() / "det1.json").string();
    const std::string out2 = (work_dir() / "det2.json").string();

    const std::string args = "col-add " + fa + " --k 0 --l 3 --sample 1000 --seed 7 --trace ";
    REQUIRE(run_cli(args + "--out " + out1) == 0);
    REQUIRE(run_cli(args + "--out " + out2) == 0);
    const std::string first = read_file(out1);
    CHECK(first == read_file(out2));
    CHECK(first.find("\"samples\"") != std::string::npos);
}

TEST_CASE("invalid inputs exit with code 2", "[cli]") {
    const std::string bad = write_file("bad.json", "{broken");
    const std::string odd =
        write_file("odd.json", R"({"rows": 3, "cols": 2, "entries": [1, 2, 3, 4, 5, 6]})");
    auto rng = test_support::make_rng(74);
    auto a = test_support::random_matrix(rng, 2, 4);
    const std::string fa = write_matrix("ok.json", a);

    CHECK(run_cli("hadamard " + bad + " " + fa) == 2);
    CHECK(run_cli("hadamard " + odd + " " + fa) == 2);
    CHECK(run_cli("col-add " + fa + " --k 1 --l 1") == 2);
    CHECK(run_cli("col-swap " + fa + " --k 0 --l 9") == 2);
    CHECK(run_cli("nonsense " + fa) == 2);
    // Coupled Kronecker with mismatched inner dimensions.
    auto b = test_support::random_matrix(rng, 2, 2);
    const std::string fb = write_matrix("inner.json", b);
    CHECK(run_cli("kron " + fa + " " + fb) == 2);
    CHECK(run_cli("kron " + fa + " " + fb + " --general") == 0);
}

TEST_CASE("impossible post-selection exits with code 3", "[cli]") {
    const std::string upper =
        write_file("upper.json", R"({"rows": 2, "cols": 2, "entries": [1, 0, 0, 0]})");
    const std::string lower =
        write_file("lower.json", R"({"rows": 2, "cols": 2, "entries": [0, 0, 0, 1]})");
    CHECK(run_cli("hadamard " + upper + " " + lower) == 3);
}

TEST_CASE("qubit cap exits with code 4", "[cli]") {
    // Two 16 x 16 operands need 3*(4+4)+2 = 26 qubits, over the default cap.
    ComplexMatrix<double> big = ComplexMatrix<double>::Ones(16, 16);
    const std::string fbig = write_matrix("big.json", big);
    CHECK(run_cli("hadamard " + fbig + " " + fbig) == 4);
}

TEST_CASE("stats-sweep writes the CSV table", "[cli]") {
    const std::string out = (work_dir() / "sweep.csv").string();
    REQUIRE(run_cli("stats-sweep col-swap 1 3 --out " + out) == 0);
    CHECK(read_file(out) ==
          "n,m,pattern_controlled_x_count,total_control_qubits,cswap_count,swap_count,"
          "depth_layers\n"
          "1,1,7,19,2,0,10\n"
          "1,2,7,25,4,0,10\n"
          "1,3,7,31,6,0,10\n");
}
