#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LAGINT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("eval: closed form and base case") {
    auto r = run_cli("eval --n 0 --k 2 --s 1 --t 1 --method closed");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == 0.5);
}

TEST_CASE("eval: quadrature vanishing branch") {
    auto r = run_cli("eval --n 1 --k -2 --s 0.7 --t 1.3 --method quadrature");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::stod(r.out)) <= 1e-12);
}

TEST_CASE("eval: exact residue with fractional inputs") {
    auto r = run_cli("eval --n 2 --k 1 --s 1/2 --t 3/2 --method residue");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2847/4096\n");

    // decimals are rejected on the exact path
    r = run_cli("eval --n 2 --k 1 --s 0.5 --t 1.5 --method residue");
    CHECK(r.exit_code == 2);
}

TEST_CASE("eval: json record") {
    auto r = run_cli("eval --n 2 --k 1 --s 0.5 --t 1.5 --method closed --json");
    CHECK(r.exit_code == 0);
    const auto rec = nlohmann::json::parse(r.out);
    CHECK(rec["value"].get<double>() == doctest::Approx(2847.0 / 4096.0));
    CHECK(rec["method"] == "closed");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("eval --n 0").exit_code == 2);
    CHECK(run_cli("eval --n 0 --k 0 --s 1 --t 1 --method bogus").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("eval --n 99 --k 0 --s 1 --t 1").exit_code == 2);
    CHECK(run_cli("eval --n 0 --k 0 --s 1 --t 1 --method closed --alpha 1").exit_code == 2);
}

TEST_CASE("numerical inconsistency exits 3") {
    // at |st| = 20 the integrand magnitude pushes rounding noise in the
    // imaginary part far past the default tolerance
    auto r = run_cli("eval --n 6 --k 4 --s 4 --t 5 --method quadrature");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify: small clean run, exit 0") {
    auto r = run_cli("verify --n-max 1 --k-range -1..1 --random-points 2 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: impossible tolerance, exit 1") {
    auto r = run_cli(
        "verify --n-max 1 --k-range -1..1 --random-points 2 --tol 0");
    CHECK(r.exit_code == 1);
}

TEST_CASE("verify: json stream is parseable and schema-tagged") {
    auto r = run_cli("verify --n-max 0 --k-range 0..0 --random-points 1 --json --seed 3");
    CHECK(r.exit_code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() >= 2);
    // every line but the last is one check record
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        const auto rec = nlohmann::json::parse(ls[i]);
        CHECK(rec.contains("relation_id"));
        CHECK(rec.contains("pass"));
        CHECK(rec.contains("abs_err"));
        CHECK(rec.contains("params"));
    }
    const auto rep = nlohmann::json::parse(ls.back());
    CHECK(rep["schema_version"] == 1);
    CHECK(rep.contains("config"));
    CHECK(rep["relations"].size() == ls.size() - 1);
    CHECK(rep["summary"]["failed"] == 0);
    CHECK(rep["summary"]["attempted"] ==
          rep["summary"]["passed"].get<long>() + rep["summary"]["failed"].get<long>());
}

TEST_CASE("table: csv layout and round trip") {
    auto r = run_cli("table --n 0..2 --k 0..2 --s 1 --t 1 --format csv");
    CHECK(r.exit_code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[0] == "n,k,s,t,value");
    // row (0,0) -> 1, row (0,2) -> 0.5
    CHECK(ls[1].rfind("0,0,1,1,1") == 0);
    CHECK(ls[3].substr(ls[3].rfind(',') + 1) == "0.5");
    // every value round-trips to the identical double
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto last = ls[i].substr(ls[i].rfind(',') + 1);
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", std::stod(last));
        CHECK(last == buf);
    }
}

TEST_CASE("table: derived value at full precision") {
    auto r = run_cli("table --n 2..2 --k 1..1 --s 0.5 --t 1.5 --format csv");
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(std::stod(ls[1].substr(ls[1].rfind(',') + 1)) == 2847.0 / 4096.0);
}

TEST_CASE("version") {
    auto r = run_cli("version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("lagint ", 0) == 0);
}
