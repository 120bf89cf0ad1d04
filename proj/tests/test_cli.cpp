#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("SECANT_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("coeffs subcommand") {
    auto r = run_cli("coeffs --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("P_gamma") != std::string::npos);
    CHECK(r.out.find("conjectural") != std::string::npos);

    auto num = run_cli("coeffs --d 2 --g 8 --m 9");
    CHECK(num.exit_code == 0);
    CHECK(num.out.find("P_c      = -20") != std::string::npos);

    CHECK(run_cli("coeffs --d 0").exit_code == 2);
    CHECK(run_cli("coeffs").exit_code == 2);
    CHECK(run_cli("coeffs --d 2 --g 8").exit_code == 2);

    auto js = run_cli("coeffs --d 2 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"schema\"") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    CHECK(run_cli("verify --suite graphs --d-max 5").exit_code == 0);
    CHECK(run_cli("verify --suite examples").exit_code == 0);
    CHECK(run_cli("verify --suite oracle --d-max 3 --fixed-max 3 --family-max 3 --mode family").exit_code == 0);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("table subcommand is deterministic") {
    auto a = run_cli("table xy_taylor --order 8");
    auto b = run_cli("table xy_taylor --order 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("-59/2") != std::string::npos);  // n = 4 value of X

    auto s1 = run_cli("table slopes");
    auto s2 = run_cli("table slopes");
    CHECK(s1.exit_code == 0);
    CHECK(s1.out == s2.out);
    CHECK(s1.out.find("693/12389") != std::string::npos);
    // Header plus eight rows, LF endings.
    CHECK(std::count(s1.out.begin(), s1.out.end(), '\n') == 9);
    CHECK(s1.out.find('\r') == std::string::npos);

    auto v = run_cli("table virtual_slopes --a-min 2 --a-max 2 --d-max 3");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("NO") == std::string::npos);

    CHECK(run_cli("table nope").exit_code == 2);
    CHECK(run_cli("table slopes --output /nonexistent-dir/x.csv").exit_code == 2);
}
