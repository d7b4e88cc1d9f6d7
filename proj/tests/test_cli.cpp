#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CANARD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("help everywhere, exit 0") {
    for (const char* sub : {"--help", "series --help", "series vdp --help", "relief --help",
                            "ode run --help", "shoot --help", "inner vdp --help",
                            "asymp fit --help", "report --help"}) {
        const auto r = run(sub);
        CHECK(r.exit_code == 0);
        CHECK(!r.out.empty());
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("series vdp --bogus-flag 3").exit_code == 2);
    CHECK(run("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("computation errors exit 1") {
    CHECK(run("ode run --field no-such-field").exit_code == 1);
    CHECK(run("relief contour --spec vdp --bbox 0:1").exit_code == 1);
}

TEST_CASE("deterministic output") {
    const auto a = run("series vdp --n 4");
    const auto b = run("series vdp --n 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    REQUIRE(!a.out.empty());

    const auto c = run("inner vdp --x 2.5:3:0.5");
    const auto d = run("inner vdp --x 2.5:3:0.5");
    CHECK(c.out == d.out);
}

TEST_CASE("exact rationals in JSON") {
    const auto r = run("series vdp --n 2");
    CHECK(r.out.find("\"-1/8\"") != std::string::npos);
    CHECK(r.out.find("\"-3/32\"") != std::string::npos);
}

TEST_CASE("csv uses point decimals") {
    const auto r = run("shoot vdp --eps 0.2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("eps,re_param,im_param") != std::string::npos);
    CHECK(r.out.find("0.9684") != std::string::npos);
    CHECK(r.out.find(',') != std::string::npos);
    CHECK(r.out.find("0,9684") == std::string::npos);
}

TEST_CASE("atomic file output") {
    const std::string path = "/tmp/canard_cli_test_out.json";
    std::remove(path.c_str());
    const auto r = run("--out " + path + " relief check --spec vdp --path \"9,0;2,0\"");
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    fclose(f);
    // No temp file left behind
    CHECK(fopen((path + ".tmp").c_str(), "r") == nullptr);
    std::remove(path.c_str());
}

TEST_CASE("CANARD_PRECISION is honored") {
    const auto lo = run("series bn --range 5:5 --digits 8");
    REQUIRE(lo.exit_code == 0);
    // Same command with a higher precision via the environment prints more
    // digits.
    const std::string cmd = std::string("CANARD_PRECISION=20 ") + CANARD_CLI_PATH +
                            " series bn --range 5:5 --digits 8 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out != lo.out);
    CHECK(out.size() > lo.out.size());
}
