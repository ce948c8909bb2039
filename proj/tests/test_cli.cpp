#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oloid/io.hpp"
#include "oloid/sampling.hpp"

#ifndef OLOID_CLI_PATH
#error "OLOID_CLI_PATH must name the command-line executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string("\"") + OLOID_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "oloid_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("sample writes the library samples bit for bit") {
    const Run r = run("sample touching --lambda 0.3 --n 400 --format csv");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto rows = oloid::io::read_csv(in);
    CHECK(rows.size() == 400);
    oloid::sampling::Request req;
    req.object = oloid::sampling::ObjectKind::Touching;
    req.lambda = oloid::ExtendedParam::finite(0.3);
    req.n = 400;
    CHECK(rows == oloid::sampling::sample(req));
}

TEST_CASE("sample options") {
    const fs::path out = scratch("dev.json");
    REQUIRE(run("sample dev-touching --lambda inf --n 600 --format json --out " + out.string()).code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    REQUIRE(j.is_array());
    std::size_t gaps = 0;
    for (const auto& row : j) gaps += row["branch"] == "gap" ? 1 : 0;
    CHECK(gaps == 2);
    CHECK(j.size() == 602);

    const Run reg = run("sample regression --t-min -2.0 --t-max 2.0");
    REQUIRE(reg.code == 0);
    std::istringstream in(reg.out);
    const auto rows = oloid::io::read_csv(in);
    CHECK(rows.front().t == -2.0);
    std::size_t reg_gaps = 0;
    for (const auto& row : rows) reg_gaps += row.is_gap() ? 1 : 0;
    CHECK(reg_gaps == 5);

    for (const char* lam : {"inf", "+inf", "-inf"}) {
        CHECK(run(std::string("sample touching --n 10 --lambda ") + lam).out ==
              run("sample touching --n 10 --lambda inf").out);
    }
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("sample sphere").code == 2);
    CHECK(run("sample touching --lambda abc").code == 2);
    CHECK(run("sample touching --n 1").code == 2);
    CHECK(run("sample generators --lambda 0.5").code == 2);
    CHECK(run("plot touching:0.3 --projection W").code == 2);
    CHECK(run("verify --suite nonexistent").code == 2);
}

TEST_CASE("plot output is deterministic") {
    const fs::path a = scratch("a.svg");
    const fs::path b = scratch("b.svg");
    const std::string args = " touching:inf:thick asymptotes:inf:dashed --projection Y --window 5 --out ";
    REQUIRE(run("plot" + args + a.string()).code == 0);
    REQUIRE(run("plot" + args + b.string()).code == 0);
    const std::string sa = slurp(a);
    CHECK(sa == slurp(b));
    CHECK(sa.find("<svg") != std::string::npos);
    CHECK(sa.find("stroke-dasharray") != std::string::npos);
    const Run plane = run("plot dev-touching:0 dev-touching:0.5 dev-touching:1 --projection plane");
    CHECK(plane.code == 0);
    CHECK(plane.out.find("</svg>") != std::string::npos);
}

TEST_CASE("verify runs every suite quickly") {
    const auto start = std::chrono::steady_clock::now();
    const Run r = run("verify all");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.code == 0);
    CHECK(seconds < 10.0);
    for (const char* suite : {"tangency", "czuber", "development", "area"}) {
        CHECK(r.out.find(suite) != std::string::npos);
    }
    CHECK(run("verify --suite tangency").code == 0);
    CHECK(run("verify --suite tangency --tol 1e-300").code == 1);
}

TEST_CASE("plot accepts a style without a lambda") {
    const Run styled = run("plot regression:thick --projection Z --window 3");
    CHECK(styled.code == 0);
    CHECK(styled.out.find("<svg") != std::string::npos);
    CHECK(run("plot regression::thick --projection Z --window 3").out == styled.out);
    CHECK(run("plot regression:bold --projection Z").code == 2);
}
