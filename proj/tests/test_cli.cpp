#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PACKING_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    RunResult r;
    r.output = out;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("homology command text output") {
    auto r = run_cli("homology --N 3,3 --d 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(1,1,1)x(2,1) + (2,1)x(1,1,1)") != std::string::npos);

    auto sign = run_cli("homology --N 2,2 --d 1,1 --k 0");
    CHECK(sign.exit_code == 0);
    CHECK(sign.output.find("(1,1)x(1,1)") != std::string::npos);

    auto empty = run_cli("homology --N 1,1 --d 2,1");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("empty complex") != std::string::npos);
}

TEST_CASE("homology json output is schema-shaped") {
    auto r = run_cli("--format json homology --N 3,2 --d 1,1 --k 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["N"] == nlohmann::json::parse("[3,2]"));
    CHECK(j[0]["k"] == 1);
    CHECK(j[0]["entries"][0]["lambda"] == nlohmann::json::parse("[[1,1,1],[2]]"));
    CHECK(j[0]["entries"][0]["mult"] == 1);
}

TEST_CASE("betti table with dashes and json") {
    auto text = run_cli("betti --pmax 1 --qmax 2 --d 1,1 --b 0,0");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("K") != std::string::npos);
    CHECK(text.output.find("-") != std::string::npos);
    CHECK(text.output.find("(1,1)x(1,1)") != std::string::npos);

    auto js = run_cli("--format json betti --pmax 1 --qmax 1 --d 1,1 --b 0,0");
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.output);
    CHECK(j["table"].size() == 4);
}

TEST_CASE("linear strand commands") {
    auto segre = run_cli("linear-strand --family segre --p 2 --a 2 --n 2");
    CHECK(segre.exit_code == 0);
    CHECK(segre.output.find("(2,1,1)x(2) + (2,2)x(1,1)") != std::string::npos);

    auto vero = run_cli("linear-strand --family veronese --p 2 --deg 3");
    CHECK(vero.exit_code == 0);
    CHECK(vero.output.find("(3,3,1) + (5,1,1)") != std::string::npos);
}

TEST_CASE("scan command") {
    auto r = run_cli("scan --d 1,1 --k 1 --fix N2=3 --range N1=3..8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("stable from") != std::string::npos);
    CHECK(r.output.find("within bound") != std::string::npos);

    auto syz = run_cli("scan --syzygy --p 2 --q 0 --d 1,1 --fix b2=0 --range b1=0..4");
    CHECK(syz.exit_code == 0);
    CHECK(syz.output.find("sharp") != std::string::npos);

    auto bad = run_cli("scan --d 1,1 --k 0 --fix N2=2 --range N1=5..3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify exits zero on passing suites") {
    auto r = run_cli("verify examples");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("OK") != std::string::npos);

    auto unknown = run_cli("verify nonsense");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("export-complex") {
    auto r = run_cli("export-complex --N 2,2 --d 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(1|1) (2|2)") != std::string::npos);
}

TEST_CASE("usage and resource-cap exit codes") {
    CHECK(run_cli("homology --N 2,2").exit_code == 2);          // missing --d
    CHECK(run_cli("nonsense").exit_code == 2);                  // unknown subcommand
    auto capped = run_cli("--max-simplices 10 homology --N 6,6 --d 1,1");
    CHECK(capped.exit_code == 3);
}

TEST_CASE("cache hit is byte-identical to cache miss") {
    auto dir = std::filesystem::temp_directory_path() / "packing-cli-cache";
    std::filesystem::remove_all(dir);
    std::string flag = " --cache-dir " + dir.string();
    auto miss = run_cli("homology --N 4,3 --d 1,1" + flag);
    CHECK(miss.exit_code == 0);
    CHECK(!std::filesystem::is_empty(dir));
    auto hit = run_cli("homology --N 4,3 --d 1,1" + flag);
    CHECK(hit.exit_code == 0);
    CHECK(miss.output == hit.output);
    std::filesystem::remove_all(dir);
}

TEST_CASE("text output is stable across runs") {
    auto a = run_cli("betti --pmax 2 --qmax 1 --d 1,1 --b 0,0");
    auto b = run_cli("betti --pmax 2 --qmax 1 --d 1,1 --b 0,0");
    CHECK(a.output == b.output);
}

}  // TEST_SUITE
