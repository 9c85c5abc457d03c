#include "doctest.h"

#include "dsym/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dsym;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST_CASE("ds") {
    CHECK(first_line(run({"ds", "--n", "3", "x1*x3"}).out) == "-2");
    CHECK(first_line(run({"ds", "--n", "3", "x1"}).out) == "0");
    const auto e = run({"ds", "--n", "3", "x1^2*x2", "--expand"});
    CHECK(e.code == kExitOk);
    CHECK(first_line(e.out) == "x1 + x2 + x3");
    CHECK(first_line(run({"ds", "--n", "3", "--method", "oracle", "x1*x3"}).out) == "-2");
    CHECK(run({"ds", "--n", "3", "x1^2 + x2"}).code == kExitPrecondition);
}

TEST_CASE("qsym") {
    CHECK(first_line(run({"qsym", "--basis", "M", "--comp", "2,1", "--m", "3", "--n", "4"}).out) == "-1");
    CHECK(first_line(run({"qsym", "--basis", "F", "--comp", "1,2", "--m", "2", "--n", "4"}).out) == "1");
    CHECK(first_line(run({"qsym", "--basis", "M", "--comp", "3", "--m", "4", "--n", "4"}).out) == "0");
    const auto v = run({"--verify", "qsym", "--basis", "M", "--comp", "2,1", "--m", "3", "--n", "4"});
    CHECK(v.code == kExitOk);
    CHECK(v.out.find("verify: ok") != std::string::npos);
}

TEST_CASE("posets, syt and stanley") {
    CHECK(first_line(run({"syt", "--lambda", "2,1"}).out) == "0,2,0");
    CHECK(first_line(run({"stanley", "--w", "321", "--n", "4"}).out) == "0,2,0");
    const auto chain = write_temp("dsym_chain3.json", R"({"elements":3,"covers":[[0,1],[1,2]],"omega":[1,2,3]})");
    CHECK(first_line(run({"poset", "--file", chain, "--m", "1", "--n", "4"}).out) == "1");
    const auto bad = write_temp("dsym_bad.json", "{");
    CHECK(run({"poset", "--file", bad}).code == kExitParse);
}

TEST_CASE("decompose, volume and selftest") {
    const auto d = run({"decompose", "--n", "3", "x1*x3"});
    CHECK(first_line(d.out) == "-2");
    CHECK(d.out.find("g: -x1^2 - x1*x2") != std::string::npos);
    CHECK(first_line(run({"volume", "2", "1", "0"}).out) == "3");
    CHECK(run({"volume", "0", "1"}).code == kExitPrecondition);
    const auto s = run({"selftest", "--max-n", "4"});
    CHECK(s.code == kExitOk);
    CHECK(s.out.find("OK") != std::string::npos);
}

TEST_CASE("json output parses") {
    const auto r = run({"--format", "json", "ds", "--n", "3", "x1*x3"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "ds");
    CHECK(j.at("value") == "-2");
    const auto q = nlohmann::json::parse(run({"--format", "json", "qsym", "--basis", "F", "--comp", "1,2", "--m", "2", "--n", "4"}).out);
    CHECK(q.at("value") == "1");
}

TEST_CASE("exit codes") {
    CHECK(run({"ds", "--n", "3", "x1 +"}).code == kExitParse);
    CHECK(run({"bogus"}).code == kExitParse);
    CHECK(run({"qsym", "--basis", "Q", "--comp", "1", "--m", "1", "--n", "2"}).code == kExitParse);
    CHECK(run({"qsym", "--basis", "M", "--comp", "2,1", "--m", "1", "--n", "9"}).code == kExitPrecondition);
    CHECK(run({"selftest", "--max-n", "1"}).code != kExitOk);
}
