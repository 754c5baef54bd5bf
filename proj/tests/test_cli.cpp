#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ppmine/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ppmine::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kSdb1 = PPMINE_TEST_DATA "/sdb1.txt";
const std::string kSdb1Spmf = PPMINE_TEST_DATA "/sdb1.spmf";

std::string without_time(const std::string& s) {
    const auto k = s.find(" #TIME_MS=");
    return k == std::string::npos ? s : s.substr(0, k);
}

} // namespace

TEST_CASE("mine: text output") {
    auto r = run({"mine", kSdb1, "--format", "symbolic", "--minsup", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("A #SUP=3\nA B #SUP=3\nA B C #SUP=2\nA C #SUP=2\nB #SUP=4\nB B #SUP=2\n"
                      "B B C #SUP=2\nB C #SUP=3\nC #SUP=3\n#PATTERNS=9 #MINSUP=2 ",
                      0) == 0);
    CHECK(r.out.find("#TIME_MS=") != std::string::npos);
}

TEST_CASE("mine: output is deterministic apart from timing") {
    auto a = run({"mine", kSdb1Spmf, "--minsup", "50%", "--threads", "1"});
    auto b = run({"mine", kSdb1Spmf, "--minsup", "50%", "--threads", "3"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(without_time(a.out).find("#PATTERNS=9") != std::string::npos);
    CHECK(without_time(a.out).substr(0, without_time(a.out).find("#PATTERNS")) ==
          without_time(b.out).substr(0, without_time(b.out).find("#PATTERNS")));
    auto c = run({"mine", kSdb1Spmf, "--minsup", "50%", "--threads", "1"});
    CHECK(without_time(a.out) == without_time(c.out));
}

TEST_CASE("mine: constraints") {
    auto r = run({"mine", kSdb1, "--format", "symbolic", "--minsup", "2", "--min-size", "2", "--require", "B",
                  "--exclude", "A", "--regex", ". * C"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("B B C #SUP=2\nB C #SUP=3\n#PATTERNS=2 ", 0) == 0);
}

TEST_CASE("mine: csv and json") {
    auto csv = run({"mine", kSdb1, "--format", "symbolic", "--minsup", "3", "--output", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "pattern,support\nA,3\nA B,3\nB,4\nB C,3\nC,3\n");
    CHECK(csv.err.find("#PATTERNS=5") != std::string::npos);

    auto js = run({"mine", kSdb1, "--format", "symbolic", "--minsup", "3", "--output", "json"});
    REQUIRE(js.code == 0);
    std::istringstream lines(js.out);
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 5);
    CHECK(rows[1]["pattern"] == nlohmann::json::array({"A", "B"}));
    CHECK(rows[1]["support"] == 3);
}

TEST_CASE("mine: errors map to exit codes") {
    CHECK(run({"mine", kSdb1, "--format", "symbolic", "--minsup", "0"}).code == 2);
    CHECK(run({"mine", kSdb1, "--format", "symbolic", "--minsup", "150%"}).code == 2);
    CHECK(run({"mine", kSdb1, "--format", "symbolic"}).code == 2);
    CHECK(run({"mine", kSdb1, "--format", "symbolic", "--minsup", "2", "--require", "Z"}).code == 2);
    CHECK(run({"mine", kSdb1, "--format", "symbolic", "--minsup", "2", "--regex", "( A"}).code == 2);
    CHECK(run({"mine", kSdb1, "--minsup", "2"}).code == 3); // not SPMF
    CHECK(run({"mine", "/nonexistent", "--minsup", "2"}).code == 3);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("verify") {
    auto ok = run({"verify", kSdb1, "--format", "symbolic", "--minsup", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("MATCH (9 patterns)") != std::string::npos);

    auto bad = run({"verify", kSdb1, "--format", "symbolic", "--minsup", "2", "--inject-fault"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);

    auto sweep = run({"verify", "--sweep", "3"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("SWEEP 3/3 seeds passed") != std::string::npos);
}

TEST_CASE("bench") {
    auto r = run({"bench", kSdb1Spmf, "--minsup", "2,3,4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "dataset,minsup,patterns,nodes,filter_calls,removals,millis");
    std::vector<std::string> patterns;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::vector<std::string> row;
        while (std::getline(cells, cell, ',')) row.push_back(cell);
        REQUIRE(row.size() == 7);
        patterns.push_back(row[2]);
    }
    CHECK(patterns == std::vector<std::string>{"9", "5", "1"});
    CHECK(run({"bench", kSdb1Spmf, "--minsup", ""}).code == 2);
}
