#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CHAINCODES_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("count command") {
    const Run a = run("count --ring 'CR(2^2,1;3,1;1)' --n 3 --type 0,1,0,0");
    CHECK(a.status == 0);
    const json j = json::parse(a.out);
    CHECK(j["closed_form"] == "48");
    CHECK(j["query"]["n"] == 3);
    CHECK(json::parse(j.dump()) == j);

    const Run b = run("count --ring 'CR(2^2,1;3,1;1)' --n 3 --type 1,0,0,0 --oracle");
    CHECK(b.status == 0);
    const json k = json::parse(b.out);
    CHECK(k["closed_form"] == "0");
    CHECK(k["oracle"] == "0");
    CHECK(k["match"] == true);

    const Run sd = run("count --preset R4,1 --n 2 --type 0,1,0,1 --self-dual");
    CHECK(json::parse(sd.out)["closed_form"] == "2");
}

TEST_CASE("verify and table commands") {
    const Run v = run("verify --table 3 --output json");
    CHECK(v.status == 0);
    const json j = json::parse(v.out);
    REQUIRE(j.is_array());
    for (const auto& row : j) CHECK(row["match"] == true);

    const Run csv = run("table --table 1 --output csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("type,count\n", 0) == 0);
    CHECK(csv.out.find("0100,48") != std::string::npos);
}

TEST_CASE("totals and ring information") {
    const Run t = run("total --preset R4,1 --n 3");
    CHECK(t.status == 0);
    CHECK(json::parse(t.out)["total_so"] == "291");
    const Run info = run("ring-info --preset R8,2");
    CHECK(info.status == 0);
    const json j = json::parse(info.out);
    CHECK(j["e"] == 8);
    CHECK(j["kappa"] == 3);
}

TEST_CASE("lift command") {
    const std::string path = "cli_lift_chain.json";
    {
        std::ofstream f(path);
        f << R"({"ring":"R4,1","n":2,"codes":[[],[[1,1]]],"upper_lambdas":[0,1]})";
    }
    const Run ok = run("lift --chain " + path);
    CHECK(ok.status == 0);
    const json j = json::parse(ok.out);
    CHECK(j["lift_found"] == true);
    CHECK(j["self_orthogonal"] == true);
    {
        std::ofstream f(path);
        f << R"({"ring":"R4,1","n":2,"codes":[[[1,1]],[[1,1]]]})";
    }
    const Run bad = run("lift --chain " + path);
    CHECK(bad.status == 1);
    CHECK(json::parse(bad.out)["valid_chain"] == false);
    std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
    CHECK(run("table --preset R5,1 --n 3").out == run("table --preset R5,1 --n 3").out);
    CHECK(run("lift --chain - --seed 7 < /dev/null").status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("count --ring 'CR(2^2,1;4,1;1)' --n 3 --type 0,1,0,0").status == 2);
    CHECK(run("count --preset R4,1 --n 3").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("--help").status == 0);
}
