#include <doctest.h>

#include <sstream>

#include "parsep/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = parsep::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
    const auto r = run({"count", "--family", "od_eu", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("map and inverse") {
    const auto r = run({"map", "--input", "8,8,8,7,5,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "case=2 image=11,9,7,4,4,4\n");
    const auto back = run({"map", "--inverse", "--input", "11,9,7,4,4,4"});
    CHECK(back.code == 0);
    CHECK(back.out == "case=2 preimage=8,8,8,7,5,3\n");
}

TEST_CASE("map round trips every worked example") {
    for (const char* input : {"8,8,8,7,5,3", "6,6,6,4,3,1", "8,8,7,5,3,1", "6,3,1", "10,9,7,5,3,1",
                              "14,13,11,9,7", "10,9,3", "12,11", "30,28,27", "10,8,6,1", "26,26,26,25",
                              "38,36,36,36,33"}) {
        const auto fwd = run({"map", "--input", input});
        REQUIRE(fwd.code == 0);
        const std::string image = fwd.out.substr(fwd.out.find("image=") + 6, fwd.out.size() - fwd.out.find("image=") - 7);
        const auto back = run({"map", "--inverse", "--input", image});
        REQUIRE(back.code == 0);
        CHECK(back.out.substr(back.out.find("preimage=") + 9) == std::string(input) + "\n");
    }
}

TEST_CASE("series diff ends with the printed coefficients") {
    const auto r = run({"series", "--target", "diff", "--order", "51"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,coefficient\n", 0) == 0);
    CHECK(r.out.size() > 15);
    CHECK(r.out.substr(r.out.size() - 13) == "50,816\n51,18\n");
}

TEST_CASE("enumerate, classify, witness, table") {
    CHECK(run({"enumerate", "--family", "od_eu", "--n", "5"}).out == "(5)\n(4,1)\n(2,2,1)\n");
    CHECK(run({"classify", "--input", "8,8,8,7,5,3"}).out.find("case=2") != std::string::npos);
    CHECK(run({"classify", "--side", "B", "--input", "129,127,119,2,2"}).out.find("case=none") != std::string::npos);
    CHECK(run({"witness", "--n", "379"}).out == "129,127,119,2,2\n");
    CHECK(run({"table", "--from", "5", "--to", "5", "--families", "od_eu,eu_od"}).out == "n,p_od_eu,p_eu_od\n5,3,2\n");
}

TEST_CASE("verify exit status") {
    CHECK(run({"verify", "--mode", "exhaustive", "--from", "0", "--to", "20"}).code == 0);
    CHECK(run({"verify", "--mode", "inequality", "--from", "50", "--to", "60"}).code == 0);
    CHECK(run({"verify", "--mode", "inequality", "--from", "3", "--to", "17", "--method", "series"}).code == 1);
    CHECK(run({"verify", "--mode", "witnesses", "--from", "373", "--to", "380", "--format", "json"}).code == 0);
}

TEST_CASE("errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"count", "--family", "od_eu"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count", "--family", "zz_zz", "--n", "5"}).code == 1);
    CHECK(run({"map", "--input", "3,2"}).code == 1);
    CHECK(run({"map", "--input", "3,x"}).code == 1);
    CHECK(run({"enumerate", "--family", "od_eu", "--n", "90"}).code == 1);
    CHECK(run({"witness", "--n", "100"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
