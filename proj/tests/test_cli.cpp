#include <doctest.h>

#include <json.hpp>

#include "pxp/cli_app.hpp"

using namespace pxp;
using nlohmann::json;

namespace {

json parse_out(const CliResult& r) { return json::parse(r.output); }

} // namespace

TEST_CASE("classify reports the canonical class") {
    CliResult r = run_cli({"classify", "-p", "5", "--pair", "[[1,0,0],[0,0,1]]"});
    REQUIRE(r.exit_code == 0);
    json j = parse_out(r);
    CHECK(j["command"] == "classify");
    CHECK(j["p"] == 5);
    CHECK(j["results"]["realizable"] == true);
    CHECK(j["results"]["normal_form"]["w"] == 4);
    CHECK(j["results"]["witness_verified"] == true);

    CliResult nf = run_cli({"classify", "-p", "7", "--pair", "[[1,0,1],[0,2,0]]"});
    REQUIRE(nf.exit_code == 0);
    CHECK(parse_out(nf)["results"]["normal_form"]["w"] == 1);
}

TEST_CASE("classify rejects non-realizable pairs with exit 3") {
    CliResult r = run_cli({"classify", "-p", "5", "--pair", "[[0,1,0],[0,0,1]]"});
    CHECK(r.exit_code == 3);
    json j = parse_out(r);
    CHECK(j["results"]["realizable"] == false);
    CHECK(j["results"].contains("reason"));
}

TEST_CASE("classify input validation uses exit 2") {
    CHECK(run_cli({"classify", "-p", "6", "--pair", "[[1,0,0],[0,0,1]]"}).exit_code == 2);
    CHECK(run_cli({"classify", "-p", "5", "--pair", "not json"}).exit_code == 2);
    CHECK(run_cli({"classify", "-p", "5", "--pair", "[[1,0],[0,1]]"}).exit_code == 2);
    CHECK(run_cli({"classify", "-p", "5"}).exit_code == 2);
    CHECK(run_cli({"classify", "-p", "3", "--pair", "[[1,0,0],[0,0,1]]"}).exit_code == 2);
    CHECK(run_cli({"classify", "-p", "5", "--pair", "[[1,0,0],[0,0,1]]", "--mode",
                   "fixed-pi1"})
              .exit_code == 2);
    CHECK(run_cli({"nonsense"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
}

TEST_CASE("orbits command") {
    CliResult r5 = run_cli({"orbits", "-p", "5"});
    REQUIRE(r5.exit_code == 0);
    json j5 = parse_out(r5);
    CHECK(j5["results"]["orbit_count"] == 4);
    CHECK(j5["results"]["realizable_pairs"] == 12000);
    CHECK(j5["results"]["sizes_sum_matches"] == true);
    CHECK(j5["results"]["orbits"].size() == 4);

    CliResult r7 = run_cli({"orbits", "-p", "7"});
    CHECK(parse_out(r7)["results"]["orbit_count"] == 2);

    CliResult fixed = run_cli({"orbits", "-p", "7", "--mode", "fixed-pi1"});
    CHECK(parse_out(fixed)["results"]["orbit_count"] == 147);

    CliResult csv = run_cli({"orbits", "-p", "5", "--format", "csv"});
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output.substr(0, 26) == "orbit,size,class_w,q1,q2\n0");

    CliResult limited = run_cli({"orbits", "-p", "17"});
    CHECK(limited.exit_code == 4);  // above the default enumeration budget
}

TEST_CASE("kinv and free commands") {
    CliResult r = run_cli({"kinv", "-p", "5", "--rot",
                           R"({"n":2,"R":[1,1,2,0],"Q":[1,1,0,1]})"});
    REQUIRE(r.exit_code == 0);
    json j = parse_out(r);
    CHECK(j["results"]["pair"] == json::parse("[[1,2,1],[0,2,0]]"));
    CHECK(j["results"]["free"] == true);

    CliResult nf = run_cli({"free", "-p", "5", "--rot",
                            R"({"n":2,"R":[1,1,2,0],"Q":[1,0,0,1]})"});
    REQUIRE(nf.exit_code == 0);
    json njf = parse_out(nf);
    CHECK(njf["results"]["free"] == false);
    CHECK(njf["results"].contains("fixed_point_element"));

    CHECK(run_cli({"kinv", "-p", "5", "--rot", R"({"n":2,"R":[1,2,0,0]})"}).exit_code ==
          2);
    // dependent rotation vectors
    CHECK(run_cli({"kinv", "-p", "5", "--rot",
                   R"({"n":2,"R":[1,2,3,4],"Q":[2,4,6,8]})"})
              .exit_code == 2);
}

TEST_CASE("lens command") {
    CliResult a = run_cli({"lens", "-p", "7", "-x", "3", "-y", "5"});
    CliResult b = run_cli({"lens", "-p", "7", "-x", "1", "-y", "1"});
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(parse_out(a)["results"]["class_index"] ==
          parse_out(b)["results"]["class_index"]);
    CHECK(parse_out(a)["results"]["pair"] == json::parse("[[3,0,0],[0,0,5]]"));

    CHECK(run_cli({"lens", "-p", "7", "-x", "0", "-y", "5"}).exit_code == 3);
}

TEST_CASE("qd command") {
    CliResult r = run_cli({"qd", "-p", "5", "-n", "23"});
    REQUIRE(r.exit_code == 0);
    json j = parse_out(r);
    CHECK(j["results"]["status"] == "obstructed");
    CHECK(j["results"]["k"] == 2);
    CHECK(j["results"]["evidence"]["pure_x_coeff"] == 0);
    CHECK(j["results"]["evidence"]["pure_y_coeff"] == 0);

    CliResult na = run_cli({"qd", "-p", "5", "-n", "3"});
    CHECK(parse_out(na)["results"]["status"] == "not_applicable");
}

TEST_CASE("cohomology command") {
    CliResult r = run_cli({"cohomology", "-p", "5", "-k", "4"});
    REQUIRE(r.exit_code == 0);
    json j = parse_out(r);
    CHECK(j["results"]["cohomology"]["p_rank"] == 3);
    CHECK(j["results"]["homology"]["p_rank"] == 2);
    CHECK(j["results"]["basis"] == json::parse(R"(["a^2","a b","b^2"])"));
}

TEST_CASE("oracle command") {
    CliResult r = run_cli({"oracle", "-p", "5", "--seed", "7"});
    REQUIRE(r.exit_code == 0);
    json j = parse_out(r);
    CHECK(j["results"]["clean"] == true);
    CHECK(j["results"]["orbit_count"] == 4);
    CHECK(j["results"]["duo_disagreements"] == 0);
}

TEST_CASE("byte-identical output across repeated runs") {
    std::vector<std::vector<std::string>> inputs = {
        {"classify", "-p", "5", "--pair", "[[1,2,3],[3,1,4]]"},
        {"orbits", "-p", "5"},
        {"orbits", "-p", "5", "--format", "csv"},
        {"kinv", "-p", "7", "--rot", R"({"n":2,"R":[1,1,2,0],"Q":[1,3,0,1]})"},
        {"qd", "-p", "7", "-n", "31"},
        {"cohomology", "-p", "7", "-k", "9"},
        {"oracle", "-p", "5", "--seed", "3"},
    };
    for (const auto& args : inputs) {
        CliResult first = run_cli(args);
        CliResult second = run_cli(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("help is available") {
    CliResult r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("classify") != std::string::npos);
}
