#include <doctest.h>

#include "kerind/runner.hpp"
#include "kerind/scenario.hpp"

using namespace kerind;

TEST_CASE("parsing the F_4 fixture") {
    Scenario sc = parse_scenario_file("fixtures/galois-f4.scn");
    CHECK(sc.name == "galois-f4");
    REQUIRE(sc.has_ring);
    CHECK(sc.ring.size() == 4);
    CHECK(sc.group.size() == 2);
    CHECK(sc.action.is_galois());
    REQUIRE(sc.tasks.size() == 2);
    CHECK(sc.tasks[0].command == "h1");
    CHECK(sc.tasks[1].command == "verify-theorem");
    CHECK(sc.tasks[1].levels == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("an empty task list is a valid scenario with an empty report") {
    Scenario sc = parse_scenario_text("name empty\nring Z/4\ngroup cyclic 1\naction identity\n");
    CHECK(sc.tasks.empty());
    RunReport rep = run_scenario(sc, {});
    CHECK(rep.all_pass);
    CHECK(rep.json["results"].empty());
}

TEST_CASE("validation failures carry positions") {
    // an action table that is not a ring homomorphism
    std::string text =
        "name bad\nring Z/4\ngroup cyclic 2\naction perm 0 2 1 3\n";
    CHECK_THROWS_AS(parse_scenario_text(text), ScenarioError);
    try {
        parse_scenario_text(text);
    } catch (const ScenarioError& e) {
        CHECK(e.line == 4);
    }

    CHECK_THROWS_AS(parse_scenario_text("ring Z/4\n"), ScenarioError);       // no name
    CHECK_THROWS_AS(parse_scenario_text("name x\nwat 1\n"), ScenarioError);  // bad key
    CHECK_THROWS_AS(parse_scenario_text("name x\ngroup cyclic 2\ntask h1 n=\n"), ScenarioError);
}

TEST_CASE("hypothesis (*) violations surface as scenario errors") {
    std::string text = "name star\nring Z/8\ngroup cyclic 2\naction identity\n";
    CHECK_THROWS_WITH_AS(parse_scenario_text(text),
                         doctest::Contains("(*)"), ScenarioError);
    Scenario sc = parse_scenario_text(text + "allow-no-star\n");
    CHECK_FALSE(sc.action.has_star());
}

TEST_CASE("runs are deterministic") {
    Scenario sc = parse_scenario_file("fixtures/dual-f3.scn");
    RunOptions opt;
    opt.command = "h1";
    RunReport a = run_scenario(sc, opt);
    RunReport b = run_scenario(sc, opt);
    CHECK(a.digest == b.digest);
    auto ja = a.json, jb = b.json;
    ja.erase("wall_ms");
    jb.erase("wall_ms");
    CHECK(ja == jb);
}

TEST_CASE("the dual-numbers fixture reports two unit classes") {
    Scenario sc = parse_scenario_file("fixtures/dual-f3.scn");
    RunReport rep = run_scenario(sc, {});  // runs the fixture's own task list
    CHECK(rep.all_pass);
    // first task: h1 n=1 x=u
    CHECK(rep.json["results"][0]["data"][0]["count"].get<int>() == 2);
}

TEST_CASE("exit-status contract through all_pass") {
    Scenario sc = parse_scenario_file("fixtures/dual-f3.scn");
    RunOptions opt;
    opt.command = "verify-theorem";
    opt.levels = std::vector<std::uint32_t>{1};
    RunReport rep = run_scenario(sc, opt);
    CHECK(rep.all_pass);

    // a lattice command against a ring scenario is an error, not a pass
    RunOptions bad;
    bad.command = "pic";
    RunReport fail = run_scenario(sc, bad);
    CHECK_FALSE(fail.all_pass);
    CHECK(fail.json["results"][0].contains("error"));
}

TEST_CASE("lattice scenarios run end to end") {
    Scenario sc = parse_scenario_file("fixtures/lat-sign.scn");
    REQUIRE(sc.has_lattice);
    RunReport rep = run_scenario(sc, {});
    CHECK(rep.all_pass);
    // pic of <-1> on Z is trivial
    CHECK(rep.json["results"][0]["data"]["pic"].get<std::string>() == "0");
}

TEST_CASE("abstract scenarios run end to end") {
    Scenario sc = parse_scenario_file("fixtures/abstract-z5-inv.scn");
    REQUIRE(sc.has_coeff);
    RunReport rep = run_scenario(sc, {});
    CHECK(rep.all_pass);
    CHECK(rep.json["results"][0]["data"][0]["count"].get<int>() == 1);
}
