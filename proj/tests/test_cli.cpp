#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "csurg/cli.hpp"
#include "oracles.hpp"

using namespace csurg;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "csurg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (fs::path(CSURG_FIXTURES) / name).string(); }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = fs::temp_directory_path() / ("csurg_test_" + name);
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

}  // namespace

TEST_CASE("diagram text round trip", "[cli][property]") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = oracle::random_diagram(rng, 1 + trial % 4);
        const auto text = serialize_diagram(d);
        const auto back = parse_diagram(text);
        REQUIRE(back == d);
        REQUIRE(serialize_diagram(back) == text);
    }
    const auto two = parse_diagrams(cli::read_file(fixture("hopf_pair.diag")));
    REQUIRE(two.size() == 2);
    CHECK(two[0].name() == "hopf");
    CHECK(two[0].lk(0, 1) == 1);
    CHECK(two[1][0].coeff == Rational(1, 2));
}

TEST_CASE("diagram parse errors carry positions", "[cli]") {
    auto err = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_diagrams(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    const std::string head = "diagram d\n  component A tb=-1 rot=0 coeff=-1 unknot\n  component B tb=-1 rot=0 coeff=1 unknot\n";
    CHECK(err(head + "  lk A B 1\n  lk B A 2\nend\n") == std::pair<std::size_t, std::size_t>{5, 3});
    CHECK(err("diagram d\n  component A tb=-1 rot=0 coeff=0 unknot\nend\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(err("diagram d\n  component A tb=-2 rot=0 coeff=1 unknot\nend\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(err("diagram d\n  component A tb=x rot=0 coeff=1 unknot\nend\n").first == 2);
    CHECK(err(head + "  lk A C 1\nend\n") == std::pair<std::size_t, std::size_t>{4, 8});
    CHECK(err(head) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(err("component A tb=-1 rot=0 coeff=1\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(err(head + "  frame A\nend\n") == std::pair<std::size_t, std::size_t>{4, 3});
}

TEST_CASE("move script text", "[cli]") {
    const auto s = parse_move_script(
        "# comment\nblowdown C\nrolfsen U n=2\nslide A over B sign=+1\nblowup sign=-1 lk=A:1,B:-2 name=E\n");
    REQUIRE(s.size() == 4);
    CHECK(std::get<BlowDown>(s[0]).target == "C");
    CHECK(std::get<Rolfsen>(s[1]) == Rolfsen{"U", 2});
    CHECK(std::get<Slide>(s[2]) == Slide{"A", "B", 1});
    CHECK(std::get<BlowUp>(s[3]) == BlowUp{-1, {{"A", 1}, {"B", -2}}, "E"});
    CHECK(parse_move_script(serialize_script(s)) == s);

    CHECK_THROWS_AS(parse_move_script("twist A\n"), ParseError);
    CHECK_THROWS_AS(parse_move_script("slide A over B sign=2\n"), ParseError);
    CHECK_THROWS_AS(parse_move_script("slide A over B sign=+\n"), ParseError);
    CHECK_THROWS_AS(parse_move_script("blowup sign=1 lk=A\n"), ParseError);
    // unknown ids parse fine and fail when applied
    const auto bad = parse_move_script("blowdown Z\n");
    TopologicalSurgeryDiagram td{{{"U", true, Rational(-2)}}, LinkMatrix(1, 1)};
    CHECK_THROWS_AS(run_script({td, {{false}}}, bad), DomainError);
}

TEST_CASE("invariants command", "[cli]") {
    const auto r = run({"invariants", fixture("case0.diag")});
    CHECK(r.code == 0);
    CHECK(r.out == "diagram=case0\nH1=Z/2\nd3=1/4\nsublink\tgamma\n{}\t0\n{U}\t1\n");
    const auto hopf = run({"invariants", fixture("hopf_pair.diag")});
    CHECK(hopf.code == 0);
    CHECK(hopf.out.find("diagram=hopf\n") != std::string::npos);
    CHECK(hopf.out.find("diagram=stabilized\n") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
    const auto bad = run({"invariants", fixture("bad_parity.diag")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2, column 3") != std::string::npos);
    CHECK(run({"invariants", fixture("missing.diag")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"rp3", "classify", "--gamma", "2", "--d3", "1/4"}).code == 2);
    CHECK(run({"rp3", "classify", "--gamma", "0", "--d3", "3/4"}).code == 2);
    CHECK(run({"rp3", "table", "--t", "-2", "--n", "-1"}).code == 0);
    CHECK(run({"rp3", "table", "--t", "0..1"}).code == 2);
    CHECK(run({"rp3", "table", "--t", "a..b"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const auto torn = temp_file("torn.moves", "blowdown U\nblowdown U\n");
    CHECK(run({"spin", fixture("case0.diag"), "--script", torn}).code == 2);
}

TEST_CASE("classify command", "[cli]") {
    const auto r = run({"rp3", "classify", "--gamma", "0", "--d3", "-3/4"});
    CHECK(r.code == 0);
    CHECK(r.out == "cs_pm1_eq_1=false\ncs_recip_eq_1=false\ncs_int_eq_1=true\ncs_eq_1=true\n");
    CHECK(run({"rp3", "classify", "--gamma", "0", "--d3", "1/4", "--tight"}).out ==
          "cs_pm1_eq_1=true\ncs_recip_eq_1=true\ncs_int_eq_1=true\ncs_eq_1=true\n");
}

TEST_CASE("recognize and convert", "[cli]") {
    CHECK(run({"rp3", "recognize", "2/3"}).out == "n=1\n");
    CHECK(run({"rp3", "recognize", "-3/2"}).out == "not RP3\n");
    CHECK(run({"rp3", "recognize", "x"}).code == 2);

    const auto conv = run({"convert", fixture("case2.diag")});
    REQUIRE(conv.code == 0);
    const auto all = parse_diagrams(conv.out);
    REQUIRE(!all.empty());
    for (const auto& d : all)
        for (const auto& c : d.components()) CHECK((c.coeff == Rational(1) || c.coeff == Rational(-1)));
    // converting a converted file changes nothing but comments
    const auto again = run({"convert", temp_file("conv.diag", conv.out)});
    CHECK(parse_diagrams(again.out) == all);
}

TEST_CASE("spin command", "[cli]") {
    const auto r = run({"spin", fixture("case2.diag")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("spin_structures=2\n") != std::string::npos);
    CHECK(r.out.find("s0=") != std::string::npos);
    // replaying the emitted script gives the same s0
    const auto script = r.out.substr(r.out.find("# script\n") + 9);
    const auto replay = run({"spin", fixture("case2.diag"), "--script", temp_file("replay.moves", script)});
    REQUIRE(replay.code == 0);
    auto s0 = [](const std::string& out) {
        const auto at = out.find("s0=");
        return out.substr(at, out.find('\n', at) - at);
    };
    CHECK(s0(replay.out) == s0(r.out));
    CHECK(run({"spin", fixture("case0.diag"), "--script", fixture("case0.moves")}).out.find("s0={}") !=
          std::string::npos);
}

TEST_CASE("table output is deterministic across thread counts", "[cli]") {
    const auto one = run({"rp3", "table", "--t", "-4..-1", "--n", "-4..4"});
    const auto again = run({"rp3", "table", "--t", "-4..-1", "--n", "-4..4"});
    const auto four = run({"--jobs", "4", "rp3", "table", "--t", "-4..-1", "--n", "-4..4"});
    const auto shipped = run({"rp3", "table", "--t", "-4..-1", "--n", "-4..4", "--fixtures", fixture("scripts")});
    REQUIRE(one.code == 0);
    CHECK(one.out == again.out);
    CHECK(one.out == four.out);
    CHECK(one.out == shipped.out);
    CHECK(one.out.rfind("t\tn\tcase\tgamma\td3\ttight\n", 0) == 0);
    CHECK(one.out.find("-1\t-1\t0\t0\t1/4\tyes\n") != std::string::npos);
}

TEST_CASE("scripts command writes loadable fixtures", "[cli]") {
    const auto dir = (fs::temp_directory_path() / "csurg_test_scripts").string();
    fs::remove_all(dir);
    const auto r = run({"rp3", "scripts", "--t", "-3..-1", "--n", "-2..1", "--out", dir});
    REQUIRE(r.code == 0);
    CHECK(r.out == "written=11\n");
    for (const auto& e : fs::directory_iterator(dir)) {
        const auto name = e.path().filename().string();
        CHECK(cli::read_file(e.path().string()) == cli::read_file(fixture("scripts/" + name)));
    }
    fs::remove_all(dir);
}

TEST_CASE("census command", "[cli]") {
    const auto r = run({"rp3", "census"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "tb\trot\tcoeff\tgamma\td3\ttight\n"
          "-1\t0\t-1\t0\t1/4\tyes\n"
          "-1\t0\t1/3\t1\t3/4\tno\n"
          "-3\t0\t1\t0\t5/4\tno\n"
          "-3\t+-2\t1\t1\t3/4\tno\n");
}
