#include "nfalg/cli.hpp"
#include "nfalg/fixtures.hpp"
#include "nfalg/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace nfalg;

namespace {

std::string fixture(const std::string& name) {
    return std::string(NFALG_FIXTURE_DIR) + "/" + name;
}

struct CliOutcome {
    int code;
    std::string out, err;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("structure-constant JSON round trip") {
    auto a = builtin("matrix", 2);
    Json j = algebra_to_json(a);
    Algebra back = algebra_from_json(j);
    CHECK(back.equal_structure(a));
    CHECK(back.labels() == a.labels());
    CHECK(back.name() == a.name());
    // every scalar serializes as a string
    for (const auto& row : j["table"])
        for (const auto& cell : row)
            for (const auto& entry : cell) CHECK(entry.is_string());
}

TEST_CASE("structure-constant JSON validation") {
    Json j = algebra_to_json(builtin("truncated_poly", 1));
    j["table"][0][0][0] = "1/0";
    CHECK_THROWS(algebra_from_json(j));
    Json missing;
    missing["dim"] = 2;
    CHECK_THROWS_AS(algebra_from_json(missing), Error);

    // a broken structure table trips the axiom checks on import
    Json bad = algebra_to_json(builtin("matrix", 2));
    bad["table"][1][2][0] = "5";
    CHECK_THROWS_AS(algebra_from_json(bad), NonAssociative);
}

TEST_CASE("cli build") {
    SECTION("presentation file") {
        auto r = run_cli({"build", fixture("two_cycle_both.alg")});
        CHECK(r.code == 0);
        CHECK(r.out.find("dim 4") != std::string::npos);
        CHECK(r.out.find("e1 e2 a b") != std::string::npos);
    }
    SECTION("builtin pseudo-path") {
        auto r = run_cli({"build", "builtin:matrix:2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("dim 4") != std::string::npos);
    }
    SECTION("missing file is a usage error") {
        CHECK(run_cli({"build", "/nonexistent/file.alg"}).code == 1);
    }
    SECTION("malformed file is a parse error") {
        auto path = write_temp("bad.alg", "algebra t\nvortex 1\nmaxlen 2\n");
        auto r = run_cli({"build", path});
        CHECK(r.code == 2);
        CHECK(r.err.find("line") != std::string::npos);
        std::remove(path.c_str());
    }
    SECTION("understated bound is a math failure") {
        auto r = run_cli({"build", "--maxlen", "2", fixture("triangle.alg")});
        CHECK(r.code == 3);
    }
    SECTION("json output reimports as the same algebra") {
        auto r = run_cli({"build", "--json", "builtin:truncated_poly:2"});
        REQUIRE(r.code == 0);
        auto path = write_temp("trunc2.json", r.out);
        auto r2 = run_cli({"build", path});
        CHECK(r2.code == 0);
        CHECK(r2.out.find("dim 3") != std::string::npos);
        std::remove(path.c_str());
    }
}

TEST_CASE("cli frobspace and handle") {
    SECTION("coproduct space dimension") {
        auto r = run_cli({"frobspace", fixture("local_ring_xyz.alg")});
        CHECK(r.code == 0);
        CHECK(r.out.find("frobdim 8") != std::string::npos);
    }
    SECTION("symbolic handle of the one-relation two-cycle") {
        auto r = run_cli({"handle", fixture("two_cycle_single.alg")});
        CHECK(r.code == 0);
        CHECK(r.out.find("(2a1+a2)*ab") != std::string::npos);
    }
}

TEST_CASE("cli socle and radical") {
    auto r = run_cli({"socle", "--side", "right", fixture("two_cycle_single.alg")});
    CHECK(r.code == 0);
    CHECK(r.out.find("right socle: dim 2") != std::string::npos);
    CHECK(r.out.find("left socle") == std::string::npos);

    auto rr = run_cli({"radical", fixture("two_cycle_single.alg")});
    CHECK(rr.code == 0);
    CHECK(rr.out.find("radical: dim 3") != std::string::npos);
}

TEST_CASE("cli separable") {
    auto r = run_cli({"separable", "builtin:cyclic_group:3"});
    CHECK(r.code == 0);
    CHECK(r.out.find(": separable") != std::string::npos);

    auto rn = run_cli({"separable", "builtin:truncated_poly:2"});
    CHECK(rn.code == 0);
    CHECK(rn.out.find("not separable") != std::string::npos);
}

TEST_CASE("cli frobcheck exit codes") {
    SECTION("witness found") {
        auto r = run_cli({"frobcheck", "builtin:truncated_poly:2"});
        CHECK(r.code == 0);
        CHECK(r.out.find(": frobenius") != std::string::npos);
    }
    SECTION("certificate found") {
        auto r = run_cli({"frobcheck", fixture("two_cycle_single.alg")});
        CHECK(r.code == 0);
        CHECK(r.out.find("not_frobenius") != std::string::npos);
    }
    SECTION("no trials stays inconclusive") {
        auto r = run_cli({"frobcheck", "--trials", "0", "builtin:truncated_poly:2"});
        CHECK(r.code == 4);
        CHECK(r.out.find("inconclusive") != std::string::npos);
    }
    SECTION("output is byte-identical for a fixed seed") {
        std::vector<std::string> args{"frobcheck", "--json", "--seed", "7",
                                      "builtin:truncated_poly:3"};
        auto r1 = run_cli(args);
        auto r2 = run_cli(args);
        CHECK(r1.code == 0);
        CHECK(r1.out == r2.out);
    }
}

TEST_CASE("cli schur") {
    SECTION("collapse with the loop-supported coproduct has schur element zero") {
        auto r = run_cli({"schur", fixture("loop_arrow.alg"), fixture("loop.alg"),
                          fixture("collapse.mor"), "--counit", "x=1", "--coproduct", "a2=1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("schur element: 0") != std::string::npos);
    }
    SECTION("collapse with the diagonal coproduct has a nilpotent schur element") {
        auto r = run_cli({"schur", fixture("loop_arrow.alg"), fixture("loop.alg"),
                          fixture("collapse.mor"), "--counit", "x=1", "--coproduct", "a1=1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("schur element: x") != std::string::npos);
        CHECK(r.out.find("invertible: no") != std::string::npos);
        CHECK(r.out.find("casimir transport: ok") != std::string::npos);
        CHECK(r.out.find("handle transport: ok") != std::string::npos);
    }
    SECTION("degenerate target counit fails") {
        auto r = run_cli({"schur", fixture("loop_arrow.alg"), fixture("loop.alg"),
                          fixture("collapse.mor"), "--counit", "1=1", "--coproduct", "a1=1"});
        CHECK(r.code == 3);
    }
    SECTION("identity with the loop-squared coproduct") {
        auto r = run_cli({"schur", fixture("loop.alg"), fixture("loop.alg"),
                          fixture("ident_loop.mor"), "--counit", "x=1", "--coproduct", "a2=1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("schur element: x") != std::string::npos);
    }
    SECTION("identity with the counital coproduct gives 1 and the identity section") {
        auto r = run_cli({"schur", fixture("loop.alg"), fixture("loop.alg"),
                          fixture("ident_loop.mor"), "--counit", "x=1", "--coproduct",
                          "counit:x=1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("schur element: 1") != std::string::npos);
        CHECK(r.out.find("invertible: yes") != std::string::npos);
        CHECK(r.out.find("splits yes") != std::string::npos);
        CHECK(r.out.find("left linear yes") != std::string::npos);
    }
    SECTION("bad flag specs are usage errors") {
        CHECK(run_cli({"schur", fixture("loop.alg"), fixture("loop.alg"),
                       fixture("ident_loop.mor"), "--counit", "zz=1", "--coproduct", "a1=1"})
                  .code == 1);
        CHECK(run_cli({"schur", fixture("loop.alg"), fixture("loop.alg"),
                       fixture("ident_loop.mor"), "--counit", "x=1", "--coproduct", "a9=1"})
                  .code == 1);
    }
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"schur", fixture("loop.alg")}).code == 1);  // missing args
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("frobspace") != std::string::npos);
}

TEST_CASE("fixture files match the embedded presentations") {
    auto read = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(read(fixture("two_cycle_both.alg")) == fixtures::two_cycle_both_dsl());
    CHECK(read(fixture("two_cycle_single.alg")) == fixtures::two_cycle_single_dsl());
    CHECK(read(fixture("triangle.alg")) == fixtures::triangle_dsl());
    CHECK(read(fixture("local_ring_xy.alg")) == fixtures::local_ring_xy_dsl());
    CHECK(read(fixture("local_ring_xyz.alg")) == fixtures::local_ring_xyz_dsl());
    CHECK(read(fixture("loop_arrow.alg")) == fixtures::loop_arrow_dsl());
    CHECK(read(fixture("loop.alg")) == fixtures::loop_dsl());
    CHECK(read(fixture("field.alg")) == fixtures::field_dsl());
    CHECK(read(fixture("linear_toupie.alg")) == fixtures::linear_toupie_dsl());
}

TEST_CASE("cli verification suite failure reporting") {
    // with no random trials the detection criterion cannot find witnesses,
    // so the suite fails and names the first failing criterion
    auto r = run_cli({"paper-suite", "--json", "--trials", "0"});
    CHECK(r.code == 3);
    CHECK(r.err.find("frobenius detection") != std::string::npos);
    Json j = Json::parse(r.out);
    CHECK(j["pass"] == false);
    REQUIRE(j["results"].is_array());
    REQUIRE(j["results"].size() == 8);
    bool saw_fail = false;
    for (const auto& e : j["results"]) {
        REQUIRE(e.contains("name"));
        REQUIRE(e.contains("pass"));
        if (!e["pass"].get<bool>()) saw_fail = true;
    }
    CHECK(saw_fail);
}

TEST_CASE("frobcheck json report uses rational strings throughout") {
    auto r = run_cli({"frobcheck", "--json", "builtin:truncated_poly:1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "frobenius");
    for (const auto& e : j["counit"]) CHECK(e.is_string());
    for (const auto& row : j["coproduct"])
        for (const auto& e : row) CHECK(e.is_string());
}
