#include "nfalg/fixtures.hpp"
#include "nfalg/presentation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace nfalg;

TEST_CASE("parsing the two-cycle presentation") {
    auto p = parse_presentation(fixtures::two_cycle_both_dsl());
    CHECK(p.name == "two_cycle_both");
    CHECK(p.quiver.vertices == std::vector<std::string>{"1", "2"});
    REQUIRE(p.quiver.arrows.size() == 2);
    CHECK(p.quiver.arrows[0].name == "a");
    CHECK(p.quiver.arrows[0].source == 0);
    CHECK(p.quiver.arrows[0].target == 1);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.maxlen == 2);
}

TEST_CASE("parser error reporting") {
    SECTION("arrow with an undeclared vertex") {
        CHECK_THROWS_AS(parse_presentation("algebra t\nvertex 1\narrow a : 1 -> 9\nmaxlen 2\n"),
                        UnknownVertex);
    }
    SECTION("relations of length one violate admissibility") {
        CHECK_THROWS_AS(
            parse_presentation(
                "algebra t\nvertex 1\narrow a : 1 -> 1\nrelation a\nmaxlen 2\n"),
            RelationTooShort);
    }
    SECTION("non-composable relation term") {
        CHECK_THROWS_AS(
            parse_presentation("algebra t\nvertex 1 2\narrow a : 1 -> 2\n"
                               "relation a*a\nmaxlen 2\n"),
            NonComposablePath);
    }
    SECTION("non-parallel relation terms") {
        CHECK_THROWS_AS(
            parse_presentation("algebra t\nvertex 1 2\narrow a : 1 -> 2\narrow b : 2 -> 1\n"
                               "relation a*b - b*a\nmaxlen 2\n"),
            ParseError);
    }
    SECTION("unknown keyword reports line and column") {
        try {
            parse_presentation("algebra t\nvertex 1\nbogus line\nmaxlen 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SECTION("missing maxlen") {
        CHECK_THROWS_AS(parse_presentation("algebra t\nvertex 1\n"), ParseError);
    }
    SECTION("duplicate arrow name") {
        CHECK_THROWS_AS(
            parse_presentation("algebra t\nvertex 1\narrow a : 1 -> 1\narrow a : 1 -> 1\nmaxlen 2\n"),
            ParseError);
    }
}

TEST_CASE("utf-8 arrow names parse and label compactly") {
    auto qa = build_algebra(
        "algebra greek\nvertex 1 2\n"
        "arrow α : 1 -> 2\narrow β : 2 -> 1\n"
        "relation α*β\nrelation β*α\nmaxlen 2\n");
    CHECK(qa.algebra.dim() == 4);
    CHECK(qa.algebra.labels() == std::vector<std::string>{"e1", "e2", "α", "β"});
}

TEST_CASE("path enumeration order and counts") {
    SECTION("two-cycle quiver up to length 2") {
        auto p = parse_presentation(fixtures::two_cycle_both_dsl());
        auto paths = enumerate_paths(p.quiver, 2);
        REQUIRE(paths.size() == 6);
        std::vector<std::string> labels;
        for (const auto& path : paths) labels.push_back(path_label(p.quiver, path));
        CHECK(labels == std::vector<std::string>{"e1", "e2", "a", "b", "ab", "ba"});
    }
    SECTION("single loop has one path per length") {
        Quiver q;
        q.vertices = {"v"};
        q.arrows = {{"x", 0, 0}};
        CHECK(enumerate_paths(q, 5).size() == 6);
    }
    SECTION("triangle quiver up to length 3") {
        auto p = parse_presentation(fixtures::triangle_dsl());
        CHECK(enumerate_paths(p.quiver, 3).size() == 12);
    }
}

TEST_CASE("building the two-cycle quotients") {
    SECTION("both cycles zero gives dimension 4") {
        auto qa = fixtures::two_cycle_both();
        CHECK(qa.algebra.dim() == 4);
        CHECK(qa.algebra.labels() == std::vector<std::string>{"e1", "e2", "a", "b"});
    }
    SECTION("a single dead cycle gives dimension 5") {
        auto qa = fixtures::two_cycle_single();
        REQUIRE(qa.algebra.dim() == 5);
        CHECK(qa.algebra.labels() == std::vector<std::string>{"e1", "e2", "a", "b", "ab"});
        // a*b survives, b*a is zero
        auto a = qa.algebra.basis_element(2), b = qa.algebra.basis_element(3);
        CHECK(a * b == qa.algebra.basis_element(4));
        CHECK((b * a).is_zero());
    }
}

TEST_CASE("building the one-vertex quotients") {
    SECTION("truncated polynomial rings") {
        for (std::size_t n = 1; n <= 4; ++n) {
            auto qa = build_algebra(fixtures::trunc_poly_dsl(n));
            CHECK(qa.algebra.dim() == n + 1);
        }
    }
    SECTION("two-loop local ring has the expected monomial basis") {
        auto qa = fixtures::local_ring_xy();
        REQUIRE(qa.algebra.dim() == 5);
        std::set<std::string> labels(qa.algebra.labels().begin(), qa.algebra.labels().end());
        CHECK(labels == std::set<std::string>{"1", "x", "y", "xy", "y^2"});
        // commutativity holds in the quotient
        auto x = qa.algebra.basis_element(*qa.label_index("x"));
        auto y = qa.algebra.basis_element(*qa.label_index("y"));
        CHECK(x * y == y * x);
        CHECK((x * x).is_zero());
        CHECK(((x * y) * y).is_zero());
    }
    SECTION("three-loop local ring") {
        auto qa = fixtures::local_ring_xyz();
        REQUIRE(qa.algebra.dim() == 6);
        std::set<std::string> labels(qa.algebra.labels().begin(), qa.algebra.labels().end());
        CHECK(labels == std::set<std::string>{"1", "x", "y", "z", "xz", "yz"});
    }
}

TEST_CASE("triangle quotient basis") {
    auto qa = fixtures::triangle();
    REQUIRE(qa.algebra.dim() == 12);
    std::set<std::string> labels(qa.algebra.labels().begin(), qa.algebra.labels().end());
    CHECK(labels == std::set<std::string>{"e1", "e2", "e3", "a", "b", "g", "ab", "bg", "ga",
                                          "bga", "gab", "bgab"});
    // the composite around the dead cycle vanishes
    auto a = qa.algebra.basis_element(*qa.label_index("a"));
    auto b = qa.algebra.basis_element(*qa.label_index("b"));
    auto g = qa.algebra.basis_element(*qa.label_index("g"));
    CHECK(((a * b) * g).is_zero());
    CHECK_FALSE((b * g * a).is_zero());
}

TEST_CASE("an understated bound is rejected") {
    // a free loop is infinite-dimensional; any finite bound is inconsistent
    CHECK_THROWS_AS(build_algebra("algebra t\nvertex v\narrow x : v -> v\nmaxlen 3\n"),
                    InconsistentBound);
}

TEST_CASE("builtin algebras") {
    SECTION("matrix algebra") {
        auto m2 = builtin("matrix", 2);
        CHECK(m2.dim() == 4);
        CHECK(m2.label(1) == "E12");
    }
    SECTION("cyclic group algebra") {
        auto c3 = builtin("cyclic_group", 3);
        REQUIRE(c3.dim() == 3);
        auto g = c3.basis_element(1);
        CHECK(g * g * g == c3.one());
    }
    SECTION("truncated polynomials") {
        CHECK(builtin("truncated_poly", 0).dim() == 1);
        CHECK(builtin("truncated_poly", 3).dim() == 4);
    }
    SECTION("unknown name") {
        CHECK_THROWS_AS(builtin("nope", 2), UnknownBuiltin);
    }
}

TEST_CASE("quiver classification") {
    SECTION("two-cycle quiver") {
        auto f = classify(parse_presentation(fixtures::two_cycle_both_dsl()));
        CHECK(f.connected);
        CHECK_FALSE(f.acyclic);
        CHECK_FALSE(f.toupie);
        CHECK_FALSE(f.single_vertex);
    }
    SECTION("linear quiver with radical square zero") {
        auto f = classify(parse_presentation(fixtures::linear_toupie_dsl()));
        CHECK(f.acyclic);
        CHECK(f.toupie);
        CHECK(f.radical_square_zero);
    }
    SECTION("single vertex") {
        auto f = classify(parse_presentation(fixtures::field_dsl()));
        CHECK(f.single_vertex);
        CHECK(f.connected);
        CHECK(f.acyclic);
        CHECK_FALSE(f.toupie);
    }
    SECTION("loop-plus-arrow algebra is radical square zero") {
        auto f = classify(parse_presentation(fixtures::loop_arrow_dsl()));
        CHECK(f.radical_square_zero);
        CHECK(f.connected);
        CHECK_FALSE(f.acyclic);
    }
}

TEST_CASE("monomial rewriting oracle agrees with the linear-algebra quotient") {
    auto check_fixture = [](const QuotientAlgebra& qa) {
        auto oracle = monomial_basis(qa.presentation);
        REQUIRE(oracle.has_value());
        auto sorted_quotient = qa.basis_paths;
        std::sort(sorted_quotient.begin(), sorted_quotient.end());
        auto sorted_oracle = *oracle;
        std::sort(sorted_oracle.begin(), sorted_oracle.end());
        CHECK(sorted_quotient == sorted_oracle);
    };
    check_fixture(fixtures::two_cycle_both());
    check_fixture(fixtures::two_cycle_single());
    check_fixture(fixtures::triangle());
    check_fixture(fixtures::loop_arrow());
    check_fixture(build_algebra(fixtures::trunc_poly_dsl(4)));
    // the local rings are not monomial because of the commutators
    CHECK_FALSE(monomial_basis(parse_presentation(fixtures::local_ring_xy_dsl())).has_value());
}

TEST_CASE("center of the two-cycle algebra is the line through 1") {
    // commutant solved by hand: a e1 + b e2 + c a + d b commutes with both
    // arrows only when a = b and c = d = 0
    auto qa = fixtures::two_cycle_both();
    auto z = center(qa.algebra);
    REQUIRE(z.dim() == 1);
    CHECK(z.contains(qa.algebra.one()));
}

TEST_CASE("right ideal of the long triangle path is a line") {
    auto qa = fixtures::triangle();
    auto gab = qa.algebra.basis_element(*qa.label_index("gab"));
    auto ri = right_ideal(gab);
    REQUIRE(ri.dim() == 1);
    CHECK(ri.contains(gab));
}

TEST_CASE("radical square of the one-relation two-cycle") {
    auto qa = fixtures::two_cycle_single();
    auto j2 = subspace_power(radical(qa.algebra), 2);
    REQUIRE(j2.dim() == 1);
    CHECK(j2.contains(qa.algebra.basis_element(*qa.label_index("ab"))));
}

TEST_CASE("radical of a bound quiver algebra is the arrow ideal") {
    for (const auto& qa : {fixtures::two_cycle_both(), fixtures::two_cycle_single(),
                           fixtures::triangle(), fixtures::local_ring_xy(),
                           fixtures::local_ring_xyz(), fixtures::loop_arrow()}) {
        CHECK(radical(qa.algebra) == qa.positive_length_span());
    }
}

TEST_CASE("radical square zero dimension identity") {
    // dim kQ/J^2 = #vertices + #arrows
    auto count = [](const std::string& dsl, std::size_t expect) {
        auto qa = build_algebra(dsl);
        CHECK(qa.algebra.dim() == expect);
        CHECK(classify(qa.presentation).radical_square_zero);
    };
    count(fixtures::linear_toupie_dsl(), 5);
    count(fixtures::loop_arrow_dsl(), 4);
    count(fixtures::two_cycle_both_dsl(), 4);
}

TEST_CASE("basis path products stay within parallel classes") {
    auto qa = fixtures::triangle();
    const auto& A = qa.algebra;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Vec& prod = A.table(i, j);
            if (vec_is_zero(prod)) continue;
            std::size_t src = qa.basis_paths[i].source;
            std::size_t tgt = qa.basis_paths[j].target(qa.presentation.quiver);
            for (std::size_t k = 0; k < A.dim(); ++k) {
                if (prod[k].is_zero()) continue;
                CHECK(qa.basis_paths[k].source == src);
                CHECK(qa.basis_paths[k].target(qa.presentation.quiver) == tgt);
            }
        }
}
