#include "nfalg/algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace nfalg;

namespace {

// Hand-built reference algebras, independent of the presentation pipeline.

Algebra matrix_units(std::size_t n) {
    std::size_t dim = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    std::vector<std::string> labels(dim);
    std::vector<Vec> table(dim * dim, vec_zero(dim));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels[idx(i, j)] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) table[idx(i, j) * dim + idx(k, l)][idx(i, l)] = 1;
        }
    Vec one = vec_zero(dim);
    for (std::size_t i = 0; i < n; ++i) one[idx(i, i)] = 1;
    return Algebra::create(labels, table, one, "M" + std::to_string(n));
}

Algebra trunc_poly(std::size_t n) {
    std::size_t dim = n + 1;
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i)
        labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<Vec> table(dim * dim, vec_zero(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (i + j < dim) table[i * dim + j][i + j] = 1;
    Vec one = vec_zero(dim);
    one[0] = 1;
    return Algebra::create(labels, table, one, "k[x]/x^" + std::to_string(dim));
}

}  // namespace

TEST_CASE("algebra construction checks") {
    SECTION("one-dimensional idempotent algebra is valid") {
        auto a = Algebra::create({"e"}, {Vec{Scalar(1)}}, Vec{Scalar(1)});
        CHECK(a.dim() == 1);
    }
    SECTION("a violating triple is rejected") {
        // e0*e0 = e1, e0*e1 = e0, everything else 0: (e0 e0) e0 != e0 (e0 e0)
        std::vector<Vec> table = {
            Vec{Scalar(0), Scalar(1)}, Vec{Scalar(1), Scalar(0)},
            Vec{Scalar(0), Scalar(0)}, Vec{Scalar(0), Scalar(0)}};
        CHECK_THROWS_AS(Algebra::create({"u", "v"}, table, Vec{Scalar(1), Scalar(0)}),
                        NonAssociative);
    }
    SECTION("bad unit is rejected") {
        // commutative 2-dim algebra where the claimed unit fails
        std::vector<Vec> table = {
            Vec{Scalar(1), Scalar(0)}, Vec{Scalar(0), Scalar(0)},
            Vec{Scalar(0), Scalar(0)}, Vec{Scalar(0), Scalar(0)}};
        CHECK_THROWS_AS(Algebra::create({"u", "v"}, table, Vec{Scalar(1), Scalar(0)}), BadUnit);
    }
    SECTION("matrix units give a valid 4-dimensional algebra") {
        auto m2 = matrix_units(2);
        CHECK(m2.dim() == 4);
    }
}

TEST_CASE("element multiplication") {
    auto m2 = matrix_units(2);
    // E11, E12, E21, E22 at indices 0..3
    CHECK(m2.basis_element(0) * m2.basis_element(1) == m2.basis_element(1));
    CHECK((m2.basis_element(1) * m2.basis_element(1)).is_zero());

    auto dual = trunc_poly(1);
    CHECK((dual.basis_element(1) * dual.basis_element(1)).is_zero());

    auto other = matrix_units(2);
    CHECK_THROWS_AS(m2.basis_element(0) * other.basis_element(0), AlgebraMismatch);
}

TEST_CASE("regular representation matrices") {
    auto a = trunc_poly(2);
    SECTION("L_1 is the identity") {
        CHECK(a.left_mult(a.one_coords()) == Mat::identity(3));
    }
    SECTION("L_x is the shift on 1, x, x^2") {
        Mat lx = a.left_mult(a.basis_element(1).coords());
        Mat expect(3, 3);
        expect(1, 0) = 1;
        expect(2, 1) = 1;
        CHECK(lx == expect);
        // nilpotent
        CHECK((lx * lx * lx).is_zero());
    }
    SECTION("commutative algebras have L = R") {
        Vec v{Scalar(2), Scalar(-1), Scalar(1, 3)};
        CHECK(a.left_mult(v) == a.right_mult(v));
    }
}

TEST_CASE("unit detection and inverses") {
    auto a = trunc_poly(1);
    CHECK(try_inverse(a.one()) == a.one());
    CHECK_FALSE(try_inverse(a.basis_element(1)).has_value());

    auto m2 = matrix_units(2);
    Element two_i = Scalar(2) * m2.one();
    auto inv = try_inverse(two_i);
    REQUIRE(inv.has_value());
    CHECK(*inv == Scalar(1, 2) * m2.one());
}

TEST_CASE("center computation") {
    SECTION("commutative algebra has full center") {
        auto a = trunc_poly(3);
        CHECK(center(a).dim() == a.dim());
    }
    SECTION("matrix algebra has scalar center") {
        auto m2 = matrix_units(2);
        auto z = center(m2);
        REQUIRE(z.dim() == 1);
        CHECK(z.contains(m2.one()));
    }
    SECTION("center contains 1 and is closed under multiplication") {
        auto m3 = matrix_units(3);
        auto z = center(m3);
        CHECK(z.contains(m3.one()));
        for (const auto& p : z.basis_elements())
            for (const auto& q : z.basis_elements()) CHECK(z.contains(p * q));
    }
}

TEST_CASE("radical computation") {
    SECTION("matrix algebras are semisimple") {
        CHECK(radical(matrix_units(2)).dim() == 0);
        CHECK(radical(matrix_units(3)).dim() == 0);
    }
    SECTION("truncated polynomials have the nilpotent part") {
        auto a = trunc_poly(3);
        auto j = radical(a);
        REQUIRE(j.dim() == 3);
        for (std::size_t i = 1; i <= 3; ++i) CHECK(j.contains(a.basis_element(i)));
        CHECK_FALSE(j.contains(a.one()));
    }
    SECTION("radical is a two-sided ideal") {
        auto a = trunc_poly(3);
        auto j = radical(a);
        for (const auto& r : j.basis_elements())
            for (std::size_t i = 0; i < a.dim(); ++i) {
                CHECK(j.contains(a.basis_element(i) * r));
                CHECK(j.contains(r * a.basis_element(i)));
            }
    }
}

TEST_CASE("socle computation") {
    SECTION("semisimple algebra is its own socle") {
        auto m2 = matrix_units(2);
        CHECK(socle_right(m2).dim() == 4);
        CHECK(socle_left(m2).dim() == 4);
    }
    SECTION("truncated polynomials have top-power socle") {
        auto a = trunc_poly(3);
        auto s = socle_right(a);
        REQUIRE(s.dim() == 1);
        CHECK(s.contains(a.basis_element(3)));
        CHECK(socle_left(a) == s);
    }
    SECTION("membership is exactly annihilation of the radical") {
        auto a = trunc_poly(2);
        auto j = radical(a);
        auto s = socle_right(a, j);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            bool kills = true;
            for (const auto& r : j.basis_elements())
                if (!(a.basis_element(i) * r).is_zero()) kills = false;
            CHECK(s.contains(a.basis_element(i)) == kills);
        }
    }
}

TEST_CASE("generated ideals") {
    auto a = trunc_poly(2);
    CHECK(ideal_generated(a.zero()).dim() == 0);
    CHECK(ideal_generated(a.one()).dim() == a.dim());
    auto ri = right_ideal(a.basis_element(1));
    CHECK(ri.dim() == 2);
    CHECK(ri.contains(a.basis_element(1)));
    CHECK(ri.contains(a.basis_element(2)));
}

TEST_CASE("is_central matches the commutation test") {
    auto m2 = matrix_units(2);
    CHECK(is_central(m2.one()));
    CHECK_FALSE(is_central(m2.basis_element(1)));
}

TEST_CASE("products and tensor products") {
    auto k = trunc_poly(0);
    SECTION("k x k carries two orthogonal idempotents") {
        auto kk = direct_product(k, k);
        REQUIRE(kk.dim() == 2);
        Element e1 = kk.basis_element(0), e2 = kk.basis_element(1);
        CHECK(e1 * e1 == e1);
        CHECK(e2 * e2 == e2);
        CHECK((e1 * e2).is_zero());
        CHECK(e1 + e2 == kk.one());
    }
    SECTION("tensoring with the base field is the identity") {
        auto a = matrix_units(2);
        auto ak = tensor_product(a, k);
        CHECK(ak.equal_structure(a));
    }
    SECTION("tensor dimension multiplies") {
        auto m2 = matrix_units(2);
        CHECK(tensor_product(m2, m2).dim() == 16);
    }
}

TEST_CASE("subspace powers") {
    SECTION("radical square of the dual numbers vanishes") {
        auto a = trunc_poly(1);
        CHECK(subspace_power(radical(a), 2).dim() == 0);
    }
    SECTION("J^(n+1) of truncated polynomials vanishes") {
        auto a = trunc_poly(3);
        auto j = radical(a);
        CHECK(subspace_power(j, 4).dim() == 0);
        CHECK(subspace_power(j, 3).dim() == 1);
    }
}

TEST_CASE("subspace intersection") {
    auto a = trunc_poly(3);
    auto u = Subspace::from_vectors(a, {a.basis_element(1).coords(), a.basis_element(2).coords()});
    auto v = Subspace::from_vectors(a, {a.basis_element(2).coords(), a.basis_element(3).coords()});
    auto w = subspace_intersection(u, v);
    REQUIRE(w.dim() == 1);
    CHECK(w.contains(a.basis_element(2)));
}

TEST_CASE("tensor element basics") {
    auto a = trunc_poly(1);
    Mat t(2, 2);
    t(1, 1) = 1;  // x (x) x
    TensorElement te(a, t);
    CHECK(te.multiply_out().is_zero());
    CHECK(te.is_symmetric());
    CHECK(te.is_bimodule());

    Mat s(2, 2);
    s(0, 0) = 1;  // 1 (x) 1 is not a bimodule element of the dual numbers
    CHECK_FALSE(TensorElement(a, s).is_bimodule());
}
