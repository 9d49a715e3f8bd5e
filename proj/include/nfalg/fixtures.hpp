#pragma once

#include "nfalg/algebra.hpp"
#include "nfalg/presentation.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

// Bound quiver fixtures used by the verification suite and the tests: the
// two-cycle algebras, the triangle with one dead cycle, two local rings that
// admit no trace, a loop-plus-arrow algebra with a collapse morphism onto
// k[x]/x^2, and small builtins.
namespace nfalg::fixtures {

inline const char* two_cycle_both_dsl() {
    return R"(# two vertices joined by opposite arrows, both length-2 cycles zero
algebra two_cycle_both
vertex 1 2
arrow a : 1 -> 2
arrow b : 2 -> 1
relation a*b
relation b*a
maxlen 2
)";
}

inline const char* two_cycle_single_dsl() {
    return R"(# as two_cycle_both but only the cycle at vertex 2 is killed
algebra two_cycle_single
vertex 1 2
arrow a : 1 -> 2
arrow b : 2 -> 1
relation b*a
maxlen 3
)";
}

inline const char* triangle_dsl() {
    return R"(# oriented triangle; the cycle based at vertex 1 is zero
algebra triangle
vertex 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow g : 3 -> 1
relation a*b*g
maxlen 5
)";
}

inline const char* local_ring_xy_dsl() {
    return R"(# k[x,y]/(x^2, xy^2, y^3) as a one-vertex quiver with two loops
algebra local_ring_xy
vertex v
arrow y : v -> v
arrow x : v -> v
relation x*x
relation x*y*y
relation y*y*y
relation x*y - y*x
maxlen 4
)";
}

inline const char* local_ring_xyz_dsl() {
    return R"(# k[x,y,z]/(x^2, y^2, z^2, xy) as a one-vertex quiver with three loops
algebra local_ring_xyz
vertex v
arrow z : v -> v
arrow x : v -> v
arrow y : v -> v
relation x*x
relation y*y
relation z*z
relation x*y
relation x*y - y*x
relation x*z - z*x
relation y*z - z*y
maxlen 3
)";
}

inline const char* loop_arrow_dsl() {
    return R"(# loop at vertex 1 plus an arrow into it; radical square zero
algebra loop_arrow
vertex 1 2
arrow a : 1 -> 1
arrow b : 2 -> 1
relation a*a
relation b*a
maxlen 2
)";
}

inline const char* loop_dsl() {
    return R"(# k[x]/x^2 as a one-vertex quiver
algebra loop
vertex v
arrow x : v -> v
relation x*x
maxlen 2
)";
}

inline const char* field_dsl() {
    return R"(algebra field
vertex v
maxlen 2
)";
}

inline const char* linear_toupie_dsl() {
    return R"(# 1 -> 2 -> 3 with the radical square divided out
algebra linear_toupie
vertex 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
relation a*b
maxlen 2
)";
}

inline std::string trunc_poly_dsl(std::size_t n) {
    // k[x]/x^(n+1) for n >= 1; n = 0 is the bare field
    std::string rel = "x";
    for (std::size_t i = 0; i < n; ++i) rel += "*x";
    return "algebra trunc_poly_" + std::to_string(n) +
           "\nvertex v\narrow x : v -> v\nrelation " + rel + "\nmaxlen " +
           std::to_string(n + 1) + "\n";
}

inline QuotientAlgebra two_cycle_both() { return build_algebra(two_cycle_both_dsl()); }
inline QuotientAlgebra two_cycle_single() { return build_algebra(two_cycle_single_dsl()); }
inline QuotientAlgebra triangle() { return build_algebra(triangle_dsl()); }
inline QuotientAlgebra local_ring_xy() { return build_algebra(local_ring_xy_dsl()); }
inline QuotientAlgebra local_ring_xyz() { return build_algebra(local_ring_xyz_dsl()); }
inline QuotientAlgebra loop_arrow() { return build_algebra(loop_arrow_dsl()); }
inline QuotientAlgebra loop() { return build_algebra(loop_dsl()); }
inline QuotientAlgebra field() { return build_algebra(field_dsl()); }
inline QuotientAlgebra linear_toupie() { return build_algebra(linear_toupie_dsl()); }

// ---------------------------------------------------------------------------
// explicit coproduct families, given as coefficient matrices in the order the
// parameters are usually listed
// ---------------------------------------------------------------------------

using LabelTerm = std::tuple<Scalar, std::string, std::string>;

inline TensorElement tensor_from_labels(const Algebra& a, const std::vector<LabelTerm>& terms) {
    auto index = [&a](const std::string& label) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (a.label(i) == label) return i;
        throw Error("no basis label '" + label + "' in " + a.name());
    };
    Mat t(a.dim(), a.dim());
    for (const auto& [c, u, v] : terms) t(index(u), index(v)) += c;
    return TensorElement(a, std::move(t));
}

// Delta_kl(1) = sum_i E_(i,k) (x) E_(l,i), listed row-major in (k, l).
inline std::vector<TensorElement> matrix_family(const Algebra& mn, std::size_t n) {
    std::vector<TensorElement> out;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Mat t(mn.dim(), mn.dim());
            for (std::size_t i = 0; i < n; ++i) t(i * n + k, l * n + i) = 1;
            out.emplace_back(mn, std::move(t));
        }
    return out;
}

// The trace-form coproduct sum_i Delta_ii.
inline TensorElement matrix_frobenius_coproduct(const Algebra& mn, std::size_t n) {
    Mat t(mn.dim(), mn.dim());
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) t(i * n + k, k * n + i) += 1;
    return TensorElement(mn, std::move(t));
}

// Delta_k(1) = sum_{i+j = k mod n} g^i (x) g^j, k = 0..n-1.
inline std::vector<TensorElement> cyclic_family(const Algebra& cg, std::size_t n) {
    std::vector<TensorElement> out;
    for (std::size_t k = 0; k < n; ++k) {
        Mat t(n, n);
        for (std::size_t i = 0; i < n; ++i) t(i, (k + n - i) % n) = 1;
        out.emplace_back(cg, std::move(t));
    }
    return out;
}

// Delta_k(1) = sum_{i+j = n+k} x^i (x) x^j, k = 0..n.
inline std::vector<TensorElement> trunc_family(const Algebra& tp, std::size_t n) {
    std::vector<TensorElement> out;
    for (std::size_t k = 0; k <= n; ++k) {
        Mat t(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t rhs = n + k;
            if (rhs >= i && rhs - i <= n) t(i, rhs - i) = 1;
        }
        out.emplace_back(tp, std::move(t));
    }
    return out;
}

inline std::vector<TensorElement> two_cycle_both_family(const QuotientAlgebra& qa) {
    const Algebra& A = qa.algebra;
    return {
        tensor_from_labels(A, {{1, "e1", "b"}, {1, "b", "e2"}}),
        tensor_from_labels(A, {{1, "a", "e1"}, {1, "e2", "a"}}),
        tensor_from_labels(A, {{1, "a", "b"}}),
        tensor_from_labels(A, {{1, "b", "a"}}),
    };
}

// The trace that takes value 1 on every basis path, and its coproduct.
inline Vec two_cycle_both_counit(const QuotientAlgebra& qa) {
    return Vec(qa.algebra.dim(), Scalar(1));
}
inline TensorElement two_cycle_both_frobenius_coproduct(const QuotientAlgebra& qa) {
    return tensor_from_labels(qa.algebra, {{1, "e1", "b"},
                                           {1, "a", "e1"},
                                           {1, "e2", "a"},
                                           {1, "b", "e2"},
                                           {-1, "a", "b"},
                                           {-1, "b", "a"}});
}

inline std::vector<TensorElement> two_cycle_single_family(const QuotientAlgebra& qa) {
    const Algebra& A = qa.algebra;
    return {
        tensor_from_labels(A, {{1, "e1", "ab"}, {1, "ab", "e1"}, {1, "b", "a"}}),
        tensor_from_labels(A, {{1, "a", "b"}}),
        tensor_from_labels(A, {{1, "a", "ab"}}),
        tensor_from_labels(A, {{1, "ab", "b"}}),
        tensor_from_labels(A, {{1, "ab", "ab"}}),
    };
}

inline std::vector<TensorElement> local_ring_xy_family(const QuotientAlgebra& qa) {
    const Algebra& A = qa.algebra;
    return {
        tensor_from_labels(A, {{1, "x", "y^2"}, {1, "y", "xy"}, {1, "y^2", "x"}, {1, "xy", "y"}}),
        tensor_from_labels(A, {{1, "x", "xy"}, {1, "xy", "x"}}),
        tensor_from_labels(A, {{1, "y^2", "y^2"}}),
        tensor_from_labels(A, {{1, "y^2", "xy"}}),
        tensor_from_labels(A, {{1, "xy", "y^2"}}),
        tensor_from_labels(A, {{1, "xy", "xy"}}),
    };
}

inline std::vector<TensorElement> local_ring_xyz_family(const QuotientAlgebra& qa) {
    const Algebra& A = qa.algebra;
    return {
        tensor_from_labels(A, {{1, "x", "xz"}, {1, "xz", "x"}}),
        tensor_from_labels(A, {{1, "x", "yz"}, {1, "xz", "y"}}),
        tensor_from_labels(A, {{1, "y", "xz"}, {1, "yz", "x"}}),
        tensor_from_labels(A, {{1, "y", "yz"}, {1, "yz", "y"}}),
        tensor_from_labels(A, {{1, "xz", "xz"}}),
        tensor_from_labels(A, {{1, "xz", "yz"}}),
        tensor_from_labels(A, {{1, "yz", "xz"}}),
        tensor_from_labels(A, {{1, "yz", "yz"}}),
    };
}

// Two-parameter family a*(a (x) a) + a'*(a (x) b) on the loop-plus-arrow algebra.
inline std::vector<TensorElement> loop_arrow_family(const QuotientAlgebra& qa) {
    const Algebra& A = qa.algebra;
    return {
        tensor_from_labels(A, {{1, "a", "a"}}),
        tensor_from_labels(A, {{1, "a", "b"}}),
    };
}

}  // namespace nfalg::fixtures
