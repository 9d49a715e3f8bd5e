#pragma once

#include "nfalg/algebra.hpp"
#include "nfalg/presentation.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nfalg {

// A nearly Frobenius coproduct, identified with its value at 1. A bimodule
// map out of a unital algebra is determined by Delta(1), and the constraint
// on Delta(1) is exactly (a (x) 1) Delta(1) = Delta(1) (1 (x) a) for all a.
class Coproduct {
public:
    static Coproduct checked(TensorElement t) {
        if (!t.is_bimodule())
            throw Error("tensor element violates the bimodule condition");
        return Coproduct(std::move(t));
    }

    const Algebra& algebra() const { return t1_.algebra(); }
    const Mat& coeff() const { return t1_.coeff(); }
    const TensorElement& tensor() const { return t1_; }

    // Delta(x) = (x (x) 1) Delta(1), as a coefficient matrix.
    Mat apply(const Element& x) const {
        return algebra().left_mult(x.coords()) * t1_.coeff();
    }

    friend bool operator==(const Coproduct& a, const Coproduct& b) {
        return a.t1_ == b.t1_;
    }

private:
    explicit Coproduct(TensorElement t) : t1_(std::move(t)) {}
    TensorElement t1_;
};

// omega = m(Delta(1)); always central.
inline Element handle(const Coproduct& c) { return c.tensor().multiply_out(); }

struct FrobeniusSpace {
    Algebra algebra;
    std::vector<Coproduct> basis;

    std::size_t dim() const { return basis.size(); }
};

// Basis of all nearly Frobenius coproducts: the nullspace of the stacked
// system L_b T - T R_b^t = 0 over the n^2 unknown coefficients, one block
// per basis element b. Basis vectors are ordered by their first nonzero
// coefficient so parameter numbering follows the matrix entries row by row.
inline FrobeniusSpace frobenius_space(const Algebra& a) {
    std::size_t n = a.dim();
    Mat sys(n * n * n, n * n);
    for (std::size_t b = 0; b < n; ++b) {
        Vec eb = vec_zero(n);
        eb[b] = 1;
        Mat l = a.left_mult(eb);
        Mat r = a.right_mult(eb);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = (b * n + k) * n + j;
                for (std::size_t i = 0; i < n; ++i)
                    if (!l(k, i).is_zero()) sys(row, i * n + j) += l(k, i);
                for (std::size_t m = 0; m < n; ++m)
                    if (!r(j, m).is_zero()) sys(row, k * n + m) -= r(j, m);
            }
    }
    std::vector<Vec> vectors = nullspace(sys);
    std::stable_sort(vectors.begin(), vectors.end(), [](const Vec& x, const Vec& y) {
        auto lead = [](const Vec& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) return i;
            return v.size();
        };
        return lead(x) < lead(y);
    });
    FrobeniusSpace out{a, {}};
    for (auto& v : vectors)
        out.basis.push_back(Coproduct::checked(TensorElement(a, Mat::from_flat(n, n, std::move(v)))));
    return out;
}

inline Coproduct coproduct_combination(const FrobeniusSpace& e, const Vec& coeffs) {
    std::size_t n = e.algebra.dim();
    Mat acc(n, n);
    for (std::size_t k = 0; k < e.basis.size(); ++k)
        if (!coeffs[k].is_zero()) acc = acc + coeffs[k] * e.basis[k].coeff();
    return Coproduct::checked(TensorElement(e.algebra, std::move(acc)));
}

// u * Delta for central u: x -> (x (x) u) Delta(1); at 1 this multiplies the
// second leg by u, i.e. T -> T L_u^t.
inline Coproduct star_action(const Element& u, const Coproduct& c) {
    if (!u.algebra().same(c.algebra())) throw AlgebraMismatch("central element of a different algebra");
    if (!is_central(u)) throw NotCentral("star action requires a central element");
    Mat t = c.coeff() * c.algebra().left_mult(u.coords()).transpose();
    return Coproduct::checked(TensorElement(c.algebra(), std::move(t)));
}

// {T in E : T = T^t}, solved inside the span of the given basis.
inline FrobeniusSpace symmetric_subspace(const FrobeniusSpace& e) {
    std::size_t n = e.algebra.dim();
    std::size_t k = e.basis.size();
    FrobeniusSpace out{e.algebra, {}};
    if (k == 0) return out;
    Mat sys(n * n, k);
    for (std::size_t b = 0; b < k; ++b) {
        Mat d = e.basis[b].coeff() - e.basis[b].coeff().transpose();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sys(i * n + j, b) = d(i, j);
    }
    for (const auto& combo : nullspace(sys)) {
        Coproduct c = coproduct_combination(e, combo);
        if (!c.tensor().is_symmetric()) throw Error("symmetric subspace member is not symmetric");
        out.basis.push_back(std::move(c));
    }
    return out;
}

// Solves the affine system {bimodule condition, m(T) = 1}. A solution is a
// separability element, and its existence is equivalent to some nearly
// Frobenius coproduct having a unit handle.
inline std::optional<TensorElement> separability_element(const Algebra& a) {
    std::size_t n = a.dim();
    Mat sys(n * n * n + n, n * n);
    Vec rhs = vec_zero(n * n * n + n);
    for (std::size_t b = 0; b < n; ++b) {
        Vec eb = vec_zero(n);
        eb[b] = 1;
        Mat l = a.left_mult(eb);
        Mat r = a.right_mult(eb);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t row = (b * n + k) * n + j;
                for (std::size_t i = 0; i < n; ++i)
                    if (!l(k, i).is_zero()) sys(row, i * n + j) += l(k, i);
                for (std::size_t m = 0; m < n; ++m)
                    if (!r(j, m).is_zero()) sys(row, k * n + m) -= r(j, m);
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& prod = a.table(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!prod[k].is_zero()) sys(n * n * n + k, i * n + j) += prod[k];
        }
    for (std::size_t k = 0; k < n; ++k) rhs[n * n * n + k] = a.one_coords()[k];
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    TensorElement t(a, Mat::from_flat(n, n, std::move(*sol)));
    if (!t.is_bimodule() || !(t.multiply_out() == a.one()))
        throw Error("separability solution fails verification");
    return t;
}

inline bool is_separable(const Algebra& a) { return separability_element(a).has_value(); }

// Linear functional on an algebra, candidate trace.
struct Counit {
    Algebra algebra;
    Vec eps;

    Scalar value(const Vec& coords) const { return vec_dot(eps, coords); }
    Scalar value(const Element& x) const { return value(x.coords()); }
};

inline Mat gram_matrix(const Counit& c) {
    std::size_t n = c.algebra.dim();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = c.value(c.algebra.table(i, j));
    return g;
}

// eps(ab) = eps(ba) on all basis pairs.
inline bool is_symmetric_counit(const Counit& c) {
    Mat g = gram_matrix(c);
    return g == g.transpose();
}

// Dual basis e^j = sum_k (G^-1)_kj e_k, so eps(e_i e^j) = delta_ij; the
// coproduct Delta(1) = sum_j e^j (x) e_j has coefficient matrix G^-1.
inline Coproduct frobenius_from_counit(const Counit& c) {
    auto ginv = inverse(gram_matrix(c));
    if (!ginv) throw DegenerateForm("counit has a singular Gram matrix");
    Coproduct cp = Coproduct::checked(TensorElement(c.algebra, *ginv));
    // (eps (x) id) Delta(1) = 1 = (id (x) eps) Delta(1)
    std::size_t n = c.algebra.dim();
    Vec left = vec_zero(n), right = vec_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& t = cp.coeff()(i, j);
            if (t.is_zero()) continue;
            left[j] += t * c.eps[i];
            right[i] += t * c.eps[j];
        }
    if (left != c.algebra.one_coords() || right != c.algebra.one_coords())
        throw Error("counit identity fails for the dual-basis coproduct");
    return cp;
}

struct FrobeniusVerdict {
    enum class Status { frobenius, not_frobenius, inconclusive };
    Status status = Status::inconclusive;
    std::optional<Counit> counit;        // witness trace
    std::optional<Coproduct> coproduct;  // witness coproduct
    std::optional<Subspace> certificate; // span of first-leg contractions, missing 1
    std::size_t trials_used = 0;
};

struct FrobeniusCheckOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    long coeff_bound = 10;
};

// Three stages: a sound certificate (if 1 is not in the span of all
// first-leg contractions of the coproduct space, no coproduct can be
// counital), then a randomized search for a nondegenerate trace, else
// inconclusive.
inline FrobeniusVerdict frobenius_check(const Algebra& a, const FrobeniusSpace& e,
                                        const FrobeniusCheckOptions& opts = {}) {
    std::size_t n = a.dim();
    FrobeniusVerdict v;

    // (phi_k (x) id) T is the k-th row of T
    Subspace contractions(a);
    {
        std::vector<Vec> rows;
        for (const auto& c : e.basis)
            for (std::size_t k = 0; k < n; ++k) rows.push_back(c.coeff().row(k));
        contractions = Subspace::from_vectors(a, rows);
    }
    if (!contractions.contains(a.one_coords())) {
        v.status = FrobeniusVerdict::Status::not_frobenius;
        v.certificate = contractions;
        return v;
    }

    std::mt19937_64 rng(opts.seed);
    std::uint64_t width = static_cast<std::uint64_t>(2 * opts.coeff_bound + 1);
    for (std::size_t t = 0; t < opts.trials; ++t) {
        Vec eps(n);
        for (std::size_t i = 0; i < n; ++i)
            eps[i] = Scalar(static_cast<long>(rng() % width) - opts.coeff_bound);
        Counit cand{a, std::move(eps)};
        auto ginv = inverse(gram_matrix(cand));
        if (!ginv) continue;
        v.status = FrobeniusVerdict::Status::frobenius;
        v.counit = cand;
        v.coproduct = frobenius_from_counit(cand);
        v.trials_used = t + 1;
        return v;
    }
    v.status = FrobeniusVerdict::Status::inconclusive;
    v.trials_used = opts.trials;
    return v;
}

inline FrobeniusVerdict frobenius_check(const Algebra& a, const FrobeniusCheckOptions& opts = {}) {
    return frobenius_check(a, frobenius_space(a), opts);
}

// Smallest k in 1..dim+1 with omega^k in both socles.
inline std::optional<std::size_t> handle_socle_power(const Coproduct& c) {
    const Algebra& a = c.algebra();
    Subspace rad = radical(a);
    Subspace soc = subspace_intersection(socle_right(a, rad), socle_left(a, rad));
    Element omega = handle(c);
    Element power = a.one();
    for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
        power = power * omega;
        if (soc.contains(power)) return k;
    }
    return std::nullopt;
}

// Every handle element of a connected non-single-vertex bound quiver algebra
// lies in the radical; linearity extends the per-basis check to the space.
inline bool handle_in_radical(const QuotientAlgebra& qa, const FrobeniusSpace& e) {
    QuiverFlags f = classify(qa.presentation);
    if (!f.connected || f.single_vertex)
        throw PreconditionUnmet("requires a connected quiver with more than one vertex");
    Subspace j = radical(qa.algebra);
    for (const auto& c : e.basis)
        if (!j.contains(handle(c))) return false;
    return true;
}

inline bool all_handles_zero(const FrobeniusSpace& e) {
    for (const auto& c : e.basis)
        if (!handle(c).is_zero()) return false;
    return true;
}

// Delta(1) of the product algebra: the block-diagonal embedding of the
// factor coproducts.
inline Coproduct product_coproduct(const Coproduct& c1, const Coproduct& c2,
                                   const Algebra& prod) {
    std::size_t n1 = c1.algebra().dim(), n2 = c2.algebra().dim();
    if (prod.dim() != n1 + n2) throw Error("product algebra dimension mismatch");
    Mat t(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) t(i, j) = c1.coeff()(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) t(n1 + i, n1 + j) = c2.coeff()(i, j);
    return Coproduct::checked(TensorElement(prod, std::move(t)));
}

// Delta(1) of the tensor algebra: middle-two-legs swap of the factor
// coproducts, i.e. the Kronecker product of the coefficient matrices.
inline Coproduct tensor_coproduct(const Coproduct& c1, const Coproduct& c2,
                                  const Algebra& tens) {
    std::size_t n1 = c1.algebra().dim(), n2 = c2.algebra().dim();
    if (tens.dim() != n1 * n2) throw Error("tensor algebra dimension mismatch");
    return Coproduct::checked(TensorElement(tens, Mat::kron(c1.coeff(), c2.coeff())));
}

// Handles of every basis coproduct plus the rendered linear combination over
// the family parameters a1..ak, grouped by basis label.
struct SymbolicHandle {
    std::vector<Element> per_basis;
    std::string rendered;
};

inline SymbolicHandle symbolic_handles(const FrobeniusSpace& e) {
    SymbolicHandle out;
    for (const auto& c : e.basis) out.per_basis.push_back(handle(c));
    const Algebra& a = e.algebra;
    std::string s;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::string combo;
        for (std::size_t k = 0; k < out.per_basis.size(); ++k) {
            const Scalar& coeff = out.per_basis[k].coords()[i];
            if (coeff.is_zero()) continue;
            Scalar c = coeff;
            bool neg = c < 0;
            if (neg) c = -c;
            combo += combo.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
            if (c != 1) {
                std::string cs = scalar_to_string(c);
                combo += cs.find('/') == std::string::npos ? cs : "(" + cs + ")";
            }
            combo += "a" + std::to_string(k + 1);
        }
        if (combo.empty()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + combo + ")*" + a.label(i);
    }
    out.rendered = s.empty() ? "0" : s;
    return out;
}

}  // namespace nfalg
