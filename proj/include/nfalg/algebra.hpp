#pragma once

#include "nfalg/errors.hpp"
#include "nfalg/matrix.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace nfalg {

class Element;

// Finite-dimensional associative unital algebra over the rationals, given by
// structure constants. Immutable after construction; handles share the data,
// so copies are cheap and elements can point back at their algebra safely.
class Algebra {
public:
    Algebra() = default;

    // Verifies associativity on all basis triples and the two unit laws.
    static Algebra create(std::vector<std::string> labels,
                          std::vector<Vec> table,  // table[i*n+j] = coords of e_i * e_j
                          Vec one,
                          std::string name = "") {
        std::size_t n = labels.size();
        if (table.size() != n * n || one.size() != n)
            throw Error("structure table shape mismatch");
        for (const auto& v : table)
            if (v.size() != n) throw Error("structure table shape mismatch");

        auto data = std::make_shared<Data>();
        data->name = std::move(name);
        data->labels = std::move(labels);
        data->table = std::move(table);
        data->one = std::move(one);
        Algebra a;
        a.data_ = std::move(data);
        a.check_axioms();
        return a;
    }

    bool valid() const { return static_cast<bool>(data_); }
    std::size_t dim() const { return data_->labels.size(); }
    const std::string& name() const { return data_->name; }
    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    const Vec& one_coords() const { return data_->one; }
    const Vec& table(std::size_t i, std::size_t j) const { return data_->table[i * dim() + j]; }

    bool same(const Algebra& o) const { return data_ == o.data_; }

    // Structural equality: identical labels, table and unit.
    bool equal_structure(const Algebra& o) const {
        return dim() == o.dim() && data_->table == o.data_->table && data_->one == o.data_->one;
    }

    Vec mul_coords(const Vec& x, const Vec& y) const {
        std::size_t n = dim();
        Vec z = vec_zero(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                Scalar c = x[i] * y[j];
                vec_axpy(z, c, table(i, j));
            }
        }
        return z;
    }

    // L_x: coordinates of x*v as L_x * coords(v).
    Mat left_mult(const Vec& x) const {
        std::size_t n = dim();
        Mat m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec col = vec_zero(n);
            for (std::size_t i = 0; i < n; ++i)
                if (!x[i].is_zero()) vec_axpy(col, x[i], table(i, j));
            for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
        }
        return m;
    }

    // R_x: coordinates of v*x as R_x * coords(v).
    Mat right_mult(const Vec& x) const {
        std::size_t n = dim();
        Mat m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec col = vec_zero(n);
            for (std::size_t i = 0; i < n; ++i)
                if (!x[i].is_zero()) vec_axpy(col, x[i], table(j, i));
            for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
        }
        return m;
    }

    Element element(Vec coords) const;
    Element basis_element(std::size_t i) const;
    Element zero() const;
    Element one() const;

private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
        std::vector<Vec> table;
        Vec one;
    };
    std::shared_ptr<const Data> data_;

    void check_axioms() const {
        std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec& ij = table(i, j);
                for (std::size_t k = 0; k < n; ++k) {
                    Vec left = vec_zero(n);   // (e_i e_j) e_k
                    for (std::size_t l = 0; l < n; ++l)
                        if (!ij[l].is_zero()) vec_axpy(left, ij[l], table(l, k));
                    Vec right = vec_zero(n);  // e_i (e_j e_k)
                    const Vec& jk = table(j, k);
                    for (std::size_t l = 0; l < n; ++l)
                        if (!jk[l].is_zero()) vec_axpy(right, jk[l], table(i, l));
                    if (left != right)
                        throw NonAssociative("associativity fails on basis triple (" +
                                             label(i) + ", " + label(j) + ", " + label(k) + ")");
                }
            }
        for (std::size_t i = 0; i < n; ++i) {
            Vec ei = vec_zero(n);
            ei[i] = 1;
            if (mul_coords(data_->one, ei) != ei || mul_coords(ei, data_->one) != ei)
                throw BadUnit("unit law fails on basis element " + label(i));
        }
    }
};

class Element {
public:
    Element() = default;
    Element(Algebra alg, Vec coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
        if (coords_.size() != alg_.dim()) throw Error("element coordinate length mismatch");
    }

    const Algebra& algebra() const { return alg_; }
    const Vec& coords() const { return coords_; }
    bool is_zero() const { return vec_is_zero(coords_); }

    friend Element operator*(const Element& x, const Element& y) {
        x.require_same(y);
        return Element(x.alg_, x.alg_.mul_coords(x.coords_, y.coords_));
    }
    friend Element operator+(const Element& x, const Element& y) {
        x.require_same(y);
        return Element(x.alg_, vec_add(x.coords_, y.coords_));
    }
    friend Element operator-(const Element& x, const Element& y) {
        x.require_same(y);
        Vec c = x.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coords_[i];
        return Element(x.alg_, std::move(c));
    }
    friend Element operator*(const Scalar& c, const Element& x) {
        return Element(x.alg_, vec_scaled(x.coords_, c));
    }
    friend bool operator==(const Element& x, const Element& y) {
        return x.alg_.same(y.alg_) && x.coords_ == y.coords_;
    }

    Element pow(std::size_t k) const {
        Element acc = alg_.one();
        for (std::size_t i = 0; i < k; ++i) acc = acc * (*this);
        return acc;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i].is_zero()) continue;
            Scalar c = coords_[i];
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (c != 1) out += scalar_to_string(c) + "*";
            out += alg_.label(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    Algebra alg_;
    Vec coords_;

    void require_same(const Element& o) const {
        if (!alg_.same(o.alg_)) throw AlgebraMismatch("elements of different algebras");
    }
};

inline Element Algebra::element(Vec coords) const { return Element(*this, std::move(coords)); }
inline Element Algebra::basis_element(std::size_t i) const {
    Vec v = vec_zero(dim());
    v[i] = 1;
    return Element(*this, std::move(v));
}
inline Element Algebra::zero() const { return Element(*this, vec_zero(dim())); }
inline Element Algebra::one() const { return Element(*this, data_->one); }

// Element of A (x) A stored as an n x n coefficient matrix:
// sum_{ij} coeff(i,j) e_i (x) e_j.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(Algebra alg, Mat coeff) : alg_(std::move(alg)), coeff_(std::move(coeff)) {
        if (coeff_.rows() != alg_.dim() || coeff_.cols() != alg_.dim())
            throw Error("tensor coefficient matrix must be dim x dim");
    }

    const Algebra& algebra() const { return alg_; }
    const Mat& coeff() const { return coeff_; }

    // m(T) = sum_{ij} T_ij e_i e_j.
    Element multiply_out() const {
        std::size_t n = alg_.dim();
        Vec out = vec_zero(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!coeff_(i, j).is_zero()) vec_axpy(out, coeff_(i, j), alg_.table(i, j));
        return Element(alg_, std::move(out));
    }

    TensorElement swap_legs() const { return TensorElement(alg_, coeff_.transpose()); }
    bool is_symmetric() const { return coeff_ == coeff_.transpose(); }

    // (a (x) 1) T = T (1 (x) a) for every basis a; the bimodule condition.
    bool is_bimodule() const {
        std::size_t n = alg_.dim();
        for (std::size_t b = 0; b < n; ++b) {
            Vec eb = vec_zero(n);
            eb[b] = 1;
            Mat lhs = alg_.left_mult(eb) * coeff_;
            Mat rhs = coeff_ * alg_.right_mult(eb).transpose();
            if (!(lhs == rhs)) return false;
        }
        return true;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.alg_.same(b.alg_) && a.coeff_ == b.coeff_;
    }
    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        return TensorElement(a.alg_, a.coeff_ + b.coeff_);
    }
    friend TensorElement operator*(const Scalar& c, const TensorElement& t) {
        return TensorElement(t.alg_, c * t.coeff_);
    }

private:
    Algebra alg_;
    Mat coeff_;
};

// Linear subspace of an algebra in canonical RREF basis form, so equality of
// subspaces is equality of basis matrices.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Algebra alg) : alg_(std::move(alg)), span_(alg_.dim()) {}

    static Subspace from_vectors(Algebra alg, const std::vector<Vec>& vectors) {
        Subspace s(std::move(alg));
        for (const auto& v : vectors) s.span_.insert(v);
        return s;
    }

    static Subspace whole(const Algebra& alg) {
        Subspace s(alg);
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            Vec v = vec_zero(alg.dim());
            v[i] = 1;
            s.span_.insert(std::move(v));
        }
        return s;
    }

    const Algebra& algebra() const { return alg_; }
    std::size_t dim() const { return span_.rank(); }
    const std::vector<Vec>& basis() const { return span_.rows(); }

    bool contains(const Vec& v) const { return span_.contains(v); }
    bool contains(const Element& x) const { return contains(x.coords()); }
    bool contains_subspace(const Subspace& o) const {
        for (const auto& r : o.basis())
            if (!contains(r)) return false;
        return true;
    }

    std::vector<Element> basis_elements() const {
        std::vector<Element> out;
        for (const auto& r : basis()) out.push_back(alg_.element(r));
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.alg_.same(b.alg_) && a.basis() == b.basis();
    }

private:
    Algebra alg_;
    RowSpan span_{0};
};

inline std::optional<Element> try_inverse(const Element& x) {
    Mat lx = x.algebra().left_mult(x.coords());
    auto inv = inverse(lx);
    if (!inv) return std::nullopt;
    Element y = x.algebra().element(*inv * x.algebra().one_coords());
    // a left inverse is two-sided when L_x is bijective
    if (!(y * x == x.algebra().one()) || !(x * y == x.algebra().one()))
        throw Error("inverse verification failed");
    return y;
}

inline bool is_unit(const Element& x) { return try_inverse(x).has_value(); }

// Z(A): nullspace of the stacked maps L_{e_i} - R_{e_i}.
inline Subspace center(const Algebra& a) {
    std::size_t n = a.dim();
    Mat stacked(n * n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Vec eb = vec_zero(n);
        eb[b] = 1;
        Mat d = a.left_mult(eb) - a.right_mult(eb);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(b * n + i, j) = d(i, j);
    }
    return Subspace::from_vectors(a, nullspace(stacked));
}

inline bool is_central(const Element& x) {
    const Algebra& a = x.algebra();
    return a.left_mult(x.coords()) == a.right_mult(x.coords());
}

// Span of all k-fold products of basis elements of s.
inline Subspace subspace_power(const Subspace& s, std::size_t k) {
    const Algebra& a = s.algebra();
    Subspace acc = s;
    for (std::size_t step = 1; step < k; ++step) {
        std::vector<Vec> products;
        for (const auto& p : acc.basis())
            for (const auto& q : s.basis()) products.push_back(a.mul_coords(p, q));
        acc = Subspace::from_vectors(a, products);
    }
    return acc;
}

// Jacobson radical over a characteristic-zero field: the kernel of the trace
// form (x, y) -> trace(L_x L_y) of the regular representation. Nilpotency of
// the result is verified.
inline Subspace radical(const Algebra& a) {
    std::size_t n = a.dim();
    std::vector<Mat> lefts;
    lefts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = vec_zero(n);
        ei[i] = 1;
        lefts.push_back(a.left_mult(ei));
    }
    Mat gram(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Scalar tr = 0;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (!lefts[j](p, q).is_zero() && !lefts[k](q, p).is_zero())
                        tr += lefts[j](p, q) * lefts[k](q, p);
            gram(j, k) = tr;
        }
    Subspace rad = Subspace::from_vectors(a, nullspace(gram));
    Subspace power = rad;
    std::size_t steps = 0;
    while (power.dim() > 0 && steps <= n + 1) {
        power = subspace_power(power, 2);
        ++steps;
    }
    if (power.dim() > 0) throw Error("radical candidate is not nilpotent");
    return rad;
}

// soc(A_A) = {a : a J = 0}.
inline Subspace socle_right(const Algebra& a, const Subspace& rad) {
    std::size_t n = a.dim();
    const auto& gens = rad.basis();
    if (gens.empty()) return Subspace::whole(a);
    Mat stacked(gens.size() * n, n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat r = a.right_mult(gens[g]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(g * n + i, j) = r(i, j);
    }
    return Subspace::from_vectors(a, nullspace(stacked));
}

// soc(_A A) = {a : J a = 0}.
inline Subspace socle_left(const Algebra& a, const Subspace& rad) {
    std::size_t n = a.dim();
    const auto& gens = rad.basis();
    if (gens.empty()) return Subspace::whole(a);
    Mat stacked(gens.size() * n, n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat l = a.left_mult(gens[g]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(g * n + i, j) = l(i, j);
    }
    return Subspace::from_vectors(a, nullspace(stacked));
}

inline Subspace socle_right(const Algebra& a) { return socle_right(a, radical(a)); }
inline Subspace socle_left(const Algebra& a) { return socle_left(a, radical(a)); }

// Two-sided ideal generated by x: span of e_i x e_j over all basis pairs.
inline Subspace ideal_generated(const Element& x) {
    const Algebra& a = x.algebra();
    std::size_t n = a.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = vec_zero(n);
        ei[i] = 1;
        Vec left = a.mul_coords(ei, x.coords());
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = vec_zero(n);
            ej[j] = 1;
            gens.push_back(a.mul_coords(left, ej));
        }
    }
    return Subspace::from_vectors(a, gens);
}

inline Subspace right_ideal(const Element& x) {
    const Algebra& a = x.algebra();
    std::size_t n = a.dim();
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej = vec_zero(n);
        ej[j] = 1;
        gens.push_back(a.mul_coords(x.coords(), ej));
    }
    return Subspace::from_vectors(a, gens);
}

inline Subspace subspace_intersection(const Subspace& s1, const Subspace& s2) {
    const Algebra& a = s1.algebra();
    std::size_t n = a.dim();
    std::size_t p = s1.dim(), q = s2.dim();
    if (p == 0 || q == 0) return Subspace(a);
    Mat m(n, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = s1.basis()[i][r];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, p + j) = -s2.basis()[j][r];
    std::vector<Vec> vectors;
    for (const auto& k : nullspace(m)) {
        Vec w = vec_zero(n);
        for (std::size_t i = 0; i < p; ++i) vec_axpy(w, k[i], s1.basis()[i]);
        vectors.push_back(std::move(w));
    }
    return Subspace::from_vectors(a, vectors);
}

// A1 x A2 with block structure constants; the unit is (1, 1).
inline Algebra direct_product(const Algebra& a1, const Algebra& a2, std::string name = "") {
    std::size_t n1 = a1.dim(), n2 = a2.dim(), n = n1 + n2;
    std::vector<std::string> labels;
    for (const auto& l : a1.labels()) labels.push_back("(" + l + ",0)");
    for (const auto& l : a2.labels()) labels.push_back("(0," + l + ")");
    std::vector<Vec> table(n * n, vec_zero(n));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) table[i * n + j][k] = a1.table(i, j)[k];
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k) table[(n1 + i) * n + (n1 + j)][n1 + k] = a2.table(i, j)[k];
    Vec one = vec_zero(n);
    for (std::size_t k = 0; k < n1; ++k) one[k] = a1.one_coords()[k];
    for (std::size_t k = 0; k < n2; ++k) one[n1 + k] = a2.one_coords()[k];
    if (name.empty()) name = a1.name() + "x" + a2.name();
    return Algebra::create(std::move(labels), std::move(table), std::move(one), std::move(name));
}

// A1 (x) A2 with Kronecker structure constants under (i,j) -> i*dim(A2)+j.
inline Algebra tensor_product(const Algebra& a1, const Algebra& a2, std::string name = "") {
    std::size_t n1 = a1.dim(), n2 = a2.dim(), n = n1 * n2;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) labels.push_back(a1.label(i) + "(x)" + a2.label(j));
    std::vector<Vec> table(n * n, vec_zero(n));
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t j1 = 0; j1 < n2; ++j1)
            for (std::size_t i2 = 0; i2 < n1; ++i2)
                for (std::size_t j2 = 0; j2 < n2; ++j2) {
                    const Vec& u = a1.table(i1, i2);
                    const Vec& v = a2.table(j1, j2);
                    Vec& out = table[(i1 * n2 + j1) * n + (i2 * n2 + j2)];
                    for (std::size_t k1 = 0; k1 < n1; ++k1) {
                        if (u[k1].is_zero()) continue;
                        for (std::size_t k2 = 0; k2 < n2; ++k2)
                            if (!v[k2].is_zero()) out[k1 * n2 + k2] = u[k1] * v[k2];
                    }
                }
    Vec one = vec_zero(n);
    for (std::size_t k1 = 0; k1 < n1; ++k1)
        for (std::size_t k2 = 0; k2 < n2; ++k2)
            one[k1 * n2 + k2] = a1.one_coords()[k1] * a2.one_coords()[k2];
    if (name.empty()) name = a1.name() + "(x)" + a2.name();
    return Algebra::create(std::move(labels), std::move(table), std::move(one), std::move(name));
}

// x in A1 viewed inside A1 x A2 (side 0) or A2 inside A1 x A2 (side 1).
inline Element product_embed(const Algebra& prod, const Element& x, int side, std::size_t n1) {
    Vec v = vec_zero(prod.dim());
    if (side == 0)
        for (std::size_t i = 0; i < x.coords().size(); ++i) v[i] = x.coords()[i];
    else
        for (std::size_t i = 0; i < x.coords().size(); ++i) v[n1 + i] = x.coords()[i];
    return prod.element(std::move(v));
}

// x (x) y inside A1 (x) A2.
inline Element tensor_pure(const Algebra& tens, const Element& x, const Element& y) {
    std::size_t n2 = y.coords().size();
    Vec v = vec_zero(tens.dim());
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (x.coords()[i].is_zero()) continue;
        for (std::size_t j = 0; j < n2; ++j)
            if (!y.coords()[j].is_zero()) v[i * n2 + j] = x.coords()[i] * y.coords()[j];
    }
    return tens.element(std::move(v));
}

}  // namespace nfalg
