#pragma once

#include "nfalg/algebra.hpp"
#include "nfalg/errors.hpp"
#include "nfalg/fixtures.hpp"
#include "nfalg/frobenius.hpp"
#include "nfalg/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nfalg {

// Linear map between algebras given on the source basis; verified unital and
// multiplicative at construction.
struct AlgebraMorphism {
    Algebra source, target;
    Mat matrix;  // dim(target) x dim(source), columns are basis images
    bool surjective = false;

    Vec apply_coords(const Vec& x) const { return matrix * x; }
    Element apply(const Element& x) const { return target.element(matrix * x.coords()); }
    Vec image_of_basis(std::size_t i) const {
        Vec v(target.dim());
        for (std::size_t r = 0; r < target.dim(); ++r) v[r] = matrix(r, i);
        return v;
    }
};

inline AlgebraMorphism make_morphism(Algebra source, Algebra target,
                                     const std::vector<Vec>& images) {
    std::size_t na = source.dim(), nb = target.dim();
    if (images.size() != na) throw Error("need one image per source basis element");
    Mat m(nb, na);
    for (std::size_t j = 0; j < na; ++j) {
        if (images[j].size() != nb) throw Error("image coordinate length mismatch");
        for (std::size_t i = 0; i < nb; ++i) m(i, j) = images[j][i];
    }
    if (!(m * source.one_coords() == target.one_coords()))
        throw NotUnital("the unit does not map to the unit");
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            Vec lhs = m * source.table(i, j);
            Vec rhs = target.mul_coords(images[i], images[j]);
            if (lhs != rhs)
                throw NotMultiplicative("images of (" + source.label(i) + ", " +
                                        source.label(j) + ") do not multiply");
        }
    AlgebraMorphism phi{std::move(source), std::move(target), std::move(m), false};
    phi.surjective = rref(phi.matrix).rank == nb;
    return phi;
}

// Morphism given on presentation generators: vertex idempotent images and
// arrow images, extended multiplicatively along basis paths. Every relation
// must map to zero before the basis-level checks run.
inline AlgebraMorphism make_morphism_on_generators(
    const QuotientAlgebra& src, const Algebra& target,
    const std::map<std::string, Vec>& vertex_images,
    const std::map<std::string, Vec>& arrow_images) {
    const Quiver& q = src.presentation.quiver;
    auto vertex_image = [&](std::size_t v) -> const Vec& {
        auto it = vertex_images.find(q.vertices[v]);
        if (it == vertex_images.end())
            throw Error("missing image for vertex '" + q.vertices[v] + "'");
        return it->second;
    };
    auto arrow_image = [&](std::size_t a) -> const Vec& {
        auto it = arrow_images.find(q.arrows[a].name);
        if (it == arrow_images.end())
            throw Error("missing image for arrow '" + q.arrows[a].name + "'");
        return it->second;
    };
    auto path_image = [&](const Path& p) {
        if (p.arrows.empty()) return vertex_image(p.source);
        Vec acc = arrow_image(p.arrows[0]);
        for (std::size_t k = 1; k < p.arrows.size(); ++k)
            acc = target.mul_coords(acc, arrow_image(p.arrows[k]));
        return acc;
    };
    for (const auto& rel : src.presentation.relations) {
        Vec acc = vec_zero(target.dim());
        for (const auto& [c, p] : rel.terms) vec_axpy(acc, c, path_image(p));
        if (!vec_is_zero(acc))
            throw RelationNotKilled("relation at line " + std::to_string(rel.line) +
                                    " does not map to zero");
    }
    std::vector<Vec> images;
    for (const auto& p : src.basis_paths) images.push_back(path_image(p));
    return make_morphism(src.algebra, target, images);
}

// ---------------------------------------------------------------------------
// morphism file format
//
//   morphism NAME : SRC -> DST
//   vertex v -> ELEMENT_EXPR
//   arrow a -> ELEMENT_EXPR
//
// ELEMENT_EXPR is a rational-linear combination of target basis labels, or 0.
// ---------------------------------------------------------------------------

struct MorphismSpec {
    std::string name, source_name, target_name;
    std::vector<std::pair<std::string, std::string>> vertex_exprs;
    std::vector<std::pair<std::string, std::string>> arrow_exprs;
};

// Parses "2*x + 1/2*xy - y" against the algebra's basis labels. A leading
// factor is a coefficient exactly when it parses as a rational; labels may
// themselves contain '*', '^' and parentheses.
inline Vec parse_element_expr(const Algebra& a, const std::string& expr,
                              std::size_t line_no = 0) {
    auto label_index = [&a](const std::string& label) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (a.label(i) == label) return i;
        return std::nullopt;
    };
    Vec out = vec_zero(a.dim());
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < expr.size() && (expr[pos] == ' ' || expr[pos] == '\t')) ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= expr.size()) break;
        Scalar sign = 1;
        if (expr[pos] == '+' || expr[pos] == '-') {
            sign = expr[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in element expression", line_no, pos + 1);
        }
        skip_ws();
        std::size_t start = pos;
        while (pos < expr.size() && expr[pos] != '+' && expr[pos] != '-' && expr[pos] != ' ' &&
               expr[pos] != '\t')
            ++pos;
        std::string term = expr.substr(start, pos - start);
        if (term.empty()) throw ParseError("empty term in element expression", line_no, pos + 1);
        first = false;
        if (term == "0") continue;
        Scalar coeff = sign;
        std::string label = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            std::string head = term.substr(0, star);
            if (looks_like_rational(head)) {
                coeff *= scalar_from_string(head);
                label = term.substr(star + 1);
            }
        }
        auto idx = label_index(label);
        if (!idx) {
            if (looks_like_rational(label))
                throw ParseError("scalar term '" + term + "' is not an element", line_no,
                                 start + 1);
            throw ParseError("unknown basis label '" + label + "' in " + a.name(), line_no,
                             start + 1);
        }
        out[*idx] += coeff;
    }
    return out;
}

inline MorphismSpec parse_morphism(const std::string& text) {
    MorphismSpec spec;
    bool saw_header = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
            raw.pop_back();
        detail::LineScanner sc{raw, line_no};
        if (sc.done()) continue;
        std::string keyword = sc.token();
        if (keyword == "morphism") {
            spec.name = sc.token();
            if (!sc.consume(':')) throw ParseError("expected ':'", line_no, sc.col());
            spec.source_name = sc.token();
            if (!sc.consume_arrow_sym()) throw ParseError("expected '->'", line_no, sc.col());
            spec.target_name = sc.token();
            saw_header = true;
        } else if (keyword == "vertex" || keyword == "arrow") {
            std::string name = sc.token();
            if (name.empty()) throw ParseError("missing name", line_no, sc.col());
            if (!sc.consume_arrow_sym()) throw ParseError("expected '->'", line_no, sc.col());
            sc.skip_ws();
            std::string expr = raw.substr(sc.pos);
            if (keyword == "vertex")
                spec.vertex_exprs.emplace_back(name, expr);
            else
                spec.arrow_exprs.emplace_back(name, expr);
        } else {
            throw ParseError("unknown keyword '" + keyword + "'", line_no, 1);
        }
    }
    if (!saw_header) throw ParseError("missing 'morphism NAME : SRC -> DST' line", line_no, 1);
    return spec;
}

inline AlgebraMorphism bind_morphism(const MorphismSpec& spec, const QuotientAlgebra& src,
                                     const Algebra& target) {
    if (!spec.source_name.empty() && !src.presentation.name.empty() &&
        spec.source_name != src.presentation.name)
        throw Error("morphism source '" + spec.source_name + "' does not match algebra '" +
                    src.presentation.name + "'");
    if (!spec.target_name.empty() && !target.name().empty() && spec.target_name != target.name())
        throw Error("morphism target '" + spec.target_name + "' does not match algebra '" +
                    target.name() + "'");
    std::map<std::string, Vec> vertex_images, arrow_images;
    for (const auto& [name, expr] : spec.vertex_exprs)
        vertex_images[name] = parse_element_expr(target, expr);
    for (const auto& [name, expr] : spec.arrow_exprs)
        arrow_images[name] = parse_element_expr(target, expr);
    return make_morphism_on_generators(src, target, vertex_images, arrow_images);
}

// ---------------------------------------------------------------------------
// Schur elements
// ---------------------------------------------------------------------------

// The defining sum s = sum_ij T_ij eps(phi(e_i)) phi(e_j); the trace reads
// the first tensor leg. Requires nothing beyond a functional on the target.
inline Element schur_sum(const AlgebraMorphism& phi, const Mat& t, const Vec& eps) {
    std::size_t na = phi.source.dim();
    Vec c(na);
    for (std::size_t i = 0; i < na; ++i) c[i] = vec_dot(eps, phi.image_of_basis(i));
    Vec w = t.transpose() * c;
    return phi.target.element(phi.matrix * w);
}

struct SectionData {
    Mat sigma;  // dim(source) x dim(target)
    bool splits = false;        // phi o sigma = id
    bool right_linear = false;  // sigma(b phi(a)) = sigma(b) a
    bool left_checked = false;  // left linearity applies only in the symmetric case
    bool left_linear = false;   // sigma(phi(a) b) = a sigma(b)
};

// sigma(b) = sum_ij T_ij eps(b s^-1 phi(e_i)) e_j, the canonical splitting
// when the Schur element is invertible.
inline SectionData section(const AlgebraMorphism& phi, const Coproduct& cA, const Counit& epsB,
                           const Element& s_inverse) {
    std::size_t na = phi.source.dim(), nb = phi.target.dim();
    const Mat& t = cA.coeff();
    Mat sigma(na, nb);
    for (std::size_t k = 0; k < nb; ++k) {
        Element u = phi.target.basis_element(k) * s_inverse;
        Vec alpha(na);
        for (std::size_t i = 0; i < na; ++i)
            alpha[i] = epsB.value(phi.target.mul_coords(u.coords(), phi.image_of_basis(i)));
        Vec col = t.transpose() * alpha;
        for (std::size_t j = 0; j < na; ++j) sigma(j, k) = col[j];
    }
    SectionData out;
    out.splits = phi.matrix * sigma == Mat::identity(nb);
    out.right_linear = true;
    for (std::size_t a = 0; a < na; ++a) {
        Vec ea = vec_zero(na);
        ea[a] = 1;
        Mat rb = phi.target.right_mult(phi.image_of_basis(a));
        Mat ra = phi.source.right_mult(ea);
        if (!(sigma * rb == ra * sigma)) out.right_linear = false;
    }
    bool symmetric_case = cA.tensor().is_symmetric() && is_symmetric_counit(epsB);
    if (symmetric_case) {
        out.left_checked = true;
        out.left_linear = true;
        for (std::size_t a = 0; a < na; ++a) {
            Vec ea = vec_zero(na);
            ea[a] = 1;
            Mat lb = phi.target.left_mult(phi.image_of_basis(a));
            Mat la = phi.source.left_mult(ea);
            if (!(sigma * lb == la * sigma)) out.left_linear = false;
        }
    }
    out.sigma = std::move(sigma);
    return out;
}

struct SchurData {
    Element s;
    bool central = false;
    bool invertible = false;
    std::optional<Element> inverse;
    std::optional<SectionData> section;
};

inline SchurData schur_element(const AlgebraMorphism& phi, const Coproduct& cA,
                               const Counit& epsB) {
    if (!phi.source.same(cA.algebra()))
        throw AlgebraMismatch("coproduct lives on a different algebra");
    if (!phi.target.same(epsB.algebra))
        throw AlgebraMismatch("counit lives on a different algebra");
    if (!phi.surjective) throw NotSurjective("morphism is not onto the target");
    if (!inverse(gram_matrix(epsB)))
        throw TargetNotFrobenius("target counit has a singular Gram matrix");
    SchurData out{schur_sum(phi, cA.coeff(), epsB.eps)};
    out.central = is_central(out.s);
    out.inverse = try_inverse(out.s);
    out.invertible = out.inverse.has_value();
    if (out.invertible) out.section = section(phi, cA, epsB, *out.inverse);
    return out;
}

// (phi (x) phi)(Delta_A(1)) = s_phi Delta_B(1) with Delta_B built from epsB.
inline bool verify_casimir_transport(const AlgebraMorphism& phi, const Coproduct& cA,
                                     const Counit& epsB) {
    Coproduct cB = frobenius_from_counit(epsB);
    Element s = schur_sum(phi, cA.coeff(), epsB.eps);
    Mat lhs = phi.matrix * cA.coeff() * phi.matrix.transpose();
    Mat rhs = phi.target.left_mult(s.coords()) * cB.coeff();
    return lhs == rhs;
}

// phi(omega_A) = s_phi omega_B.
inline bool verify_handle_transport(const AlgebraMorphism& phi, const Coproduct& cA,
                                    const Counit& epsB) {
    Coproduct cB = frobenius_from_counit(epsB);
    Element s = schur_sum(phi, cA.coeff(), epsB.eps);
    return phi.apply(handle(cA)) == s * handle(cB);
}

// Linear feasibility for a module section: sigma with phi o sigma = id that
// is right A-linear (and left A-linear when bimodule is requested).
inline std::optional<Mat> module_section(const AlgebraMorphism& phi, bool bimodule) {
    std::size_t na = phi.source.dim(), nb = phi.target.dim();
    std::size_t vars = na * nb;  // sigma(j, k)
    std::size_t rows = nb * nb + na * (na * nb) * (bimodule ? 2 : 1);
    Mat sys(rows, vars);
    Vec rhs = vec_zero(rows);
    std::size_t row = 0;
    // phi sigma = id
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t k = 0; k < nb; ++k) {
            for (std::size_t j = 0; j < na; ++j)
                if (!phi.matrix(i, j).is_zero()) sys(row, j * nb + k) += phi.matrix(i, j);
            rhs[row] = i == k ? 1 : 0;
            ++row;
        }
    auto add_linearity = [&](bool left) {
        for (std::size_t a = 0; a < na; ++a) {
            Vec ea = vec_zero(na);
            ea[a] = 1;
            Vec img = phi.image_of_basis(a);
            Mat mb = left ? phi.target.left_mult(img) : phi.target.right_mult(img);
            Mat ma = left ? phi.source.left_mult(ea) : phi.source.right_mult(ea);
            // sigma mb = ma sigma
            for (std::size_t j = 0; j < na; ++j)
                for (std::size_t k = 0; k < nb; ++k) {
                    for (std::size_t m = 0; m < nb; ++m)
                        if (!mb(m, k).is_zero()) sys(row, j * nb + m) += mb(m, k);
                    for (std::size_t l = 0; l < na; ++l)
                        if (!ma(j, l).is_zero()) sys(row, l * nb + k) -= ma(j, l);
                    ++row;
                }
        }
    };
    add_linearity(false);
    if (bimodule) add_linearity(true);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Mat sigma(na, nb);
    for (std::size_t j = 0; j < na; ++j)
        for (std::size_t k = 0; k < nb; ++k) sigma(j, k) = (*sol)[j * nb + k];
    return sigma;
}

// ---------------------------------------------------------------------------
// The two splitting counterexamples plus a genuinely non-split control case.
// ---------------------------------------------------------------------------

struct SplitReport {
    // collapse of the loop-plus-arrow algebra onto k[x]/x^2
    bool collapse_schur_zero = false;       // defining sum, trace (1 on the vertex, 0 on the loop)
    bool collapse_splits = false;           // multiplicative section with phi o i = id
    bool collapse_transports_hold = false;  // with the nondegenerate trace instead
    // identity of k[x]/x^2 with the coproduct x (x) x
    bool identity_schur_is_loop = false;
    bool identity_schur_invertible = true;
    bool identity_splits = false;  // bimodule section exists
    // quotient k[x]/x^2 ->> k with the same coproduct
    bool quotient_schur_zero = false;
    bool quotient_no_right_section = false;
};

inline SplitReport split_counterexamples() {
    SplitReport rep;

    {
        auto src = fixtures::loop_arrow();
        auto dst = fixtures::loop();
        auto phi = bind_morphism(parse_morphism("morphism collapse : loop_arrow -> loop\n"
                                                "vertex 1 -> 1\nvertex 2 -> 0\n"
                                                "arrow a -> x\narrow b -> 0\n"),
                                 src, dst.algebra);
        auto family = fixtures::loop_arrow_family(src);
        Vec degenerate{Scalar(1), Scalar(0)};  // 1 on the vertex, 0 on the loop
        rep.collapse_schur_zero = true;
        for (const auto& t : family)
            if (!schur_sum(phi, t.coeff(), degenerate).is_zero()) rep.collapse_schur_zero = false;

        Vec symmetric_eps{Scalar(0), Scalar(1)};  // the nondegenerate trace on k[x]/x^2
        Counit epsB{dst.algebra, symmetric_eps};
        rep.collapse_transports_hold = true;
        for (const auto& t : family) {
            Coproduct c = Coproduct::checked(t);
            if (!verify_casimir_transport(phi, c, epsB)) rep.collapse_transports_hold = false;
            if (!verify_handle_transport(phi, c, epsB)) rep.collapse_transports_hold = false;
        }

        // inclusion of the loop subquiver: 1 -> e1, x -> a
        std::size_t e1 = *src.label_index("e1"), a = *src.label_index("a");
        Mat incl(src.algebra.dim(), 2);
        incl(e1, 0) = 1;
        incl(a, 1) = 1;
        bool multiplicative = true;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Vec lhs = incl * dst.algebra.table(i, j);
                Vec ci = vec_zero(2), cj = vec_zero(2);
                ci[i] = 1;
                cj[j] = 1;
                Vec rhs = src.algebra.mul_coords(incl * ci, incl * cj);
                if (lhs != rhs) multiplicative = false;
            }
        rep.collapse_splits = multiplicative && phi.matrix * incl == Mat::identity(2);
    }

    {
        auto qa = fixtures::loop();
        std::vector<Vec> id_images;
        for (std::size_t i = 0; i < 2; ++i) id_images.push_back(qa.algebra.basis_element(i).coords());
        auto phi = make_morphism(qa.algebra, qa.algebra, id_images);
        Coproduct c = Coproduct::checked(
            fixtures::tensor_from_labels(qa.algebra, {{1, "x", "x"}}));
        Counit eps{qa.algebra, Vec{Scalar(0), Scalar(1)}};
        SchurData sd = schur_element(phi, c, eps);
        rep.identity_schur_is_loop = sd.s == qa.algebra.basis_element(1);
        rep.identity_schur_invertible = sd.invertible;
        rep.identity_splits = module_section(phi, true).has_value();
    }

    {
        auto src = fixtures::loop();
        auto dst = builtin("truncated_poly", 0);
        std::vector<Vec> images{Vec{Scalar(1)}, Vec{Scalar(0)}};
        auto phi = make_morphism(src.algebra, dst, images);
        Coproduct c = Coproduct::checked(
            fixtures::tensor_from_labels(src.algebra, {{1, "x", "x"}}));
        rep.quotient_schur_zero = schur_sum(phi, c.coeff(), Vec{Scalar(1)}).is_zero();
        rep.quotient_no_right_section = !module_section(phi, false).has_value();
    }

    return rep;
}

}  // namespace nfalg
