#pragma once

#include "nfalg/fixtures.hpp"
#include "nfalg/frobenius.hpp"
#include "nfalg/schur.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

// The bundled verification suite: every worked example and structural
// theorem the library is expected to reproduce, run as discrete criteria
// with one pass/fail verdict each.
namespace nfalg::suite {

struct CriterionResult {
    std::string name;
    bool pass = true;
    std::string detail;
    std::size_t checks = 0;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::size_t trials = 20;
};

namespace detail {

struct Checker {
    CriterionResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void expect(bool cond, const std::string& what) {
        ++result.checks;
        if (!cond) {
            result.pass = false;
            if (!result.detail.empty()) result.detail += "; ";
            result.detail += what;
        }
    }

    CriterionResult finish() {
        if (result.pass) result.detail = std::to_string(result.checks) + " checks";
        return std::move(result);
    }
};

inline Element label_elem(const QuotientAlgebra& qa, const std::string& label) {
    return qa.algebra.basis_element(*qa.label_index(label));
}

inline Subspace label_span(const QuotientAlgebra& qa, const std::vector<std::string>& labels) {
    std::vector<Vec> vs;
    for (const auto& l : labels) vs.push_back(label_elem(qa, l).coords());
    return Subspace::from_vectors(qa.algebra, vs);
}

// fixtures that carry a presentation (used by the oracle criteria)
inline std::vector<QuotientAlgebra> presented_fixtures() {
    std::vector<QuotientAlgebra> out;
    out.push_back(fixtures::two_cycle_both());
    out.push_back(fixtures::two_cycle_single());
    out.push_back(fixtures::triangle());
    out.push_back(fixtures::local_ring_xy());
    out.push_back(fixtures::local_ring_xyz());
    out.push_back(fixtures::loop_arrow());
    out.push_back(fixtures::loop());
    out.push_back(fixtures::linear_toupie());
    out.push_back(fixtures::field());
    for (std::size_t n = 1; n <= 4; ++n) out.push_back(build_algebra(fixtures::trunc_poly_dsl(n)));
    return out;
}

inline std::vector<Algebra> fixture_algebras() {
    std::vector<Algebra> out;
    for (std::size_t n = 0; n <= 4; ++n) out.push_back(builtin("truncated_poly", n));
    out.push_back(builtin("matrix", 2));
    out.push_back(builtin("matrix", 3));
    out.push_back(builtin("cyclic_group", 3));
    out.push_back(builtin("cyclic_group", 4));
    out.push_back(fixtures::two_cycle_both().algebra);
    out.push_back(fixtures::two_cycle_single().algebra);
    out.push_back(fixtures::triangle().algebra);
    out.push_back(fixtures::local_ring_xy().algebra);
    out.push_back(fixtures::local_ring_xyz().algebra);
    out.push_back(fixtures::loop_arrow().algebra);
    auto k = builtin("truncated_poly", 0);
    out.push_back(direct_product(k, k, "kxk"));
    return out;
}

// ---- random quivers for the structural criteria -------------------------

inline Presentation random_acyclic(std::mt19937_64& rng) {
    Presentation p;
    p.name = "random_acyclic";
    std::size_t nv = 3 + rng() % 3;
    for (std::size_t v = 0; v < nv; ++v) p.quiver.vertices.push_back("v" + std::to_string(v + 1));
    std::size_t arrow_id = 0;
    for (std::size_t v = 1; v < nv; ++v)
        p.quiver.arrows.push_back({"a" + std::to_string(++arrow_id),
                                   static_cast<std::size_t>(rng() % v), v});
    for (std::size_t extra = rng() % 3; extra > 0; --extra) {
        std::size_t i = rng() % (nv - 1);
        std::size_t j = i + 1 + rng() % (nv - i - 1);
        p.quiver.arrows.push_back({"a" + std::to_string(++arrow_id), i, j});
    }
    p.maxlen = p.quiver.arrows.size() + 1;
    for (const auto& path : enumerate_paths(p.quiver, 2))
        if (path.length() == 2 && rng() % 2 == 0)
            p.relations.push_back(Relation{{{Scalar(1), path}}, 0});
    return p;
}

inline Presentation toupie_star(std::mt19937_64& rng) {
    Presentation p;
    p.name = "toupie_star";
    std::size_t arms = 2 + rng() % 2;
    p.quiver.vertices.push_back("s");
    for (std::size_t m = 0; m < arms; ++m) p.quiver.vertices.push_back("m" + std::to_string(m + 1));
    p.quiver.vertices.push_back("t");
    for (std::size_t m = 0; m < arms; ++m) {
        p.quiver.arrows.push_back({"in" + std::to_string(m + 1), 0, m + 1});
        p.quiver.arrows.push_back({"out" + std::to_string(m + 1), m + 1, arms + 1});
    }
    p.maxlen = 3;
    return p;
}

inline Presentation random_radical_square_zero(std::mt19937_64& rng) {
    Presentation p;
    p.name = "random_rsz";
    std::size_t nv = 2 + rng() % 3;
    for (std::size_t v = 0; v < nv; ++v) p.quiver.vertices.push_back("v" + std::to_string(v + 1));
    std::size_t arrow_id = 0;
    for (std::size_t v = 0; v + 1 < nv; ++v)
        p.quiver.arrows.push_back({"a" + std::to_string(++arrow_id), v, v + 1});
    for (std::size_t extra = 1 + rng() % 2; extra > 0; --extra)
        p.quiver.arrows.push_back({"a" + std::to_string(++arrow_id),
                                   static_cast<std::size_t>(rng() % nv),
                                   static_cast<std::size_t>(rng() % nv)});
    p.maxlen = 2;
    for (const auto& path : enumerate_paths(p.quiver, 2))
        if (path.length() == 2) p.relations.push_back(Relation{{{Scalar(1), path}}, 0});
    return p;
}

}  // namespace detail

// --- criterion 1 ----------------------------------------------------------

inline CriterionResult criterion_frobdim() {
    detail::Checker c("coproduct space dimensions");
    for (std::size_t n = 0; n <= 4; ++n) {
        auto a = builtin("truncated_poly", n);
        c.expect(frobenius_space(a).dim() == n + 1,
                 "truncated_poly(" + std::to_string(n) + ") dimension");
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        auto a = builtin("matrix", n);
        c.expect(frobenius_space(a).dim() == n * n, "matrix(" + std::to_string(n) + ") dimension");
    }
    c.expect(frobenius_space(fixtures::two_cycle_both().algebra).dim() == 4, "two_cycle_both");
    c.expect(frobenius_space(fixtures::two_cycle_single().algebra).dim() == 5, "two_cycle_single");
    c.expect(frobenius_space(fixtures::local_ring_xy().algebra).dim() == 6, "local_ring_xy");
    c.expect(frobenius_space(fixtures::local_ring_xyz().algebra).dim() == 8, "local_ring_xyz");
    return c.finish();
}

// --- criterion 2 ----------------------------------------------------------

inline CriterionResult criterion_handles() {
    detail::Checker c("handle elements");
    for (std::size_t n = 2; n <= 3; ++n) {
        auto a = builtin("matrix", n);
        auto fam = fixtures::matrix_family(a, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                Element w = fam[k * n + l].multiply_out();
                c.expect(k == l ? w == a.one() : w.is_zero(), "matrix handle");
            }
        c.expect(fixtures::matrix_frobenius_coproduct(a, n).multiply_out() ==
                     Scalar(static_cast<long>(n)) * a.one(),
                 "matrix trace-form handle");
    }
    for (std::size_t n = 3; n <= 4; ++n) {
        auto a = builtin("cyclic_group", n);
        auto fam = fixtures::cyclic_family(a, n);
        for (std::size_t k = 0; k < n; ++k)
            c.expect(fam[k].multiply_out() == Scalar(static_cast<long>(n)) * a.basis_element(k),
                     "cyclic handle");
    }
    for (std::size_t n = 0; n <= 4; ++n) {
        auto a = builtin("truncated_poly", n);
        auto fam = fixtures::trunc_family(a, n);
        c.expect(fam[0].multiply_out() == Scalar(static_cast<long>(n + 1)) * a.basis_element(n),
                 "truncated handle");
        for (std::size_t k = 1; k <= n; ++k)
            c.expect(fam[k].multiply_out().is_zero(), "truncated handle vanishing");
    }
    c.expect(all_handles_zero(frobenius_space(fixtures::two_cycle_both().algebra)),
             "two_cycle_both handles");
    {
        auto qa = fixtures::two_cycle_single();
        auto sym = symbolic_handles(frobenius_space(qa.algebra));
        c.expect(sym.rendered == "(2a1+a2)*ab", "two_cycle_single symbolic handle");
    }
    {
        auto qa = fixtures::triangle();
        auto e = frobenius_space(qa.algebra);
        std::vector<Vec> handles;
        for (const auto& cp : e.basis) handles.push_back(handle(cp).coords());
        auto span = Subspace::from_vectors(qa.algebra, handles);
        auto expected = Subspace::from_vectors(
            qa.algebra,
            {(detail::label_elem(qa, "bga") + detail::label_elem(qa, "gab")).coords()});
        c.expect(span == expected, "triangle handle line");
    }
    return c.finish();
}

// --- criterion 3 ----------------------------------------------------------

inline CriterionResult criterion_socles() {
    detail::Checker c("socles and handle ideals");
    {
        auto qa = fixtures::two_cycle_both();
        auto expected = detail::label_span(qa, {"a", "b"});
        c.expect(socle_right(qa.algebra) == expected, "two_cycle_both right socle");
        c.expect(socle_left(qa.algebra) == expected, "two_cycle_both left socle");
        Coproduct frob = frobenius_from_counit({qa.algebra, fixtures::two_cycle_both_counit(qa)});
        Subspace ideal = ideal_generated(handle(frob));
        c.expect(ideal.dim() == 0, "two_cycle_both handle ideal is zero");
        c.expect(expected.contains_subspace(ideal) && ideal.dim() < expected.dim(),
                 "two_cycle_both strict containment");
    }
    {
        auto qa = fixtures::two_cycle_single();
        auto soc = socle_right(qa.algebra);
        c.expect(soc == detail::label_span(qa, {"ab", "b"}), "two_cycle_single right socle");
        auto e = frobenius_space(qa.algebra);
        Element omega = handle(e.basis[0]);  // 2 ab
        Subspace ideal = right_ideal(omega);
        c.expect(soc.contains_subspace(ideal) && ideal.dim() < soc.dim(),
                 "two_cycle_single handle ideal strictly inside the socle");
    }
    {
        auto qa = fixtures::local_ring_xy();
        auto expected = detail::label_span(qa, {"xy", "y^2"});
        c.expect(socle_right(qa.algebra) == expected, "local_ring_xy socle");
        c.expect(socle_left(qa.algebra) == expected, "local_ring_xy socle symmetry");
        c.expect(all_handles_zero(frobenius_space(qa.algebra)), "local_ring_xy zero handles");
    }
    {
        auto qa = fixtures::local_ring_xyz();
        auto expected = detail::label_span(qa, {"xz", "yz"});
        c.expect(socle_right(qa.algebra) == expected, "local_ring_xyz socle");
        c.expect(all_handles_zero(frobenius_space(qa.algebra)), "local_ring_xyz zero handles");
    }
    {
        auto qa = fixtures::triangle();
        Element omega = detail::label_elem(qa, "bga") + detail::label_elem(qa, "gab");
        c.expect(!socle_right(qa.algebra).contains_subspace(right_ideal(omega)),
                 "triangle handle ideal escapes the right socle");
    }
    return c.finish();
}

// --- criterion 4 ----------------------------------------------------------

inline CriterionResult criterion_separability() {
    detail::Checker c("separability");
    for (std::size_t n = 2; n <= 3; ++n)
        c.expect(is_separable(builtin("matrix", n)), "matrix separable");
    for (std::size_t n = 3; n <= 4; ++n)
        c.expect(is_separable(builtin("cyclic_group", n)), "cyclic group separable");
    for (std::size_t n = 1; n <= 4; ++n)
        c.expect(!is_separable(builtin("truncated_poly", n)), "truncated not separable");
    {
        auto k = builtin("truncated_poly", 0);
        auto kk = direct_product(k, k, "kxk");
        auto w = separability_element(kk);
        c.expect(w.has_value(), "k x k separable");
        if (w) {
            c.expect(w->multiply_out() == kk.one(), "witness multiplies to 1");
            c.expect(w->is_bimodule(), "witness commutes with the action");
        }
        Mat t(2, 2);
        t(0, 0) = 1;
        t(1, 1) = 1;
        TensorElement idem(kk, t);
        c.expect(idem.is_bimodule() && idem.multiply_out() == kk.one(),
                 "idempotent witness is a separability element");
    }
    for (const auto& a : detail::fixture_algebras()) {
        auto e = frobenius_space(a);
        bool unit_handle = false;
        for (const auto& cp : e.basis)
            if (try_inverse(handle(cp))) unit_handle = true;
        if (unit_handle)
            c.expect(is_separable(a), "unit handle forces separability on " + a.name());
    }
    return c.finish();
}

// --- criterion 5 ----------------------------------------------------------

inline CriterionResult criterion_frobenius_detection(const SuiteOptions& opts) {
    detail::Checker c("frobenius detection");
    FrobeniusCheckOptions fc;
    fc.seed = opts.seed;
    fc.trials = opts.trials;
    std::vector<Algebra> positives;
    for (std::size_t n = 0; n <= 4; ++n) positives.push_back(builtin("truncated_poly", n));
    positives.push_back(builtin("matrix", 2));
    positives.push_back(builtin("matrix", 3));
    positives.push_back(fixtures::two_cycle_both().algebra);
    for (const auto& a : positives) {
        auto v = frobenius_check(a, fc);
        c.expect(v.status == FrobeniusVerdict::Status::frobenius,
                 "expected a trace witness on " + a.name());
        if (v.status == FrobeniusVerdict::Status::frobenius) {
            std::size_t n = a.dim();
            Vec left = vec_zero(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    left[j] += v.coproduct->coeff()(i, j) * v.counit->eps[i];
            c.expect(left == a.one_coords(), "witness counit identity on " + a.name());
            c.expect(v.coproduct->tensor().is_bimodule(), "witness coproduct on " + a.name());
        }
    }
    std::vector<Algebra> negatives{fixtures::two_cycle_single().algebra,
                                   fixtures::local_ring_xy().algebra,
                                   fixtures::local_ring_xyz().algebra};
    for (const auto& a : negatives) {
        auto v = frobenius_check(a, fc);
        c.expect(v.status == FrobeniusVerdict::Status::not_frobenius,
                 "expected an obstruction on " + a.name());
        if (v.certificate) c.expect(!v.certificate->contains(a.one_coords()), "certificate misses 1");
    }
    return c.finish();
}

// --- criterion 6 ----------------------------------------------------------

inline CriterionResult criterion_structure_theorems(const SuiteOptions& opts) {
    detail::Checker c("structure theorems");

    std::vector<std::pair<Algebra, FrobeniusSpace>> spaces;
    for (const auto& a : detail::fixture_algebras()) spaces.emplace_back(a, frobenius_space(a));

    for (const auto& [a, e] : spaces) {
        for (const auto& cp : e.basis) {
            c.expect(cp.tensor().is_bimodule(), "bimodule condition on " + a.name());
            c.expect(is_central(handle(cp)), "handle centrality on " + a.name());
        }
        if (e.dim() >= 2) {
            Vec combo = vec_zero(e.dim());
            combo[0] = Scalar(3);
            combo[1] = Scalar(-2);
            c.expect(handle(coproduct_combination(e, combo)) ==
                         Scalar(3) * handle(e.basis[0]) + Scalar(-2) * handle(e.basis[1]),
                     "handle linearity on " + a.name());
        }
    }

    for (const auto& qa : {fixtures::two_cycle_both(), fixtures::two_cycle_single(),
                           fixtures::triangle(), fixtures::loop_arrow(),
                           fixtures::linear_toupie()}) {
        c.expect(handle_in_radical(qa, frobenius_space(qa.algebra)),
                 "handles in the radical for " + qa.presentation.name);
    }

    for (const auto& [a, e] : spaces)
        for (const auto& cp : e.basis)
            c.expect(handle_socle_power(cp).has_value(), "socle power on " + a.name());

    {
        std::mt19937_64 rng(opts.seed + 1);
        std::size_t zero_checked = 0;
        for (int i = 0; i < 3; ++i) {
            auto p = detail::random_acyclic(rng);
            auto qa = build_algebra(p);
            c.expect(classify(p).acyclic, "random quiver is acyclic");
            c.expect(all_handles_zero(frobenius_space(qa.algebra)),
                     "acyclic quiver handles vanish");
            ++zero_checked;
        }
        for (int i = 0; i < 2; ++i) {
            auto p = detail::toupie_star(rng);
            auto qa = build_algebra(p);
            c.expect(classify(p).toupie, "star quiver is toupie");
            c.expect(all_handles_zero(frobenius_space(qa.algebra)), "toupie handles vanish");
            ++zero_checked;
        }
        for (int i = 0; i < 5; ++i) {
            auto p = detail::random_radical_square_zero(rng);
            auto qa = build_algebra(p);
            c.expect(classify(p).radical_square_zero, "random quiver has radical square zero");
            c.expect(p.quiver.vertices.size() >= 2, "at least two vertices");
            c.expect(qa.algebra.dim() == p.quiver.vertices.size() + p.quiver.arrows.size(),
                     "radical-square-zero dimension identity");
            c.expect(all_handles_zero(frobenius_space(qa.algebra)),
                     "radical-square-zero handles vanish");
        }
        c.expect(zero_checked == 5, "five acyclic/toupie samples");
    }

    for (const auto& [a, e] : spaces) {
        FrobeniusCheckOptions fc;
        fc.seed = opts.seed;
        fc.trials = opts.trials;
        auto v = frobenius_check(a, e, fc);
        if (v.status == FrobeniusVerdict::Status::frobenius)
            c.expect(socle_right(a).contains_subspace(right_ideal(handle(*v.coproduct))),
                     "witness handle ideal inside the socle on " + a.name());
    }

    {
        auto m2 = builtin("matrix", 2);
        auto dual = builtin("truncated_poly", 1);
        Coproduct cm = Coproduct::checked(fixtures::matrix_frobenius_coproduct(m2, 2));
        auto ed = frobenius_space(dual);
        auto prod = direct_product(m2, dual);
        auto tens = tensor_product(m2, dual);
        for (const auto& cd : ed.basis) {
            Coproduct cp = product_coproduct(cm, cd, prod);
            c.expect(handle(cp) == product_embed(prod, handle(cm), 0, m2.dim()) +
                                       product_embed(prod, handle(cd), 1, m2.dim()),
                     "product handle pair");
            Coproduct ct = tensor_coproduct(cm, cd, tens);
            c.expect(handle(ct) == tensor_pure(tens, handle(cm), handle(cd)),
                     "tensor handle product");
        }
    }

    {
        std::mt19937_64 rng(opts.seed + 2);
        std::vector<std::pair<Algebra, FrobeniusSpace>> cache;
        for (const auto& a : {builtin("matrix", 2), fixtures::triangle().algebra,
                              builtin("truncated_poly", 3)})
            cache.emplace_back(a, frobenius_space(a));
        std::vector<std::pair<Algebra, Subspace>> centers;
        for (const auto& [a, e] : cache) centers.emplace_back(a, center(a));
        for (std::size_t t = 0; t < 10; ++t) {
            const auto& [a, e] = cache[t % cache.size()];
            const auto& z = centers[t % cache.size()].second;
            Vec coords = vec_zero(a.dim());
            for (const auto& zb : z.basis())
                vec_axpy(coords, Scalar(static_cast<long>(rng() % 9) - 4), zb);
            Element u = a.element(coords);
            for (const auto& cp : e.basis)
                c.expect(handle(star_action(u, cp)) == u * handle(cp),
                         "star action handle on " + a.name());
        }
    }
    return c.finish();
}

// --- criterion 7 ----------------------------------------------------------

inline CriterionResult criterion_schur(const SuiteOptions&) {
    detail::Checker c("schur elements and splittings");
    auto rep = split_counterexamples();
    c.expect(rep.collapse_schur_zero, "collapse schur element vanishes on the family");
    c.expect(rep.collapse_splits, "collapse splits through the subquiver inclusion");
    c.expect(rep.collapse_transports_hold, "collapse transport identities");
    c.expect(rep.identity_schur_is_loop, "identity schur element is the loop");
    c.expect(!rep.identity_schur_invertible, "identity schur element is not invertible");
    c.expect(rep.identity_splits, "identity splits as a bimodule map");
    c.expect(rep.quotient_schur_zero, "field quotient schur element vanishes");
    c.expect(rep.quotient_no_right_section, "field quotient admits no module section");

    auto identity_morphism = [](const Algebra& a) {
        std::vector<Vec> images;
        for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(a.basis_element(i).coords());
        return make_morphism(a, a, images);
    };

    {
        auto a = builtin("truncated_poly", 2);
        Vec eps = vec_zero(3);
        eps[2] = 1;
        Counit counit{a, eps};
        auto phi = identity_morphism(a);
        Coproduct cp = frobenius_from_counit(counit);
        SchurData sd = schur_element(phi, cp, counit);
        c.expect(sd.s == a.one(), "identity with counital coproduct has schur element 1");
        c.expect(sd.central, "schur centrality");
        c.expect(sd.invertible && sd.section && sd.section->sigma == Mat::identity(3),
                 "canonical section is the identity");
        c.expect(verify_casimir_transport(phi, cp, counit), "casimir transport");
        c.expect(verify_handle_transport(phi, cp, counit), "handle transport");
    }
    {
        auto src = fixtures::loop_arrow();
        auto dst = fixtures::loop();
        auto phi = bind_morphism(parse_morphism("morphism collapse : loop_arrow -> loop\n"
                                                "vertex 1 -> 1\nvertex 2 -> 0\n"
                                                "arrow a -> x\narrow b -> 0\n"),
                                 src, dst.algebra);
        Counit eps{dst.algebra, Vec{Scalar(0), Scalar(1)}};
        for (const auto& t : fixtures::loop_arrow_family(src)) {
            Coproduct cp = Coproduct::checked(t);
            SchurData sd = schur_element(phi, cp, eps);
            c.expect(sd.central, "schur centrality on the collapse");
            c.expect(!sd.invertible, "collapse schur elements are nilpotent");
            c.expect(verify_casimir_transport(phi, cp, eps), "collapse casimir transport");
            c.expect(verify_handle_transport(phi, cp, eps), "collapse handle transport");
        }
    }
    {
        // symmetric coproduct and symmetric trace: the section is two-sided
        auto qa = fixtures::loop();
        auto phi = identity_morphism(qa.algebra);
        Counit eps{qa.algebra, Vec{Scalar(0), Scalar(1)}};
        Coproduct cp = frobenius_from_counit(eps);
        SchurData sd = schur_element(phi, cp, eps);
        c.expect(sd.invertible && sd.section.has_value(), "symmetric fixture splits");
        if (sd.section) {
            c.expect(sd.section->splits, "section splits");
            c.expect(sd.section->right_linear, "section right linearity");
            c.expect(sd.section->left_checked && sd.section->left_linear,
                     "section left linearity in the symmetric case");
        }
    }
    return c.finish();
}

// --- criterion 8 ----------------------------------------------------------

inline CriterionResult criterion_oracles() {
    detail::Checker c("independent oracles");
    for (const auto& qa : detail::presented_fixtures()) {
        auto oracle = monomial_basis(qa.presentation);
        if (oracle) {
            auto quotient_paths = qa.basis_paths;
            std::sort(quotient_paths.begin(), quotient_paths.end());
            auto oracle_paths = *oracle;
            std::sort(oracle_paths.begin(), oracle_paths.end());
            c.expect(quotient_paths == oracle_paths,
                     "rewriting basis matches the quotient for " + qa.presentation.name);
        }
        c.expect(radical(qa.algebra) == qa.positive_length_span(),
                 "trace-form radical equals the arrow ideal for " + qa.presentation.name);
    }
    return c.finish();
}

inline std::vector<CriterionResult> run_all(const SuiteOptions& opts = {}) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_frobdim());
    out.push_back(criterion_handles());
    out.push_back(criterion_socles());
    out.push_back(criterion_separability());
    out.push_back(criterion_frobenius_detection(opts));
    out.push_back(criterion_structure_theorems(opts));
    out.push_back(criterion_schur(opts));
    out.push_back(criterion_oracles());
    return out;
}

}  // namespace nfalg::suite
