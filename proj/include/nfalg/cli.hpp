#pragma once

#include "nfalg/json_io.hpp"
#include "nfalg/paper_suite.hpp"
#include "nfalg/schur.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nfalg::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    Algebra algebra;
    std::optional<QuotientAlgebra> quotient;  // present for DSL inputs
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// An input is a DSL file, a structure-constant JSON file, or a pseudo-path
// builtin:NAME:PARAM.
inline Input load_input(const std::string& spec, std::optional<std::size_t> maxlen_override) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::size_t second = spec.find(':', 8);
        if (second == std::string::npos) throw UsageError("expected builtin:NAME:PARAM");
        std::string name = spec.substr(8, second - 8);
        std::size_t param = 0;
        try {
            param = static_cast<std::size_t>(std::stoul(spec.substr(second + 1)));
        } catch (const std::exception&) {
            throw UsageError("bad builtin parameter in '" + spec + "'");
        }
        try {
            return Input{builtin(name, param), std::nullopt};
        } catch (const UnknownBuiltin& e) {
            throw UsageError(e.what());
        }
    }
    std::string text = read_file(spec);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON in '" + spec + "'", 1, 1);
        return Input{algebra_from_json(j), std::nullopt};
    }
    Presentation p = parse_presentation(text);
    if (maxlen_override) p.maxlen = *maxlen_override;
    QuotientAlgebra qa = build_algebra(p);
    Algebra a = qa.algebra;
    return Input{std::move(a), std::move(qa)};
}

inline std::string tensor_to_string(const TensorElement& t) {
    const Algebra& a = t.algebra();
    std::string out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Scalar c = t.coeff()(i, j);
            if (c.is_zero()) continue;
            bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (c != 1) out += scalar_to_string(c) + "*";
            out += a.label(i) + "(x)" + a.label(j);
        }
    return out.empty() ? "0" : out;
}

// "label=p/q,label=p/q"; unspecified labels are zero.
inline Vec parse_counit_spec(const Algebra& a, const std::string& spec) {
    Vec eps = vec_zero(a.dim());
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("expected label=value in '" + item + "'");
        std::string label = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        bool found = false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (a.label(i) == label) {
                try {
                    eps[i] = scalar_from_string(value);
                } catch (const std::exception&) {
                    throw UsageError("bad rational '" + value + "'");
                }
                found = true;
            }
        if (!found) throw UsageError("no basis label '" + label + "' in " + a.name());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return eps;
}

// "a1=c,a2=c" over the computed coproduct basis, or "counit:SPEC" for the
// dual-basis coproduct of a trace on the source.
inline Coproduct parse_coproduct_spec(const Input& in, const std::string& spec) {
    if (spec.rfind("counit:", 0) == 0) {
        Vec eps = parse_counit_spec(in.algebra, spec.substr(7));
        return frobenius_from_counit({in.algebra, eps});
    }
    FrobeniusSpace e = frobenius_space(in.algebra);
    Vec combo = vec_zero(e.dim());
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || item[0] != 'a')
            throw UsageError("expected aK=value in '" + item + "'");
        std::size_t k = 0;
        try {
            k = static_cast<std::size_t>(std::stoul(item.substr(1, eq - 1)));
        } catch (const std::exception&) {
            throw UsageError("bad parameter index in '" + item + "'");
        }
        if (k < 1 || k > e.dim())
            throw UsageError("parameter a" + std::to_string(k) + " out of range (frobdim " +
                             std::to_string(e.dim()) + ")");
        try {
            combo[k - 1] = scalar_from_string(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("bad rational in '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return coproduct_combination(e, combo);
}

inline Json algebra_summary(const Algebra& a) {
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["labels"] = a.labels();
    return j;
}

inline Json subspace_to_json(const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(vec_to_json(v));
    j["basis"] = basis;
    return j;
}

inline void print_subspace(std::ostream& out, const std::string& title, const Subspace& s) {
    out << title << ": dim " << s.dim() << "\n";
    for (const auto& e : s.basis_elements()) out << "  " << e.to_string() << "\n";
}

struct Options {
    std::string file_a, file_b, morphism_file;
    bool json = false;
    std::optional<std::size_t> maxlen;
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    std::string side = "both";
    std::string counit_spec, coproduct_spec;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with nearly Frobenius structures on finite-dimensional algebras"};
    app.name("nfalg");
    app.require_subcommand(1);

    Options o;
    long maxlen_raw = -1;

    auto add_common = [&](CLI::App* sub, bool with_file = true) {
        if (with_file)
            sub->add_option("file", o.file_a,
                            "presentation file, structure-constant JSON, or builtin:NAME:PARAM")
                ->required();
        sub->add_flag("--json", o.json, "emit a JSON report");
        sub->add_option("--maxlen", maxlen_raw, "override the presentation length bound");
        return sub;
    };

    auto* c_build = add_common(app.add_subcommand("build", "compile an algebra and print its basis"));
    auto* c_frobspace =
        add_common(app.add_subcommand("frobspace", "basis of all nearly Frobenius coproducts"));
    auto* c_handle = add_common(app.add_subcommand("handle", "handle elements of the coproduct space"));
    auto* c_socle = add_common(app.add_subcommand("socle", "socle of the algebra"));
    c_socle->add_option("--side", o.side, "left|right|both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    auto* c_radical = add_common(app.add_subcommand("radical", "Jacobson radical"));
    auto* c_separable = add_common(app.add_subcommand("separable", "separability element search"));
    auto* c_frobcheck =
        add_common(app.add_subcommand("frobcheck", "decide Frobenius structure where possible"));
    c_frobcheck->add_option("--seed", o.seed, "seed for the randomized trace search");
    c_frobcheck->add_option("--trials", o.trials, "number of random traces to try");

    auto* c_schur = app.add_subcommand("schur", "Schur element of an epimorphism");
    c_schur->add_option("source", o.file_a, "source algebra (presentation file)")->required();
    c_schur->add_option("target", o.file_b, "target algebra")->required();
    c_schur->add_option("morphism", o.morphism_file, "morphism file")->required();
    c_schur->add_option("--counit", o.counit_spec, "trace on the target, label=p/q[,...]")
        ->required();
    c_schur
        ->add_option("--coproduct", o.coproduct_spec,
                     "coproduct on the source: aK=p/q[,...] over the computed basis, or counit:SPEC")
        ->required();
    c_schur->add_flag("--json", o.json, "emit a JSON report");
    c_schur->add_option("--maxlen", maxlen_raw, "override the presentation length bound");

    auto* c_suite = app.add_subcommand("paper-suite", "run the bundled verification suite");
    c_suite->alias("suite");
    c_suite->add_flag("--json", o.json, "emit machine-readable results");
    c_suite->add_option("--seed", o.seed, "seed for randomized stages");
    c_suite->add_option("--trials", o.trials, "trials for randomized stages");

    std::vector<const char*> argv;
    argv.push_back("nfalg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    try {
        if (maxlen_raw != -1) {
            if (maxlen_raw < 2) throw UsageError("--maxlen must be at least 2");
            o.maxlen = static_cast<std::size_t>(maxlen_raw);
        }
        if (c_build->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            if (o.json) {
                out << algebra_to_json(in.algebra).dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": dim " << in.algebra.dim() << "\n";
                out << "basis:";
                for (const auto& l : in.algebra.labels()) out << " " << l;
                out << "\n";
            }
            return 0;
        }
        if (c_frobspace->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            FrobeniusSpace e = frobenius_space(in.algebra);
            if (o.json) {
                Json j;
                j["algebra"] = algebra_summary(in.algebra);
                j["frobdim"] = e.dim();
                Json cps = Json::array();
                for (const auto& c : e.basis) cps.push_back(mat_to_json(c.coeff()));
                j["coproducts"] = cps;
                out << j.dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": dim " << in.algebra.dim() << "\n";
                out << "frobdim " << e.dim() << "\n";
                for (std::size_t k = 0; k < e.dim(); ++k)
                    out << "  a" << k + 1 << ": " << tensor_to_string(e.basis[k].tensor()) << "\n";
            }
            return 0;
        }
        if (c_handle->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            FrobeniusSpace e = frobenius_space(in.algebra);
            SymbolicHandle sym = symbolic_handles(e);
            if (o.json) {
                Json j;
                j["algebra"] = algebra_summary(in.algebra);
                j["frobdim"] = e.dim();
                Json hs = Json::array();
                for (const auto& h : sym.per_basis) hs.push_back(vec_to_json(h.coords()));
                j["handles"] = hs;
                j["symbolic"] = sym.rendered;
                out << j.dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": frobdim " << e.dim() << "\n";
                for (std::size_t k = 0; k < sym.per_basis.size(); ++k)
                    out << "  handle(a" << k + 1 << ") = " << sym.per_basis[k].to_string() << "\n";
                out << "symbolic: " << sym.rendered << "\n";
            }
            return 0;
        }
        if (c_socle->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            Subspace rad = radical(in.algebra);
            std::optional<Subspace> right, left;
            if (o.side != "left") right = socle_right(in.algebra, rad);
            if (o.side != "right") left = socle_left(in.algebra, rad);
            if (o.json) {
                Json j;
                j["algebra"] = algebra_summary(in.algebra);
                j["side"] = o.side;
                if (right) j["right"] = subspace_to_json(*right);
                if (left) j["left"] = subspace_to_json(*left);
                out << j.dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": dim " << in.algebra.dim() << "\n";
                if (right) print_subspace(out, "right socle", *right);
                if (left) print_subspace(out, "left socle", *left);
            }
            return 0;
        }
        if (c_radical->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            Subspace rad = radical(in.algebra);
            if (o.json) {
                Json j;
                j["algebra"] = algebra_summary(in.algebra);
                j["radical"] = subspace_to_json(rad);
                out << j.dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": dim " << in.algebra.dim() << "\n";
                print_subspace(out, "radical", rad);
            }
            return 0;
        }
        if (c_separable->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            auto witness = separability_element(in.algebra);
            if (o.json) {
                Json j;
                j["algebra"] = algebra_summary(in.algebra);
                j["separable"] = witness.has_value();
                if (witness) j["witness"] = mat_to_json(witness->coeff());
                out << j.dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": "
                    << (witness ? "separable" : "not separable") << "\n";
                if (witness) out << "witness: " << tensor_to_string(*witness) << "\n";
            }
            return 0;
        }
        if (c_frobcheck->parsed()) {
            Input in = load_input(o.file_a, o.maxlen);
            FrobeniusCheckOptions fc;
            fc.seed = o.seed;
            fc.trials = o.trials;
            FrobeniusVerdict v = frobenius_check(in.algebra, fc);
            std::string status = v.status == FrobeniusVerdict::Status::frobenius ? "frobenius"
                                 : v.status == FrobeniusVerdict::Status::not_frobenius
                                     ? "not_frobenius"
                                     : "inconclusive";
            if (o.json) {
                Json j;
                j["algebra"] = algebra_summary(in.algebra);
                j["seed"] = o.seed;
                j["trials"] = o.trials;
                j["status"] = status;
                if (v.counit) j["counit"] = vec_to_json(v.counit->eps);
                if (v.coproduct) j["coproduct"] = mat_to_json(v.coproduct->coeff());
                if (v.certificate) j["certificate"] = subspace_to_json(*v.certificate);
                j["trials_used"] = v.trials_used;
                out << j.dump(2) << "\n";
            } else {
                out << "algebra " << in.algebra.name() << ": " << status << "\n";
                if (v.counit) {
                    out << "counit:";
                    for (std::size_t i = 0; i < in.algebra.dim(); ++i)
                        out << " " << in.algebra.label(i) << "=" << scalar_to_string(v.counit->eps[i]);
                    out << "\n";
                    out << "coproduct: " << tensor_to_string(v.coproduct->tensor()) << "\n";
                }
                if (v.certificate)
                    out << "certificate: 1 lies outside the " << v.certificate->dim()
                        << "-dimensional span of first-leg contractions\n";
            }
            return v.status == FrobeniusVerdict::Status::inconclusive ? 4 : 0;
        }
        if (c_schur->parsed()) {
            Input src = load_input(o.file_a, o.maxlen);
            if (!src.quotient)
                throw Error("schur source must be a presentation file");
            Input dst = load_input(o.file_b, std::nullopt);
            MorphismSpec spec = parse_morphism(read_file(o.morphism_file));
            AlgebraMorphism phi = bind_morphism(spec, *src.quotient, dst.algebra);
            Counit eps{dst.algebra, parse_counit_spec(dst.algebra, o.counit_spec)};
            Coproduct cA = parse_coproduct_spec(src, o.coproduct_spec);
            SchurData sd = schur_element(phi, cA, eps);
            bool casimir = verify_casimir_transport(phi, cA, eps);
            bool handle_t = verify_handle_transport(phi, cA, eps);
            if (o.json) {
                Json j;
                j["source"] = algebra_summary(src.algebra);
                j["target"] = algebra_summary(dst.algebra);
                j["morphism"] = spec.name;
                j["schur"] = vec_to_json(sd.s.coords());
                j["rendered"] = sd.s.to_string();
                j["central"] = sd.central;
                j["invertible"] = sd.invertible;
                if (sd.inverse) j["inverse"] = vec_to_json(sd.inverse->coords());
                j["casimir_transport"] = casimir;
                j["handle_transport"] = handle_t;
                if (sd.section) {
                    Json s;
                    s["sigma"] = mat_to_json(sd.section->sigma);
                    s["splits"] = sd.section->splits;
                    s["right_linear"] = sd.section->right_linear;
                    s["left_checked"] = sd.section->left_checked;
                    s["left_linear"] = sd.section->left_linear;
                    j["section"] = s;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "schur element: " << sd.s.to_string() << "\n";
                out << "central: " << (sd.central ? "yes" : "no") << "\n";
                out << "invertible: " << (sd.invertible ? "yes" : "no") << "\n";
                if (sd.inverse) out << "inverse: " << sd.inverse->to_string() << "\n";
                out << "casimir transport: " << (casimir ? "ok" : "FAILED") << "\n";
                out << "handle transport: " << (handle_t ? "ok" : "FAILED") << "\n";
                if (sd.section) {
                    out << "section: splits " << (sd.section->splits ? "yes" : "no")
                        << ", right linear " << (sd.section->right_linear ? "yes" : "no");
                    if (sd.section->left_checked)
                        out << ", left linear " << (sd.section->left_linear ? "yes" : "no");
                    out << "\n";
                }
            }
            return 0;
        }
        if (c_suite->parsed()) {
            suite::SuiteOptions so;
            so.seed = o.seed;
            so.trials = o.trials;
            auto results = suite::run_all(so);
            std::string first_fail;
            if (o.json) {
                Json j;
                j["seed"] = o.seed;
                j["trials"] = o.trials;
                Json arr = Json::array();
                bool all = true;
                for (const auto& r : results) {
                    Json e;
                    e["name"] = r.name;
                    e["pass"] = r.pass;
                    e["checks"] = r.checks;
                    e["detail"] = r.detail;
                    arr.push_back(e);
                    if (!r.pass && first_fail.empty()) first_fail = r.name;
                    all = all && r.pass;
                }
                j["results"] = arr;
                j["pass"] = all;
                out << j.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail
                        << ")\n";
                    if (!r.pass && first_fail.empty()) first_fail = r.name;
                }
            }
            if (!first_fail.empty()) {
                err << "criterion failed: " << first_fail << "\n";
                return 3;
            }
            return 0;
        }
        err << "no subcommand selected\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace nfalg::cli
