#pragma once

#include "nfalg/algebra.hpp"
#include "nfalg/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace nfalg {

struct Quiver {
    struct Arrow {
        std::string name;
        std::size_t source = 0, target = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::optional<std::size_t> vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return i;
        return std::nullopt;
    }
    std::optional<std::size_t> arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return i;
        return std::nullopt;
    }
};

// A path is a vertex (length 0) or a composable arrow sequence, read left to
// right: p = a1 a2 ... ak travels s(a1) -> t(a1) = s(a2) -> ... -> t(ak).
struct Path {
    std::size_t source = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    std::size_t target(const Quiver& q) const {
        return arrows.empty() ? source : q.arrows[arrows.back()].target;
    }

    friend bool operator==(const Path& a, const Path& b) {
        return a.source == b.source && a.arrows == b.arrows;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.source < b.source;
    }
};

// p then q, defined when t(p) = s(q); for a length-0 p the composite is q
// and the sources agree, so keeping p's source is correct in every case.
inline Path compose(const Quiver&, const Path& a, const Path& b) {
    Path r = a;
    r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
    return r;
}

struct Relation {
    std::vector<std::pair<Scalar, Path>> terms;  // parallel, each of length >= 2
    std::size_t line = 0;

    std::size_t source() const { return terms.front().second.source; }
    std::size_t target(const Quiver& q) const { return terms.front().second.target(q); }
    std::size_t min_length() const {
        std::size_t m = terms.front().second.length();
        for (const auto& t : terms) m = std::min(m, t.second.length());
        return m;
    }
};

struct Presentation {
    std::string name;
    Quiver quiver;
    std::vector<Relation> relations;
    std::size_t maxlen = 2;  // working bound W with J^W contained in the ideal
};

namespace detail {

inline std::size_t utf8_codepoints(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

inline bool name_char(char c) {
    if (c >= '0' && c <= '9') return true;
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return true;
    if (c == '_') return true;
    return static_cast<unsigned char>(c) >= 0x80;  // non-ASCII allowed
}

}  // namespace detail

// Human-readable path label: vertex paths as "e<v>" ("1" on a one-vertex
// quiver), arrow runs collapsed as x^k, segments joined without separator
// when every arrow name is a single character.
inline std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty())
        return q.vertices.size() == 1 ? std::string("1") : "e" + q.vertices[p.source];
    bool compact = std::all_of(q.arrows.begin(), q.arrows.end(), [](const Quiver::Arrow& a) {
        return detail::utf8_codepoints(a.name) == 1;
    });
    std::string out;
    std::size_t i = 0;
    while (i < p.arrows.size()) {
        std::size_t j = i;
        while (j < p.arrows.size() && p.arrows[j] == p.arrows[i]) ++j;
        if (!out.empty() && !compact) out += "*";
        out += q.arrows[p.arrows[i]].name;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// All paths of length <= bound, ordered by (length, lexicographic on arrows).
inline std::vector<Path> enumerate_paths(const Quiver& q, std::size_t bound) {
    std::vector<Path> all;
    std::vector<Path> frontier;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) frontier.push_back(Path{v, {}});
    all = frontier;
    for (std::size_t len = 1; len <= bound; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            std::size_t at = p.target(q);
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].source != at) continue;
                Path ext = p;
                if (ext.arrows.empty()) ext.source = q.arrows[a].source;
                ext.arrows.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return all;
}

// ---------------------------------------------------------------------------
// presentation DSL
//
//   algebra NAME
//   vertex v1 v2 ...
//   arrow a : v1 -> v2
//   relation TERM (("+"|"-") [COEF "*"] TERM)*    TERM = arrows joined by "*"
//   maxlen N
//
// Line-oriented, UTF-8, '#' starts a comment.
// ---------------------------------------------------------------------------

namespace detail {

struct LineScanner {
    const std::string& text;
    std::size_t line_no;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    std::size_t col() const { return pos + 1; }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume_arrow_sym() {
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            pos += 2;
            return true;
        }
        return false;
    }
    // maximal run of name characters plus '/', used for names and rationals
    std::string token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (name_char(c) || c == '/' || c == '_') {
                ++pos;
            } else {
                break;
            }
        }
        return text.substr(start, pos - start);
    }
};

struct RawTerm {
    Scalar coeff;
    std::vector<std::string> arrow_names;
    std::size_t col;
};

// signed sum of optional-coefficient '*'-joined factor lists
inline std::vector<RawTerm> parse_linear_expr(LineScanner& sc, std::size_t line_no) {
    std::vector<RawTerm> terms;
    bool first = true;
    while (!sc.done()) {
        Scalar sign = 1;
        if (sc.peek() == '+' || sc.peek() == '-') {
            sign = sc.peek() == '-' ? -1 : 1;
            sc.consume(sc.peek());
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", line_no, sc.col());
        }
        std::size_t term_col = sc.col();
        std::vector<std::string> factors;
        while (true) {
            std::string f = sc.token();
            if (f.empty()) throw ParseError("expected a term", line_no, sc.col());
            factors.push_back(f);
            if (!sc.consume('*')) break;
        }
        RawTerm t;
        t.col = term_col;
        t.coeff = sign;
        std::size_t begin = 0;
        if (looks_like_rational(factors[0])) {
            if (factors.size() == 1)
                throw ParseError("coefficient without a path term", line_no, term_col);
            t.coeff *= scalar_from_string(factors[0]);
            begin = 1;
        }
        t.arrow_names.assign(factors.begin() + begin, factors.end());
        terms.push_back(std::move(t));
        first = false;
    }
    if (terms.empty()) throw ParseError("empty relation", line_no, sc.col());
    return terms;
}

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool saw_name = false, saw_maxlen = false;
    struct PendingRelation {
        std::vector<detail::RawTerm> terms;
        std::size_t line;
    };
    std::vector<PendingRelation> pending;

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
        if (keyword == "algebra") {
            p.name = sc.token();
            if (p.name.empty()) throw ParseError("missing algebra name", line_no, sc.col());
            saw_name = true;
        } else if (keyword == "vertex") {
            bool any = false;
            while (!sc.done()) {
                std::string v = sc.token();
                if (v.empty()) throw ParseError("bad vertex name", line_no, sc.col());
                if (p.quiver.vertex_index(v))
                    throw ParseError("duplicate vertex '" + v + "'", line_no, sc.col());
                p.quiver.vertices.push_back(v);
                any = true;
            }
            if (!any) throw ParseError("missing vertex names", line_no, sc.col());
        } else if (keyword == "arrow") {
            std::string name = sc.token();
            if (name.empty()) throw ParseError("missing arrow name", line_no, sc.col());
            if (p.quiver.arrow_index(name))
                throw ParseError("duplicate arrow '" + name + "'", line_no, sc.col());
            if (!sc.consume(':')) throw ParseError("expected ':'", line_no, sc.col());
            std::string src = sc.token();
            if (!sc.consume_arrow_sym()) throw ParseError("expected '->'", line_no, sc.col());
            std::size_t dst_col = sc.col();
            std::string dst = sc.token();
            auto si = p.quiver.vertex_index(src);
            if (!si) throw UnknownVertex("unknown vertex '" + src + "'", line_no, sc.col());
            auto ti = p.quiver.vertex_index(dst);
            if (!ti) throw UnknownVertex("unknown vertex '" + dst + "'", line_no, dst_col);
            if (!sc.done()) throw ParseError("trailing input after arrow", line_no, sc.col());
            p.quiver.arrows.push_back({name, *si, *ti});
        } else if (keyword == "relation") {
            pending.push_back({detail::parse_linear_expr(sc, line_no), line_no});
        } else if (keyword == "maxlen") {
            std::string n = sc.token();
            if (!looks_like_rational(n) || n.find('/') != std::string::npos)
                throw ParseError("maxlen expects an integer", line_no, sc.col());
            long v = std::stol(n);
            if (v < 2) throw ParseError("maxlen must be at least 2", line_no, sc.col());
            p.maxlen = static_cast<std::size_t>(v);
            saw_maxlen = true;
        } else {
            throw ParseError("unknown keyword '" + keyword + "'", line_no, 1);
        }
    }
    if (!saw_name) throw ParseError("missing 'algebra NAME' line", line_no, 1);
    if (p.quiver.vertices.empty()) throw ParseError("no vertices declared", line_no, 1);
    if (!saw_maxlen) throw ParseError("missing 'maxlen N' line", line_no, 1);

    // resolve relation terms into composable parallel paths
    for (const auto& pr : pending) {
        Relation rel;
        rel.line = pr.line;
        for (const auto& t : pr.terms) {
            Path path;
            for (std::size_t k = 0; k < t.arrow_names.size(); ++k) {
                auto ai = p.quiver.arrow_index(t.arrow_names[k]);
                if (!ai)
                    throw ParseError("unknown arrow '" + t.arrow_names[k] + "'", pr.line, t.col);
                const auto& arr = p.quiver.arrows[*ai];
                if (k == 0) {
                    path.source = arr.source;
                } else if (p.quiver.arrows[path.arrows.back()].target != arr.source) {
                    throw NonComposablePath("term is not a composable path", pr.line, t.col);
                }
                path.arrows.push_back(*ai);
            }
            if (path.length() < 2)
                throw RelationTooShort("relation terms must have length at least 2",
                                       pr.line, t.col);
            rel.terms.emplace_back(t.coeff, std::move(path));
        }
        for (const auto& [c, path] : rel.terms) {
            if (path.source != rel.source() || path.target(p.quiver) != rel.terms.front().second.target(p.quiver))
                throw ParseError("relation terms are not parallel paths", pr.line, 1);
        }
        p.relations.push_back(std::move(rel));
    }
    return p;
}

// ---------------------------------------------------------------------------
// quotient construction
// ---------------------------------------------------------------------------

namespace detail {

struct WorkingSpace {
    std::vector<Path> paths;                  // all paths of length < bound
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    RowSpan ideal;                            // RREF of the truncated ideal span

    std::optional<std::size_t> find(const Path& p) const {
        auto it = index.find({p.source, p.arrows});
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

// Span of all truncated products u * r * v inside the span of paths of
// length < bound; together with J^bound this is the ideal being divided out.
inline WorkingSpace ideal_span(const Presentation& p, std::size_t bound) {
    WorkingSpace ws{enumerate_paths(p.quiver, bound - 1), {}, RowSpan(0)};
    for (std::size_t i = 0; i < ws.paths.size(); ++i)
        ws.index[{ws.paths[i].source, ws.paths[i].arrows}] = i;
    ws.ideal = RowSpan(ws.paths.size());

    for (const auto& rel : p.relations) {
        std::size_t rel_src = rel.source();
        std::size_t rel_tgt = rel.target(p.quiver);
        std::size_t min_len = rel.min_length();
        for (const auto& u : ws.paths) {
            if (u.target(p.quiver) != rel_src) continue;
            if (u.length() + min_len > bound - 1) continue;
            for (const auto& v : ws.paths) {
                if (rel_tgt != v.source) continue;
                if (u.length() + min_len + v.length() > bound - 1) continue;
                Vec gen = vec_zero(ws.paths.size());
                bool nonzero = false;
                for (const auto& [c, term] : rel.terms) {
                    std::size_t total = u.length() + term.length() + v.length();
                    if (total > bound - 1) continue;  // falls into J^bound
                    Path full = compose(p.quiver, compose(p.quiver, u, term), v);
                    auto idx = ws.find(full);
                    gen[*idx] += c;
                    nonzero = true;
                }
                if (nonzero) ws.ideal.insert(std::move(gen));
            }
        }
    }
    return ws;
}

}  // namespace detail

struct QuotientAlgebra {
    Algebra algebra;
    std::vector<Path> basis_paths;  // quotient basis, labeling the algebra basis
    Presentation presentation;

    std::optional<std::size_t> basis_index(const Path& p) const {
        for (std::size_t i = 0; i < basis_paths.size(); ++i)
            if (basis_paths[i] == p) return i;
        return std::nullopt;
    }
    std::optional<std::size_t> label_index(const std::string& label) const {
        for (std::size_t i = 0; i < algebra.dim(); ++i)
            if (algebra.label(i) == label) return i;
        return std::nullopt;
    }

    // Span of the positive-length basis paths; the arrow ideal of the quotient.
    Subspace positive_length_span() const {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < basis_paths.size(); ++i)
            if (basis_paths[i].length() > 0) vs.push_back(algebra.basis_element(i).coords());
        return Subspace::from_vectors(algebra, vs);
    }
};

namespace detail {

inline std::size_t quotient_dim(const Presentation& p, std::size_t bound) {
    WorkingSpace ws = ideal_span(p, bound);
    return ws.paths.size() - ws.ideal.rank();
}

}  // namespace detail

// Compiles the presentation over the working space of paths of length
// < maxlen. The quotient basis is the set of free columns of the truncated
// ideal's RREF; products that leave the working space are zero. A probe
// rebuild at maxlen+1 guards against an understated bound.
inline QuotientAlgebra build_algebra(const Presentation& p, bool probe = true) {
    detail::WorkingSpace ws = detail::ideal_span(p, p.maxlen);

    std::vector<bool> is_pivot(ws.paths.size(), false);
    for (std::size_t c : ws.ideal.pivots()) is_pivot[c] = true;
    std::vector<Path> basis;
    std::vector<std::size_t> col_of_basis;
    std::vector<std::size_t> basis_of_col(ws.paths.size(), SIZE_MAX);
    for (std::size_t c = 0; c < ws.paths.size(); ++c) {
        if (is_pivot[c]) continue;
        basis_of_col[c] = basis.size();
        basis.push_back(ws.paths[c]);
        col_of_basis.push_back(c);
    }
    std::size_t n = basis.size();

    if (probe && detail::quotient_dim(p, p.maxlen + 1) != n)
        throw InconsistentBound(
            "quotient dimension changes when the length bound is raised; "
            "maxlen does not dominate the ideal");

    auto to_coords = [&](Vec full) {
        full = ws.ideal.reduce(std::move(full));
        Vec out = vec_zero(n);
        for (std::size_t c = 0; c < full.size(); ++c)
            if (!full[c].is_zero()) out[basis_of_col[c]] = full[c];
        return out;
    };

    std::vector<Vec> table(n * n, vec_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Path& a = basis[i];
            const Path& b = basis[j];
            if (a.target(p.quiver) != b.source) continue;
            if (a.length() + b.length() > p.maxlen - 1) continue;
            Path ab = compose(p.quiver, a, b);
            Vec full = vec_zero(ws.paths.size());
            full[*ws.find(ab)] = 1;
            table[i * n + j] = to_coords(std::move(full));
        }

    Vec one_full = vec_zero(ws.paths.size());
    for (std::size_t v = 0; v < p.quiver.vertices.size(); ++v)
        one_full[*ws.find(Path{v, {}})] = 1;

    std::vector<std::string> labels;
    for (const auto& path : basis) labels.push_back(path_label(p.quiver, path));

    Algebra alg = Algebra::create(std::move(labels), std::move(table),
                                  to_coords(std::move(one_full)), p.name);
    return QuotientAlgebra{std::move(alg), std::move(basis), p};
}

inline QuotientAlgebra build_algebra(const std::string& dsl, bool probe = true) {
    return build_algebra(parse_presentation(dsl), probe);
}

// ---------------------------------------------------------------------------
// builtin constructors
// ---------------------------------------------------------------------------

inline Algebra builtin(const std::string& name, std::size_t param) {
    if (name == "matrix") {
        if (param < 1) throw UnknownBuiltin("matrix size must be at least 1");
        std::size_t n = param, dim = n * n;
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
        return Algebra::create(std::move(labels), std::move(table), std::move(one),
                               "matrix:" + std::to_string(n));
    }
    if (name == "cyclic_group") {
        if (param < 1) throw UnknownBuiltin("cyclic group order must be at least 1");
        std::size_t n = param;
        std::vector<std::string> labels(n);
        for (std::size_t i = 0; i < n; ++i)
            labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
        std::vector<Vec> table(n * n, vec_zero(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) table[i * n + j][(i + j) % n] = 1;
        Vec one = vec_zero(n);
        one[0] = 1;
        return Algebra::create(std::move(labels), std::move(table), std::move(one),
                               "cyclic_group:" + std::to_string(n));
    }
    if (name == "truncated_poly") {
        std::size_t dim = param + 1;
        std::vector<std::string> labels(dim);
        for (std::size_t i = 0; i < dim; ++i)
            labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
        std::vector<Vec> table(dim * dim, vec_zero(dim));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (i + j < dim) table[i * dim + j][i + j] = 1;
        Vec one = vec_zero(dim);
        one[0] = 1;
        return Algebra::create(std::move(labels), std::move(table), std::move(one),
                               "truncated_poly:" + std::to_string(param));
    }
    throw UnknownBuiltin("unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------
// structural classifiers
// ---------------------------------------------------------------------------

struct QuiverFlags {
    bool acyclic = false;
    bool connected = false;
    bool toupie = false;
    bool radical_square_zero = false;
    bool single_vertex = false;
};

inline QuiverFlags classify(const Presentation& p) {
    const Quiver& q = p.quiver;
    std::size_t nv = q.vertices.size();
    QuiverFlags f;
    f.single_vertex = nv == 1;

    // directed cycle detection
    std::vector<int> state(nv, 0);
    std::vector<std::vector<std::size_t>> out(nv);
    for (const auto& a : q.arrows) out[a.source].push_back(a.target);
    bool cycle = false;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        state[v] = 1;
        for (std::size_t w : out[v]) {
            if (state[w] == 1) cycle = true;
            else if (state[w] == 0) self(self, w);
            if (cycle) return;
        }
        state[v] = 2;
    };
    for (std::size_t v = 0; v < nv && !cycle; ++v)
        if (state[v] == 0) dfs(dfs, v);
    f.acyclic = !cycle;

    // undirected connectivity
    std::vector<bool> seen(nv, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& a : q.arrows) {
            if (a.source == v && !seen[a.target]) { seen[a.target] = true; stack.push_back(a.target); }
            if (a.target == v && !seen[a.source]) { seen[a.source] = true; stack.push_back(a.source); }
        }
    }
    f.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });

    // one source, one sink, all intermediate vertices of in/out degree 1
    std::vector<std::size_t> indeg(nv, 0), outdeg(nv, 0);
    for (const auto& a : q.arrows) {
        ++outdeg[a.source];
        ++indeg[a.target];
    }
    std::vector<std::size_t> sources, sinks;
    for (std::size_t v = 0; v < nv; ++v) {
        if (indeg[v] == 0) sources.push_back(v);
        if (outdeg[v] == 0) sinks.push_back(v);
    }
    f.toupie = sources.size() == 1 && sinks.size() == 1 && sources[0] != sinks[0];
    if (f.toupie)
        for (std::size_t v = 0; v < nv; ++v)
            if (v != sources[0] && v != sinks[0] && (indeg[v] != 1 || outdeg[v] != 1))
                f.toupie = false;

    // relations generate exactly J^2 on the working space
    detail::WorkingSpace ws = detail::ideal_span(p, p.maxlen);
    RowSpan j2(ws.paths.size());
    for (std::size_t c = 0; c < ws.paths.size(); ++c)
        if (ws.paths[c].length() >= 2) {
            Vec v = vec_zero(ws.paths.size());
            v[c] = 1;
            j2.insert(std::move(v));
        }
    f.radical_square_zero = ws.ideal.rows() == j2.rows();
    return f;
}

// For monomial ideals the quotient basis is exactly the set of paths of
// length < maxlen avoiding every relation path as a contiguous subpath.
// Returns nothing when some relation is not a single scaled path.
inline std::optional<std::vector<Path>> monomial_basis(const Presentation& p) {
    std::vector<std::vector<std::size_t>> words;
    for (const auto& r : p.relations) {
        if (r.terms.size() != 1) return std::nullopt;
        words.push_back(r.terms.front().second.arrows);
    }
    auto contains_subword = [](const std::vector<std::size_t>& seq,
                               const std::vector<std::size_t>& word) {
        if (word.size() > seq.size()) return false;
        for (std::size_t i = 0; i + word.size() <= seq.size(); ++i)
            if (std::equal(word.begin(), word.end(), seq.begin() + i)) return true;
        return false;
    };
    std::vector<Path> basis;
    for (const auto& path : enumerate_paths(p.quiver, p.maxlen - 1)) {
        bool hit = false;
        for (const auto& w : words)
            if (contains_subword(path.arrows, w)) { hit = true; break; }
        if (!hit) basis.push_back(path);
    }
    return basis;
}

}  // namespace nfalg
