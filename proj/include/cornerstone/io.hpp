#ifndef CORNERSTONE_IO_HPP
#define CORNERSTONE_IO_HPP

// Text input for algebras, modules, idempotents and bimodules; a writer for
// the table form; JSON emitters for reports.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cornerstone/evidence.hpp"
#include "cornerstone/quiver.hpp"

namespace cornerstone {

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

struct InputFile {
    AlgebraPtr algebra;
    std::optional<QuiverPresentation> quiver;
    std::vector<std::string> module_names;  // file order
    std::map<std::string, Module> modules;
    std::vector<std::string> idempotent_names;
    std::map<std::string, Idempotent> idempotents;

    const Module& module(const std::string& name) const {
        auto it = modules.find(name);
        if (it == modules.end()) throw Error(ErrorKind::ValidationError, "no module named " + name);
        return it->second;
    }
};

/// Actions of every basis element from actions of the radical generators.
/// Idempotents act by the vertex projections; elements that are not
/// generators are reached as products. `right` selects a right action,
/// where x*g acts as R(g) R(x). Explicitly given non-generators must agree.
inline std::vector<Matrix> derive_actions(const Algebra& a, const std::vector<std::size_t>& vertex_of,
                                          const std::map<std::size_t, Matrix>& given, bool right) {
    const Field& f = a.field;
    const std::size_t n = vertex_of.size(), d = a.dim();
    std::vector<Vector> vecs;
    std::vector<Matrix> mats;
    RowSpace span(f, d);
    auto push = [&](const Vector& v, const Matrix& m) {
        if (span.insert(v)) {
            vecs.push_back(v);
            mats.push_back(m);
            return true;
        }
        return false;
    };
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        Matrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            if (vertex_of[i] == v) p(i, i) = 1;
        push(a.basis_vector(a.primitives[v]), p);
    }
    std::vector<std::pair<Vector, Matrix>> gens;
    for (auto g : a.generators) {
        auto it = given.find(g);
        Matrix m = it == given.end() ? Matrix(n, n) : it->second;
        gens.emplace_back(a.basis_vector(g), m);
        push(a.basis_vector(g), m);
    }
    for (std::size_t k = 0; k < vecs.size() && vecs.size() < d; ++k)
        for (const auto& [gv, gm] : gens) {
            Vector x = vecs[k];
            Matrix mk = mats[k];
            if (right) push(a.multiply(x, gv), multiply(f, gm, mk));
            else push(a.multiply(gv, x), multiply(f, gm, mk));
        }
    if (vecs.size() != d) throw Error(ErrorKind::Internal, "generators do not span the algebra");
    // express each basis vector in the collected spanning set
    Matrix basis(d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) basis(r, c) = vecs[c][r];
    Matrix inv = inverse(f, basis);
    std::vector<Matrix> out;
    for (std::size_t b = 0; b < d; ++b) {
        Matrix m(n, n);
        for (std::size_t c = 0; c < d; ++c)
            if (inv(c, b)) m = add(f, m, scale(f, mats[c], inv(c, b)));
        auto it = given.find(b);
        if (it != given.end() && !(it->second == m))
            throw Error(ErrorKind::ValidationError, "action of " + a.labels[b] + " is inconsistent with the generators");
        out.push_back(std::move(m));
    }
    return out;
}

/// Module from per-vertex dimensions and blocks (target x source) for some
/// basis elements, typically the arrows.
inline Module module_from_blocks(const AlgebraPtr& alg, const std::vector<std::size_t>& dims,
                                 const std::map<std::size_t, Matrix>& blocks) {
    const Algebra& a = *alg;
    std::vector<std::size_t> vertex_of, offset(dims.size(), 0);
    for (std::size_t v = 0; v < dims.size(); ++v) {
        offset[v] = vertex_of.size();
        for (std::size_t i = 0; i < dims[v]; ++i) vertex_of.push_back(v);
    }
    std::map<std::size_t, Matrix> full;
    for (const auto& [b, m] : blocks) {
        std::size_t t = a.target[b], s = a.source[b];
        if (m.rows() != dims[t] || m.cols() != dims[s])
            throw Error(ErrorKind::ValidationError, "matrix for " + a.labels[b] + " must be " + std::to_string(dims[t]) + " x " +
                                                        std::to_string(dims[s]));
        Matrix x(vertex_of.size(), vertex_of.size());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) x(offset[t] + i, offset[s] + j) = m(i, j);
        full[b] = std::move(x);
    }
    auto acts = derive_actions(a, vertex_of, full, false);
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        std::size_t t = a.target[b], s = a.source[b];
        Matrix x(dims[t], dims[s]);
        for (std::size_t i = 0; i < dims[t]; ++i)
            for (std::size_t j = 0; j < dims[s]; ++j) x(i, j) = acts[b](offset[t] + i, offset[s] + j);
        action.push_back(std::move(x));
    }
    Module m(alg, dims, std::move(action));
    validate(m);
    return m;
}

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, pos + 1, what); }
    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip();
        return pos >= text.size();
    }
    bool peek(char c) {
        skip();
        return pos < text.size() && text[pos] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string word() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("unexpected end of line");
        return text.substr(start, pos - start);
    }
    std::size_t column() {
        skip();
        return pos + 1;
    }
    std::int64_t integer() {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) {
            pos = start;
            fail("expected an integer");
        }
        try {
            return std::stoll(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            pos = start;
            fail("integer out of range");
        }
    }
    std::string name() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\'' ||
                                     text[pos] == ':' || text[pos] == '@'))
            ++pos;
        if (start == pos) fail("expected a label");
        return text.substr(start, pos - start);
    }
};

inline std::size_t to_count(Cursor& c) {
    std::size_t col = c.column();
    std::int64_t v = c.integer();
    if (v < 0) throw ParseError(c.line, col, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

/// [[1 0, 0 1]] or [[1,0],[0,1]] or [[1 0] [0 1]]; [[ ]] and [] are empty.
inline std::vector<std::vector<std::int64_t>> matrix_literal(Cursor& c) {
    c.expect('[');
    std::vector<std::vector<std::int64_t>> rows;
    if (c.peek(']')) {
        ++c.pos;
        return rows;
    }
    if (c.peek('[')) {
        while (c.peek('[')) {
            ++c.pos;
            std::vector<std::int64_t> row;
            // with space-separated entries a comma ends a row: [[1 0, 0 1]]
            bool spaced = false, after_comma = true;
            while (!c.peek(']')) {
                if (c.done()) c.fail("unterminated matrix");
                if (c.peek(',')) {
                    ++c.pos;
                    if (spaced) {
                        rows.push_back(std::move(row));
                        row.clear();
                    }
                    after_comma = true;
                    continue;
                }
                if (!after_comma) spaced = true;
                row.push_back(c.integer());
                after_comma = false;
            }
            ++c.pos;
            rows.push_back(std::move(row));
            if (c.peek(',')) ++c.pos;
        }
    } else {
        std::vector<std::int64_t> row;
        while (!c.peek(']')) {
            if (c.done()) c.fail("unterminated matrix");
            if (c.peek(',')) {
                ++c.pos;
                rows.push_back(std::move(row));
                row.clear();
                continue;
            }
            row.push_back(c.integer());
        }
        rows.push_back(std::move(row));
    }
    c.expect(']');
    if (rows.size() == 1 && rows[0].empty()) rows.clear();
    return rows;
}

inline Matrix to_matrix(Cursor& c, std::size_t col, const Field& f, const std::vector<std::vector<std::int64_t>>& rows,
                        std::size_t r, std::size_t k) {
    Matrix m(r, k);
    if (rows.empty()) return m;  // omitted entries: zero
    if (rows.size() != r) throw ParseError(c.line, col, "expected " + std::to_string(r) + " rows, got " + std::to_string(rows.size()));
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != k)
            throw ParseError(c.line, col, "expected " + std::to_string(k) + " columns, got " + std::to_string(rows[i].size()));
        for (std::size_t j = 0; j < k; ++j) m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    lines.push_back(cur);
    for (auto& l : lines) {
        auto h = l.find('#');
        if (h != std::string::npos) l.resize(h);
    }
    return lines;
}

struct PendingModule {
    std::string name;
    std::size_t line = 0;
    std::optional<std::vector<std::size_t>> dims;
    std::vector<std::tuple<std::string, std::size_t, std::size_t, std::vector<std::vector<std::int64_t>>>> blocks;
};

}  // namespace detail

/// Parses an algebra file: either a quiver presentation (`arrow`, `relation`)
/// or a structure-constant table (`basis`, `product`), followed by `module`
/// blocks and `idempotent` lines.
inline InputFile parse_input(const std::string& text) {
    using detail::Cursor;
    auto lines = detail::split_lines(text);
    std::optional<Field> field;
    std::vector<std::string> vertices;
    std::size_t vertices_line = 0;
    QuiverPresentation q;
    std::vector<std::pair<std::size_t, std::string>> relation_lines;  // parsed once arrows are known
    struct Basis {
        std::string label;
        std::size_t src, tgt;
        bool primitive;
    };
    std::vector<Basis> basis;
    std::vector<std::pair<std::size_t, std::string>> product_lines;
    std::vector<detail::PendingModule> modules;
    std::vector<std::tuple<std::size_t, std::string, std::vector<std::string>>> idems;

    auto vertex_index = [&](Cursor& c, const std::string& v, std::size_t col) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return i;
        throw ParseError(c.line, col, "unknown vertex " + v);
    };

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        Cursor c{lines[ln], ln + 1};
        if (c.done()) continue;
        std::size_t kcol = c.column();
        std::string key = c.word();
        if (key == "field") {
            std::size_t col = c.column();
            std::int64_t p = c.integer();
            if (p < 2 || p > 2147483647 || !is_prime(static_cast<std::uint64_t>(p)))
                throw Error(ErrorKind::NotPrime, "field modulus " + std::to_string(p) + " is not prime (line " +
                                                     std::to_string(c.line) + ", column " + std::to_string(col) + ")");
            field = Field(static_cast<Scalar>(p));
        } else if (key == "vertices") {
            if (!vertices.empty()) throw ParseError(c.line, kcol, "vertices declared twice");
            while (!c.done()) {
                std::size_t col = c.column();
                std::string v = c.word();
                for (const auto& w : vertices)
                    if (w == v) throw ParseError(c.line, col, "duplicate vertex " + v);
                vertices.push_back(v);
            }
            if (vertices.empty()) throw ParseError(c.line, c.column(), "empty vertex list");
            vertices_line = c.line;
        } else if (key == "arrow" && !modules.empty()) {
            auto& m = modules.back();
            std::size_t col = c.column();
            std::string label = c.word();
            std::size_t mcol = c.column();
            if (!c.peek('[')) throw ParseError(c.line, mcol, "expected a matrix for arrow " + label + " in module " + m.name);
            m.blocks.emplace_back(label, c.line, mcol, detail::matrix_literal(c));
            (void)col;
        } else if (key == "act") {
            if (modules.empty()) throw ParseError(c.line, kcol, "act outside a module block");
            std::string label = c.word();
            std::size_t mcol = c.column();
            modules.back().blocks.emplace_back(label, c.line, mcol, detail::matrix_literal(c));
        } else if (key == "arrow") {
            if (vertices.empty()) throw ParseError(c.line, kcol, "arrow before vertices");
            std::string label = c.name();
            std::size_t sc = c.column();
            std::size_t s = vertex_index(c, c.word(), sc);
            std::size_t tc = c.column();
            std::size_t t = vertex_index(c, c.word(), tc);
            for (const auto& a : q.arrows)
                if (a.label == label) throw ParseError(c.line, kcol, "duplicate arrow " + label);
            q.arrows.push_back({label, s, t});
        } else if (key == "relation") {
            relation_lines.emplace_back(ln, lines[ln]);
        } else if (key == "basis") {
            if (vertices.empty()) throw ParseError(c.line, kcol, "basis before vertices");
            std::string label = c.word();
            std::size_t sc = c.column();
            std::size_t s = vertex_index(c, c.word(), sc);
            std::size_t tc = c.column();
            std::size_t t = vertex_index(c, c.word(), tc);
            bool prim = false;
            if (!c.done()) {
                std::size_t pc = c.column();
                if (c.word() != "primitive") throw ParseError(c.line, pc, "expected 'primitive'");
                prim = true;
            }
            basis.push_back({label, s, t, prim});
        } else if (key == "product") {
            product_lines.emplace_back(ln, lines[ln]);
        } else if (key == "module") {
            detail::PendingModule m;
            m.name = c.word();
            m.line = c.line;
            for (const auto& o : modules)
                if (o.name == m.name) throw ParseError(c.line, kcol, "duplicate module " + m.name);
            modules.push_back(std::move(m));
        } else if (key == "dim") {
            if (modules.empty()) throw ParseError(c.line, kcol, "dim outside a module block");
            std::vector<std::size_t> d;
            while (!c.done()) d.push_back(detail::to_count(c));
            modules.back().dims = std::move(d);
        } else if (key == "idempotent") {
            std::string name = c.word();
            std::vector<std::string> vs;
            while (!c.done()) vs.push_back(c.word());
            idems.emplace_back(c.line, name, std::move(vs));
        } else {
            throw ParseError(c.line, kcol, "unknown keyword " + key);
        }
        if (!c.done() && key != "relation" && key != "product") c.fail("trailing input");
    }

    if (vertices.empty()) throw ParseError(vertices_line ? vertices_line : 1, 1, "missing or empty vertices list");
    InputFile out;
    Field f = field.value_or(Field(101));
    if (!basis.empty() && (!q.arrows.empty() || !relation_lines.empty()))
        throw ParseError(1, 1, "a file describes either a quiver or a table, not both");

    if (basis.empty()) {
        q.vertices = vertices;
        for (const auto& [ln, text] : relation_lines) {
            Cursor c{text, ln + 1};
            c.word();
            Relation rel;
            bool first = true;
            while (!c.done()) {
                std::int64_t sign = 1;
                if (c.peek('+') || c.peek('-')) {
                    sign = c.text[c.pos] == '-' ? -1 : 1;
                    ++c.pos;
                } else if (!first) {
                    c.fail("expected '+' or '-'");
                }
                first = false;
                std::int64_t coeff = 1;
                if (!c.peek('(')) {
                    coeff = c.integer();
                    if (coeff < 0) c.fail("put the sign in front of the term");
                    c.expect('*');
                }
                c.expect('(');
                PathTerm term;
                term.coeff = sign * coeff;
                while (true) {
                    std::size_t col = c.column();
                    std::string a = c.name();
                    std::size_t idx = SIZE_MAX;
                    for (std::size_t i = 0; i < q.arrows.size(); ++i)
                        if (q.arrows[i].label == a) idx = i;
                    if (idx == SIZE_MAX) throw ParseError(c.line, col, "unknown arrow " + a);
                    term.arrows.push_back(idx);
                    if (c.peek('.')) {
                        ++c.pos;
                        continue;
                    }
                    break;
                }
                c.expect(')');
                rel.terms.push_back(std::move(term));
            }
            if (rel.terms.empty()) c.fail("empty relation");
            q.relations.push_back(std::move(rel));
        }
        out.algebra = build_algebra_from_quiver(q, f);
        out.quiver = q;
    } else {
        auto alg = std::make_shared<Algebra>();
        alg->field = f;
        alg->vertex_labels = vertices;
        const std::size_t d = basis.size();
        alg->primitives.assign(vertices.size(), SIZE_MAX);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < d; ++i) {
            if (index.count(basis[i].label)) throw Error(ErrorKind::ValidationError, "duplicate basis label " + basis[i].label);
            index[basis[i].label] = i;
            alg->labels.push_back(basis[i].label);
            alg->source.push_back(basis[i].src);
            alg->target.push_back(basis[i].tgt);
            if (basis[i].primitive) {
                if (basis[i].src != basis[i].tgt || alg->primitives[basis[i].src] != SIZE_MAX)
                    throw Error(ErrorKind::ValidationError, "bad primitive " + basis[i].label);
                alg->primitives[basis[i].src] = i;
            } else {
                alg->radical.push_back(i);
            }
        }
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (alg->primitives[v] == SIZE_MAX) throw Error(ErrorKind::ValidationError, "vertex " + vertices[v] + " has no primitive");
        alg->table.assign(d * d * d, 0);
        // products of idempotents with homogeneous elements are implied
        for (std::size_t b = 0; b < d; ++b) {
            alg->table[(alg->primitives[alg->target[b]] * d + b) * d + b] = 1;
            alg->table[(b * d + alg->primitives[alg->source[b]]) * d + b] = 1;
        }
        auto lookup = [&](Cursor& c, const std::string& l, std::size_t col) {
            auto it = index.find(l);
            if (it == index.end()) throw ParseError(c.line, col, "unknown basis element " + l);
            return it->second;
        };
        for (const auto& [ln, text] : product_lines) {
            Cursor c{text, ln + 1};
            c.word();
            std::size_t ic = c.column();
            std::size_t i = lookup(c, c.word(), ic);
            std::size_t jc = c.column();
            std::size_t j = lookup(c, c.word(), jc);
            Vector v(d, 0);
            bool first = true;
            while (!c.done()) {
                std::int64_t sign = 1;
                if (c.peek('+') || c.peek('-')) {
                    sign = c.text[c.pos] == '-' ? -1 : 1;
                    ++c.pos;
                } else if (!first) {
                    c.fail("expected '+' or '-'");
                }
                first = false;
                std::size_t col = c.column();
                std::int64_t coeff = c.integer();
                if (coeff == 0 && c.done()) break;
                c.expect('*');
                std::size_t kc = c.column();
                std::size_t k = lookup(c, c.word(), kc);
                v[k] = f.add(v[k], f.from_int(sign * coeff));
                (void)col;
            }
            std::copy(v.begin(), v.end(), alg->table.begin() + (i * d + j) * d);
        }
        finalize(*alg);
        validate(*alg);
        out.algebra = alg;
    }

    const Algebra& a = *out.algebra;
    for (const auto& pm : modules) {
        if (!pm.dims) throw ParseError(pm.line, 1, "module " + pm.name + " has no dim line");
        if (pm.dims->size() != a.vertex_count())
            throw ParseError(pm.line, 1, "module " + pm.name + " needs one dimension per vertex");
        std::map<std::size_t, Matrix> blocks;
        for (const auto& [label, line, col, rows] : pm.blocks) {
            std::string text;
            Cursor c{text, line};
            std::size_t b = SIZE_MAX;
            for (std::size_t i = 0; i < a.dim(); ++i)
                if (a.labels[i] == label) b = i;
            if (b == SIZE_MAX) throw ParseError(line, col, "unknown arrow or basis element " + label);
            if (blocks.count(b)) throw ParseError(line, col, "action of " + label + " given twice");
            blocks[b] = detail::to_matrix(c, col, a.field, rows, (*pm.dims)[a.target[b]], (*pm.dims)[a.source[b]]);
        }
        out.modules.emplace(pm.name, module_from_blocks(out.algebra, *pm.dims, blocks));
        out.module_names.push_back(pm.name);
    }
    for (const auto& [line, name, vs] : idems) {
        std::vector<std::size_t> idx;
        for (const auto& v : vs) {
            auto it = std::find(a.vertex_labels.begin(), a.vertex_labels.end(), v);
            if (it == a.vertex_labels.end()) throw ParseError(line, 1, "unknown vertex " + v + " in idempotent " + name);
            idx.push_back(static_cast<std::size_t>(it - a.vertex_labels.begin()));
        }
        if (out.idempotents.count(name)) throw ParseError(line, 1, "duplicate idempotent " + name);
        out.idempotents.emplace(name, make_idempotent(a, idx));
        out.idempotent_names.push_back(name);
    }
    return out;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline InputFile parse_file(const std::string& path) { return parse_input(read_text_file(path)); }

/// Vertex labels (or an idempotent name from the file) to an idempotent.
inline Idempotent resolve_idempotent(const InputFile& in, const std::vector<std::string>& spec) {
    if (spec.size() == 1 && in.idempotents.count(spec[0])) return in.idempotents.at(spec[0]);
    const Algebra& a = *in.algebra;
    std::vector<std::size_t> idx;
    for (const auto& v : spec) {
        auto it = std::find(a.vertex_labels.begin(), a.vertex_labels.end(), v);
        if (it == a.vertex_labels.end()) throw Error(ErrorKind::ValidationError, "unknown vertex " + v);
        idx.push_back(static_cast<std::size_t>(it - a.vertex_labels.begin()));
    }
    return make_idempotent(a, idx);
}

/// Bimodule file, for an S-T-bimodule:
///   bimodule NAME
///   dim N
///   left_vertex  <S-vertex per basis vector>
///   right_vertex <T-vertex per basis vector>
///   left <S-label> [[N x N]]
///   right <T-label> [[N x N]]
/// Only generators need to be given; right actions compose as m.(xy) = (m.x).y.
inline Bimodule parse_bimodule(const std::string& text, const AlgebraPtr& s, const AlgebraPtr& t) {
    using detail::Cursor;
    auto lines = detail::split_lines(text);
    std::optional<std::size_t> n;
    std::vector<std::size_t> lv, rv;
    std::vector<std::tuple<bool, std::string, std::size_t, std::size_t, std::vector<std::vector<std::int64_t>>>> acts;
    auto vertex_of = [](Cursor& c, const Algebra& a, std::size_t col, const std::string& v) {
        auto it = std::find(a.vertex_labels.begin(), a.vertex_labels.end(), v);
        if (it == a.vertex_labels.end()) throw ParseError(c.line, col, "unknown vertex " + v);
        return static_cast<std::size_t>(it - a.vertex_labels.begin());
    };
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        Cursor c{lines[ln], ln + 1};
        if (c.done()) continue;
        std::size_t kcol = c.column();
        std::string key = c.word();
        if (key == "bimodule") {
            c.word();
        } else if (key == "dim") {
            n = detail::to_count(c);
        } else if (key == "left_vertex" || key == "right_vertex") {
            auto& dst = key == "left_vertex" ? lv : rv;
            const Algebra& a = key == "left_vertex" ? *s : *t;
            while (!c.done()) {
                std::size_t col = c.column();
                dst.push_back(vertex_of(c, a, col, c.word()));
            }
        } else if (key == "left" || key == "right") {
            std::string label = c.word();
            std::size_t col = c.column();
            acts.emplace_back(key == "left", label, c.line, col, detail::matrix_literal(c));
        } else {
            throw ParseError(c.line, kcol, "unknown keyword " + key);
        }
        if (!c.done()) c.fail("trailing input");
    }
    if (!n) throw ParseError(1, 1, "bimodule has no dim line");
    if (lv.size() != *n || rv.size() != *n) throw Error(ErrorKind::BimoduleMismatch, "vertex lists must have one entry per basis vector");
    std::map<std::size_t, Matrix> lg, rg;
    for (const auto& [left, label, line, col, rows] : acts) {
        const Algebra& a = left ? *s : *t;
        std::string empty;
        Cursor c{empty, line};
        auto it = std::find(a.labels.begin(), a.labels.end(), label);
        if (it == a.labels.end()) throw ParseError(line, col, "unknown basis element " + label);
        std::size_t b = static_cast<std::size_t>(it - a.labels.begin());
        (left ? lg : rg)[b] = detail::to_matrix(c, col, a.field, rows, *n, *n);
    }
    auto la = derive_actions(*s, lv, lg, false);
    auto ra = derive_actions(*t, rv, rg, true);
    // right vertices: e_w acts on the right by the projection onto grade w
    Bimodule b = make_bimodule(s, t, std::move(la), std::move(ra));
    validate(b);
    return b;
}

/// Structure-constant form, readable by parse_input.
inline std::string write_table(const Algebra& a, const std::map<std::string, Module>& modules = {}) {
    std::ostringstream o;
    o << "field " << a.field.p() << "\n";
    o << "vertices";
    for (const auto& v : a.vertex_labels) o << ' ' << v;
    o << "\n";
    std::vector<bool> prim(a.dim(), false);
    for (auto p : a.primitives) prim[p] = true;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        o << "basis " << a.labels[b] << ' ' << a.vertex_labels[a.source[b]] << ' ' << a.vertex_labels[a.target[b]];
        if (prim[b]) o << " primitive";
        o << "\n";
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (prim[i]) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (prim[j]) continue;
            auto p = a.product(i, j);
            std::string terms;
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (p[k]) terms += (terms.empty() ? "" : " + ") + std::to_string(p[k]) + "*" + a.labels[k];
            if (!terms.empty()) o << "product " << a.labels[i] << ' ' << a.labels[j] << ' ' << terms << "\n";
        }
    }
    for (const auto& [name, m] : modules) {
        o << "module " << name << "\ndim";
        for (auto d : m.dims()) o << ' ' << d;
        o << "\n";
        for (auto g : a.generators) {
            const Matrix& x = m.action(g);
            if (x.is_zero()) continue;
            o << "act " << a.labels[g] << " [";
            for (std::size_t r = 0; r < x.rows(); ++r) {
                o << '[';
                for (std::size_t c = 0; c < x.cols(); ++c) o << (c ? " " : "") << x(r, c);
                o << ']';
            }
            o << "]\n";
        }
    }
    return o.str();
}

// ---------------------------------------------------------------- JSON

using Json = nlohmann::ordered_json;

inline Json to_json(const HomDim& d) {
    Json j;
    if (d.is_finite()) {
        j["kind"] = "finite";
        j["d"] = d.value;
        j["certified"] = d.certified;
    } else {
        j["kind"] = "atLeast";
        j["cutoff"] = d.value;
    }
    j["label"] = d.str();
    return j;
}

inline Json vertex_list(const Algebra& a, const std::vector<std::size_t>& vs) {
    Json j = Json::array();
    for (auto v : vs) j.push_back(a.vertex_labels[v]);
    return j;
}

inline Json to_json(const ConditionReport& r) {
    Json j;
    j["alpha"] = to_json(r.alpha);
    j["beta"] = to_json(r.beta);
    j["gamma"] = to_json(r.gamma);
    j["delta"] = to_json(r.delta);
    j["pss"] = to_string(r.pss);
    j["fullyDecided"] = r.fully_decided;
    j["cutoff"] = r.cutoff;
    return j;
}

inline Json to_json(const TheoremBVerdict& v) {
    Json j;
    j["alphaHolds"] = v.alpha_holds;
    j["deltaHolds"] = v.delta_holds;
    j["equivalence"] = to_string(v.equivalence);
    Json tails = Json::array();
    for (const auto& t : v.tails) tails.push_back(t ? Json(*t) : Json(nullptr));
    j["tails"] = tails;
    j["chainViolations"] = v.chain_violations;
    return j;
}

inline Json optional_json(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

inline Json to_json(const EvidencePair& p) {
    Json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["lhs"] = optional_json(p.lhs);
    j["rhs"] = optional_json(p.rhs);
    j["proven"] = p.proven;
    return j;
}

inline Json to_json(const EvidenceReport& r) {
    Json j;
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    j["pairs"] = pairs;
    j["tailsExist"] = r.tails_exist;
    j["comparable"] = r.comparable;
    j["consistent"] = r.consistent;
    return j;
}

inline Json to_json(const StableHomSequence& s) {
    Json j;
    j["m"] = s.m_name;
    j["n"] = s.n_name;
    j["dims"] = s.dims;
    j["stabilizedValue(heuristic)"] = optional_json(s.stabilized);
    j["window"] = s.window;
    j["provenZero"] = s.proven_zero;
    return j;
}

inline Json to_json(const TriangularReport& r) {
    Json j;
    j["applicable"] = r.applicable;
    j["gdT"] = to_json(r.gd_t);
    j["pdChecks"] = r.pd_checks;
    j["pdFailures"] = r.pd_failures;
    j["projectivityChecks"] = r.projectivity_checks;
    j["projectivityFailures"] = r.projectivity_failures;
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    j["pairs"] = pairs;
    j["stableTablesMatch"] = r.stable_tables_match;
    j["failures"] = r.failures;
    return j;
}

}  // namespace cornerstone

#endif
