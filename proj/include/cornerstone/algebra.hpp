#ifndef CORNERSTONE_ALGEBRA_HPP
#define CORNERSTONE_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cornerstone/error.hpp"
#include "cornerstone/linalg.hpp"

namespace cornerstone {

struct TriangularBlocks;

/// A basic finite-dimensional algebra over F_p with a distinguished basis.
///
/// Basis conventions shared by every algebra the library builds:
///  - each basis element b is homogeneous, b = e_target(b) * b * e_source(b);
///  - the basis is the disjoint union of the vertex idempotents and a basis
///    of the Jacobson radical;
///  - b_i * b_j means "b_j first, then b_i", so the left projective at v,
///    A e_v, is spanned by the basis elements with source v.
struct Algebra {
    Field field{101};
    std::vector<std::string> vertex_labels;
    std::vector<std::string> labels;
    std::vector<std::size_t> source;
    std::vector<std::size_t> target;
    std::vector<std::size_t> primitives;  // primitives[v] = basis index of e_v
    std::vector<std::size_t> radical;     // basis indices spanning rad A
    std::vector<Scalar> table;            // table[(i*dim + j)*dim + k] = coeff of b_k in b_i b_j

    // Filled in by finalize().
    std::vector<std::size_t> generators;  // radical basis elements spanning a complement of rad^2
    std::vector<std::vector<std::vector<std::size_t>>> blocks;  // blocks[t][s] = basis of e_t A e_s

    // Present for quiver algebras: each basis element as a word in the arrows,
    // listed in composition order (first arrow first).
    std::vector<std::string> arrow_labels;
    std::vector<std::vector<std::size_t>> paths;

    // Present for algebras built as triangular matrix rings.
    std::shared_ptr<const TriangularBlocks> triangular;

    std::size_t dim() const noexcept { return labels.size(); }
    std::size_t vertex_count() const noexcept { return primitives.size(); }
    bool is_zero() const noexcept { return labels.empty(); }

    Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const { return table[(i * dim() + j) * dim() + k]; }

    std::span<const Scalar> product(std::size_t i, std::size_t j) const {
        return {table.data() + (i * dim() + j) * dim(), dim()};
    }

    Vector multiply(const Vector& x, const Vector& y) const {
        Vector out(dim(), 0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (!y[j]) continue;
                axpy(field, out, field.mul(x[i], y[j]), product(i, j));
            }
        }
        return out;
    }

    Vector basis_vector(std::size_t i) const {
        Vector v(dim(), 0);
        v[i] = 1;
        return v;
    }

    Vector unit() const {
        Vector u(dim(), 0);
        for (auto p : primitives) u[p] = 1;
        return u;
    }

    const std::vector<std::size_t>& block(std::size_t t, std::size_t s) const { return blocks[t][s]; }

    bool is_radical(std::size_t b) const {
        for (auto r : radical)
            if (r == b) return true;
        return false;
    }

    /// Structural equality (field, grading and structure constants).
    bool same_structure(const Algebra& o) const {
        return field == o.field && source == o.source && target == o.target && primitives == o.primitives &&
               table == o.table;
    }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && a->same_structure(*b));
}

namespace detail {

/// Span of all products of pairs of radical basis vectors.
inline RowSpace radical_square(const Algebra& a) {
    RowSpace sq(a.field, a.dim());
    for (auto i : a.radical)
        for (auto j : a.radical)
            if (a.source[i] == a.target[j]) {
                auto p = a.product(i, j);
                sq.insert(Vector(p.begin(), p.end()));
            }
    return sq;
}

}  // namespace detail

/// Computes derived lookup data. Must be called after the table is filled.
inline void finalize(Algebra& a) {
    const std::size_t n = a.vertex_count();
    a.blocks.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t b = 0; b < a.dim(); ++b) a.blocks[a.target[b]][a.source[b]].push_back(b);

    // Generators: radical basis elements that are not pivots of rad^2, so
    // they span rad / rad^2. Radical basis elements are ordered first in
    // the column order so that rad^2 pivots fall on the latest ones.
    RowSpace sq = detail::radical_square(a);
    a.generators.clear();
    RowSpace span(a.field, a.dim());
    for (const auto& r : sq.rows()) span.insert(r);
    for (auto r : a.radical)
        if (span.insert(a.basis_vector(r))) a.generators.push_back(r);
}

/// Checks every structural invariant exhaustively; throws ValidationError.
inline void validate(const Algebra& a) {
    const std::size_t d = a.dim();
    const Field& f = a.field;
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::ValidationError, msg); };
    if (a.table.size() != d * d * d) fail("structure table has wrong size");
    if (a.source.size() != d || a.target.size() != d) fail("grading vectors have wrong size");
    for (Scalar c : a.table)
        if (c >= f.p()) fail("structure constant not reduced mod p");

    std::vector<char> seen(d, 0);
    for (auto p : a.primitives) {
        if (p >= d || seen[p]) fail("primitive list is malformed");
        seen[p] = 1;
    }
    for (auto r : a.radical) {
        if (r >= d || seen[r]) fail("radical basis overlaps primitives or repeats");
        seen[r] = 1;
    }
    for (auto s : seen)
        if (!s) fail("basis is not the disjoint union of primitives and radical basis");
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (a.source[a.primitives[v]] != v || a.target[a.primitives[v]] != v) fail("primitive has wrong grading");

    // homogeneity: e_t b e_s = b
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            Vector expect_left = v == a.target[b] ? a.basis_vector(b) : Vector(d, 0);
            Vector expect_right = v == a.source[b] ? a.basis_vector(b) : Vector(d, 0);
            auto l = a.product(a.primitives[v], b);
            auto r = a.product(b, a.primitives[v]);
            if (!std::equal(l.begin(), l.end(), expect_left.begin()) ||
                !std::equal(r.begin(), r.end(), expect_right.begin()))
                fail("basis element " + a.labels[b] + " is not homogeneous or unit laws fail");
        }

    // products respect the grading and associativity holds on all triples
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto p = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                if (!p[k]) continue;
                if (a.source[i] != a.target[j] || a.source[k] != a.source[j] || a.target[k] != a.target[i])
                    fail("product does not respect the vertex grading");
            }
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (a.source[i] != a.target[j]) continue;
            auto ij = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                if (a.source[j] != a.target[k]) continue;
                Vector lhs(d, 0), rhs(d, 0);
                for (std::size_t l = 0; l < d; ++l)
                    if (ij[l]) axpy(f, lhs, ij[l], a.product(l, k));
                auto jk = a.product(j, k);
                for (std::size_t l = 0; l < d; ++l)
                    if (jk[l]) axpy(f, rhs, jk[l], a.product(i, l));
                if (lhs != rhs) fail("associativity fails on (" + a.labels[i] + "," + a.labels[j] + "," + a.labels[k] + ")");
            }
        }

    // radical: a two-sided ideal that is nilpotent
    RowSpace rad(f, d);
    for (auto r : a.radical) rad.insert(a.basis_vector(r));
    for (auto r : a.radical)
        for (std::size_t b = 0; b < d; ++b) {
            auto x = a.product(r, b), y = a.product(b, r);
            if (!rad.contains(Vector(x.begin(), x.end())) || !rad.contains(Vector(y.begin(), y.end())))
                fail("radical basis does not span a two-sided ideal");
        }
    std::vector<Vector> power;
    for (auto r : a.radical) power.push_back(a.basis_vector(r));
    for (std::size_t step = 0; step <= d && !power.empty(); ++step) {
        RowSpace next(f, d);
        for (const auto& x : power)
            for (auto r : a.radical) next.insert(a.multiply(x, a.basis_vector(r)));
        power = next.rows();
    }
    if (!power.empty()) fail("radical is not nilpotent");
}

/// A sum of vertex idempotents.
struct Idempotent {
    std::vector<std::size_t> vertices;  // sorted, distinct
    Vector element;

    bool contains(std::size_t v) const {
        for (auto x : vertices)
            if (x == v) return true;
        return false;
    }
    bool is_full(const Algebra& a) const { return vertices.size() == a.vertex_count(); }
};

inline Idempotent make_idempotent(const Algebra& a, std::vector<std::size_t> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Idempotent e;
    e.element.assign(a.dim(), 0);
    for (auto v : vertices) {
        if (v >= a.vertex_count()) throw Error(ErrorKind::ValidationError, "idempotent vertex out of range");
        e.element[a.primitives[v]] = 1;
    }
    e.vertices = std::move(vertices);
    if (a.multiply(e.element, e.element) != e.element) throw Error(ErrorKind::Internal, "idempotent is not idempotent");
    return e;
}

inline Idempotent full_idempotent(const Algebra& a) {
    std::vector<std::size_t> all(a.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    return make_idempotent(a, all);
}

/// An S-T-bimodule whose basis is bigraded by (left vertex, right vertex).
/// left_action[s] is the matrix of m -> s m, right_action[t] of m -> m t.
struct Bimodule {
    AlgebraPtr left;
    AlgebraPtr right;
    std::vector<std::size_t> left_vertex;
    std::vector<std::size_t> right_vertex;
    std::vector<Matrix> left_action;
    std::vector<Matrix> right_action;

    std::size_t dim() const noexcept { return left_vertex.size(); }
};

/// Builds a bimodule from full action matrices, changing to a bigraded basis
/// when the given basis is not already bigraded.
inline Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<Matrix> left_action,
                              std::vector<Matrix> right_action) {
    const Field& f = left->field;
    if (!(left->field == right->field)) throw Error(ErrorKind::BimoduleMismatch, "bimodule over different fields");
    if (left_action.size() != left->dim() || right_action.size() != right->dim())
        throw Error(ErrorKind::BimoduleMismatch, "action list does not match algebra dimension");
    const std::size_t d = left->dim() == 0 ? 0 : left_action.front().rows();

    Bimodule m;
    m.left = left;
    m.right = right;
    std::vector<std::pair<std::size_t, std::size_t>> grade(d, {SIZE_MAX, SIZE_MAX});
    bool graded = true;
    for (std::size_t j = 0; j < left->vertex_count() && graded; ++j)
        for (std::size_t i = 0; i < right->vertex_count() && graded; ++i) {
            Matrix proj = multiply(f, left_action[left->primitives[j]], right_action[right->primitives[i]]);
            for (std::size_t k = 0; k < d; ++k) {
                Vector col = proj.column(k);
                bool zero = true, unit = true;
                for (std::size_t r = 0; r < d; ++r) {
                    if (col[r]) zero = false;
                    if (col[r] != (r == k ? 1u : 0u)) unit = false;
                }
                if (unit) grade[k] = {j, i};
                else if (!zero) graded = false;
            }
        }
    for (auto& g : grade)
        if (g.first == SIZE_MAX) graded = false;

    if (graded) {
        for (auto& g : grade) {
            m.left_vertex.push_back(g.first);
            m.right_vertex.push_back(g.second);
        }
        m.left_action = std::move(left_action);
        m.right_action = std::move(right_action);
        return m;
    }

    Matrix change(d, d);
    std::size_t col = 0;
    for (std::size_t j = 0; j < left->vertex_count(); ++j)
        for (std::size_t i = 0; i < right->vertex_count(); ++i) {
            Matrix proj = multiply(f, left_action[left->primitives[j]], right_action[right->primitives[i]]);
            RowSpace img = column_space(f, proj);
            for (const auto& v : img.rows()) {
                if (col >= d) throw Error(ErrorKind::BimoduleMismatch, "vertex projections are not orthogonal");
                change.set_column(col++, v);
                m.left_vertex.push_back(j);
                m.right_vertex.push_back(i);
            }
        }
    if (col != d) throw Error(ErrorKind::BimoduleMismatch, "vertex projections do not sum to the identity");
    Matrix inv = inverse(f, change);
    for (auto& a : left_action) m.left_action.push_back(multiply(f, inv, multiply(f, a, change)));
    for (auto& a : right_action) m.right_action.push_back(multiply(f, inv, multiply(f, a, change)));
    return m;
}

inline void validate(const Bimodule& m) {
    const Field& f = m.left->field;
    const std::size_t d = m.dim();
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::BimoduleMismatch, msg); };
    const Algebra& L = *m.left;
    const Algebra& R = *m.right;
    Matrix id = Matrix::identity(d);
    Matrix lu(d, d), ru(d, d);
    for (auto p : L.primitives) lu = add(f, lu, m.left_action[p]);
    for (auto p : R.primitives) ru = add(f, ru, m.right_action[p]);
    if (!(lu == id) || !(ru == id)) fail("bimodule actions are not unital");
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            Matrix expect(d, d);
            auto p = L.product(i, j);
            for (std::size_t k = 0; k < L.dim(); ++k)
                if (p[k]) expect = add(f, expect, scale(f, m.left_action[k], p[k]));
            if (!(multiply(f, m.left_action[i], m.left_action[j]) == expect))
                fail("left action does not respect the structure constants");
        }
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j) {
            Matrix expect(d, d);
            auto p = R.product(i, j);
            for (std::size_t k = 0; k < R.dim(); ++k)
                if (p[k]) expect = add(f, expect, scale(f, m.right_action[k], p[k]));
            // m (r_i r_j) = (m r_i) r_j
            if (!(multiply(f, m.right_action[j], m.right_action[i]) == expect))
                fail("right action does not respect the structure constants");
        }
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (!(multiply(f, m.left_action[i], m.right_action[j]) == multiply(f, m.right_action[j], m.left_action[i])))
                fail("left and right actions do not commute");
}

/// Bookkeeping attached to an algebra R = [[T, 0], [M, S]]. Basis order is
/// T, then M, then S; vertex order is T's vertices, then S's.
struct TriangularBlocks {
    AlgebraPtr t;
    AlgebraPtr s;
    Bimodule m;

    std::size_t t_offset() const { return 0; }
    std::size_t m_offset() const { return t->dim(); }
    std::size_t s_offset() const { return t->dim() + m.dim(); }
    std::size_t t_vertex(std::size_t v) const { return v; }
    std::size_t s_vertex(std::size_t v) const { return t->vertex_count() + v; }
};

}  // namespace cornerstone

#endif
