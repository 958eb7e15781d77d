#ifndef CORNERSTONE_CONSTRUCTIONS_HPP
#define CORNERSTONE_CONSTRUCTIONS_HPP

// Algebras derived from a given one: corner eAe, quotient A/AeA, opposite,
// triangular matrix rings and one-point extensions.

#include <memory>
#include <string>
#include <vector>

#include "cornerstone/algebra.hpp"
#include "cornerstone/module.hpp"

namespace cornerstone {

/// The base field as a one-vertex algebra.
inline AlgebraPtr field_algebra(const Field& f, std::string vertex = "k") {
    auto a = std::make_shared<Algebra>();
    a->field = f;
    a->vertex_labels = {vertex};
    a->labels = {"e_" + vertex};
    a->source = {0};
    a->target = {0};
    a->primitives = {0};
    a->table = {1};
    finalize(*a);
    return a;
}

inline AlgebraPtr zero_algebra(const Field& f) {
    auto a = std::make_shared<Algebra>();
    a->field = f;
    finalize(*a);
    return a;
}

struct CornerAlgebra {
    AlgebraPtr algebra;
    std::vector<std::size_t> inclusion;  // inclusion[i] = basis index in A of corner basis element i
    std::vector<std::size_t> vertices;   // corner vertex j is A-vertex vertices[j]

    /// The inclusion eAe -> A as a dim(A) x dim(eAe) matrix.
    Matrix inclusion_matrix(std::size_t ambient_dim) const {
        Matrix m(ambient_dim, inclusion.size());
        for (std::size_t i = 0; i < inclusion.size(); ++i) m(inclusion[i], i) = 1;
        return m;
    }
    /// Corner vertex of an A-vertex, or SIZE_MAX when outside e.
    std::size_t corner_vertex(std::size_t v) const {
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (vertices[j] == v) return j;
        return SIZE_MAX;
    }
};

/// eAe. Since the basis is homogeneous, eAe is spanned by the basis
/// elements whose endpoints both lie in e; its radical is e (rad A) e.
inline CornerAlgebra corner_algebra(const Algebra& a, const Idempotent& e) {
    if (e.vertices.empty()) throw Error(ErrorKind::EmptyIdempotent, "corner of the zero idempotent");
    CornerAlgebra c;
    c.vertices = e.vertices;
    std::vector<std::size_t> vmap(a.vertex_count(), SIZE_MAX);
    for (std::size_t j = 0; j < e.vertices.size(); ++j) vmap[e.vertices[j]] = j;
    for (std::size_t b = 0; b < a.dim(); ++b)
        if (vmap[a.source[b]] != SIZE_MAX && vmap[a.target[b]] != SIZE_MAX) c.inclusion.push_back(b);
    const std::size_t d = c.inclusion.size();
    std::vector<std::size_t> coord(a.dim(), SIZE_MAX);
    for (std::size_t i = 0; i < d; ++i) coord[c.inclusion[i]] = i;

    auto alg = std::make_shared<Algebra>();
    alg->field = a.field;
    for (auto v : e.vertices) alg->vertex_labels.push_back(a.vertex_labels[v]);
    alg->primitives.assign(e.vertices.size(), 0);
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t b = c.inclusion[i];
        alg->labels.push_back(a.labels[b]);
        alg->source.push_back(vmap[a.source[b]]);
        alg->target.push_back(vmap[a.target[b]]);
        if (a.is_radical(b)) alg->radical.push_back(i);
        else alg->primitives[vmap[a.source[b]]] = i;
    }
    alg->table.assign(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto p = a.product(c.inclusion[i], c.inclusion[j]);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (p[k]) alg->table[(i * d + j) * d + coord[k]] = p[k];
        }
    finalize(*alg);
    c.algebra = std::move(alg);
    return c;
}

struct QuotientAlgebra {
    AlgebraPtr algebra;
    Matrix projection;                       // dim(A/AeA) x dim(A)
    std::vector<std::size_t> kept;           // quotient basis element i is the class of A-basis kept[i]
    std::vector<std::size_t> vertices;       // quotient vertex j is A-vertex vertices[j]
    std::size_t ideal_dim = 0;
    bool full_ideal = false;                 // AeA = A: the quotient is the zero ring

    std::size_t quotient_vertex(std::size_t v) const {
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (vertices[j] == v) return j;
        return SIZE_MAX;
    }
};

/// A / AeA. The ideal is spanned by the products x*y with x starting and
/// y ending at a vertex of e; it is homogeneous, so a complement can be
/// chosen from basis elements (the non-pivots of its echelon form).
inline QuotientAlgebra quotient_by_idempotent_ideal(const Algebra& a, const Idempotent& e) {
    const Field& f = a.field;
    const std::size_t d = a.dim();
    RowSpace ideal(f, d);
    for (auto v : e.vertices)
        for (std::size_t x = 0; x < d; ++x) {
            if (a.source[x] != v) continue;
            for (std::size_t y = 0; y < d; ++y) {
                if (a.target[y] != v) continue;
                auto p = a.product(x, y);
                ideal.insert(Vector(p.begin(), p.end()));
            }
        }
    QuotientAlgebra q;
    q.ideal_dim = ideal.dim();
    q.kept = ideal.non_pivots();
    const std::size_t qd = q.kept.size();
    q.full_ideal = qd == 0;
    std::vector<std::size_t> coord(d, SIZE_MAX);
    for (std::size_t i = 0; i < qd; ++i) coord[q.kept[i]] = i;

    std::vector<std::size_t> vmap(a.vertex_count(), SIZE_MAX);
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (!e.contains(v)) {
            if (coord[a.primitives[v]] == SIZE_MAX) throw Error(ErrorKind::Internal, "vertex idempotent outside e fell into AeA");
            vmap[v] = q.vertices.size();
            q.vertices.push_back(v);
        }

    auto project = [&](Vector x) {
        x = ideal.reduce(std::move(x));
        Vector out(qd, 0);
        for (std::size_t k = 0; k < d; ++k)
            if (x[k]) out[coord[k]] = x[k];
        return out;
    };
    q.projection = Matrix(qd, d);
    for (std::size_t b = 0; b < d; ++b) q.projection.set_column(b, project(a.basis_vector(b)));

    auto alg = std::make_shared<Algebra>();
    alg->field = f;
    for (auto v : q.vertices) alg->vertex_labels.push_back(a.vertex_labels[v]);
    alg->primitives.assign(q.vertices.size(), 0);
    for (std::size_t i = 0; i < qd; ++i) {
        std::size_t b = q.kept[i];
        alg->labels.push_back(a.labels[b]);
        alg->source.push_back(vmap[a.source[b]]);
        alg->target.push_back(vmap[a.target[b]]);
        if (a.is_radical(b)) alg->radical.push_back(i);
        else alg->primitives[vmap[a.source[b]]] = i;
    }
    alg->table.assign(qd * qd * qd, 0);
    for (std::size_t i = 0; i < qd; ++i)
        for (std::size_t j = 0; j < qd; ++j) {
            auto p = a.product(q.kept[i], q.kept[j]);
            Vector r = project(Vector(p.begin(), p.end()));
            std::copy(r.begin(), r.end(), alg->table.begin() + (i * qd + j) * qd);
        }
    finalize(*alg);
    q.algebra = std::move(alg);
    return q;
}

/// Same basis with reversed multiplication; sources and targets swap.
inline AlgebraPtr opposite_algebra(const Algebra& a) {
    auto op = std::make_shared<Algebra>();
    op->field = a.field;
    op->vertex_labels = a.vertex_labels;
    op->labels = a.labels;
    op->source = a.target;
    op->target = a.source;
    op->primitives = a.primitives;
    op->radical = a.radical;
    const std::size_t d = a.dim();
    op->table.assign(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto p = a.product(j, i);
            std::copy(p.begin(), p.end(), op->table.begin() + (i * d + j) * d);
        }
    finalize(*op);
    return op;
}

struct TriangularAlgebra {
    AlgebraPtr algebra;
    Idempotent e;  // diag(0, 1): the S-block
};

/// R = [[T, 0], [M, S]] for an S-T-bimodule M. Basis T, then M, then S;
/// products follow matrix multiplication with M * M = 0.
inline TriangularAlgebra triangular_matrix_algebra(const AlgebraPtr& t, const AlgebraPtr& s, const Bimodule& m) {
    if (!same_algebra(m.left, s) || !same_algebra(m.right, t))
        throw Error(ErrorKind::BimoduleMismatch, "bimodule must be an S-T-bimodule");
    if (!(t->field == s->field)) throw Error(ErrorKind::BimoduleMismatch, "T and S over different fields");
    auto blocks = std::make_shared<TriangularBlocks>(TriangularBlocks{t, s, m});
    const std::size_t dt = t->dim(), dm = m.dim(), ds = s->dim(), d = dt + dm + ds;
    const std::size_t nt = t->vertex_count();
    auto alg = std::make_shared<Algebra>();
    alg->field = t->field;
    for (const auto& v : t->vertex_labels) alg->vertex_labels.push_back("T:" + v);
    for (const auto& v : s->vertex_labels) alg->vertex_labels.push_back("S:" + v);
    for (std::size_t i = 0; i < dt; ++i) {
        alg->labels.push_back("T:" + t->labels[i]);
        alg->source.push_back(t->source[i]);
        alg->target.push_back(t->target[i]);
    }
    for (std::size_t i = 0; i < dm; ++i) {
        alg->labels.push_back("M:" + std::to_string(i));
        alg->source.push_back(m.right_vertex[i]);
        alg->target.push_back(nt + m.left_vertex[i]);
    }
    for (std::size_t i = 0; i < ds; ++i) {
        alg->labels.push_back("S:" + s->labels[i]);
        alg->source.push_back(nt + s->source[i]);
        alg->target.push_back(nt + s->target[i]);
    }
    for (auto p : t->primitives) alg->primitives.push_back(p);
    for (auto p : s->primitives) alg->primitives.push_back(dt + dm + p);
    for (auto r : t->radical) alg->radical.push_back(r);
    for (std::size_t i = 0; i < dm; ++i) alg->radical.push_back(dt + i);
    for (auto r : s->radical) alg->radical.push_back(dt + dm + r);
    std::sort(alg->radical.begin(), alg->radical.end());

    alg->table.assign(d * d * d, 0);
    auto put = [&](std::size_t i, std::size_t j, std::size_t k, Scalar c) { alg->table[(i * d + j) * d + k] = c; };
    for (std::size_t i = 0; i < dt; ++i)
        for (std::size_t j = 0; j < dt; ++j)
            for (std::size_t k = 0; k < dt; ++k) put(i, j, k, t->coeff(i, j, k));
    for (std::size_t i = 0; i < ds; ++i)
        for (std::size_t j = 0; j < ds; ++j)
            for (std::size_t k = 0; k < ds; ++k) put(dt + dm + i, dt + dm + j, dt + dm + k, s->coeff(i, j, k));
    for (std::size_t mi = 0; mi < dm; ++mi) {
        // m * t = right action, s * m = left action
        for (std::size_t j = 0; j < dt; ++j)
            for (std::size_t k = 0; k < dm; ++k) put(dt + mi, j, dt + k, m.right_action[j](k, mi));
        for (std::size_t i = 0; i < ds; ++i)
            for (std::size_t k = 0; k < dm; ++k) put(dt + dm + i, dt + mi, dt + k, m.left_action[i](k, mi));
    }
    alg->triangular = blocks;
    finalize(*alg);
    validate(*alg);
    std::vector<std::size_t> sv;
    for (std::size_t v = 0; v < s->vertex_count(); ++v) sv.push_back(nt + v);
    Idempotent e = make_idempotent(*alg, sv);
    return {std::move(alg), std::move(e)};
}

/// A left L-module viewed as an L-k-bimodule.
inline Bimodule module_as_bimodule(const Module& m) {
    const AlgebraPtr& l = m.algebra();
    AlgebraPtr k = field_algebra(l->field);
    const std::size_t d = m.dim();
    std::vector<std::size_t> off(l->vertex_count() + 1, 0);
    for (std::size_t v = 0; v < l->vertex_count(); ++v) off[v + 1] = off[v] + m.dim(v);
    Bimodule b;
    b.left = l;
    b.right = k;
    for (std::size_t v = 0; v < l->vertex_count(); ++v)
        for (std::size_t i = 0; i < m.dim(v); ++i) {
            b.left_vertex.push_back(v);
            b.right_vertex.push_back(0);
        }
    for (std::size_t x = 0; x < l->dim(); ++x) {
        Matrix full(d, d);
        const Matrix& blk = m.action(x);
        auto s = l->source[x], t = l->target[x];
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) full(off[t] + i, off[s] + j) = blk(i, j);
        b.left_action.push_back(std::move(full));
    }
    b.right_action.push_back(Matrix::identity(d));
    return b;
}

/// L[M] = [[k, 0], [M, L]].
inline TriangularAlgebra one_point_extension(const Module& m) {
    Bimodule b = module_as_bimodule(m);
    return triangular_matrix_algebra(b.right, m.algebra(), b);
}

/// Regards a module over A / AeA as an A-module through the projection.
inline Module inflate(const Module& m, const QuotientAlgebra& q, const AlgebraPtr& a) {
    const Algebra& A = *a;
    const Field& f = A.field;
    std::vector<std::size_t> dims(A.vertex_count(), 0);
    for (std::size_t j = 0; j < q.vertices.size(); ++j) dims[q.vertices[j]] = m.dim(j);
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < A.dim(); ++b) {
        Matrix x(dims[A.target[b]], dims[A.source[b]]);
        if (!x.rows() || !x.cols()) {
            action.push_back(std::move(x));
            continue;
        }
        for (std::size_t k = 0; k < q.kept.size(); ++k) {
            Scalar c = q.projection(k, b);
            if (c) x = add(f, x, scale(f, m.action(k), c));
        }
        action.push_back(std::move(x));
    }
    return Module(a, std::move(dims), std::move(action));
}

/// top(A/AeA) = (A/AeA) / rad(A/AeA), computed over the quotient and then
/// regarded as an A-module.
inline Module quotient_top(const AlgebraPtr& a, const Idempotent& e) {
    QuotientAlgebra q = quotient_by_idempotent_ideal(*a, e);
    if (q.full_ideal) return Module::zero(a);
    Module reg = regular_module(q.algebra).module;
    return inflate(top(reg), q, a);
}

}  // namespace cornerstone

#endif
