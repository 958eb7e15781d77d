#ifndef CORNERSTONE_FUNCTORS_HPP
#define CORNERSTONE_FUNCTORS_HPP

// Restriction M -> eM, induction N -> Ae (x)_{eAe} N, and the conversion
// between modules over a triangular matrix ring and their triples.

#include <utility>
#include <vector>

#include "cornerstone/constructions.hpp"
#include "cornerstone/module.hpp"

namespace cornerstone {

/// B (x)_R X for an L-R-bimodule B and a left R-module X, as a left L-module.
/// The space is spanned by pairs (m, x) with x in the block of m's right
/// vertex, modulo (m r) (x) x - m (x) (r x) for the generators r of R.
struct TensorProduct {
    Module module;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;  // per L-vertex: all (m, i)
    std::vector<Matrix> projection;                                       // per L-vertex: pairs -> tensor basis
    std::vector<std::vector<std::size_t>> kept;                           // per L-vertex: pair index of each tensor basis element

    std::size_t pair_index(std::size_t u, std::size_t m, std::size_t i) const {
        for (std::size_t k = 0; k < pairs[u].size(); ++k)
            if (pairs[u][k].first == m && pairs[u][k].second == i) return k;
        return SIZE_MAX;
    }
};

inline TensorProduct tensor(const Bimodule& b, const Module& x) {
    if (!same_algebra(b.right, x.algebra())) throw Error(ErrorKind::AlgebraMismatch, "tensor: module is not over the right algebra");
    const Algebra& L = *b.left;
    const Algebra& R = *b.right;
    const Field& f = L.field;
    const std::size_t nl = L.vertex_count();
    TensorProduct t;
    t.pairs.resize(nl);
    std::vector<std::vector<std::size_t>> pos(b.dim());
    for (std::size_t m = 0; m < b.dim(); ++m) {
        auto u = b.left_vertex[m];
        for (std::size_t i = 0; i < x.dim(b.right_vertex[m]); ++i) {
            pos[m].push_back(t.pairs[u].size());
            t.pairs[u].push_back({m, i});
        }
    }
    std::vector<RowSpace> rel;
    for (std::size_t u = 0; u < nl; ++u) rel.emplace_back(f, t.pairs[u].size());
    for (auto r : R.generators) {
        const auto s = R.source[r], tv = R.target[r];
        const Matrix& rx = x.action(r);  // x_t x x_s
        const Matrix& mr = b.right_action[r];
        for (std::size_t m = 0; m < b.dim(); ++m) {
            if (b.right_vertex[m] != tv) continue;
            auto u = b.left_vertex[m];
            for (std::size_t i = 0; i < x.dim(s); ++i) {
                Vector v(t.pairs[u].size(), 0);
                for (std::size_t m2 = 0; m2 < b.dim(); ++m2)
                    if (mr(m2, m)) v[pos[m2][i]] = f.add(v[pos[m2][i]], mr(m2, m));
                for (std::size_t j = 0; j < x.dim(tv); ++j)
                    if (rx(j, i)) v[pos[m][j]] = f.sub(v[pos[m][j]], rx(j, i));
                rel[u].insert(std::move(v));
            }
        }
    }
    GradedSubspace sub = from_row_spaces(rel);
    std::vector<std::size_t> dims;
    for (std::size_t u = 0; u < nl; ++u) {
        t.kept.push_back(rel[u].non_pivots());
        dims.push_back(t.kept[u].size());
        Matrix p(dims[u], t.pairs[u].size());
        for (std::size_t k = 0; k < dims[u]; ++k) p(k, t.kept[u][k]) = 1;
        for (std::size_t c = 0; c < sub.unit_rows[u].size(); ++c)
            for (std::size_t k = 0; k < dims[u]; ++k) p(k, sub.unit_rows[u][c]) = f.neg(sub.basis[u](t.kept[u][k], c));
        t.projection.push_back(std::move(p));
    }
    std::vector<Matrix> action;
    for (std::size_t l = 0; l < L.dim(); ++l) {
        auto s = L.source[l], tv = L.target[l];
        Matrix lifted(t.pairs[tv].size(), dims[s]);
        const Matrix& lm = b.left_action[l];
        for (std::size_t k = 0; k < dims[s]; ++k) {
            auto [m, i] = t.pairs[s][t.kept[s][k]];
            for (std::size_t m2 = 0; m2 < b.dim(); ++m2)
                if (lm(m2, m)) lifted(pos[m2][i], k) = f.add(lifted(pos[m2][i], k), lm(m2, m));
        }
        action.push_back(multiply(f, t.projection[tv], lifted));
    }
    t.module = Module(b.left, std::move(dims), std::move(action));
    return t;
}

/// i: mod A -> mod eAe, M -> eM.
inline Module restrict_idempotent(const Module& m, const CornerAlgebra& c) {
    std::vector<std::size_t> dims;
    for (auto v : c.vertices) dims.push_back(m.dim(v));
    std::vector<Matrix> action;
    for (auto b : c.inclusion) action.push_back(m.action(b));
    return Module(c.algebra, std::move(dims), std::move(action));
}

/// Ae as an A-eAe-bimodule; its basis is the A-basis elements starting in e.
inline Bimodule corner_bimodule(const AlgebraPtr& a, const CornerAlgebra& c) {
    const Algebra& A = *a;
    Bimodule b;
    b.left = a;
    b.right = c.algebra;
    std::vector<std::size_t> basis, coord(A.dim(), SIZE_MAX);
    for (std::size_t x = 0; x < A.dim(); ++x)
        if (c.corner_vertex(A.source[x]) != SIZE_MAX) {
            coord[x] = basis.size();
            basis.push_back(x);
            b.left_vertex.push_back(A.target[x]);
            b.right_vertex.push_back(c.corner_vertex(A.source[x]));
        }
    const std::size_t d = basis.size();
    for (std::size_t x = 0; x < A.dim(); ++x) {
        Matrix m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            auto p = A.product(x, basis[k]);
            for (std::size_t j = 0; j < A.dim(); ++j)
                if (p[j]) m(coord[j], k) = p[j];
        }
        b.left_action.push_back(std::move(m));
    }
    for (auto ci : c.inclusion) {
        Matrix m(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            auto p = A.product(basis[k], ci);
            for (std::size_t j = 0; j < A.dim(); ++j)
                if (p[j]) m(coord[j], k) = p[j];
        }
        b.right_action.push_back(std::move(m));
    }
    return b;
}

struct Induced {
    Module module;
    ModuleMap unit;  // N -> e (i_lambda N), blocks indexed by corner vertices
};

/// i_lambda: N -> Ae (x)_{eAe} N, with the unit n -> e_v (x) n.
inline Induced induce_idempotent(const Module& n, const AlgebraPtr& a, const CornerAlgebra& c) {
    if (!same_algebra(n.algebra(), c.algebra)) throw Error(ErrorKind::AlgebraMismatch, "module is not over the corner algebra");
    Bimodule b = corner_bimodule(a, c);
    TensorProduct t = tensor(b, n);
    const Algebra& A = *a;
    // index of e_v inside the bimodule basis
    std::vector<std::size_t> basis;
    for (std::size_t x = 0; x < A.dim(); ++x)
        if (c.corner_vertex(A.source[x]) != SIZE_MAX) basis.push_back(x);
    Induced out{t.module, {}};
    for (std::size_t j = 0; j < c.vertices.size(); ++j) {
        auto v = c.vertices[j];
        std::size_t ev = std::find(basis.begin(), basis.end(), A.primitives[v]) - basis.begin();
        Matrix u(out.module.dim(v), n.dim(j));
        for (std::size_t i = 0; i < n.dim(j); ++i) u.set_column(i, t.projection[v].column(t.pair_index(v, ev, i)));
        out.unit.blocks.push_back(std::move(u));
    }
    return out;
}

inline bool unit_is_invertible(const Field& f, const Induced& ind) {
    for (const auto& b : ind.unit.blocks)
        if (b.rows() != b.cols() || rank(f, b) != b.rows()) return false;
    return true;
}

struct AdjunctionDims {
    std::size_t induced_side = 0;   // dim Hom_A(i_lambda N, M)
    std::size_t restricted_side = 0; // dim Hom_eAe(N, eM)
};

inline AdjunctionDims check_adjunction(const Module& n, const Module& m, const CornerAlgebra& c) {
    Induced ind = induce_idempotent(n, m.algebra(), c);
    return {hom_dim(ind.module, m), hom_dim(n, restrict_idempotent(m, c))};
}

/// (X, Y, phi) with phi: M (x)_T X -> Y.
struct TriangularTriple {
    Module x;
    Module y;
    TensorProduct mx;
    ModuleMap phi;
};

inline const TriangularBlocks& triangular_blocks(const AlgebraPtr& r) {
    if (!r->triangular) throw Error(ErrorKind::NotTriangular, "algebra carries no triangular block structure");
    return *r->triangular;
}

inline TriangularTriple module_to_triple(const Module& z) {
    const TriangularBlocks& tb = triangular_blocks(z.algebra());
    const Field& f = z.field();
    const Algebra& T = *tb.t;
    const Algebra& S = *tb.s;
    std::vector<std::size_t> xd, yd;
    std::vector<Matrix> xa, ya;
    for (std::size_t v = 0; v < T.vertex_count(); ++v) xd.push_back(z.dim(tb.t_vertex(v)));
    for (std::size_t v = 0; v < S.vertex_count(); ++v) yd.push_back(z.dim(tb.s_vertex(v)));
    for (std::size_t i = 0; i < T.dim(); ++i) xa.push_back(z.action(tb.t_offset() + i));
    for (std::size_t i = 0; i < S.dim(); ++i) ya.push_back(z.action(tb.s_offset() + i));
    TriangularTriple t{Module(tb.t, xd, xa), Module(tb.s, yd, ya), {}, {}};
    t.mx = tensor(tb.m, t.x);
    for (std::size_t j = 0; j < S.vertex_count(); ++j) {
        Matrix p(yd[j], t.mx.module.dim(j));
        for (std::size_t k = 0; k < t.mx.kept[j].size(); ++k) {
            auto [m, i] = t.mx.pairs[j][t.mx.kept[j][k]];
            Vector xi(xd[tb.m.right_vertex[m]], 0);
            xi[i] = 1;
            p.set_column(k, apply(f, z.action(tb.m_offset() + m), xi));
        }
        t.phi.blocks.push_back(std::move(p));
    }
    return t;
}

inline Module triple_to_module(const TriangularTriple& t, const AlgebraPtr& r) {
    const TriangularBlocks& tb = triangular_blocks(r);
    const Field& f = r->field;
    if (!same_algebra(t.x.algebra(), tb.t) || !same_algebra(t.y.algebra(), tb.s))
        throw Error(ErrorKind::AlgebraMismatch, "triple components are not over T and S");
    if (!is_homomorphism(t.mx.module, t.y, t.phi)) throw Error(ErrorKind::ValidationError, "phi is not S-linear");
    const Algebra& R = *r;
    std::vector<std::size_t> dims;
    for (auto d : t.x.dims()) dims.push_back(d);
    for (auto d : t.y.dims()) dims.push_back(d);
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < tb.t->dim(); ++i) action.push_back(t.x.action(i));
    for (std::size_t m = 0; m < tb.m.dim(); ++m) {
        auto lv = tb.m.left_vertex[m], rv = tb.m.right_vertex[m];
        Matrix a(t.y.dim(lv), t.x.dim(rv));
        for (std::size_t i = 0; i < t.x.dim(rv); ++i) {
            Vector cls = t.mx.projection[lv].column(t.mx.pair_index(lv, m, i));
            a.set_column(i, apply(f, t.phi.blocks[lv], cls));
        }
        action.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < tb.s->dim(); ++i) action.push_back(t.y.action(i));
    if (action.size() != R.dim()) throw Error(ErrorKind::Internal, "triple conversion produced wrong action count");
    return Module(r, std::move(dims), std::move(action));
}

/// (X, M (x)_T X, 1).
inline TriangularTriple induced_triple(const AlgebraPtr& r, const Module& x) {
    const TriangularBlocks& tb = triangular_blocks(r);
    TriangularTriple t{x, Module(), tensor(tb.m, x), {}};
    t.y = t.mx.module;
    t.phi = identity_map(t.y);
    return t;
}

/// (0, Y, 0).
inline TriangularTriple s_block_triple(const AlgebraPtr& r, const Module& y) {
    const TriangularBlocks& tb = triangular_blocks(r);
    Module zx = Module::zero(tb.t);
    TriangularTriple t{zx, y, tensor(tb.m, zx), {}};
    t.phi = zero_map(t.mx.module, y);
    return t;
}

}  // namespace cornerstone

#endif
