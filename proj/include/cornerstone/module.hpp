#ifndef CORNERSTONE_MODULE_HPP
#define CORNERSTONE_MODULE_HPP

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cornerstone/algebra.hpp"

namespace cornerstone {

/// A finite-dimensional left module, stored vertex by vertex: the space is
/// the direct sum of the e_v M, and each algebra basis element b acts by a
/// block matrix e_target(b) M <- e_source(b) M.
class Module {
public:
    Module() = default;

    Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> action)
        : algebra_(std::move(algebra)), dims_(std::move(dims)), action_(std::move(action)) {
        if (dims_.size() != algebra_->vertex_count() || action_.size() != algebra_->dim())
            throw Error(ErrorKind::ValidationError, "module data does not match the algebra");
        for (std::size_t b = 0; b < action_.size(); ++b)
            if (action_[b].rows() != dims_[algebra_->target[b]] || action_[b].cols() != dims_[algebra_->source[b]])
                throw Error(ErrorKind::ValidationError, "action block of " + algebra_->labels[b] + " has wrong shape");
    }

    static Module zero(AlgebraPtr algebra) {
        std::vector<std::size_t> dims(algebra->vertex_count(), 0);
        std::vector<Matrix> action;
        for (std::size_t b = 0; b < algebra->dim(); ++b) action.emplace_back(0, 0);
        return Module(std::move(algebra), std::move(dims), std::move(action));
    }

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_->field; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    bool is_zero() const { return dim() == 0; }
    const Matrix& action(std::size_t b) const { return action_[b]; }
    const std::vector<Matrix>& actions() const noexcept { return action_; }

    friend bool operator==(const Module& a, const Module& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.dims_ == b.dims_ && a.action_ == b.action_;
    }

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> action_;
};

/// A module homomorphism, block-diagonal over the vertices:
/// blocks[v] maps e_v M to e_v N.
struct ModuleMap {
    std::vector<Matrix> blocks;

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
    friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
};

inline void require_same_algebra(const Module& m, const Module& n) {
    if (!same_algebra(m.algebra(), n.algebra())) throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras");
}

/// Checks that the action is a unital representation of the algebra.
inline void validate(const Module& m) {
    const Algebra& a = *m.algebra();
    const Field& f = a.field;
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        if (!(m.action(a.primitives[v]) == Matrix::identity(m.dim(v))))
            throw Error(ErrorKind::ValidationError, "vertex idempotent does not act as the identity");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.source[i] != a.target[j]) continue;
            Matrix expect(m.dim(a.target[i]), m.dim(a.source[j]));
            auto p = a.product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (p[k]) expect = add(f, expect, scale(f, m.action(k), p[k]));
            if (!(multiply(f, m.action(i), m.action(j)) == expect))
                throw Error(ErrorKind::ValidationError,
                            "action does not respect the product " + a.labels[i] + "*" + a.labels[j]);
        }
}

inline ModuleMap zero_map(const Module& m, const Module& n) {
    ModuleMap f;
    for (std::size_t v = 0; v < m.dims().size(); ++v) f.blocks.emplace_back(n.dim(v), m.dim(v));
    return f;
}

inline ModuleMap identity_map(const Module& m) {
    ModuleMap f;
    for (auto d : m.dims()) f.blocks.push_back(Matrix::identity(d));
    return f;
}

/// g after f.
inline ModuleMap compose(const Field& fld, const ModuleMap& g, const ModuleMap& f) {
    ModuleMap h;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(multiply(fld, g.blocks[v], f.blocks[v]));
    return h;
}

inline bool is_homomorphism(const Module& m, const Module& n, const ModuleMap& f) {
    const Algebra& a = *m.algebra();
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source[b], t = a.target[b];
        if (!(multiply(a.field, n.action(b), f.blocks[s]) == multiply(a.field, f.blocks[t], m.action(b)))) return false;
    }
    return true;
}

inline std::size_t map_rank(const Field& f, const ModuleMap& m) {
    std::size_t r = 0;
    for (const auto& b : m.blocks) r += rank(f, b);
    return r;
}

/// Flattens a map into one coordinate vector (blocks in vertex order, row major).
inline Vector flatten(const ModuleMap& m) {
    Vector out;
    for (const auto& b : m.blocks) out.insert(out.end(), b.data().begin(), b.data().end());
    return out;
}

namespace detail {

/// Linear system whose solutions are the intertwiners M -> N.
inline Matrix intertwiner_system(const Module& m, const Module& n, std::vector<std::size_t>& offsets) {
    const Algebra& a = *m.algebra();
    const std::size_t nv = a.vertex_count();
    offsets.assign(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offsets[v + 1] = offsets[v] + n.dim(v) * m.dim(v);
    std::size_t rows = 0;
    for (auto g : a.generators) rows += n.dim(a.target[g]) * m.dim(a.source[g]);
    Matrix sys(rows, offsets[nv]);
    const Field& f = a.field;
    std::size_t row = 0;
    for (auto g : a.generators) {
        const auto s = a.source[g], t = a.target[g];
        const Matrix& ng = n.action(g);  // n_t x n_s
        const Matrix& mg = m.action(g);  // m_t x m_s
        const std::size_t ms = m.dim(s), mt = m.dim(t), ns = n.dim(s);
        for (std::size_t i = 0; i < n.dim(t); ++i)
            for (std::size_t j = 0; j < ms; ++j, ++row) {
                // (ng X_s)[i][j] - (X_t mg)[i][j]
                for (std::size_t c = 0; c < ns; ++c)
                    if (ng(i, c)) {
                        auto& x = sys(row, offsets[s] + c * ms + j);
                        x = f.add(x, ng(i, c));
                    }
                for (std::size_t c = 0; c < mt; ++c)
                    if (mg(c, j)) {
                        auto& x = sys(row, offsets[t] + i * mt + c);
                        x = f.sub(x, mg(c, j));
                    }
            }
    }
    return sys;
}

}  // namespace detail

/// Basis of Hom(M, N): solves "commutes with every generator" blockwise.
inline std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    std::vector<std::size_t> off;
    Matrix sys = detail::intertwiner_system(m, n, off);
    KernelBasis k = kernel(m.field(), sys);
    std::vector<ModuleMap> out;
    const std::size_t nv = m.dims().size();
    for (std::size_t col = 0; col < k.basis.cols(); ++col) {
        ModuleMap f;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix b(n.dim(v), m.dim(v));
            for (std::size_t i = 0; i < n.dim(v); ++i)
                for (std::size_t j = 0; j < m.dim(v); ++j) b(i, j) = k.basis(off[v] + i * m.dim(v) + j, col);
            f.blocks.push_back(std::move(b));
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline std::size_t hom_dim(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    std::vector<std::size_t> off;
    Matrix sys = detail::intertwiner_system(m, n, off);
    return sys.cols() - rank(m.field(), sys);
}

/// A graded subspace of a module: per vertex, basis columns whose rows at
/// `unit_rows[v]` form an identity matrix.
struct GradedSubspace {
    std::vector<Matrix> basis;
    std::vector<std::vector<std::size_t>> unit_rows;

    std::size_t dim() const {
        std::size_t d = 0;
        for (const auto& b : basis) d += b.cols();
        return d;
    }
};

inline GradedSubspace from_row_spaces(const std::vector<RowSpace>& spaces) {
    GradedSubspace g;
    for (const auto& s : spaces) {
        g.basis.push_back(s.as_columns());
        g.unit_rows.push_back(s.pivots());
    }
    return g;
}

/// Submodule spanned by the given per-vertex vectors.
inline GradedSubspace generated_submodule(const Module& m, const std::vector<std::vector<Vector>>& gens) {
    const Algebra& a = *m.algebra();
    std::vector<RowSpace> spaces;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) spaces.emplace_back(a.field, m.dim(v));
    for (std::size_t s = 0; s < gens.size(); ++s)
        for (const auto& x : gens[s])
            for (std::size_t t = 0; t < a.vertex_count(); ++t)
                for (auto b : a.block(t, s)) spaces[t].insert(apply(a.field, m.action(b), x));
    return from_row_spaces(spaces);
}

/// rad M = (rad A) M.
inline GradedSubspace radical_subspace(const Module& m) {
    const Algebra& a = *m.algebra();
    std::vector<RowSpace> spaces;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) spaces.emplace_back(a.field, m.dim(v));
    for (auto r : a.radical) {
        const Matrix& act = m.action(r);
        for (std::size_t c = 0; c < act.cols(); ++c) spaces[a.target[r]].insert(act.column(c));
    }
    return from_row_spaces(spaces);
}

struct Subquotient {
    Module module;
    ModuleMap map;  // inclusion for submodules, projection for quotients
};

/// The submodule with the given basis, together with its inclusion.
inline Subquotient submodule(const Module& m, const GradedSubspace& sub) {
    const Algebra& a = *m.algebra();
    const Field& f = a.field;
    std::vector<std::size_t> dims;
    for (const auto& b : sub.basis) dims.push_back(b.cols());
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source[b], t = a.target[b];
        Matrix img = multiply(f, m.action(b), sub.basis[s]);
        Matrix y(dims[t], dims[s]);
        for (std::size_t i = 0; i < dims[t]; ++i)
            for (std::size_t j = 0; j < dims[s]; ++j) y(i, j) = img(sub.unit_rows[t][i], j);
        action.push_back(std::move(y));
    }
    return {Module(m.algebra(), std::move(dims), std::move(action)), ModuleMap{sub.basis}};
}

/// M / U for a submodule U given in reduced echelon form (the columns of
/// each block are reduced rows, so unit_rows are the pivots).
inline Subquotient quotient(const Module& m, const GradedSubspace& sub) {
    const Algebra& a = *m.algebra();
    const Field& f = a.field;
    const std::size_t nv = a.vertex_count();
    std::vector<std::vector<std::size_t>> keep(nv);
    ModuleMap proj;
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<char> piv(m.dim(v), 0);
        for (auto r : sub.unit_rows[v]) piv[r] = 1;
        for (std::size_t i = 0; i < m.dim(v); ++i)
            if (!piv[i]) keep[v].push_back(i);
        // projection: x -> (x - sum_p x[p] u_p) restricted to kept coordinates
        Matrix p(keep[v].size(), m.dim(v));
        for (std::size_t k = 0; k < keep[v].size(); ++k) p(k, keep[v][k]) = 1;
        for (std::size_t c = 0; c < sub.unit_rows[v].size(); ++c) {
            std::size_t pr = sub.unit_rows[v][c];
            for (std::size_t k = 0; k < keep[v].size(); ++k) p(k, pr) = f.neg(sub.basis[v](keep[v][k], c));
        }
        proj.blocks.push_back(std::move(p));
    }
    std::vector<std::size_t> dims;
    for (auto& k : keep) dims.push_back(k.size());
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source[b], t = a.target[b];
        Matrix lift(m.dim(s), dims[s]);
        for (std::size_t k = 0; k < dims[s]; ++k) lift(keep[s][k], k) = 1;
        action.push_back(multiply(f, proj.blocks[t], multiply(f, m.action(b), lift)));
    }
    return {Module(m.algebra(), std::move(dims), std::move(action)), std::move(proj)};
}

inline Module direct_sum(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    const Algebra& a = *m.algebra();
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) dims.push_back(m.dim(v) + n.dim(v));
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        auto s = a.source[b], t = a.target[b];
        Matrix x(dims[t], dims[s]);
        const Matrix &p = m.action(b), &q = n.action(b);
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) x(i, j) = p(i, j);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j) x(p.rows() + i, p.cols() + j) = q(i, j);
        action.push_back(std::move(x));
    }
    return Module(m.algebra(), std::move(dims), std::move(action));
}

inline bool is_semisimple(const Module& m) {
    for (auto r : m.algebra()->radical)
        if (!m.action(r).is_zero()) return false;
    return true;
}

/// Index bookkeeping for P = sum_v P_v^{mult[v]}, P_v = A e_v.
/// Block u of P lists, for v = 0.., copy k = 0..mult[v]-1, the basis
/// elements of e_u A e_v in ascending order.
struct ProjectiveLayout {
    std::vector<std::size_t> mult;
    std::vector<std::vector<std::size_t>> section;  // section[u][v] = offset of vertex v's copies in block u
    std::vector<std::size_t> pos_in_block;          // index of basis element b inside its block list

    std::size_t position(const Algebra& a, std::size_t v, std::size_t copy, std::size_t b) const {
        const auto u = a.target[b];
        return section[u][v] + copy * a.block(u, v).size() + pos_in_block[b];
    }
    /// Position of the generator e_v of copy k, inside block v.
    std::size_t generator(const Algebra& a, std::size_t v, std::size_t copy) const {
        return position(a, v, copy, a.primitives[v]);
    }
    std::size_t rank() const { return std::accumulate(mult.begin(), mult.end(), std::size_t{0}); }
};

struct ProjectiveModule {
    Module module;
    ProjectiveLayout layout;
};

inline ProjectiveModule projective_module(const AlgebraPtr& alg, const std::vector<std::size_t>& mult) {
    const Algebra& a = *alg;
    const std::size_t nv = a.vertex_count();
    ProjectiveLayout lay;
    lay.mult = mult;
    lay.pos_in_block.assign(a.dim(), 0);
    for (std::size_t t = 0; t < nv; ++t)
        for (std::size_t s = 0; s < nv; ++s)
            for (std::size_t k = 0; k < a.block(t, s).size(); ++k) lay.pos_in_block[a.block(t, s)[k]] = k;
    std::vector<std::size_t> dims(nv, 0);
    lay.section.assign(nv, std::vector<std::size_t>(nv, 0));
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t v = 0; v < nv; ++v) {
            lay.section[u][v] = dims[u];
            dims[u] += mult[v] * a.block(u, v).size();
        }
    std::vector<Matrix> action;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        auto s = a.source[c], t = a.target[c];
        Matrix x(dims[t], dims[s]);
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t k = 0; k < mult[v]; ++k)
                for (auto b : a.block(s, v)) {
                    auto prod = a.product(c, b);
                    std::size_t col = lay.position(a, v, k, b);
                    for (auto b2 : a.block(t, v))
                        if (prod[b2]) x(lay.position(a, v, k, b2), col) = prod[b2];
                }
        action.push_back(std::move(x));
    }
    return {Module(alg, std::move(dims), std::move(action)), std::move(lay)};
}

inline Module simple_module(const AlgebraPtr& alg, std::size_t v) {
    const Algebra& a = *alg;
    std::vector<std::size_t> dims(a.vertex_count(), 0);
    dims[v] = 1;
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        Matrix x(dims[a.target[b]], dims[a.source[b]]);
        if (b == a.primitives[v]) x(0, 0) = 1;
        action.push_back(std::move(x));
    }
    return Module(alg, std::move(dims), std::move(action));
}

/// Indecomposable projectives P_v = A e_v and simples S_v = top P_v.
inline std::pair<std::vector<Module>, std::vector<Module>> projectives_and_simples(const AlgebraPtr& alg) {
    std::vector<Module> ps, ss;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        std::vector<std::size_t> mult(alg->vertex_count(), 0);
        mult[v] = 1;
        ps.push_back(projective_module(alg, mult).module);
        ss.push_back(simple_module(alg, v));
    }
    return {std::move(ps), std::move(ss)};
}

/// The regular module A, realized as sum_v P_v.
inline ProjectiveModule regular_module(const AlgebraPtr& alg) {
    return projective_module(alg, std::vector<std::size_t>(alg->vertex_count(), 1));
}

/// Direct sum of all simples, A / rad A.
inline Module semisimple_top_of_algebra(const AlgebraPtr& alg) {
    Module s = Module::zero(alg);
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) s = direct_sum(s, simple_module(alg, v));
    return s;
}

/// Per vertex, unit vectors spanning a complement of rad M in e_v M.
inline std::vector<std::vector<Vector>> top_generators(const Module& m) {
    GradedSubspace rad = radical_subspace(m);
    std::vector<std::vector<Vector>> gens(m.dims().size());
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
        std::vector<char> piv(m.dim(v), 0);
        for (auto r : rad.unit_rows[v]) piv[r] = 1;
        for (std::size_t i = 0; i < m.dim(v); ++i)
            if (!piv[i]) {
                Vector x(m.dim(v), 0);
                x[i] = 1;
                gens[v].push_back(std::move(x));
            }
    }
    return gens;
}

inline std::vector<std::size_t> top_multiplicities(const Module& m) {
    auto g = top_generators(m);
    std::vector<std::size_t> out;
    for (auto& x : g) out.push_back(x.size());
    return out;
}

inline Module top(const Module& m) { return quotient(m, radical_subspace(m)).module; }

/// Projective cover pi: P -> M with kernel Omega (the minimal syzygy).
struct Cover {
    ProjectiveModule projective;
    ModuleMap pi;
    Module syzygy;
    ModuleMap inclusion;  // syzygy -> projective
};

inline Cover cover_and_syzygy(const Module& m) {
    const AlgebraPtr& alg = m.algebra();
    const Algebra& a = *alg;
    const Field& f = a.field;
    auto gens = top_generators(m);
    std::vector<std::size_t> mult;
    for (auto& g : gens) mult.push_back(g.size());
    Cover c{projective_module(alg, mult), {}, Module::zero(alg), {}};
    const auto& lay = c.projective.layout;
    const std::size_t nv = a.vertex_count();
    for (std::size_t u = 0; u < nv; ++u) c.pi.blocks.emplace_back(m.dim(u), c.projective.module.dim(u));
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < mult[v]; ++k)
            for (std::size_t u = 0; u < nv; ++u)
                for (auto b : a.block(u, v)) {
                    Vector img = apply(f, m.action(b), gens[v][k]);
                    c.pi.blocks[u].set_column(lay.position(a, v, k, b), img);
                }
    GradedSubspace ker;
    for (std::size_t u = 0; u < nv; ++u) {
        KernelBasis kb = kernel(f, c.pi.blocks[u]);
        ker.basis.push_back(std::move(kb.basis));
        ker.unit_rows.push_back(std::move(kb.free_rows));
    }
    Subquotient sq = submodule(c.projective.module, ker);
    c.syzygy = std::move(sq.module);
    c.inclusion = std::move(sq.map);
    return c;
}

inline Module syzygy(const Module& m, std::size_t times = 1) {
    Module x = m;
    for (std::size_t i = 0; i < times && !x.is_zero(); ++i) x = cover_and_syzygy(x).syzygy;
    return x;
}

inline bool is_projective(const Module& m) { return m.is_zero() || cover_and_syzygy(m).syzygy.is_zero(); }

}  // namespace cornerstone

#endif
