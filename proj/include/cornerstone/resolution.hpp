#ifndef CORNERSTONE_RESOLUTION_HPP
#define CORNERSTONE_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cornerstone/constructions.hpp"
#include "cornerstone/module.hpp"

namespace cornerstone {

/// Minimal projective resolution  ... -> P^{-1} -> P^0 -> M,  computed for
/// degrees 0..cutoff. terms[i] is the multiplicity vector of P^{-i};
/// differentials[i] is d^{-i-1}: P^{-i-1} -> P^{-i}; syzygies[i] is Omega^i M.
/// `terminated` means Omega^{i+1} = 0 for some i <= cutoff, i.e. the
/// resolution is complete and pd M <= cutoff.
struct Resolution {
    Module module;
    std::size_t cutoff = 0;
    bool terminated = false;
    std::vector<std::vector<std::size_t>> terms;
    std::vector<ProjectiveModule> projectives;
    std::vector<ModuleMap> covers;          // pi_i: P^{-i} -> Omega^i
    std::vector<ModuleMap> inclusions;      // Omega^{i+1} -> P^{-i}
    std::vector<ModuleMap> differentials;
    std::vector<Module> syzygies;

    std::size_t length() const { return terms.size(); }
};

inline Resolution minimal_resolution(const Module& m, std::size_t cutoff) {
    const Field& f = m.field();
    Resolution r;
    r.module = m;
    r.cutoff = cutoff;
    r.syzygies.push_back(m);
    for (std::size_t i = 0; i <= cutoff; ++i) {
        if (r.syzygies[i].is_zero()) {
            r.terminated = true;
            break;
        }
        Cover c = cover_and_syzygy(r.syzygies[i]);
        r.terms.push_back(c.projective.layout.mult);
        r.projectives.push_back(std::move(c.projective));
        r.covers.push_back(std::move(c.pi));
        r.inclusions.push_back(std::move(c.inclusion));
        r.syzygies.push_back(std::move(c.syzygy));
        if (i > 0) r.differentials.push_back(compose(f, r.inclusions[i - 1], r.covers[i]));
    }
    if (!r.terminated && r.syzygies.back().is_zero()) r.terminated = true;
    return r;
}

/// Rank arithmetic and radical-image checks; returns an empty string when
/// the resolution is exact and minimal at every computed degree.
inline std::string check_resolution(const Resolution& r) {
    const Field& f = r.module.field();
    for (std::size_t i = 0; i < r.length(); ++i) {
        const Module& p = r.projectives[i].module;
        std::size_t rk = map_rank(f, r.covers[i]);
        if (rk != r.syzygies[i].dim()) return "cover " + std::to_string(i) + " is not surjective";
        if (p.dim() != rk + r.syzygies[i + 1].dim()) return "rank-nullity fails at degree " + std::to_string(i);
        if (!is_homomorphism(p, r.syzygies[i], r.covers[i])) return "cover " + std::to_string(i) + " is not a homomorphism";
    }
    for (std::size_t i = 0; i < r.differentials.size(); ++i) {
        const ModuleMap& d = r.differentials[i];
        const Module& src = r.projectives[i + 1].module;
        const Module& tgt = r.projectives[i].module;
        if (!is_homomorphism(src, tgt, d)) return "differential " + std::to_string(i + 1) + " is not a homomorphism";
        // exactness: rank d^{-i-1} = dim ker d^{-i}
        if (i > 0 && !compose(f, r.differentials[i - 1], d).is_zero()) return "d o d != 0 at degree " + std::to_string(i);
        if (map_rank(f, d) != r.syzygies[i + 1].dim()) return "not exact at degree " + std::to_string(i);
        // minimality: image inside rad P^{-i}
        GradedSubspace rad = radical_subspace(tgt);
        for (std::size_t v = 0; v < d.blocks.size(); ++v) {
            RowSpace rs(f, tgt.dim(v));
            for (std::size_t c = 0; c < rad.basis[v].cols(); ++c) rs.insert(rad.basis[v].column(c));
            for (std::size_t c = 0; c < d.blocks[v].cols(); ++c)
                if (!rs.contains(d.blocks[v].column(c))) return "image not in radical at degree " + std::to_string(i);
        }
    }
    return {};
}

/// Dimension of Hom(sum_v P_v^{mult[v]}, N) = sum_v mult[v] dim e_v N.
inline std::size_t projective_hom_dim(const std::vector<std::size_t>& mult, const Module& n) {
    std::size_t d = 0;
    for (std::size_t v = 0; v < mult.size(); ++v) d += mult[v] * n.dim(v);
    return d;
}

namespace detail {

/// Matrix of f -> f o d : Hom(P, N) -> Hom(Q, N) for d: Q -> P between
/// projectives, in generator coordinates (a map out of a projective is
/// determined by the images of its generators e_v).
inline Matrix pullback_matrix(const Algebra& a, const ProjectiveModule& q, const ProjectiveModule& p,
                              const ModuleMap& d, const Module& n) {
    const Field& f = a.field;
    const std::size_t nv = a.vertex_count();
    std::vector<std::size_t> col_off, row_off;
    std::size_t cols = 0, rows = 0;
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < p.layout.mult[v]; ++k) {
            col_off.push_back(cols);
            cols += n.dim(v);
        }
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t k = 0; k < q.layout.mult[u]; ++k) {
            row_off.push_back(rows);
            rows += n.dim(u);
        }
    Matrix out(rows, cols);
    std::size_t qi = 0;
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t k2 = 0; k2 < q.layout.mult[u]; ++k2, ++qi) {
            Vector z = d.blocks[u].column(q.layout.generator(a, u, k2));
            std::size_t pi = 0;
            for (std::size_t v = 0; v < nv; ++v)
                for (std::size_t k = 0; k < p.layout.mult[v]; ++k, ++pi)
                    for (auto b : a.block(u, v)) {
                        Scalar c = z[p.layout.position(a, v, k, b)];
                        if (!c) continue;
                        const Matrix& act = n.action(b);  // n_u x n_v
                        for (std::size_t i = 0; i < act.rows(); ++i)
                            for (std::size_t j = 0; j < act.cols(); ++j)
                                if (act(i, j)) {
                                    auto& x = out(row_off[qi] + i, col_off[pi] + j);
                                    x = f.add(x, f.mul(c, act(i, j)));
                                }
                    }
        }
    return out;
}

}  // namespace detail

/// dim Ext^i(M, N), i = 0..maxDeg, as cohomology of Hom(P_M, N).
inline std::vector<std::size_t> ext_dims_hom_complex(const Resolution& r, const Module& n, std::size_t maxDeg) {
    require_same_algebra(r.module, n);
    if (!r.terminated && r.length() < maxDeg + 2)
        throw Error(ErrorKind::CutoffTooSmall, "resolution cutoff " + std::to_string(r.cutoff) + " is too small for Ext degree " +
                                                    std::to_string(maxDeg));
    const Algebra& a = *n.algebra();
    const Field& f = a.field;
    // rank of d*_{i}: Hom(P^{-(i-1)}, N) -> Hom(P^{-i}, N), i >= 1
    std::vector<std::size_t> ranks(maxDeg + 2, 0);
    for (std::size_t i = 1; i <= maxDeg + 1 && i < r.length(); ++i) {
        Matrix m = detail::pullback_matrix(a, r.projectives[i], r.projectives[i - 1], r.differentials[i - 1], n);
        ranks[i] = rank(f, m);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= maxDeg; ++i) {
        std::size_t hom = i < r.length() ? projective_hom_dim(r.terms[i], n) : 0;
        out.push_back(hom - ranks[i + 1] - ranks[i]);
    }
    return out;
}

/// dim Hom(P^{-i}, S): equals dim Ext^i(M, S) for semisimple S and a
/// minimal resolution.
inline std::vector<std::size_t> ext_dims_via_terms(const Resolution& r, const Module& s, std::size_t maxDeg) {
    if (!r.terminated && r.length() < maxDeg + 1)
        throw Error(ErrorKind::CutoffTooSmall, "resolution too short for Ext degree " + std::to_string(maxDeg));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= maxDeg; ++i) out.push_back(i < r.length() ? projective_hom_dim(r.terms[i], s) : 0);
    return out;
}

/// dim Ext^i(M, N) for i = 0..maxDeg. When N is semisimple the value is
/// also read off the resolution terms and the two must coincide.
inline std::vector<std::size_t> ext_dims(const Resolution& r, const Module& n, std::size_t maxDeg) {
    auto dims = ext_dims_hom_complex(r, n, maxDeg);
    if (is_semisimple(n)) {
        auto alt = ext_dims_via_terms(r, n, maxDeg);
        if (alt != dims) throw InvariantViolation("Ext via Hom-complex disagrees with Hom(P^{-i}, S)");
    }
    return dims;
}

inline std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t maxDeg) {
    return ext_dims(minimal_resolution(m, maxDeg + 1), n, maxDeg);
}

/// dim of Hom modulo maps factoring through a projective. A map M -> N
/// factors through a projective iff it factors through the cover P_N -> N.
inline std::size_t stable_hom_dim(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    if (m.is_zero() || n.is_zero()) return 0;
    std::size_t total = hom_dim(m, n);
    if (total == 0) return 0;
    Cover c = cover_and_syzygy(n);
    const Field& f = m.field();
    RowSpace through(f, flatten(zero_map(m, n)).size());
    for (const auto& g : hom_space(m, c.projective.module)) through.insert(flatten(compose(f, c.pi, g)));
    return total - through.dim();
}

struct AddMembership {
    bool via_top = false;
    bool via_multiplicities = false;
};

/// Whether the projective P lies in add(Ae), decided by Hom(P, top(A/AeA)) = 0
/// and independently by the multiplicities of the indecomposable summands.
inline AddMembership add_membership(const Module& p, const Idempotent& e, const Module& quotient_top_module) {
    Cover c = cover_and_syzygy(p);
    if (!c.syzygy.is_zero()) throw Error(ErrorKind::NotProjective, "module is not projective");
    AddMembership out;
    out.via_top = hom_dim(p, quotient_top_module) == 0;
    out.via_multiplicities = true;
    for (std::size_t v = 0; v < c.projective.layout.mult.size(); ++v)
        if (!e.contains(v) && c.projective.layout.mult[v] != 0) out.via_multiplicities = false;
    if (out.via_top != out.via_multiplicities)
        throw InvariantViolation("add-membership legs disagree");
    return out;
}

inline AddMembership add_membership(const Module& p, const Idempotent& e) {
    return add_membership(p, e, quotient_top(p.algebra(), e));
}

/// Multiplicity-vector form of the membership test, used on resolution terms.
inline bool multiplicities_in_add(const std::vector<std::size_t>& mult, const Idempotent& e) {
    for (std::size_t v = 0; v < mult.size(); ++v)
        if (mult[v] && !e.contains(v)) return false;
    return true;
}

}  // namespace cornerstone

#endif
