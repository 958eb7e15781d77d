#ifndef CORNERSTONE_CONDITIONS_HPP
#define CORNERSTONE_CONDITIONS_HPP

// Cutoff-qualified homological dimensions, the four idempotent conditions
// alpha..delta, resolution tails in add(Ae), and perpendicular categories.

#include <optional>
#include <string>
#include <vector>

#include "cornerstone/functors.hpp"
#include "cornerstone/resolution.hpp"

namespace cornerstone {

/// Finite(d) or AtLeast(cutoff). A Finite value is `certified` when it is
/// backed by a terminated resolution; otherwise it only records that Ext
/// vanished up to the cutoff.
struct HomDim {
    enum class Kind { Finite, AtLeast };
    Kind kind = Kind::Finite;
    int value = -1;
    bool certified = true;

    static HomDim finite(int d, bool certified = true) { return {Kind::Finite, d, certified}; }
    static HomDim at_least(int cutoff) { return {Kind::AtLeast, cutoff, false}; }

    bool is_finite() const { return kind == Kind::Finite; }

    std::string str() const {
        if (kind == Kind::AtLeast) return "AtLeast(" + std::to_string(value) + ")";
        return (certified ? "Finite(" : "Finite<=cutoff-evidence(") + std::to_string(value) + ")";
    }

    friend bool operator==(const HomDim&, const HomDim&) = default;
};

enum class Tri { Holds, Violated, Undecided };

inline std::string to_string(Tri t) {
    switch (t) {
    case Tri::Holds: return "holds";
    case Tri::Violated: return "violated";
    case Tri::Undecided: return "undecided";
    }
    return "undecided";
}

inline HomDim proj_dim(const Resolution& r) {
    if (r.terminated) return HomDim::finite(static_cast<int>(r.length()) - 1);
    return HomDim::at_least(static_cast<int>(r.cutoff));
}

inline HomDim proj_dim(const Module& m, std::size_t cutoff) { return proj_dim(minimal_resolution(m, cutoff)); }

/// proj_dim of a resolution computed past `cutoff`, reported at `cutoff`.
inline HomDim proj_dim(const Resolution& r, std::size_t cutoff) {
    HomDim p = proj_dim(r);
    if (!p.is_finite() || p.value > static_cast<int>(cutoff)) return HomDim::at_least(static_cast<int>(cutoff));
    return p;
}

/// Minimal resolutions of all simples, long enough for Ext up to `cutoff`.
struct SimpleResolutions {
    std::size_t cutoff = 0;
    std::vector<Resolution> res;
    bool all_terminated = true;
};

inline SimpleResolutions resolve_simples(const AlgebraPtr& a, std::size_t cutoff) {
    SimpleResolutions s;
    s.cutoff = cutoff;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        s.res.push_back(minimal_resolution(simple_module(a, v), cutoff + 1));
        s.all_terminated = s.all_terminated && s.res.back().terminated;
    }
    return s;
}

/// dim Ext^i(A/rad A, M) for i = 0..maxDeg.
inline std::vector<std::size_t> ext_from_top(const SimpleResolutions& s, const Module& m, std::size_t maxDeg) {
    std::vector<std::size_t> total(maxDeg + 1, 0);
    for (const auto& r : s.res) {
        auto e = ext_dims(r, m, maxDeg);
        for (std::size_t i = 0; i <= maxDeg; ++i) total[i] += e[i];
    }
    return total;
}

/// Injective dimension via Ext against the simples.
inline HomDim inj_dim(const Module& m, const SimpleResolutions& s) {
    if (m.is_zero()) return HomDim::finite(-1);
    std::size_t deg = s.cutoff;
    if (s.all_terminated) {
        std::size_t longest = 0;
        for (const auto& r : s.res) longest = std::max(longest, r.length());
        deg = std::max<std::size_t>(longest, 1) - 1;
    }
    auto ext = ext_from_top(s, m, deg);
    int d = -1;
    for (std::size_t i = 0; i <= deg; ++i)
        if (ext[i]) d = static_cast<int>(i);
    if (s.all_terminated) return HomDim::finite(d);
    if (ext[s.cutoff]) return HomDim::at_least(static_cast<int>(s.cutoff));
    return HomDim::finite(d, false);
}

inline HomDim inj_dim(const Module& m, std::size_t cutoff) { return inj_dim(m, resolve_simples(m.algebra(), cutoff)); }

inline HomDim global_dim(const SimpleResolutions& s) {
    int d = -1;
    for (const auto& r : s.res) {
        HomDim p = proj_dim(r, s.cutoff);
        if (!p.is_finite()) return p;
        d = std::max(d, p.value);
    }
    return HomDim::finite(d);
}

inline HomDim global_dim(const AlgebraPtr& a, std::size_t cutoff) { return global_dim(resolve_simples(a, cutoff)); }

/// The right eAe-module Ae as a left module over (eAe)^op.
inline Module corner_right_module(const AlgebraPtr& a, const CornerAlgebra& c, const AlgebraPtr& corner_op) {
    Bimodule b = corner_bimodule(a, c);
    const Algebra& op = *corner_op;
    const std::size_t nv = op.vertex_count();
    std::vector<std::size_t> dims(nv, 0), local(b.dim());
    for (std::size_t m = 0; m < b.dim(); ++m) local[m] = dims[b.right_vertex[m]]++;
    std::vector<Matrix> action;
    for (std::size_t x = 0; x < op.dim(); ++x) {
        Matrix blk(dims[op.target[x]], dims[op.source[x]]);
        const Matrix& ra = b.right_action[x];
        for (std::size_t m = 0; m < b.dim(); ++m) {
            if (b.right_vertex[m] != op.source[x]) continue;
            for (std::size_t m2 = 0; m2 < b.dim(); ++m2)
                if (ra(m2, m)) blk(local[m2], local[m]) = ra(m2, m);
        }
        action.push_back(std::move(blk));
    }
    return Module(corner_op, std::move(dims), std::move(action));
}

struct ConditionReport {
    HomDim alpha, beta, gamma, delta;
    Tri pss = Tri::Undecided;
    bool fully_decided = false;  // all four Finite
    std::size_t cutoff = 0;
};

/// Everything derived from (A, e) that several checks share.
struct IdempotentContext {
    AlgebraPtr algebra;
    Idempotent e;
    CornerAlgebra corner;
    AlgebraPtr corner_op;
    Module quotient_top;  // top(A/AeA) as an A-module
    std::size_t cutoff = 0;
    SimpleResolutions simples;
};

inline IdempotentContext make_context(const AlgebraPtr& a, const Idempotent& e, std::size_t cutoff) {
    IdempotentContext ctx;
    ctx.algebra = a;
    ctx.e = e;
    ctx.corner = corner_algebra(*a, e);
    ctx.corner_op = opposite_algebra(*ctx.corner.algebra);
    ctx.quotient_top = quotient_top(a, e);
    ctx.cutoff = cutoff;
    ctx.simples = resolve_simples(a, cutoff);
    return ctx;
}

inline ConditionReport check_conditions(const IdempotentContext& ctx) {
    ConditionReport r;
    r.cutoff = ctx.cutoff;
    r.alpha = inj_dim(ctx.quotient_top, ctx.simples);
    r.gamma = proj_dim(ctx.quotient_top, ctx.cutoff);
    r.beta = proj_dim(restrict_idempotent(regular_module(ctx.algebra).module, ctx.corner), ctx.cutoff);
    r.delta = proj_dim(corner_right_module(ctx.algebra, ctx.corner, ctx.corner_op), ctx.cutoff);
    bool lhs = r.alpha.is_finite() && r.beta.is_finite();
    bool rhs = r.gamma.is_finite() && r.delta.is_finite();
    r.fully_decided = lhs && rhs;
    // A disagreement always involves an AtLeast value, which may still turn
    // finite past the cutoff, so it is reported as undecided.
    r.pss = lhs == rhs ? Tri::Holds : Tri::Undecided;
    return r;
}

inline ConditionReport check_conditions(const AlgebraPtr& a, const Idempotent& e, std::size_t cutoff) {
    return check_conditions(make_context(a, e, cutoff));
}

/// Smallest l such that every computed term P^{-i}, i > l, lies in add(Ae);
/// nullopt when the last computed term of an unfinished resolution fails.
inline std::optional<std::size_t> theorem_a_tail(const Resolution& r, const Idempotent& e) {
    std::optional<std::size_t> last_fail;
    for (std::size_t i = 0; i < r.length(); ++i)
        if (!multiplicities_in_add(r.terms[i], e)) last_fail = i;
    if (!last_fail) return 0;
    if (!r.terminated && *last_fail + 1 == r.length()) return std::nullopt;
    return *last_fail;
}

inline std::optional<std::size_t> theorem_a_tail(const Module& m, const Idempotent& e, std::size_t cutoff) {
    return theorem_a_tail(minimal_resolution(m, cutoff), e);
}

enum class Prediction { Yes, No, Undecided };

inline std::string to_string(Prediction p) {
    switch (p) {
    case Prediction::Yes: return "yes";
    case Prediction::No: return "no";
    case Prediction::Undecided: return "undecided";
    }
    return "undecided";
}

struct TheoremBVerdict {
    ConditionReport conditions;
    bool alpha_holds = false;
    bool delta_holds = false;
    Prediction equivalence = Prediction::Undecided;
    std::vector<std::optional<std::size_t>> tails;  // per simple
    std::vector<std::string> chain_violations;      // empty when the internal chain holds
};

/// Predicts whether induction gives a singular equivalence from alpha and
/// delta, and checks that alpha = Finite(d) puts every simple's resolution
/// terms past degree d into add(Ae).
inline TheoremBVerdict theorem_b_verdict(const IdempotentContext& ctx) {
    TheoremBVerdict v;
    v.conditions = check_conditions(ctx);
    v.alpha_holds = v.conditions.alpha.is_finite();
    v.delta_holds = v.conditions.delta.is_finite();
    v.equivalence = v.alpha_holds && v.delta_holds ? Prediction::Yes : Prediction::Undecided;
    for (std::size_t s = 0; s < ctx.simples.res.size(); ++s) {
        const Resolution& r = ctx.simples.res[s];
        v.tails.push_back(theorem_a_tail(r, ctx.e));
        if (!v.alpha_holds) continue;
        for (std::size_t i = 0; i < r.length(); ++i)
            if (static_cast<int>(i) > v.conditions.alpha.value && !multiplicities_in_add(r.terms[i], ctx.e))
                v.chain_violations.push_back("simple " + ctx.algebra->vertex_labels[s] + ": term " + std::to_string(i) +
                                             " outside add(Ae) although alpha = " + v.conditions.alpha.str());
    }
    return v;
}

inline bool perp_membership(const Module& m, const Module& s) {
    if (hom_dim(m, s) != 0) return false;
    return ext_dims(m, s, 1)[1] == 0;
}

struct PerpReport {
    bool applicable = false;             // e nonempty
    HomDim id_s;
    std::vector<std::size_t> e_vertices; // P_v in the perpendicular category
    bool projective_membership_ok = true;
    HomDim gd_corner, gd_algebra;
    bool sandwich_decided = false;
    bool sandwich_holds = true;
    HomDim delta;                        // pd of Ae over (eAe)^op
    bool delta_projective = false;
    Prediction equivalence = Prediction::Undecided;
    std::size_t pd_pairs_checked = 0;
    bool pd_transfer_holds = true;       // pd_{eAe} N = pd_A i_lambda N on corner simples
};

/// For a semisimple S with id S <= 1: finds e with add(Ae) = proj A meeting
/// the perpendicular category of S and checks the global-dimension sandwich,
/// projectivity of Ae over the corner, and the predicted equivalence.
inline PerpReport perp_proposition_checks(const AlgebraPtr& a, const Module& s, std::size_t cutoff) {
    if (!is_semisimple(s)) throw Error(ErrorKind::ValidationError, "perpendicular check needs a semisimple module");
    PerpReport rep;
    SimpleResolutions simples = resolve_simples(a, cutoff);
    rep.id_s = inj_dim(s, simples);
    if (!rep.id_s.is_finite() || rep.id_s.value > 1)
        throw Error(ErrorKind::IdTooLarge, "id S = " + rep.id_s.str() + " exceeds 1");
    auto [ps, ss] = projectives_and_simples(a);
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        bool in_perp = perp_membership(ps[v], s);
        if (in_perp != (s.dim(v) == 0)) rep.projective_membership_ok = false;
        if (in_perp) rep.e_vertices.push_back(v);
    }
    rep.gd_algebra = global_dim(simples);
    if (rep.e_vertices.empty()) return rep;
    rep.applicable = true;
    IdempotentContext ctx = make_context(a, make_idempotent(*a, rep.e_vertices), cutoff);
    rep.gd_corner = global_dim(ctx.corner.algebra, cutoff);
    if (rep.gd_corner.is_finite() && rep.gd_algebra.is_finite()) {
        rep.sandwich_decided = true;
        rep.sandwich_holds =
            rep.gd_corner.value <= rep.gd_algebra.value && rep.gd_algebra.value <= rep.gd_corner.value + 2;
    }
    rep.delta = proj_dim(corner_right_module(a, ctx.corner, ctx.corner_op), cutoff);
    rep.delta_projective = rep.delta == HomDim::finite(0);
    rep.equivalence = theorem_b_verdict(ctx).equivalence;
    auto [cps, css] = projectives_and_simples(ctx.corner.algebra);
    for (const auto& n : css) {
        HomDim lhs = proj_dim(n, cutoff);
        HomDim rhs = proj_dim(induce_idempotent(n, a, ctx.corner).module, cutoff);
        if (lhs.is_finite() && rhs.is_finite()) {
            ++rep.pd_pairs_checked;
            if (lhs != rhs) rep.pd_transfer_holds = false;
        }
    }
    return rep;
}

}  // namespace cornerstone

#endif
