#ifndef CORNERSTONE_EVIDENCE_HPP
#define CORNERSTONE_EVIDENCE_HPP

// Numeric evidence for singular equivalences: sequences of stable Hom
// dimensions along syzygies, compared across induction and across the
// S-block of a triangular matrix ring.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cornerstone/conditions.hpp"

namespace cornerstone {

/// Omega^l M for l = 0, 1, ..., computed on demand.
class SyzygyChain {
public:
    explicit SyzygyChain(Module m) { chain_.push_back(std::move(m)); }

    const Module& at(std::size_t l) {
        while (chain_.size() <= l) chain_.push_back(syzygy(chain_.back()));
        return chain_[l];
    }

private:
    std::vector<Module> chain_;
};

/// Omega^n M, standing in for the shift Sigma^{-n} of the resolution of M.
inline Module shift_normalize(const Module& m, std::size_t n) { return syzygy(m, n); }

struct StableHomSequence {
    std::string m_name, n_name;
    std::vector<std::size_t> dims;           // d_l = dim stable Hom(Omega^l M, Omega^l N)
    std::optional<std::size_t> stabilized;   // heuristic: last `window` entries equal
    std::size_t window = 5;
    bool proven_zero = false;                // a syzygy on either side vanished
};

inline StableHomSequence stable_hom_sequence(SyzygyChain& m, SyzygyChain& n, std::size_t max_ell, std::size_t window) {
    if (max_ell + 1 < window) throw Error(ErrorKind::ValidationError, "max syzygy must be at least the window");
    StableHomSequence s;
    s.window = window;
    for (std::size_t l = 0; l <= max_ell; ++l) {
        if (s.proven_zero) {
            s.dims.push_back(0);
            continue;
        }
        const Module& ml = m.at(l);
        const Module& nl = n.at(l);
        if (ml.is_zero() || nl.is_zero()) {
            s.proven_zero = true;
            s.dims.push_back(0);
            continue;
        }
        s.dims.push_back(stable_hom_dim(ml, nl));
    }
    bool constant = s.dims.size() >= window;
    for (std::size_t k = s.dims.size() - window; constant && k + 1 < s.dims.size(); ++k)
        if (s.dims[k] != s.dims[k + 1]) constant = false;
    if (constant) s.stabilized = s.dims.back();
    return s;
}

inline StableHomSequence stable_hom_sequence(const Module& m, const Module& n, std::size_t max_ell, std::size_t window) {
    SyzygyChain a(m), b(n);
    return stable_hom_sequence(a, b, max_ell, window);
}

struct NamedModule {
    std::string name;
    Module module;
};

/// Cyclic module P_v / A x for a random x in rad P_v.
template <class Rng>
Module random_cyclic_module(const AlgebraPtr& a, std::size_t v, Rng& rng) {
    std::vector<std::size_t> mult(a->vertex_count(), 0);
    mult[v] = 1;
    Module p = projective_module(a, mult).module;
    GradedSubspace rad = radical_subspace(p);
    std::uniform_int_distribution<Scalar> coeff(0, a->field.p() - 1);
    std::vector<std::vector<Vector>> gens(a->vertex_count());
    for (std::size_t u = 0; u < a->vertex_count(); ++u) {
        if (rad.basis[u].cols() == 0) continue;
        Vector x(p.dim(u), 0);
        for (std::size_t c = 0; c < rad.basis[u].cols(); ++c) axpy(a->field, x, coeff(rng), rad.basis[u].column(c));
        gens[u].push_back(std::move(x));
        break;
    }
    GradedSubspace sub = generated_submodule(p, gens);
    return quotient(p, sub).module;
}

/// Simples and their first `depth` syzygies, skipping zero modules.
inline std::vector<NamedModule> default_samples(const AlgebraPtr& a, std::size_t depth = 2) {
    std::vector<NamedModule> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        std::string base = "S@" + a->vertex_labels[v];
        Module m = simple_module(a, v);
        out.push_back({base, m});
        for (std::size_t l = 1; l <= depth; ++l) {
            m = syzygy(m);
            if (m.is_zero()) break;
            out.push_back({"Omega" + std::to_string(l) + "(" + base + ")", m});
        }
    }
    return out;
}

struct EvidencePair {
    std::string n, m;
    std::optional<std::size_t> lhs, rhs;  // stabilized values over eAe and over A
    bool proven = false;                  // both sides provably zero
    bool match = true;
};

struct EvidenceReport {
    std::vector<std::size_t> e_vertices;
    TheoremBVerdict verdict;
    std::vector<EvidencePair> pairs;
    bool tails_exist = true;
    bool comparable = false;  // delta certified, so stabilized values must agree
    bool consistent = true;
};

struct SampleSpec {
    std::size_t depth = 2;
    std::size_t random_count = 0;
    std::uint64_t seed = 7;
};

inline EvidenceReport equivalence_evidence(const IdempotentContext& ctx, const SampleSpec& spec, std::size_t max_ell,
                                           std::size_t window) {
    EvidenceReport rep;
    rep.e_vertices = ctx.e.vertices;
    rep.verdict = theorem_b_verdict(ctx);
    const AlgebraPtr& c = ctx.corner.algebra;
    auto samples = default_samples(c, spec.depth);
    if (spec.random_count) {
        std::mt19937_64 rng(spec.seed);
        for (std::size_t k = 0; k < spec.random_count; ++k) {
            std::size_t v = rng() % c->vertex_count();
            samples.push_back({"random" + std::to_string(k) + "@" + c->vertex_labels[v], random_cyclic_module(c, v, rng)});
        }
    }
    std::vector<SyzygyChain> small, big;
    for (const auto& s : samples) {
        small.emplace_back(s.module);
        big.emplace_back(induce_idempotent(s.module, ctx.algebra, ctx.corner).module);
    }
    rep.comparable = rep.verdict.delta_holds && rep.verdict.conditions.delta.certified;
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < samples.size(); ++j) {
            EvidencePair p;
            p.n = samples[i].name;
            p.m = samples[j].name;
            auto l = stable_hom_sequence(small[i], small[j], max_ell, window);
            auto r = stable_hom_sequence(big[i], big[j], max_ell, window);
            p.lhs = l.stabilized;
            p.rhs = r.stabilized;
            p.proven = l.proven_zero && r.proven_zero;
            p.match = !(p.lhs && p.rhs) || *p.lhs == *p.rhs;
            if (rep.comparable && !p.match) rep.consistent = false;
            rep.pairs.push_back(std::move(p));
        }
    if (rep.verdict.equivalence == Prediction::Yes)
        for (const auto& t : rep.verdict.tails)
            if (!t) rep.tails_exist = false;
    if (!rep.tails_exist || !rep.verdict.chain_violations.empty()) rep.consistent = false;
    return rep;
}

struct TriangularReport {
    bool applicable = false;  // gd T decided finite
    HomDim gd_t;
    std::size_t pd_checks = 0, pd_failures = 0;
    std::size_t projectivity_checks = 0, projectivity_failures = 0;
    std::vector<EvidencePair> pairs;
    bool stable_tables_match = true;
    std::vector<std::string> failures;
};

/// For R = [[T,0],[M,S]]: pd_S Y = pd_R (0,Y,0); (X, M(x)X, 1) is projective
/// iff X is; and stable Hom sequences of S-pairs agree with their images
/// (skipped when max_ell is 0).
inline TriangularReport triangular_equivalence_check(const TriangularAlgebra& tri, std::size_t cutoff, std::size_t max_ell,
                                                     std::size_t window) {
    TriangularReport rep;
    const TriangularBlocks& tb = triangular_blocks(tri.algebra);
    rep.gd_t = global_dim(tb.t, cutoff);
    rep.applicable = rep.gd_t.is_finite();

    auto [sp, ss] = projectives_and_simples(tb.s);
    std::vector<NamedModule> ys = default_samples(tb.s, 2);
    for (std::size_t v = 0; v < sp.size(); ++v) ys.push_back({"P@" + tb.s->vertex_labels[v], sp[v]});
    for (const auto& y : ys) {
        Module z = triple_to_module(s_block_triple(tri.algebra, y.module), tri.algebra);
        ++rep.pd_checks;
        HomDim a = proj_dim(y.module, cutoff), b = proj_dim(z, cutoff);
        if (a != b) {
            ++rep.pd_failures;
            rep.failures.push_back("pd mismatch for " + y.name + ": " + a.str() + " vs " + b.str());
        }
    }

    auto [tp, ts] = projectives_and_simples(tb.t);
    std::vector<NamedModule> xs = default_samples(tb.t, 2);
    for (std::size_t v = 0; v < tp.size(); ++v) {
        xs.push_back({"P@" + tb.t->vertex_labels[v], tp[v]});
        xs.push_back({"P+S@" + tb.t->vertex_labels[v], direct_sum(tp[v], ts[v])});
    }
    for (const auto& x : xs) {
        Module z = triple_to_module(induced_triple(tri.algebra, x.module), tri.algebra);
        ++rep.projectivity_checks;
        if (is_projective(z) != is_projective(x.module)) {
            ++rep.projectivity_failures;
            rep.failures.push_back("projectivity mismatch for (X, M(x)X, 1) with X = " + x.name);
        }
    }

    if (rep.applicable && max_ell > 0) {
        std::vector<SyzygyChain> small, big;
        auto samples = default_samples(tb.s, 1);
        for (const auto& y : samples) {
            small.emplace_back(y.module);
            big.emplace_back(triple_to_module(s_block_triple(tri.algebra, y.module), tri.algebra));
        }
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t j = 0; j < samples.size(); ++j) {
                EvidencePair p;
                p.n = samples[i].name;
                p.m = samples[j].name;
                auto l = stable_hom_sequence(small[i], small[j], max_ell, window);
                auto r = stable_hom_sequence(big[i], big[j], max_ell, window);
                p.lhs = l.stabilized;
                p.rhs = r.stabilized;
                p.proven = l.proven_zero && r.proven_zero;
                p.match = !(p.lhs && p.rhs) || *p.lhs == *p.rhs;
                if (!p.match) rep.stable_tables_match = false;
                rep.pairs.push_back(std::move(p));
            }
    }
    return rep;
}

}  // namespace cornerstone

#endif
