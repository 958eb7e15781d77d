#ifndef CORNERSTONE_SUITES_HPP
#define CORNERSTONE_SUITES_HPP

// Property suites over a list of corpus cases. Every suite counts checks,
// violations and undecided cases and keeps a replayable record of each
// violation.

#include <string>
#include <vector>

#include "cornerstone/corpus.hpp"
#include "cornerstone/io.hpp"

namespace cornerstone {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::size_t undecided = 0;
    std::size_t cases = 0;
    Json counterexamples = Json::array();

    void violation(const CorpusCase& c, Json detail) {
        ++violations;
        Json j;
        j["case"] = c.name;
        j["algebra"] = write_table(*c.algebra);
        j["detail"] = std::move(detail);
        counterexamples.push_back(std::move(j));
    }
};

inline Json to_json(const SuiteResult& s) {
    Json j;
    j["suite"] = s.name;
    j["cases"] = s.cases;
    j["checks"] = s.checks;
    j["violations"] = s.violations;
    j["undecided"] = s.undecided;
    j["counterexamples"] = s.counterexamples;
    return j;
}

/// Modules every suite samples over an algebra: simples, indecomposable
/// projectives, first syzygies of simples and a few random cyclic modules.
inline std::vector<NamedModule> sample_modules(const AlgebraPtr& a, std::size_t random_count = 2, std::uint64_t seed = 11) {
    std::vector<NamedModule> out;
    auto [ps, ss] = projectives_and_simples(a);
    for (std::size_t v = 0; v < ss.size(); ++v) out.push_back({"S@" + a->vertex_labels[v], ss[v]});
    for (std::size_t v = 0; v < ps.size(); ++v) out.push_back({"P@" + a->vertex_labels[v], ps[v]});
    for (std::size_t v = 0; v < ss.size(); ++v) {
        Module om = syzygy(ss[v]);
        if (!om.is_zero()) out.push_back({"Omega1(S@" + a->vertex_labels[v] + ")", om});
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        std::size_t v = rng() % a->vertex_count();
        out.push_back({"random" + std::to_string(k) + "@" + a->vertex_labels[v], random_cyclic_module(a, v, rng)});
    }
    return out;
}

/// dim Ext^i(M, S) from the Hom complex against dim Hom(P^{-i}, S), for
/// every simple and for A/rad A, i = 0..max_deg.
inline SuiteResult ext_lemma_suite(const std::vector<CorpusCase>& corpus, std::size_t max_deg) {
    SuiteResult out;
    out.name = "ext-vs-resolution-terms";
    for (const auto& c : corpus) {
        ++out.cases;
        std::vector<NamedModule> targets;
        auto [ps, ss] = projectives_and_simples(c.algebra);
        for (std::size_t v = 0; v < ss.size(); ++v) targets.push_back({"S@" + c.algebra->vertex_labels[v], ss[v]});
        targets.push_back({"top(A)", semisimple_top_of_algebra(c.algebra)});
        for (const auto& m : sample_modules(c.algebra)) {
            Resolution r = minimal_resolution(m.module, max_deg + 1);
            std::string bad = check_resolution(r);
            if (!bad.empty()) out.violation(c, {{"module", m.name}, {"resolution", bad}});
            for (const auto& s : targets) {
                auto lhs = ext_dims_hom_complex(r, s.module, max_deg);
                auto rhs = ext_dims_via_terms(r, s.module, max_deg);
                for (std::size_t i = 0; i <= max_deg; ++i) {
                    ++out.checks;
                    if (lhs[i] != rhs[i])
                        out.violation(c, {{"module", m.name}, {"simple", s.name}, {"degree", i}, {"homComplex", lhs[i]}, {"terms", rhs[i]}});
                }
            }
        }
    }
    return out;
}

/// Both legs of the add(Ae) test on indecomposable projectives, their pairwise
/// sums and the regular module, for every corpus idempotent; plus images of
/// corner projectives under induction.
inline SuiteResult add_membership_suite(const std::vector<CorpusCase>& corpus) {
    SuiteResult out;
    out.name = "add-membership";
    for (const auto& c : corpus) {
        ++out.cases;
        const AlgebraPtr& a = c.algebra;
        auto [ps, ss] = projectives_and_simples(a);
        std::vector<NamedModule> projectives;
        for (std::size_t v = 0; v < ps.size(); ++v) projectives.push_back({"P@" + a->vertex_labels[v], ps[v]});
        for (std::size_t v = 0; v < ps.size(); ++v)
            for (std::size_t w = v; w < ps.size(); ++w)
                projectives.push_back({"P@" + a->vertex_labels[v] + "+P@" + a->vertex_labels[w], direct_sum(ps[v], ps[w])});
        projectives.push_back({"A", regular_module(a).module});
        for (const auto& e : corpus_idempotents(*a)) {
            Module qt = quotient_top(a, e);
            for (const auto& p : projectives) {
                ++out.checks;
                try {
                    add_membership(p.module, e, qt);
                } catch (const InvariantViolation& ex) {
                    out.violation(c, {{"projective", p.name}, {"e", idempotent_name(*a, e)}, {"error", ex.what()}});
                }
            }
            CornerAlgebra corner = corner_algebra(*a, e);
            auto [cps, css] = projectives_and_simples(corner.algebra);
            for (std::size_t v = 0; v < cps.size(); ++v) {
                ++out.checks;
                Module img = induce_idempotent(cps[v], a, corner).module;
                AddMembership m = add_membership(img, e, qt);
                if (!m.via_top) out.violation(c, {{"inducedProjective", v}, {"e", idempotent_name(*a, e)}});
            }
        }
    }
    return out;
}

/// dim Hom(i_lambda N, M) = dim Hom(N, eM), dim Hom(N, N') = dim Hom(i_lambda N, i_lambda N'),
/// and invertibility of the unit e i_lambda N -> N.
inline SuiteResult adjunction_suite(const std::vector<CorpusCase>& corpus) {
    SuiteResult out;
    out.name = "adjunction-and-full-faithfulness";
    for (const auto& c : corpus) {
        ++out.cases;
        const AlgebraPtr& a = c.algebra;
        auto big = sample_modules(a, 1, 5);
        for (const auto& e : corpus_idempotents(*a)) {
            CornerAlgebra corner = corner_algebra(*a, e);
            auto small = sample_modules(corner.algebra, 1, 3);
            std::vector<Module> induced;
            for (const auto& n : small) {
                Induced ind = induce_idempotent(n.module, a, corner);
                ++out.checks;
                if (!unit_is_invertible(a->field, ind))
                    out.violation(c, {{"e", idempotent_name(*a, e)}, {"n", n.name}, {"unit", "not invertible"}});
                induced.push_back(std::move(ind.module));
            }
            for (std::size_t i = 0; i < small.size(); ++i) {
                for (const auto& m : big) {
                    ++out.checks;
                    AdjunctionDims d = check_adjunction(small[i].module, m.module, corner);
                    if (d.induced_side != d.restricted_side)
                        out.violation(c, {{"e", idempotent_name(*a, e)}, {"n", small[i].name}, {"m", m.name},
                                          {"homInduced", d.induced_side}, {"homRestricted", d.restricted_side}});
                }
                for (std::size_t j = 0; j < small.size(); ++j) {
                    ++out.checks;
                    std::size_t lhs = hom_dim(small[i].module, small[j].module);
                    std::size_t rhs = hom_dim(induced[i], induced[j]);
                    if (lhs != rhs)
                        out.violation(c, {{"e", idempotent_name(*a, e)}, {"n", small[i].name}, {"n2", small[j].name},
                                          {"homCorner", lhs}, {"homInduced", rhs}});
                }
            }
        }
    }
    return out;
}

/// The four conditions on every (A, e); violated only with a witness,
/// undecided when a truth value rests on an AtLeast.
inline SuiteResult conditions_suite(const std::vector<CorpusCase>& corpus, std::size_t cutoff, Json* reports = nullptr) {
    SuiteResult out;
    out.name = "conditions-biconditional";
    for (const auto& c : corpus) {
        ++out.cases;
        for (const auto& e : corpus_idempotents(*c.algebra)) {
            ConditionReport r = check_conditions(c.algebra, e, cutoff);
            ++out.checks;
            if (r.pss == Tri::Violated) out.violation(c, {{"e", idempotent_name(*c.algebra, e)}, {"report", to_json(r)}});
            if (r.pss == Tri::Undecided) ++out.undecided;
            if (reports) {
                Json j;
                j["case"] = c.name;
                j["e"] = idempotent_name(*c.algebra, e);
                j["conditions"] = to_json(r);
                reports->push_back(std::move(j));
            }
        }
    }
    return out;
}

/// alpha = Finite(d) puts every simple's resolution terms beyond d in add(Ae);
/// conversely a tail in add(Ae) past l with all simples resolved forces
/// Ext^i(A/rad A, top(A/AeA)) = 0 for i > l.
inline SuiteResult theorem_b_suite(const std::vector<CorpusCase>& corpus, std::size_t cutoff) {
    SuiteResult out;
    out.name = "resolution-tails";
    for (const auto& c : corpus) {
        ++out.cases;
        for (const auto& e : corpus_idempotents(*c.algebra)) {
            IdempotentContext ctx = make_context(c.algebra, e, cutoff);
            TheoremBVerdict v = theorem_b_verdict(ctx);
            ++out.checks;
            if (!v.alpha_holds) ++out.undecided;
            for (const auto& msg : v.chain_violations) out.violation(c, {{"e", idempotent_name(*c.algebra, e)}, {"chain", msg}});
            if (ctx.simples.all_terminated && !ctx.quotient_top.is_zero()) {
                std::size_t l = 0;
                bool all = true;
                for (const auto& t : v.tails) {
                    if (!t) all = false;
                    else l = std::max(l, *t);
                }
                if (all) {
                    ++out.checks;
                    std::size_t longest = 0;
                    for (const auto& r : ctx.simples.res) longest = std::max(longest, r.length());
                    auto ext = ext_from_top(ctx.simples, ctx.quotient_top, longest);
                    for (std::size_t i = l + 1; i < ext.size(); ++i)
                        if (ext[i])
                            out.violation(c, {{"e", idempotent_name(*c.algebra, e)}, {"converse", "Ext does not vanish past the tail"},
                                              {"degree", i}});
                }
            }
        }
    }
    return out;
}

/// pd_S Y = pd_R (0,Y,0) and projectivity of (X, M(x)X, 1) on triangular cases.
inline SuiteResult triangular_suite(const std::vector<CorpusCase>& corpus, std::size_t cutoff, std::size_t max_ell = 0,
                                    std::size_t window = 5, SuiteResult* projectivity = nullptr) {
    SuiteResult out;
    out.name = "triangular-pd-transfer";
    SuiteResult proj;
    proj.name = "triangular-projectivity";
    for (const auto& c : corpus) {
        if (!c.triangular) continue;
        ++out.cases;
        ++proj.cases;
        TriangularReport r = triangular_equivalence_check(*c.triangular, cutoff, max_ell, window);
        out.checks += r.pd_checks;
        proj.checks += r.projectivity_checks;
        for (const auto& f : r.failures) {
            if (f.rfind("pd", 0) == 0) out.violation(c, {{"failure", f}});
            else proj.violation(c, {{"failure", f}});
        }
        if (max_ell && r.applicable && !r.stable_tables_match) out.violation(c, {{"failure", "stable tables differ"}, {"report", to_json(r)}});
    }
    if (projectivity) *projectivity = std::move(proj);
    else {
        out.checks += proj.checks;
        out.violations += proj.violations;
        for (auto& x : proj.counterexamples) out.counterexamples.push_back(x);
    }
    return out;
}

/// Global-dimension sandwich and projectivity of Ae over the corner for
/// perpendicular categories of simples with id S <= 1.
inline SuiteResult perpendicular_suite(const std::vector<CorpusCase>& corpus, std::size_t cutoff) {
    SuiteResult out;
    out.name = "perpendicular-sandwich";
    for (const auto& c : corpus) {
        SimpleResolutions res = resolve_simples(c.algebra, cutoff);
        auto [ps, ss] = projectives_and_simples(c.algebra);
        for (std::size_t v = 0; v < ss.size(); ++v) {
            HomDim id = inj_dim(ss[v], res);
            if (!id.is_finite() || !id.certified || id.value > 1) continue;
            ++out.cases;
            PerpReport r = perp_proposition_checks(c.algebra, ss[v], cutoff);
            Json where = {{"s", "S@" + c.algebra->vertex_labels[v]}};
            ++out.checks;
            if (!r.projective_membership_ok) out.violation(c, {{"where", where}, {"failure", "projective perpendicular membership"}});
            if (!r.applicable) continue;
            if (!r.sandwich_decided) {
                ++out.undecided;
                continue;
            }
            out.checks += 2;
            if (!r.sandwich_holds)
                out.violation(c, {{"where", where}, {"failure", "gd sandwich"}, {"gdCorner", to_json(r.gd_corner)}, {"gd", to_json(r.gd_algebra)}});
            if (!r.delta_projective) out.violation(c, {{"where", where}, {"failure", "Ae not projective over the corner"}, {"delta", to_json(r.delta)}});
            out.checks += r.pd_pairs_checked;
            if (!r.pd_transfer_holds) out.violation(c, {{"where", where}, {"failure", "pd transfer under induction"}});
        }
    }
    return out;
}

}  // namespace cornerstone

#endif
