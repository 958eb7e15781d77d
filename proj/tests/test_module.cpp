#include <gtest/gtest.h>

#include "cornerstone/suites.hpp"
#include "oracles.hpp"

using namespace cornerstone;

namespace {

struct Pair {
    std::string label;
    Module m, n;
};

// Pairs of sample modules whose Hom space is small enough to enumerate.
std::vector<Pair> small_pairs(const Field& f, std::size_t max_entries) {
    std::vector<Pair> out;
    for (const auto& c : oracle::small_algebras(f)) {
        auto samples = sample_modules(c.algebra, 3, 5);
        for (const auto& m : samples)
            for (const auto& n : samples)
                if (oracle::map_entries(m.module, n.module) <= max_entries)
                    out.push_back({c.name + ":" + m.name + "," + n.name, m.module, n.module});
    }
    return out;
}

AlgebraPtr a2() { return truncated_path(QuiverShape::Linear, 2, 2); }

}  // namespace

TEST(Module, ProjectivesAndSimplesAreValid) {
    for (const auto& c : default_corpus()) {
        auto [ps, ss] = projectives_and_simples(c.algebra);
        for (std::size_t v = 0; v < ps.size(); ++v) {
            EXPECT_NO_THROW(validate(ps[v]));
            EXPECT_NO_THROW(validate(ss[v]));
            EXPECT_TRUE(is_projective(ps[v])) << c.name;
            EXPECT_EQ(top(ps[v]), ss[v]) << c.name;
            // P_v = A e_v is spanned by the basis elements starting at v
            std::size_t d = 0;
            for (std::size_t b = 0; b < c.algebra->dim(); ++b) d += c.algebra->source[b] == v;
            EXPECT_EQ(ps[v].dim(), d);
        }
        EXPECT_EQ(regular_module(c.algebra).module.dim(), c.algebra->dim());
    }
}

TEST(Module, ValidateRejectsBrokenAction) {
    auto d = nakayama(1, 2);
    Module bad(d, {2}, {Matrix::identity(2), Matrix::identity(2)});  // x acts invertibly
    EXPECT_THROW(validate(bad), Error);
    EXPECT_THROW(Module(d, {2}, {Matrix::identity(2)}), Error);
}

TEST(Hom, MatchesEnumerationOverF2) {
    auto pairs = small_pairs(Field(2), 12);
    ASSERT_GT(pairs.size(), 100u);
    for (const auto& p : pairs) EXPECT_EQ(hom_dim(p.m, p.n), oracle::brute_hom_dim(p.m, p.n)) << p.label;
}

TEST(Hom, MatchesEnumerationOverF3) {
    auto pairs = small_pairs(Field(3), 7);
    ASSERT_GT(pairs.size(), 50u);
    for (const auto& p : pairs) EXPECT_EQ(hom_dim(p.m, p.n), oracle::brute_hom_dim(p.m, p.n)) << p.label;
}

TEST(Hom, BasisElementsAreHomomorphisms) {
    for (const auto& p : small_pairs(Field(101), 16))
        for (const auto& f : hom_space(p.m, p.n)) EXPECT_TRUE(is_homomorphism(p.m, p.n, f)) << p.label;
}

TEST(Hom, FromProjectiveCountsVertexSpace) {
    for (const auto& c : default_corpus()) {
        auto [ps, ss] = projectives_and_simples(c.algebra);
        for (const auto& m : sample_modules(c.algebra))
            for (std::size_t v = 0; v < ps.size(); ++v) EXPECT_EQ(hom_dim(ps[v], m.module), m.module.dim(v)) << c.name << m.name;
    }
}

TEST(Hom, AlgebraMismatch) {
    auto a = a2();
    auto d = nakayama(1, 2);
    try {
        hom_dim(simple_module(a, 0), simple_module(d, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AlgebraMismatch);
    }
}

TEST(StableHom, MatchesEnumerationOverF2) {
    std::size_t checked = 0;
    for (const auto& p : small_pairs(Field(2), 6)) {
        auto [ps, ss] = projectives_and_simples(p.m.algebra());
        bool small = true;
        for (const auto& q : ps) small = small && oracle::map_entries(p.m, q) <= 8 && oracle::map_entries(q, p.n) <= 8;
        if (!small) continue;
        EXPECT_EQ(stable_hom_dim(p.m, p.n), oracle::brute_stable_hom_dim(p.m, p.n)) << p.label;
        ++checked;
    }
    EXPECT_GT(checked, 40u);
}

TEST(StableHom, A2SimpleIsNotProjectivelyTrivial) {
    auto [ps, ss] = projectives_and_simples(a2());
    EXPECT_EQ(stable_hom_dim(ss[0], ss[0]), 1u);
    EXPECT_EQ(stable_hom_dim(ps[0], ss[0]), 0u);
    EXPECT_EQ(stable_hom_dim(ss[1], ss[1]), 0u);  // S2 = P2
}

TEST(Resolution, ExactAndMinimal) {
    for (const auto& c : default_corpus())
        for (const auto& m : sample_modules(c.algebra)) {
            Resolution r = minimal_resolution(m.module, 8);
            EXPECT_EQ(check_resolution(r), "") << c.name << " " << m.name;
            for (std::size_t i = 1; i < r.length(); ++i) EXPECT_EQ(r.syzygies[i], syzygy(m.module, i));
        }
}

TEST(Resolution, TerminationFlag) {
    auto [ps, ss] = projectives_and_simples(a2());
    Resolution r = minimal_resolution(ss[0], 0);
    EXPECT_FALSE(r.terminated);
    r = minimal_resolution(ss[0], 1);
    EXPECT_TRUE(r.terminated);
    EXPECT_EQ(r.length(), 2u);
    Resolution d = minimal_resolution(simple_module(nakayama(1, 2), 0), 20);
    EXPECT_FALSE(d.terminated);
    EXPECT_EQ(d.length(), 21u);
    for (const auto& t : d.terms) EXPECT_EQ(t, (std::vector<std::size_t>{1}));
}

TEST(Ext, A2Simples) {
    auto [ps, ss] = projectives_and_simples(a2());
    EXPECT_EQ(ext_dims(ss[0], ss[1], 1), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(ext_dims(ss[1], ss[0], 2), (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(ext_dims(ss[0], ss[0], 2), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Ext, DualNumbersSimpleIsPeriodic) {
    Module s = simple_module(nakayama(1, 2), 0);
    EXPECT_EQ(ext_dims(s, s, 10), std::vector<std::size_t>(11, 1));
}

TEST(Ext, DegreeZeroIsHom) {
    for (const auto& c : default_corpus()) {
        auto samples = sample_modules(c.algebra);
        for (const auto& m : samples)
            for (const auto& n : samples) EXPECT_EQ(ext_dims(m.module, n.module, 0)[0], hom_dim(m.module, n.module));
    }
}

TEST(Ext, MatchesDimensionShiftingOracle) {
    std::size_t checked = 0;
    for (const auto& c : oracle::small_algebras(Field(2))) {
        auto samples = sample_modules(c.algebra, 2, 3);
        for (const auto& m : samples)
            for (const auto& n : samples) {
                Module x = m.module;
                std::vector<std::size_t> expect{oracle::brute_hom_dim(x, n.module)};
                bool small = oracle::map_entries(x, n.module) <= 12;
                for (std::size_t i = 1; i <= 3 && small; ++i) {
                    Cover cv = cover_and_syzygy(x);
                    small = oracle::map_entries(cv.projective.module, n.module) <= 12 &&
                            oracle::map_entries(cv.syzygy, n.module) <= 12;
                    if (small) expect.push_back(oracle::brute_ext1_dim(x, n.module));
                    x = cv.syzygy;
                }
                if (!small) continue;
                EXPECT_EQ(ext_dims(m.module, n.module, 3), expect) << c.name << " " << m.name << " " << n.name;
                ++checked;
            }
    }
    EXPECT_GT(checked, 50u);
}

TEST(Ext, HomComplexAgreesWithTermsForSemisimple) {
    for (const auto& c : default_corpus()) {
        Module top_a = semisimple_top_of_algebra(c.algebra);
        for (const auto& m : sample_modules(c.algebra)) {
            Resolution r = minimal_resolution(m.module, 6);
            EXPECT_EQ(ext_dims_hom_complex(r, top_a, 5), ext_dims_via_terms(r, top_a, 5)) << c.name << m.name;
        }
    }
}

TEST(Ext, CutoffTooSmall) {
    Module s = simple_module(nakayama(1, 2), 0);
    Resolution r = minimal_resolution(s, 2);
    try {
        ext_dims_hom_complex(r, s, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CutoffTooSmall);
    }
}

TEST(AddMembership, A2AtVertex2) {
    auto a = a2();
    auto [ps, ss] = projectives_and_simples(a);
    Idempotent e = make_idempotent(*a, {1});
    EXPECT_TRUE(add_membership(ps[1], e).via_top);
    EXPECT_FALSE(add_membership(ps[0], e).via_top);
    EXPECT_FALSE(add_membership(direct_sum(ps[0], ps[1]), e).via_top);
    EXPECT_TRUE(add_membership(Module::zero(a), e).via_top);
    try {
        add_membership(ss[0], e);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::NotProjective);
    }
}

TEST(AddMembership, LegsAgreeOnResolutionTerms) {
    for (const auto& c : default_corpus())
        for (const auto& e : corpus_idempotents(*c.algebra)) {
            Module qt = quotient_top(c.algebra, e);
            auto [ps, ss] = projectives_and_simples(c.algebra);
            for (std::size_t v = 0; v < ps.size(); ++v) {
                AddMembership m = add_membership(ps[v], e, qt);
                EXPECT_EQ(m.via_top, e.contains(v)) << c.name;
                EXPECT_EQ(m.via_top, m.via_multiplicities);
            }
        }
}

TEST(Module, SubquotientDimensions) {
    for (const auto& c : default_corpus())
        for (const auto& m : sample_modules(c.algebra)) {
            GradedSubspace rad = radical_subspace(m.module);
            Subquotient sub = submodule(m.module, rad);
            Subquotient quo = quotient(m.module, rad);
            EXPECT_EQ(sub.module.dim() + quo.module.dim(), m.module.dim());
            EXPECT_TRUE(is_semisimple(quo.module));
            EXPECT_NO_THROW(validate(sub.module));
            EXPECT_NO_THROW(validate(quo.module));
            Cover cv = cover_and_syzygy(m.module);
            EXPECT_EQ(cv.projective.module.dim(), m.module.dim() + cv.syzygy.dim());
        }
}

TEST(Module, DirectSumAdditivity) {
    for (const auto& c : default_corpus()) {
        auto samples = sample_modules(c.algebra, 1);
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            const Module& x = samples[i].module;
            const Module& y = samples[i + 1].module;
            Module s = direct_sum(x, y);
            EXPECT_NO_THROW(validate(s));
            for (const auto& n : samples)
                EXPECT_EQ(hom_dim(s, n.module), hom_dim(x, n.module) + hom_dim(y, n.module)) << c.name;
            EXPECT_EQ(syzygy(s).dim(), syzygy(x).dim() + syzygy(y).dim());
        }
    }
}

TEST(Module, SmallExamples) {
    auto a = a2();
    auto [ps, ss] = projectives_and_simples(a);
    EXPECT_EQ(ps[0].dim(), 2u);
    EXPECT_EQ(ps[1].dim(), 1u);
    EXPECT_EQ(hom_dim(ps[0], ps[0]), 1u);
    EXPECT_EQ(syzygy(ss[0]), ss[1]);
    EXPECT_EQ(syzygy(ss[1]).dim(), 0u);
    EXPECT_EQ(hom_dim(ss[0], Module::zero(a)), 0u);
    Resolution r = minimal_resolution(ss[0], 5);
    EXPECT_EQ(r.terms, (std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}}));

    auto d = nakayama(1, 2);
    Module s = simple_module(d, 0);
    EXPECT_EQ(syzygy(s), s);
    EXPECT_EQ(hom_dim(s, s), 1u);
    EXPECT_EQ(stable_hom_dim(s, s), 1u);
    EXPECT_EQ(regular_module(d).module.dim(), 2u);

    auto k = self_injective(1);
    auto [pk, sk] = projectives_and_simples(k);
    EXPECT_EQ(pk[0], sk[0]);
}

TEST(Module, ProjectivesHaveNoHigherExtOrStableHom) {
    for (const auto& c : default_corpus()) {
        auto [ps, ss] = projectives_and_simples(c.algebra);
        auto samples = sample_modules(c.algebra, 1);
        for (const auto& p : ps) {
            EXPECT_TRUE(minimal_resolution(p, 3).terminated);
            for (const auto& n : samples) {
                auto e = ext_dims(p, n.module, 3);
                EXPECT_EQ(std::count(e.begin() + 1, e.end(), 0u), 3) << c.name;
                EXPECT_EQ(stable_hom_dim(p, n.module), 0u) << c.name;
            }
        }
    }
}
