#ifndef CORNERSTONE_CORPUS_HPP
#define CORNERSTONE_CORPUS_HPP

// Deterministic algebra families and the default test corpus.

#include <random>
#include <string>
#include <vector>

#include "cornerstone/evidence.hpp"
#include "cornerstone/quiver.hpp"

namespace cornerstone {

inline std::string vname(std::size_t i) { return std::to_string(i + 1); }

/// Quiver presentation whose only relations kill every path of length `len`.
inline QuiverPresentation truncated_presentation(std::size_t n, const std::vector<Arrow>& arrows, std::size_t len) {
    if (len < 2) throw Error(ErrorKind::ValidationError, "truncation length must be at least 2");
    QuiverPresentation q;
    for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(vname(i));
    q.arrows = arrows;
    std::vector<std::vector<std::size_t>> level;
    for (std::size_t a = 0; a < arrows.size(); ++a) level.push_back({a});
    for (std::size_t l = 1; l < len; ++l) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& p : level)
            for (std::size_t a = 0; a < arrows.size(); ++a)
                if (arrows[p.back()].target == arrows[a].source) {
                    auto w = p;
                    w.push_back(a);
                    next.push_back(std::move(w));
                }
        level = std::move(next);
    }
    for (auto& p : level) q.relations.push_back({{{1, std::move(p)}}});
    return q;
}

/// Cyclic quiver 1 -> 2 -> ... -> n -> 1 with all paths of length rad_power zero.
inline AlgebraPtr nakayama(std::size_t n, std::size_t rad_power, const Field& f = Field(101)) {
    if (n == 0) throw Error(ErrorKind::ValidationError, "nakayama needs at least one vertex");
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) arrows.push_back({"a" + vname(i), i, (i + 1) % n});
    if (n == 1) arrows[0].label = "x";
    return build_algebra_from_quiver(truncated_presentation(n, arrows, rad_power), f);
}

enum class QuiverShape { Linear, Cyclic };

/// Linear or cyclic A_n quiver modulo paths of length `len`.
inline AlgebraPtr truncated_path(QuiverShape shape, std::size_t n, std::size_t len, const Field& f = Field(101)) {
    if (shape == QuiverShape::Cyclic) return nakayama(n, len, f);
    if (n == 0) throw Error(ErrorKind::ValidationError, "path quiver needs at least one vertex");
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({"a" + vname(i), i, i + 1});
    return build_algebra_from_quiver(truncated_presentation(n, arrows, len), f);
}

/// k[x]/(x^n); n = 1 gives the ground field.
inline AlgebraPtr self_injective(std::size_t n, const Field& f = Field(101)) {
    if (n == 0) throw Error(ErrorKind::ValidationError, "selfInjective needs n >= 1");
    if (n == 1) return build_algebra_from_quiver(QuiverPresentation{{"1"}, {}, {}}, f);
    return nakayama(1, n, f);
}

/// Largest dimension of a syzygy of a simple within `steps`, stopping early
/// once `cap` is exceeded.
inline std::size_t syzygy_growth(const AlgebraPtr& a, std::size_t steps, std::size_t cap) {
    std::size_t worst = 0;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        Module m = simple_module(a, v);
        for (std::size_t i = 0; i < steps && !m.is_zero(); ++i) {
            m = syzygy(m);
            worst = std::max(worst, m.dim());
            if (worst > cap) return worst;
        }
    }
    return worst;
}

struct RandomSpec {
    std::uint64_t seed = 7;
    std::size_t vertices = 3;
    std::size_t arrows = 4;
    std::size_t relations = 2;
    std::size_t max_dim = 40;
    std::size_t growth_steps = 21;
    std::size_t growth_cap = 200;
};

/// Random connected quiver with random length-2 relations, truncated at the
/// largest path length that keeps the algebra within max_dim. Candidates whose
/// simples have fast-growing syzygies are rejected. Deterministic in the seed.
inline QuiverPresentation random_admissible_presentation(const RandomSpec& spec, const Field& f = Field(101)) {
    if (spec.vertices == 0 || spec.arrows + 1 < spec.vertices)
        throw Error(ErrorKind::ValidationError, "randomAdmissible needs at least vertices-1 arrows");
    std::mt19937_64 rng(spec.seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Arrow> arrows;
        // spanning tree first so the quiver is connected
        for (std::size_t i = 1; i < spec.vertices; ++i) {
            std::size_t j = pick(i);
            if (rng() & 1) arrows.push_back({"", j, i});
            else arrows.push_back({"", i, j});
        }
        while (arrows.size() < spec.arrows) arrows.push_back({"", pick(spec.vertices), pick(spec.vertices)});
        for (std::size_t i = 0; i < arrows.size(); ++i) arrows[i].label = std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i / 26) : "");

        std::vector<Relation> rels;
        std::vector<std::vector<std::size_t>> paths2;
        for (std::size_t x = 0; x < arrows.size(); ++x)
            for (std::size_t y = 0; y < arrows.size(); ++y)
                if (arrows[x].target == arrows[y].source) paths2.push_back({x, y});
        for (std::size_t r = 0; r < spec.relations && !paths2.empty(); ++r) {
            const auto& p = paths2[pick(paths2.size())];
            Relation rel{{{1, p}}};
            for (const auto& o : paths2)
                if (o != p && arrows[o.front()].source == arrows[p.front()].source && arrows[o.back()].target == arrows[p.back()].target &&
                    (rng() & 1))
                    rel.terms.push_back({static_cast<std::int64_t>(1 + pick(f.p() - 1)), o});
            rels.push_back(std::move(rel));
        }
        for (std::size_t len = 5; len >= 2; --len) {
            QuiverPresentation q = truncated_presentation(spec.vertices, arrows, len);
            q.relations.insert(q.relations.begin(), rels.begin(), rels.end());
            AlgebraPtr a;
            try {
                a = build_algebra_from_quiver(q, f);
            } catch (const Error&) {
                continue;
            }
            if (a->dim() > spec.max_dim) continue;
            if (syzygy_growth(a, spec.growth_steps, spec.growth_cap) > spec.growth_cap) break;
            return q;
        }
    }
    throw Error(ErrorKind::ValidationError, "no admissible candidate found for seed " + std::to_string(spec.seed));
}

inline AlgebraPtr random_admissible(const RandomSpec& spec, const Field& f = Field(101)) {
    return build_algebra_from_quiver(random_admissible_presentation(spec, f), f);
}

/// S-T-bimodule N with T acting on the right through the simple at vertex w.
inline Bimodule bimodule_through_vertex(const Module& n, const AlgebraPtr& t, std::size_t w) {
    const AlgebraPtr& s = n.algebra();
    const Field& f = s->field;
    const std::size_t d = n.dim();
    std::vector<std::size_t> offset(s->vertex_count(), 0);
    for (std::size_t v = 1; v < offset.size(); ++v) offset[v] = offset[v - 1] + n.dim(v - 1);
    std::vector<Matrix> left, right;
    for (std::size_t b = 0; b < s->dim(); ++b) {
        Matrix x(d, d);
        const Matrix& blk = n.action(b);
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) x(offset[s->target[b]] + i, offset[s->source[b]] + j) = blk(i, j);
        left.push_back(std::move(x));
    }
    for (std::size_t b = 0; b < t->dim(); ++b)
        right.push_back(b == t->primitives[w] ? Matrix::identity(d) : Matrix(d, d));
    (void)f;
    Bimodule m = make_bimodule(s, t, std::move(left), std::move(right));
    validate(m);
    return m;
}

struct CorpusCase {
    std::string name;
    AlgebraPtr algebra;
    std::optional<TriangularAlgebra> triangular;
};

/// Every single vertex and every all-but-one subset, without repeats, in a
/// fixed order.
inline std::vector<Idempotent> corpus_idempotents(const Algebra& a) {
    std::vector<std::vector<std::size_t>> sets;
    const std::size_t n = a.vertex_count();
    for (std::size_t v = 0; v < n; ++v) sets.push_back({v});
    if (n > 1)
        for (std::size_t skip = 0; skip < n; ++skip) {
            std::vector<std::size_t> s;
            for (std::size_t v = 0; v < n; ++v)
                if (v != skip) s.push_back(v);
            sets.push_back(std::move(s));
        }
    std::vector<Idempotent> out;
    for (const auto& s : sets) {
        bool seen = false;
        for (const auto& e : out) seen = seen || e.vertices == s;
        if (!seen) out.push_back(make_idempotent(a, s));
    }
    return out;
}

inline std::string idempotent_name(const Algebra& a, const Idempotent& e) {
    std::string s;
    for (auto v : e.vertices) s += (s.empty() ? "" : ",") + a.vertex_labels[v];
    return "{" + s + "}";
}

inline CorpusCase quiver_case(const std::string& name, const QuiverPresentation& q, const Field& f = Field(101)) {
    return {name, build_algebra_from_quiver(q, f), std::nullopt};
}

inline CorpusCase triangular_case(const std::string& name, TriangularAlgebra t) {
    AlgebraPtr a = t.algebra;
    return {name, std::move(a), std::move(t)};
}

/// The fixed default corpus: small quiver algebras, self-injective local
/// algebras, random admissible algebras, one-point extensions and
/// triangular matrix algebras, all of dimension at most 40.
inline std::vector<CorpusCase> default_corpus(const Field& f = Field(101)) {
    std::vector<CorpusCase> out;
    out.push_back({"A2", truncated_path(QuiverShape::Linear, 2, 2, f), std::nullopt});
    out.push_back({"A3", truncated_path(QuiverShape::Linear, 3, 3, f), std::nullopt});
    out.push_back({"A3/rad2", truncated_path(QuiverShape::Linear, 3, 2, f), std::nullopt});
    out.push_back({"A4/rad3", truncated_path(QuiverShape::Linear, 4, 3, f), std::nullopt});
    out.push_back({"D", nakayama(1, 2, f), std::nullopt});
    out.push_back({"k[x]/x^3", self_injective(3, f), std::nullopt});
    out.push_back({"nakayama(2,2)", nakayama(2, 2, f), std::nullopt});
    out.push_back({"nakayama(2,3)", nakayama(2, 3, f), std::nullopt});
    out.push_back({"nakayama(3,2)", nakayama(3, 2, f), std::nullopt});
    out.push_back({"nakayama(3,4)", nakayama(3, 4, f), std::nullopt});
    out.push_back(quiver_case("kronecker", {{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}, {}}, f));
    out.push_back(quiver_case("cycle-ba", {{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, {{{{1, {1, 0}}}}}}, f));
    out.push_back(quiver_case("square", {{"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}},
                                         {{{{1, {0, 1}}, {-1, {2, 3}}}}}},
                              f));
    out.push_back(quiver_case("loop-arrow", {{"1", "2"}, {{"a", 0, 1}, {"x", 0, 0}}, {{{{1, {1, 0}}}}, {{{1, {1, 1}}}}}}, f));
    for (std::uint64_t seed : {1, 2, 3}) {
        RandomSpec rs;
        rs.seed = seed;
        out.push_back({"random(" + std::to_string(seed) + ")", random_admissible(rs, f), std::nullopt});
    }
    // one-point extensions and triangular matrix algebras
    AlgebraPtr d = nakayama(1, 2, f);
    AlgebraPtr a2 = truncated_path(QuiverShape::Linear, 2, 2, f);
    out.push_back(triangular_case("D[D]", one_point_extension(regular_module(d).module)));
    out.push_back(triangular_case("D[S]", one_point_extension(simple_module(d, 0))));
    {
        auto [p, s] = projectives_and_simples(a2);
        out.push_back(triangular_case("A2[P1]", one_point_extension(p[0])));
        out.push_back(triangular_case("A2[S1]", one_point_extension(s[0])));
    }
    out.push_back(triangular_case("[[A2,0],[D,D]]", triangular_matrix_algebra(a2, d, bimodule_through_vertex(regular_module(d).module, a2, 1))));
    return out;
}

/// A larger family of triangular matrix algebras: one-point extensions of
/// small algebras by their simples, projectives and syzygies, and
/// [[T,0],[N,S]] with T acting through a vertex.
inline std::vector<CorpusCase> triangular_corpus(const Field& f = Field(101)) {
    std::vector<CorpusCase> out;
    std::vector<std::pair<std::string, AlgebraPtr>> bases = {
        {"D", nakayama(1, 2, f)},
        {"A2", truncated_path(QuiverShape::Linear, 2, 2, f)},
        {"k[x]/x^3", self_injective(3, f)},
        {"nakayama(2,2)", nakayama(2, 2, f)},
        {"A3/rad2", truncated_path(QuiverShape::Linear, 3, 2, f)},
        {"nakayama(2,3)", nakayama(2, 3, f)},
    };
    for (const auto& [name, s] : bases) {
        auto [ps, ss] = projectives_and_simples(s);
        for (std::size_t v = 0; v < s->vertex_count(); ++v) {
            out.push_back(triangular_case(name + "[S@" + s->vertex_labels[v] + "]", one_point_extension(ss[v])));
            out.push_back(triangular_case(name + "[P@" + s->vertex_labels[v] + "]", one_point_extension(ps[v])));
            Module om = syzygy(ss[v]);
            if (!om.is_zero() && !is_projective(om))
                out.push_back(triangular_case(name + "[Omega(S@" + s->vertex_labels[v] + ")]", one_point_extension(om)));
        }
    }
    std::vector<std::pair<std::string, AlgebraPtr>> tops = {
        {"A2", truncated_path(QuiverShape::Linear, 2, 2, f)},
        {"A3", truncated_path(QuiverShape::Linear, 3, 3, f)},
        {"D", nakayama(1, 2, f)},
    };
    for (const auto& [tn, t] : tops)
        for (const auto& [sn, s] : bases) {
            if (s->dim() > 6) continue;
            Module n = regular_module(s).module;
            for (std::size_t w = 0; w < t->vertex_count(); ++w)
                out.push_back(triangular_case("[[" + tn + ",0],[" + sn + "@" + t->vertex_labels[w] + "," + sn + "]]",
                                              triangular_matrix_algebra(t, s, bimodule_through_vertex(n, t, w))));
        }
    return out;
}

/// Perpendicular-category instances: (algebra, semisimple S) with id S <= 1.
struct PerpCase {
    std::string name;
    AlgebraPtr algebra;
    Module s;
};

inline std::vector<PerpCase> perp_corpus(const std::vector<CorpusCase>& corpus, std::size_t cutoff) {
    std::vector<PerpCase> out;
    for (const auto& c : corpus) {
        SimpleResolutions res = resolve_simples(c.algebra, cutoff);
        auto [ps, ss] = projectives_and_simples(c.algebra);
        for (std::size_t v = 0; v < ss.size(); ++v) {
            HomDim id = inj_dim(ss[v], res);
            if (id.is_finite() && id.certified && id.value <= 1)
                out.push_back({c.name + ":S@" + c.algebra->vertex_labels[v], c.algebra, ss[v]});
        }
    }
    return out;
}

}  // namespace cornerstone

#endif
