#pragma once

// Brute-force reference computations over tiny prime fields. They avoid the
// engine's elimination routines and enumerate instead.

#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include "cornerstone/corpus.hpp"

namespace oracle {

using namespace cornerstone;

/// Calls fn on every vector of length n over F_p.
inline void for_each_vector(std::size_t p, std::size_t n, const std::function<void(const std::vector<Scalar>&)>& fn) {
    std::vector<Scalar> v(n, 0);
    while (true) {
        fn(v);
        std::size_t i = 0;
        while (i < n && v[i] == p - 1) v[i++] = 0;
        if (i == n) return;
        ++v[i];
    }
}

inline std::size_t log_p(std::size_t count, std::size_t p) {
    std::size_t d = 0;
    while (count > 1) {
        count /= p;
        ++d;
    }
    return d;
}

inline std::size_t kernel_dim(const Field& f, const Matrix& m) {
    std::size_t count = 0;
    for_each_vector(f.p(), m.cols(), [&](const std::vector<Scalar>& v) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::uint64_t s = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) s += std::uint64_t(m(r, c)) * v[c];
            if (s % f.p()) return;
        }
        ++count;
    });
    return log_p(count, f.p());
}

inline std::size_t map_entries(const Module& m, const Module& n) {
    std::size_t e = 0;
    for (std::size_t v = 0; v < m.dims().size(); ++v) e += m.dim(v) * n.dim(v);
    return e;
}

inline ModuleMap unpack(const Module& m, const Module& n, const std::vector<Scalar>& flat) {
    ModuleMap f;
    std::size_t k = 0;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
        Matrix b(n.dim(v), m.dim(v));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = flat[k++];
        f.blocks.push_back(std::move(b));
    }
    return f;
}

/// All homomorphisms M -> N, found by checking every block-diagonal map.
inline std::vector<ModuleMap> all_homs(const Module& m, const Module& n) {
    std::vector<ModuleMap> out;
    for_each_vector(m.field().p(), map_entries(m, n), [&](const std::vector<Scalar>& flat) {
        ModuleMap f = unpack(m, n, flat);
        if (is_homomorphism(m, n, f)) out.push_back(std::move(f));
    });
    return out;
}

inline std::size_t brute_hom_dim(const Module& m, const Module& n) { return log_p(all_homs(m, n).size(), m.field().p()); }

/// Maps M -> N that factor through some P_v, closed under sums: the set of
/// all sums of composites, grown until it stops changing.
inline std::size_t projectively_trivial_dim(const Module& m, const Module& n) {
    const Field& f = m.field();
    auto [ps, ss] = projectives_and_simples(m.algebra());
    std::set<std::vector<Scalar>> span;
    span.insert(std::vector<Scalar>(map_entries(m, n), 0));
    std::set<std::vector<Scalar>> unique;
    for (const auto& p : ps) {
        auto into = all_homs(m, p);
        auto out = all_homs(p, n);
        for (const auto& g : out)
            for (const auto& h : into) unique.insert(flatten(compose(f, g, h)));
    }
    std::vector<std::vector<Scalar>> composites(unique.begin(), unique.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Scalar>> current(span.begin(), span.end());
        for (const auto& a : current)
            for (const auto& c : composites) {
                std::vector<Scalar> s(a.size());
                for (std::size_t i = 0; i < s.size(); ++i) s[i] = f.add(a[i], c[i]);
                if (span.insert(s).second) grew = true;
            }
    }
    return log_p(span.size(), f.p());
}

inline std::size_t brute_stable_hom_dim(const Module& m, const Module& n) { return brute_hom_dim(m, n) - projectively_trivial_dim(m, n); }

/// dim Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P,N) -> Hom(Omega M, N) -> Ext^1 -> 0.
inline std::size_t brute_ext1_dim(const Module& m, const Module& n) {
    Cover c = cover_and_syzygy(m);
    return brute_hom_dim(c.syzygy, n) + brute_hom_dim(m, n) - brute_hom_dim(c.projective.module, n);
}

/// dim Ext^i via dimension shifting.
inline std::size_t brute_ext_dim(const Module& m, const Module& n, std::size_t i) {
    if (i == 0) return brute_hom_dim(m, n);
    Module x = m;
    for (std::size_t k = 1; k < i; ++k) x = syzygy(x);
    return brute_ext1_dim(x, n);
}

/// D M = Hom_k(M, k) as a left module over the opposite algebra.
inline Module dual(const Module& m, const AlgebraPtr& op) {
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < op->dim(); ++b) action.push_back(transpose(m.action(b)));
    return Module(op, m.dims(), std::move(action));
}

/// Small algebras whose modules are tiny enough to enumerate maps over F_2 or F_3.
inline std::vector<CorpusCase> small_algebras(const Field& f) {
    std::vector<CorpusCase> out;
    out.push_back({"A2", truncated_path(QuiverShape::Linear, 2, 2, f), std::nullopt});
    out.push_back({"A3/rad2", truncated_path(QuiverShape::Linear, 3, 2, f), std::nullopt});
    out.push_back({"D", nakayama(1, 2, f), std::nullopt});
    out.push_back({"k[x]/x^3", self_injective(3, f), std::nullopt});
    out.push_back({"nakayama(2,2)", nakayama(2, 2, f), std::nullopt});
    out.push_back({"nakayama(2,3)", nakayama(2, 3, f), std::nullopt});
    out.push_back(quiver_case("kronecker", {{"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}}, {}}, f));
    out.push_back(quiver_case("cycle-ba", {{"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}, {{{{1, {1, 0}}}}}}, f));
    out.push_back(triangular_case("D[D]", one_point_extension(regular_module(nakayama(1, 2, f)).module)));
    return out;
}

}  // namespace oracle
