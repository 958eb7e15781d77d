#ifndef CORNERSTONE_QUIVER_HPP
#define CORNERSTONE_QUIVER_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cornerstone/algebra.hpp"

namespace cornerstone {

struct Arrow {
    std::string label;
    std::size_t source;
    std::size_t target;
};

/// A path written in composition order: arrows[0] is traversed first.
struct PathTerm {
    std::int64_t coeff = 1;
    std::vector<std::size_t> arrows;
};

struct Relation {
    std::vector<PathTerm> terms;
};

struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::size_t path_length_bound = 64;
};

namespace detail {

struct PathKey {
    std::size_t vertex;               // source, used for length-0 paths
    std::vector<std::size_t> arrows;  // composition order
};

inline constexpr std::size_t kMaxEnumeratedPaths = 200000;

}  // namespace detail

/// Checks that every relation is a combination of paths of length >= 2 with
/// one common source and target.
inline void check_admissible(const QuiverPresentation& q) {
    if (q.vertices.empty()) throw Error(ErrorKind::ValidationError, "quiver has no vertices");
    std::set<std::string> names(q.vertices.begin(), q.vertices.end());
    if (names.size() != q.vertices.size()) throw Error(ErrorKind::ValidationError, "duplicate vertex label");
    std::set<std::string> arrow_names;
    for (const auto& a : q.arrows) {
        if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
            throw Error(ErrorKind::ValidationError, "arrow " + a.label + " has an unknown endpoint");
        if (!arrow_names.insert(a.label).second) throw Error(ErrorKind::ValidationError, "duplicate arrow label " + a.label);
    }
    for (const auto& rel : q.relations) {
        std::size_t src = SIZE_MAX, tgt = SIZE_MAX;
        for (const auto& t : rel.terms) {
            if (t.arrows.size() < 2)
                throw Error(ErrorKind::InadmissibleRelation, "relation contains a path of length < 2");
            for (auto a : t.arrows)
                if (a >= q.arrows.size()) throw Error(ErrorKind::ValidationError, "relation uses an unknown arrow");
            for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
                if (q.arrows[t.arrows[k]].target != q.arrows[t.arrows[k + 1]].source)
                    throw Error(ErrorKind::InadmissibleRelation, "relation contains a non-composable path");
            std::size_t s = q.arrows[t.arrows.front()].source, e = q.arrows[t.arrows.back()].target;
            if (src == SIZE_MAX) {
                src = s;
                tgt = e;
            } else if (s != src || e != tgt) {
                throw Error(ErrorKind::InadmissibleRelation, "relation mixes paths with different endpoints");
            }
        }
    }
}

/// Builds kQ/I with basis the nonzero path classes. Paths are ordered by
/// length, then lexicographically on arrow labels; elimination makes the
/// largest paths pivots, so the basis consists of the smallest surviving
/// paths. Terms of length at least the nilpotency index are discarded, so
/// the result is the algebra of the completed presentation.
inline AlgebraPtr build_algebra_from_quiver(const QuiverPresentation& q, const Field& field) {
    check_admissible(q);
    const std::size_t nv = q.vertices.size();

    // canonical arrow order: lexicographic on labels
    std::vector<std::size_t> arrow_rank(q.arrows.size());
    {
        std::vector<std::size_t> order(q.arrows.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto x, auto y) { return q.arrows[x].label < q.arrows[y].label; });
        for (std::size_t r = 0; r < order.size(); ++r) arrow_rank[order[r]] = r;
    }
    auto less_path = [&](const detail::PathKey& x, const detail::PathKey& y) {
        if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
        if (x.arrows.empty()) return x.vertex < y.vertex;
        for (std::size_t k = 0; k < x.arrows.size(); ++k)
            if (x.arrows[k] != y.arrows[k]) return arrow_rank[x.arrows[k]] < arrow_rank[y.arrows[k]];
        return false;
    };
    auto path_source = [&](const detail::PathKey& p) { return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.front()].source; };
    auto path_target = [&](const detail::PathKey& p) { return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.back()].target; };

    // paths grouped by length, each level sorted canonically
    std::vector<std::vector<detail::PathKey>> levels(1);
    for (std::size_t v = 0; v < nv; ++v) levels[0].push_back({v, {}});
    std::size_t total = nv;

    auto extend_level = [&]() {
        std::vector<detail::PathKey> next;
        for (const auto& p : levels.back())
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].source == path_target(p)) {
                    detail::PathKey np{path_source(p), p.arrows};
                    np.arrows.push_back(a);
                    next.push_back(std::move(np));
                }
        std::sort(next.begin(), next.end(), less_path);
        total += next.size();
        if (total > detail::kMaxEnumeratedPaths)
            throw Error(ErrorKind::NotFiniteDimensional, "path enumeration exceeded " + std::to_string(detail::kMaxEnumeratedPaths) + " paths");
        levels.push_back(std::move(next));
    };

    for (std::size_t bound = 2;; ++bound) {
        // work modulo paths of length >= bound
        if (bound - 1 > q.path_length_bound)
            throw Error(ErrorKind::NotFiniteDimensional, "arrow ideal is not nilpotent within path length bound " +
                                                             std::to_string(q.path_length_bound));
        while (levels.size() < bound + 0) extend_level();
        // levels[0..bound-1] are the paths of length < bound
        std::vector<detail::PathKey> paths;
        for (std::size_t l = 0; l < bound; ++l)
            for (const auto& p : levels[l]) paths.push_back(p);
        const std::size_t np = paths.size();
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
        for (std::size_t i = 0; i < np; ++i)
            index[{paths[i].arrows.empty() ? paths[i].vertex : SIZE_MAX, paths[i].arrows}] = i;
        auto column = [&](std::size_t i) { return np - 1 - i; };  // largest path first
        auto find = [&](const std::vector<std::size_t>& arrows) -> std::size_t {
            auto it = index.find({SIZE_MAX, arrows});
            return it == index.end() ? SIZE_MAX : it->second;
        };

        RowSpace ideal(field, np);
        std::deque<Vector> queue;
        auto push = [&](Vector v) {
            if (ideal.insert(v)) queue.push_back(std::move(v));
        };
        for (const auto& rel : q.relations) {
            Vector v(np, 0);
            for (const auto& t : rel.terms) {
                if (t.arrows.size() >= bound) continue;
                std::size_t i = find(t.arrows);
                v[column(i)] = field.add(v[column(i)], field.from_int(t.coeff));
            }
            push(std::move(v));
        }
        while (!queue.empty()) {
            Vector v = std::move(queue.front());
            queue.pop_front();
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                Vector after(np, 0), before(np, 0);
                bool any_after = false, any_before = false;
                for (std::size_t c = 0; c < np; ++c) {
                    if (!v[c]) continue;
                    const auto& p = paths[np - 1 - c];
                    if (p.arrows.size() + 1 >= bound) continue;
                    if (path_target(p) == q.arrows[a].source) {
                        auto w = p.arrows;
                        w.push_back(a);
                        after[column(find(w))] = v[c];
                        any_after = true;
                    }
                    if (path_source(p) == q.arrows[a].target) {
                        std::vector<std::size_t> w{a};
                        w.insert(w.end(), p.arrows.begin(), p.arrows.end());
                        before[column(find(w))] = v[c];
                        any_before = true;
                    }
                }
                if (any_after) push(std::move(after));
                if (any_before) push(std::move(before));
            }
        }

        // nilpotency test: every path of length bound-1 lies in the ideal
        bool nilpotent = true;
        for (const auto& p : levels[bound - 1]) {
            Vector e(np, 0);
            e[column(index[{p.arrows.empty() ? p.vertex : SIZE_MAX, p.arrows}])] = 1;
            if (!ideal.contains(e)) {
                nilpotent = false;
                break;
            }
        }
        if (!nilpotent) continue;

        // basis: non-pivot paths in ascending canonical order
        std::vector<char> pivot(np, 0);
        for (auto c : ideal.pivots()) pivot[np - 1 - c] = 1;
        std::vector<std::size_t> basis;
        for (std::size_t i = 0; i < np; ++i)
            if (!pivot[i]) basis.push_back(i);
        std::vector<std::size_t> coord(np, SIZE_MAX);
        for (std::size_t k = 0; k < basis.size(); ++k) coord[basis[k]] = k;

        auto alg = std::make_shared<Algebra>();
        alg->field = field;
        alg->vertex_labels = q.vertices;
        for (const auto& a : q.arrows) alg->arrow_labels.push_back(a.label);
        const std::size_t d = basis.size();
        alg->primitives.assign(nv, 0);
        for (std::size_t k = 0; k < d; ++k) {
            const auto& p = paths[basis[k]];
            alg->source.push_back(path_source(p));
            alg->target.push_back(path_target(p));
            alg->paths.push_back(p.arrows);
            if (p.arrows.empty()) {
                alg->labels.push_back("e_" + q.vertices[p.vertex]);
                alg->primitives[p.vertex] = k;
            } else {
                std::string label;
                for (std::size_t j = 0; j < p.arrows.size(); ++j) label += (j ? "." : "") + q.arrows[p.arrows[j]].label;
                alg->labels.push_back(label);
                alg->radical.push_back(k);
            }
        }
        alg->table.assign(d * d * d, 0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto& pi = paths[basis[i]];
                const auto& pj = paths[basis[j]];
                if (path_target(pj) != path_source(pi)) continue;
                // b_i * b_j = path b_j followed by b_i
                std::vector<std::size_t> w = pj.arrows;
                w.insert(w.end(), pi.arrows.begin(), pi.arrows.end());
                if (w.size() >= bound) continue;
                std::size_t idx;
                if (w.empty()) idx = index[{pj.vertex, {}}];
                else idx = find(w);
                Vector e(np, 0);
                e[column(idx)] = 1;
                Vector r = ideal.reduce(std::move(e));
                Scalar* out = alg->table.data() + (i * d + j) * d;
                for (std::size_t c = 0; c < np; ++c)
                    if (r[c]) out[coord[np - 1 - c]] = r[c];
            }
        finalize(*alg);
        validate(*alg);
        return alg;
    }
}

}  // namespace cornerstone

#endif
