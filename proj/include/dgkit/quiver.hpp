#pragma once

#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace dgkit {

/*
 * Quiver with admissible relations. Paths are written left to right:
 * the product p*q is "p then q" and needs target(p) = source(q), matching
 * the right-module row convention used everywhere else.
 */
template <class K>
struct QuiverPresentation {
    struct Arrow {
        std::string label;
        std::size_t source, target;
    };
    struct Relation {
        // sum of coeff * (arrow index sequence); every term length >= 2
        std::vector<std::pair<K, std::vector<std::size_t>>> terms;
    };

    FieldSpec field;
    std::size_t vertices = 1;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::size_t nilpotency_cap = 8;
};

namespace detail {

template <class K>
struct PathTable {
    // path = arrow index sequence; index 0..vertices-1 reserved for trivial paths
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> source, target, length;
    std::map<std::vector<std::size_t>, std::size_t> index_of;  // arrows -> path id (len >= 1)
    std::size_t vertices = 0;

    std::size_t trivial(std::size_t v) const { return v; }
    std::size_t count() const { return paths.size(); }
};

template <class K>
PathTable<K> enumerate_paths(const QuiverPresentation<K>& q) {
    PathTable<K> t;
    t.vertices = q.vertices;
    for (std::size_t v = 0; v < q.vertices; ++v) {
        t.paths.push_back({});
        t.source.push_back(v);
        t.target.push_back(v);
        t.length.push_back(0);
    }
    std::vector<std::size_t> frontier;
    for (std::size_t v = 0; v < q.vertices; ++v)
        frontier.push_back(v);
    for (std::size_t len = 1; len <= q.nilpotency_cap; ++len) {
        std::vector<std::size_t> next;
        for (std::size_t id : frontier)
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].source != t.target[id])
                    continue;
                std::vector<std::size_t> p = t.paths[id];
                p.push_back(a);
                std::size_t nid = t.count();
                t.paths.push_back(p);
                t.source.push_back(t.source[id]);
                t.target.push_back(q.arrows[a].target);
                t.length.push_back(len);
                t.index_of[t.paths.back()] = nid;
                next.push_back(nid);
                if (t.count() > 500000)
                    throw NonNilpotent("path enumeration exceeds 500000 paths before the cap; "
                                       "raise nilpotency_cap only with admissible relations");
            }
        frontier = std::move(next);
    }
    return t;
}

}  // namespace detail

/*
 * Path-basis realization of kQ/I, computed by linear reduction of the ideal
 * span inside the truncated path space. Fails with NonNilpotent when the
 * length-cap paths do not all land in the ideal (the algebra then is not
 * visibly finite-dimensional at this cap).
 */
template <class K>
AlgebraPtr<K> build_algebra_from_quiver(const QuiverPresentation<K>& q) {
    const FieldSpec fs = q.field;
    for (const auto& r : q.relations) {
        if (r.terms.empty())
            throw InvariantError("quiver: empty relation");
        std::size_t src = 0, tgt = 0;
        bool first = true;
        for (const auto& [c, path] : r.terms) {
            if (path.size() < 2)
                throw InvariantError("quiver: relation term of length < 2 is not admissible");
            std::size_t s = q.arrows.at(path[0]).source;
            std::size_t t = q.arrows.at(path.back()).target;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (q.arrows.at(path[i]).target != q.arrows.at(path[i + 1]).source)
                    throw InvariantError("quiver: relation term is not a composable path");
            if (first) {
                src = s;
                tgt = t;
                first = false;
            } else if (s != src || t != tgt) {
                throw InvariantError("quiver: relation terms are not parallel paths");
            }
        }
    }

    auto table = detail::enumerate_paths(q);
    const std::size_t N = table.count();
    const std::size_t C = q.nilpotency_cap;

    // span of p * r * q inside the truncated path space
    RowBasis<K> ideal(fs, N);
    for (const auto& rel : q.relations) {
        std::size_t rel_src = q.arrows.at(rel.terms[0].second[0]).source;
        std::size_t rel_tgt = q.arrows.at(rel.terms[0].second.back()).target;
        for (std::size_t lp = 0; lp < N; ++lp) {
            if (table.target[lp] != rel_src)
                continue;
            for (std::size_t rp = 0; rp < N; ++rp) {
                if (table.source[rp] != rel_tgt)
                    continue;
                bool fits = true;
                for (const auto& [c, mid] : rel.terms)
                    if (table.length[lp] + mid.size() + table.length[rp] > C)
                        fits = false;
                if (!fits)
                    continue;
                std::vector<K> v(N, K(0));
                for (const auto& [c, mid] : rel.terms) {
                    std::vector<std::size_t> whole = table.paths[lp];
                    whole.insert(whole.end(), mid.begin(), mid.end());
                    whole.insert(whole.end(), table.paths[rp].begin(), table.paths[rp].end());
                    v[table.index_of.at(whole)] += c;
                }
                if (!all_zero(v))
                    ideal.insert(std::move(v));
            }
        }
    }

    // close the span under multiplication by arrows: reduced ideal rows whose
    // arrow-multiples stay representable give the cascaded reductions that
    // inhomogeneous relations need
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<K>> snapshot;
        for (std::size_t i = 0; i < ideal.rank(); ++i)
            snapshot.push_back(ideal.rref_row(i));
        for (const auto& v : snapshot)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                for (int side = 0; side < 2; ++side) {
                    std::vector<K> w(N, K(0));
                    bool representable = true;
                    for (std::size_t id = 0; id < N && representable; ++id) {
                        if (v[id].is_zero())
                            continue;
                        const bool composes = side == 0
                                                  ? table.target[id] == q.arrows[a].source
                                                  : q.arrows[a].target == table.source[id];
                        if (!composes)
                            continue;  // that term is annihilated
                        if (table.length[id] + 1 > C) {
                            representable = false;
                            break;
                        }
                        std::vector<std::size_t> p = table.paths[id];
                        if (side == 0)
                            p.push_back(a);
                        else
                            p.insert(p.begin(), a);
                        w[table.index_of.at(p)] += v[id];
                    }
                    if (representable && !all_zero(w) && ideal.insert(std::move(w)))
                        grew = true;
                }
    }

    // stabilization: every cap-length path must already lie in the ideal
    for (std::size_t id = 0; id < N; ++id) {
        if (table.length[id] != C)
            continue;
        std::vector<K> v(N, K(0));
        v[id] = FieldOps<K>::from_int(fs, 1);
        if (!ideal.contains(v))
            throw NonNilpotent("path of length " + std::to_string(C) +
                               " survives the relation ideal; raise nilpotency_cap or fix the "
                               "relations");
    }

    // monomial basis: paths independent modulo the ideal, with coordinates
    RowBasis<K> span(fs, N, true);
    for (std::size_t i = 0; i < ideal.rank(); ++i)
        span.insert(ideal.rref_row(i));
    const std::size_t ideal_rank = ideal.rank();
    std::vector<std::size_t> basis_paths;
    for (std::size_t id = 0; id < N; ++id) {
        std::vector<K> v(N, K(0));
        v[id] = FieldOps<K>::from_int(fs, 1);
        if (span.insert(std::move(v)))
            basis_paths.push_back(id);
    }
    const std::size_t d = basis_paths.size();

    auto coords_of = [&](const std::vector<K>& v) {
        auto c = span.coords_in_inserted(v);
        if (!c)
            throw std::logic_error("quiver: vector escaped the truncated path space");
        std::vector<K> out(d, K(0));
        for (std::size_t t = 0; t < d; ++t)
            out[t] = (*c)[ideal_rank + basis_paths[t]];
        return out;
    };

    std::vector<std::string> labels(d);
    QuiverMeta meta;
    meta.vertex_count = q.vertices;
    meta.vertex_idempotents.assign(q.vertices, 0);
    for (std::size_t t = 0; t < d; ++t) {
        std::size_t id = basis_paths[t];
        meta.path_length.push_back(table.length[id]);
        meta.path_source.push_back(table.source[id]);
        meta.path_target.push_back(table.target[id]);
        if (table.length[id] == 0) {
            labels[t] = q.vertices == 1 ? "e" : "e" + std::to_string(table.source[id] + 1);
            meta.vertex_idempotents[table.source[id]] = t;
        } else {
            std::string s;
            for (std::size_t a : table.paths[id]) {
                if (!s.empty())
                    s += "*";
                s += q.arrows[a].label;
            }
            labels[t] = s;
        }
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::vector<std::size_t> p = {a};
        auto it = table.index_of.find(p);
        for (std::size_t t = 0; t < d; ++t)
            if (basis_paths[t] == it->second)
                meta.arrow_basis.push_back(t);
    }

    // structure constants by concatenation + reduction
    std::vector<std::vector<std::vector<K>>> mult(
        d, std::vector<std::vector<K>>(d, std::vector<K>(d, K(0))));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t pi = basis_paths[i], pj = basis_paths[j];
            if (table.target[pi] != table.source[pj])
                continue;  // product is zero
            if (table.length[pi] + table.length[pj] > C)
                continue;  // beyond the cap: in the ideal by stabilization
            std::vector<std::size_t> whole = table.paths[pi];
            whole.insert(whole.end(), table.paths[pj].begin(), table.paths[pj].end());
            std::size_t id = whole.empty() ? table.trivial(table.source[pi])
                                           : table.index_of.at(whole);
            std::vector<K> v(N, K(0));
            v[id] = FieldOps<K>::from_int(fs, 1);
            mult[i][j] = coords_of(v);
        }

    std::vector<K> unit(d, K(0));
    for (std::size_t v = 0; v < q.vertices; ++v)
        unit[meta.vertex_idempotents[v]] = FieldOps<K>::from_int(fs, 1);

    return std::make_shared<const FDAlgebra<K>>(fs, std::move(labels), std::move(mult),
                                                std::move(unit), std::move(meta));
}

// one-vertex quiver helpers used by the worked examples

// k[x]/(x^n)
template <class K>
QuiverPresentation<K> nakayama_quiver(FieldSpec fs, std::size_t n) {
    QuiverPresentation<K> q;
    q.field = fs;
    q.vertices = 1;
    q.arrows = {{"x", 0, 0}};
    typename QuiverPresentation<K>::Relation r;
    r.terms = {{FieldOps<K>::from_int(fs, 1), std::vector<std::size_t>(n, 0)}};
    q.relations = {r};
    q.nilpotency_cap = n;
    return q;
}

// k[x,y]/(x^n - y^s, xy, yx)
template <class K>
QuiverPresentation<K> dugas_quiver(FieldSpec fs, std::size_t n, std::size_t s) {
    QuiverPresentation<K> q;
    q.field = fs;
    q.vertices = 1;
    q.arrows = {{"x", 0, 0}, {"y", 0, 0}};
    const K one = FieldOps<K>::from_int(fs, 1);
    typename QuiverPresentation<K>::Relation bin, xy, yx;
    bin.terms = {{one, std::vector<std::size_t>(n, 0)}, {-one, std::vector<std::size_t>(s, 1)}};
    xy.terms = {{one, {0, 1}}};
    yx.terms = {{one, {1, 0}}};
    q.relations = {bin, xy, yx};
    q.nilpotency_cap = std::max(n, s) + 1;
    return q;
}

}  // namespace dgkit
