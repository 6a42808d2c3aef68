#pragma once

// Exact isomorphism test for small uncolored graphs: color refinement run in
// lockstep on both graphs, then individualization and backtracking.

#include "qcube/error.hpp"
#include "qcube/quotient_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace qcube {

inline constexpr std::size_t kMaxIsomorphismVertices = 64;

using AdjacencyLists = std::vector<std::vector<VertexIndex>>;

namespace detail {

using Coloring = std::vector<int>;

/// One refinement pass applied to both graphs with a shared signature table,
/// so equal colors mean equal signatures across graphs. Returns false if the
/// color-class histograms differ.
inline bool refine_step(const AdjacencyLists& ga, const AdjacencyLists& gb, Coloring& ca, Coloring& cb, bool& changed) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const AdjacencyLists& g, const Coloring& c, std::size_t v) {
        std::vector<int> nb;
        nb.reserve(g[v].size());
        for (VertexIndex w : g[v]) nb.push_back(c[w]);
        std::sort(nb.begin(), nb.end());
        return Signature{c[v], std::move(nb)};
    };
    std::vector<Signature> sa, sb;
    for (std::size_t v = 0; v < ga.size(); ++v) sa.push_back(signature(ga, ca, v));
    for (std::size_t v = 0; v < gb.size(); ++v) sb.push_back(signature(gb, cb, v));

    std::map<Signature, int> table;
    for (const auto& s : sa) table.emplace(s, 0);
    for (const auto& s : sb) table.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : table) id = next++;

    std::map<int, int> hist;
    Coloring na(ca.size()), nbc(cb.size());
    for (std::size_t v = 0; v < sa.size(); ++v) ++hist[na[v] = table[sa[v]]];
    for (std::size_t v = 0; v < sb.size(); ++v) --hist[nbc[v] = table[sb[v]]];
    for (const auto& [color, count] : hist)
        if (count != 0) return false;

    const auto classes = [](const Coloring& c) { return std::set<int>(c.begin(), c.end()).size(); };
    changed = classes(na) != classes(ca);
    ca = std::move(na);
    cb = std::move(nbc);
    return true;
}

inline bool refine(const AdjacencyLists& ga, const AdjacencyLists& gb, Coloring& ca, Coloring& cb) {
    bool changed = true;
    while (changed)
        if (!refine_step(ga, gb, ca, cb, changed)) return false;
    return true;
}

inline bool search(const AdjacencyLists& ga, const AdjacencyLists& gb, Coloring ca, Coloring cb) {
    if (!refine(ga, gb, ca, cb)) return false;

    // First non-singleton class in A.
    std::map<int, int> size;
    for (int c : ca) ++size[c];
    int target = -1;
    for (const auto& [color, count] : size)
        if (count > 1) {
            target = color;
            break;
        }
    if (target < 0) {
        // Discrete: the coloring is a bijection; verify it preserves edges.
        std::vector<VertexIndex> map_b(ca.size());
        std::map<int, VertexIndex> where_b;
        for (std::size_t v = 0; v < cb.size(); ++v) where_b[cb[v]] = static_cast<VertexIndex>(v);
        for (std::size_t v = 0; v < ca.size(); ++v) map_b[v] = where_b.at(ca[v]);
        for (std::size_t v = 0; v < ga.size(); ++v) {
            std::vector<VertexIndex> image, actual(gb[map_b[v]]);
            for (VertexIndex w : ga[v]) image.push_back(map_b[w]);
            std::sort(image.begin(), image.end());
            std::sort(actual.begin(), actual.end());
            if (image != actual) return false;
        }
        return true;
    }

    const int fresh = *std::max_element(ca.begin(), ca.end()) + 1;
    const auto va = static_cast<std::size_t>(std::find(ca.begin(), ca.end(), target) - ca.begin());
    for (std::size_t vb = 0; vb < cb.size(); ++vb) {
        if (cb[vb] != target) continue;
        Coloring na = ca, nb = cb;
        na[va] = fresh;
        nb[vb] = fresh;
        if (search(ga, gb, std::move(na), std::move(nb))) return true;
    }
    return false;
}

} // namespace detail

/// Uncolored graph isomorphism for graphs of at most 64 vertices.
inline bool is_isomorphic_small(const AdjacencyLists& a, const AdjacencyLists& b) {
    if (a.size() > kMaxIsomorphismVertices || b.size() > kMaxIsomorphismVertices)
        throw Error(Errc::TooLarge, "isomorphism oracle limited to 64 vertices");
    if (a.size() != b.size()) return false;
    return detail::search(a, b, detail::Coloring(a.size(), 0), detail::Coloring(b.size(), 0));
}

inline bool is_isomorphic_small(const QuotientGraph& a, const QuotientGraph& b) {
    if (a.vertex_count() > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices)
        throw Error(Errc::TooLarge, "isomorphism oracle limited to 64 vertices");
    return is_isomorphic_small(adjacency_lists(a), adjacency_lists(b));
}

} // namespace qcube
