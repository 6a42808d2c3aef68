#pragma once

// Edge dashings on quotient hypercubes. A dashing is well formed when every
// two-color quadrilateral carries an odd number of dashed edges; NDXOR fills
// the fourth edge of a quadrilateral from the other three.

#include "qcube/error.hpp"
#include "qcube/quotient_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qcube {

inline constexpr bool ndxor(bool x, bool y, bool z) noexcept { return !(x ^ y ^ z); }

/// Cycle a -> a+e_I -> a+e_I+e_J -> a+e_J -> a with I < J and a the smallest
/// vertex index on the cycle.
struct Quadrilateral {
    int color_i = 0;
    int color_j = 0;
    std::array<VertexIndex, 4> vertices{};

    std::array<Edge, 4> edges() const noexcept {
        return {make_edge(vertices[0], vertices[1], color_i), make_edge(vertices[1], vertices[2], color_j),
                make_edge(vertices[2], vertices[3], color_i), make_edge(vertices[3], vertices[0], color_j)};
    }

    friend bool operator==(const Quadrilateral&, const Quadrilateral&) = default;
    friend auto operator<=>(const Quadrilateral&, const Quadrilateral&) = default;
};

/// All quadrilaterals with edge colors {I, J}, each once, sorted by start vertex.
inline std::vector<Quadrilateral> quadrilaterals(const QuotientGraph& g, int color_i, int color_j) {
    if (color_i == color_j) throw Error(Errc::SameColor, "quadrilaterals need two distinct colors");
    if (color_i < 0 || color_j < 0 || color_i >= g.length() || color_j >= g.length())
        throw Error(Errc::IndexOutOfRange, "color out of range");
    if (color_i > color_j) std::swap(color_i, color_j);

    std::vector<Quadrilateral> out;
    for (VertexIndex a = 0; a < g.vertex_count(); ++a) {
        const VertexIndex b = g.neighbor(a, color_i);
        const VertexIndex c = g.neighbor(b, color_j);
        const VertexIndex d = g.neighbor(a, color_j);
        if (a < b && a < c && a < d) out.push_back({color_i, color_j, {a, b, c, d}});
    }
    return out;
}

/// Every quadrilateral of the graph, sorted by (I, J, start vertex).
inline std::vector<Quadrilateral> all_quadrilaterals(const QuotientGraph& g) {
    std::vector<Quadrilateral> out;
    for (int i = 0; i < g.length(); ++i)
        for (int j = i + 1; j < g.length(); ++j) {
            auto q = quadrilaterals(g, i, j);
            out.insert(out.end(), q.begin(), q.end());
        }
    return out;
}

/// Partial map from undirected colored edges to a dash bit (true = dashed).
class DashingAssignment {
public:
    using Map = std::map<Edge, bool>;

    DashingAssignment() = default;
    explicit DashingAssignment(Map bits) : bits_(std::move(bits)) {}

    void set(const Edge& e, bool dashed) { bits_[make_edge(e.u, e.v, e.color)] = dashed; }

    std::optional<bool> get(const Edge& e) const {
        auto it = bits_.find(make_edge(e.u, e.v, e.color));
        if (it == bits_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Edge& e) const { return bits_.count(make_edge(e.u, e.v, e.color)) != 0; }
    std::size_t size() const noexcept { return bits_.size(); }
    const Map& bits() const noexcept { return bits_; }

    bool complete_for(const QuotientGraph& g) const noexcept { return bits_.size() == g.edge_count(); }

    friend bool operator==(const DashingAssignment&, const DashingAssignment&) = default;

private:
    Map bits_;
};

enum class CompletionStatus { Complete, Stuck, Inconsistent };

inline std::string_view to_string(CompletionStatus s) noexcept {
    switch (s) {
    case CompletionStatus::Complete: return "complete";
    case CompletionStatus::Stuck: return "stuck";
    case CompletionStatus::Inconsistent: return "inconsistent";
    }
    return "unknown";
}

struct CompletionResult {
    CompletionStatus status = CompletionStatus::Complete;
    /// Everything known when propagation stopped.
    DashingAssignment assignment;
    /// Stuck: edges still unknown, sorted.
    std::vector<Edge> unknown_edges;
    /// Inconsistent: a fully known quadrilateral with an even dash count.
    std::optional<Quadrilateral> conflict;

    bool complete() const noexcept { return status == CompletionStatus::Complete; }
};

namespace detail {

inline void require_edges_of(const QuotientGraph& g, const DashingAssignment& d) {
    for (const auto& [e, bit] : d.bits())
        if (!has_edge(g, e))
            throw Error(Errc::NotAnEdge, "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", color " +
                                             std::to_string(e.color + 1) + ") is not an edge of the graph");
}

} // namespace detail

/// Fixpoint propagation over the quadrilaterals in sorted order: whenever
/// exactly three edges of a quadrilateral are known, the fourth is set by
/// NDXOR. Passes repeat until nothing changes.
inline CompletionResult complete_dashing(const QuotientGraph& g, const DashingAssignment& partial) {
    detail::require_edges_of(g, partial);
    const auto quads = all_quadrilaterals(g);
    CompletionResult result;
    result.assignment = partial;
    DashingAssignment& d = result.assignment;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& q : quads) {
            const auto es = q.edges();
            int known = 0;
            bool parity = false;
            const Edge* missing = nullptr;
            for (const auto& e : es) {
                if (auto bit = d.get(e)) {
                    ++known;
                    parity ^= *bit;
                } else {
                    missing = &e;
                }
            }
            if (known == 4 && !parity) {
                result.status = CompletionStatus::Inconsistent;
                result.conflict = q;
                return result;
            }
            if (known == 3) {
                d.set(*missing, !parity);  // ndxor of the three known bits
                changed = true;
            }
        }
    }

    if (d.complete_for(g)) return result;
    result.status = CompletionStatus::Stuck;
    for (const auto& e : edges(g))
        if (!d.contains(e)) result.unknown_edges.push_back(e);
    return result;
}

struct DashingReport {
    std::vector<Quadrilateral> even_quadrilaterals;
    bool ok() const noexcept { return even_quadrilaterals.empty(); }
};

inline DashingReport validate_dashing(const QuotientGraph& g, const DashingAssignment& d) {
    detail::require_edges_of(g, d);
    if (!d.complete_for(g)) throw Error(Errc::IncompleteAssignment, "dashing does not cover every edge");
    DashingReport report;
    for (const auto& q : all_quadrilaterals(g)) {
        bool parity = false;
        for (const auto& e : q.edges()) parity ^= *d.get(e);
        if (!parity) report.even_quadrilaterals.push_back(q);
    }
    return report;
}

/// Assigns the same bit to every listed edge.
inline DashingAssignment uniform_dashing(const std::vector<Edge>& es, bool dashed) {
    DashingAssignment d;
    for (const auto& e : es) d.set(e, dashed);
    return d;
}

// ---------------------------------------------------------------------------
// Spanning trees and baobab candidates

namespace detail {

struct DisjointSets {
    std::vector<VertexIndex> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexIndex{0}); }
    VertexIndex find(VertexIndex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(VertexIndex a, VertexIndex b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace detail

inline bool is_spanning_tree(const QuotientGraph& g, const std::vector<Edge>& tree) {
    if (tree.size() + 1 != g.vertex_count()) return false;
    detail::DisjointSets sets(g.vertex_count());
    for (const auto& e : tree)
        if (!has_edge(g, e) || !sets.unite(e.u, e.v)) return false;
    return true;
}

/// Kruskal over a random edge order; reproducible for a given generator state.
template <class Rng>
std::vector<Edge> random_spanning_tree(const QuotientGraph& g, Rng& rng) {
    auto es = edges(g);
    std::shuffle(es.begin(), es.end(), rng);
    detail::DisjointSets sets(g.vertex_count());
    std::vector<Edge> tree;
    for (const auto& e : es)
        if (sets.unite(e.u, e.v)) tree.push_back(e);
    std::sort(tree.begin(), tree.end());
    return tree;
}

/// A spanning tree together with k designated cycles (edge sequences).
struct CandidateBaobab {
    std::vector<Edge> tree;
    std::vector<std::vector<Edge>> cycles;
};

struct BaobabReport {
    bool spanning_tree = false;
    bool cycle_count = false;
    std::vector<std::size_t> not_closed_walks;
    std::vector<std::size_t> few_odd_colors;
    std::vector<std::size_t> no_private_color;

    bool ok() const noexcept {
        return spanning_tree && cycle_count && not_closed_walks.empty() && few_odd_colors.empty() &&
               no_private_color.empty();
    }

    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        if (!spanning_tree) out.emplace_back("tree edges do not form a spanning tree");
        if (!cycle_count) out.emplace_back("number of cycles differs from the code dimension");
        for (auto i : not_closed_walks) out.push_back("cycle " + std::to_string(i) + " is not a closed walk");
        for (auto i : few_odd_colors)
            out.push_back("cycle " + std::to_string(i) + " has fewer than four colors of odd multiplicity");
        for (auto i : no_private_color)
            out.push_back("cycle " + std::to_string(i) + " has no color absent from the other cycles");
        return out;
    }
};

namespace detail {

inline bool is_closed_walk(const std::vector<Edge>& cycle) {
    if (cycle.empty()) return false;
    for (VertexIndex start : {cycle.front().u, cycle.front().v}) {
        VertexIndex at = start;
        bool ok = true;
        for (const auto& e : cycle) {
            if (e.u == at)
                at = e.v;
            else if (e.v == at)
                at = e.u;
            else {
                ok = false;
                break;
            }
        }
        if (ok && at == start) return true;
    }
    return false;
}

} // namespace detail

/// Checks the baobab clauses: spanning tree, k cycles, at least four colors
/// of odd multiplicity per cycle, and a color in each cycle that no other
/// cycle uses.
inline BaobabReport check_baobab(const QuotientGraph& g, const CandidateBaobab& b) {
    for (const auto& e : b.tree)
        if (!has_edge(g, e)) throw Error(Errc::NotAnEdge, "tree edge not in graph");
    for (const auto& c : b.cycles)
        for (const auto& e : c)
            if (!has_edge(g, e)) throw Error(Errc::NotAnEdge, "cycle edge not in graph");

    BaobabReport r;
    r.spanning_tree = is_spanning_tree(g, b.tree);
    r.cycle_count = static_cast<int>(b.cycles.size()) == g.k();

    std::vector<std::set<int>> colors_used(b.cycles.size());
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
        const auto& cycle = b.cycles[i];
        if (!detail::is_closed_walk(cycle)) r.not_closed_walks.push_back(i);
        std::map<int, int> count;
        for (const auto& e : cycle) ++count[e.color];
        int odd = 0;
        for (const auto& [color, c] : count) {
            odd += c % 2;
            colors_used[i].insert(color);
        }
        if (odd < 4) r.few_odd_colors.push_back(i);
    }
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
        bool has_private = false;
        for (int color : colors_used[i]) {
            bool elsewhere = false;
            for (std::size_t j = 0; j < b.cycles.size() && !elsewhere; ++j)
                elsewhere = j != i && colors_used[j].count(color);
            has_private = has_private || !elsewhere;
        }
        if (!has_private) r.no_private_color.push_back(i);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Dashing files: one edge per line, "u v color bit", colors 1-based.

inline DashingAssignment parse_dashing(std::string_view text) {
    DashingAssignment d;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long u, v, color, bit;
        std::string extra;
        if (!(fields >> u >> v >> color >> bit) || (fields >> extra) || u < 0 || v < 0 || color < 1 ||
            (bit != 0 && bit != 1))
            throw Error(Errc::MalformedInput, "dashing line " + std::to_string(line_no) + ": expected 'u v color bit'");
        d.set(make_edge(static_cast<VertexIndex>(u), static_cast<VertexIndex>(v), static_cast<int>(color - 1)), bit == 1);
    }
    return d;
}

inline std::string format_dashing(const DashingAssignment& d) {
    std::string out;
    for (const auto& [e, bit] : d.bits())
        out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + std::to_string(e.color + 1) + ' ' +
               (bit ? '1' : '0') + '\n';
    return out;
}

} // namespace qcube
