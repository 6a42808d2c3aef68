#pragma once

#include "qcube/codes.hpp"
#include "qcube/error.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <vector>

namespace qcube {

inline constexpr int kMaxQuotientN = 20;

using VertexIndex = std::uint32_t;

/// A coset of span(C): its lexicographically smallest member and its dense
/// position among all such representatives in ascending order.
struct VertexId {
    Word representative = 0;
    VertexIndex index = 0;

    friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// Cayley graph of Z2^N / span(C) with generators e_1..e_N. Edge color c
/// (0-based) joins u and u + e_c, i.e. flips column c.
class QuotientGraph {
public:
    const GeneratorMatrix& code() const noexcept { return code_; }
    int length() const noexcept { return code_.length(); }
    int k() const noexcept { return basis_.rank(); }
    int n() const noexcept { return code_.length() - basis_.rank(); }
    std::size_t vertex_count() const noexcept { return std::size_t{1} << n(); }
    std::size_t edge_count() const noexcept { return vertex_count() * static_cast<std::size_t>(length()) / 2; }

    Word canonical(Word w) const noexcept { return basis_.reduce(w & length_mask(length())); }

    VertexId vertex_id(Word w) const noexcept {
        const Word rep = canonical(w);
        return {rep, compress(rep)};
    }

    Word representative(VertexIndex v) const noexcept { return deposit(v); }

    VertexIndex neighbor(VertexIndex v, int color) const noexcept {
        return neighbors_[static_cast<std::size_t>(v) * static_cast<std::size_t>(length()) + static_cast<std::size_t>(color)];
    }

    /// Bipartition class: parity of the representative's weight.
    int parity(VertexIndex v) const noexcept { return weight(representative(v)) & 1; }

    friend QuotientGraph build_quotient(const GeneratorMatrix& code);

private:
    VertexIndex compress(Word rep) const noexcept {
        VertexIndex idx = 0;
        for (std::size_t j = 0; j < free_bits_.size(); ++j)
            if (rep & (Word{1} << free_bits_[j])) idx |= VertexIndex{1} << j;
        return idx;
    }

    Word deposit(VertexIndex idx) const noexcept {
        Word rep = 0;
        for (std::size_t j = 0; j < free_bits_.size(); ++j)
            if (idx & (VertexIndex{1} << j)) rep |= Word{1} << free_bits_[j];
        return rep;
    }

    GeneratorMatrix code_;
    EchelonBasis basis_;
    std::vector<int> free_bits_;  // non-pivot bit positions, ascending
    std::vector<VertexIndex> neighbors_;
};

inline QuotientGraph build_quotient(const GeneratorMatrix& code) {
    require_doubly_even(code);
    if (code.n() > kMaxQuotientN)
        throw Error(Errc::NTooLarge, "quotient graphs limited to n <= " + std::to_string(kMaxQuotientN));

    QuotientGraph g;
    g.code_ = code;
    g.basis_ = echelon(code);
    const Word pivots = g.basis_.pivot_mask();
    for (int b = 0; b < code.length(); ++b)
        if (!(pivots & (Word{1} << b))) g.free_bits_.push_back(b);

    const std::size_t N = static_cast<std::size_t>(code.length());
    g.neighbors_.resize(g.vertex_count() * N);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const Word rep = g.deposit(v);
        for (int c = 0; c < code.length(); ++c)
            g.neighbors_[v * N + static_cast<std::size_t>(c)] = g.compress(g.canonical(rep ^ column_bit(code.length(), c)));
    }
    return g;
}

/// The n-cube: the quotient by the empty code of length n.
inline QuotientGraph build_hypercube(int n) { return build_quotient(GeneratorMatrix(n, {})); }

/// Undirected colored edge, stored with u < v. Colors are 0-based columns.
struct Edge {
    VertexIndex u = 0;
    VertexIndex v = 0;
    int color = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexIndex a, VertexIndex b, int color) noexcept {
    return a < b ? Edge{a, b, color} : Edge{b, a, color};
}

inline bool has_edge(const QuotientGraph& g, const Edge& e) noexcept {
    return e.color >= 0 && e.color < g.length() && e.u < g.vertex_count() && e.v < g.vertex_count() &&
           g.neighbor(e.u, e.color) == e.v;
}

/// Every edge once, sorted by (u, v, color).
inline std::vector<Edge> edges(const QuotientGraph& g) {
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (VertexIndex u = 0; u < g.vertex_count(); ++u)
        for (int c = 0; c < g.length(); ++c) {
            const VertexIndex v = g.neighbor(u, c);
            if (u < v) out.push_back({u, v, c});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Plain adjacency lists (colors dropped), for the isomorphism and tree code.
inline std::vector<std::vector<VertexIndex>> adjacency_lists(const QuotientGraph& g) {
    std::vector<std::vector<VertexIndex>> adj(g.vertex_count());
    for (VertexIndex u = 0; u < g.vertex_count(); ++u)
        for (int c = 0; c < g.length(); ++c) adj[u].push_back(g.neighbor(u, c));
    return adj;
}

using LaplacianMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// L = N I - A over the dense vertex index.
inline LaplacianMatrix laplacian(const QuotientGraph& g) {
    const auto V = static_cast<Eigen::Index>(g.vertex_count());
    LaplacianMatrix L = LaplacianMatrix::Zero(V, V);
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
        L(u, u) = g.length();
        for (int c = 0; c < g.length(); ++c) L(u, static_cast<Eigen::Index>(g.neighbor(u, c))) -= 1;
    }
    return L;
}

/// Edge list "u v color" with 1-based colors, one edge per line.
inline void write_edge_list(std::ostream& os, const QuotientGraph& g) {
    for (const Edge& e : edges(g)) os << e.u << ' ' << e.v << ' ' << (e.color + 1) << '\n';
}

} // namespace qcube
