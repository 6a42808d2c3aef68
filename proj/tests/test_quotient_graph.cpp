#include "qcube/isomorphism.hpp"
#include "qcube/quotient_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace qcube;

namespace {

/// Complete bipartite K_{a,a} as adjacency lists.
AdjacencyLists complete_bipartite(std::size_t a) {
    AdjacencyLists adj(2 * a);
    for (VertexIndex i = 0; i < a; ++i)
        for (VertexIndex j = 0; j < a; ++j) {
            adj[i].push_back(static_cast<VertexIndex>(a + j));
            adj[a + j].push_back(i);
        }
    return adj;
}

void expect_well_formed(const QuotientGraph& g) {
    std::set<std::pair<VertexIndex, VertexIndex>> seen;
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
        std::set<VertexIndex> nbrs;
        for (int c = 0; c < g.length(); ++c) {
            const VertexIndex v = g.neighbor(u, c);
            EXPECT_NE(v, u);
            EXPECT_EQ(g.neighbor(v, c), u);
            EXPECT_NE(g.parity(u), g.parity(v));
            nbrs.insert(v);
        }
        EXPECT_EQ(nbrs.size(), static_cast<std::size_t>(g.length()));
    }
}

} // namespace

TEST(BuildQuotient, EmptyCodeIsTheCube) {
    const auto g = build_quotient(fixtures::hypercube_code(3));
    EXPECT_EQ(g.vertex_count(), 8u);
    EXPECT_EQ(g.edge_count(), 12u);
    expect_well_formed(g);
    // Neighbors differ in exactly one coordinate.
    for (VertexIndex u = 0; u < 8; ++u)
        for (int c = 0; c < 3; ++c) EXPECT_EQ(std::popcount(g.representative(u) ^ g.representative(g.neighbor(u, c))), 1);
}

TEST(BuildQuotient, K44FromWeightFourWord) {
    const auto g = build_quotient(fixtures::k44());
    EXPECT_EQ(g.vertex_count(), 8u);
    expect_well_formed(g);
    EXPECT_TRUE(is_isomorphic_small(adjacency_lists(g), complete_bipartite(4)));
}

TEST(BuildQuotient, E8GivesK88) {
    const auto g = build_quotient(fixtures::e8());
    EXPECT_EQ(g.vertex_count(), 16u);
    expect_well_formed(g);
    // Every even coset is adjacent to every odd coset.
    for (VertexIndex u = 0; u < 16; ++u) {
        std::set<VertexIndex> nbrs;
        for (int c = 0; c < 8; ++c) nbrs.insert(g.neighbor(u, c));
        for (VertexIndex v = 0; v < 16; ++v)
            if (g.parity(v) != g.parity(u)) EXPECT_TRUE(nbrs.count(v));
    }
}

TEST(BuildQuotient, Errors) {
    EXPECT_THROW(build_quotient(parse_code("1100")), Error);
    try {
        build_quotient(GeneratorMatrix(21, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NTooLarge);
    }
}

TEST(VertexId, MatchesCosetScanAndSeparatesCosets) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int length = 5 + static_cast<int>(rng() % 6);
        const auto code = oracle::random_doubly_even_code(length, 1 + static_cast<int>(rng() % 3), rng);
        const auto g = build_quotient(code);
        ASSERT_LE(g.n(), 10);
        const auto words = oracle::closure(code.rows());
        std::set<VertexIndex> indices;
        for (Word w = 0; w <= length_mask(length); ++w) {
            const auto id = g.vertex_id(w);
            EXPECT_EQ(id.representative, oracle::coset_minimum(code, w));
            EXPECT_EQ(g.representative(id.index), id.representative);
            indices.insert(id.index);
            for (Word c : words) EXPECT_EQ(g.vertex_id(w ^ c), id);
        }
        EXPECT_EQ(indices.size(), g.vertex_count());
    }
}

TEST(VertexId, DenseIndexFollowsRepresentativeOrder) {
    const auto g = build_quotient(fixtures::e8());
    for (VertexIndex v = 1; v < g.vertex_count(); ++v) EXPECT_LT(g.representative(v - 1), g.representative(v));
}

TEST(ColorClasses, ArePerfectMatchings) {
    const auto g = build_quotient(fixtures::column_swap_left());
    const auto es = edges(g);
    EXPECT_EQ(es.size(), g.edge_count());
    for (int c = 0; c < g.length(); ++c) {
        std::vector<int> covered(g.vertex_count(), 0);
        for (const auto& e : es)
            if (e.color == c) {
                ++covered[e.u];
                ++covered[e.v];
            }
        for (int x : covered) EXPECT_EQ(x, 1);
    }
}

TEST(Laplacian, Examples) {
    const auto L2 = laplacian(build_hypercube(2));
    EXPECT_EQ(L2.rows(), 4);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(L2(i, i), 2);
        EXPECT_EQ(L2.row(i).sum(), 0);
    }
    const auto L44 = laplacian(build_quotient(fixtures::k44()));
    EXPECT_TRUE((L44.diagonal().array() == 4).all());
    EXPECT_EQ(L44, L44.transpose());

    LaplacianMatrix edge(2, 2);
    edge << 1, -1, -1, 1;
    EXPECT_EQ(laplacian(build_hypercube(1)), edge);
}

TEST(EdgeList, OneLinePerEdgeWithOneBasedColors) {
    std::ostringstream os;
    write_edge_list(os, build_hypercube(2));
    EXPECT_EQ(os.str(), "0 1 2\n0 2 1\n1 3 1\n2 3 2\n");
}

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(is_isomorphic_small(build_hypercube(3), build_hypercube(3)));
    EXPECT_FALSE(is_isomorphic_small(build_quotient(fixtures::k44()), build_hypercube(3)));
    EXPECT_FALSE(is_isomorphic_small(build_quotient(fixtures::distinct_left()), build_quotient(fixtures::distinct_right())));
}

TEST(Isomorphism, ColumnPermutationInducesIsomorphism) {
    EXPECT_TRUE(
        is_isomorphic_small(build_quotient(fixtures::column_swap_left()), build_quotient(fixtures::column_swap_right())));
}

TEST(Isomorphism, RelabeledGraphsAndNearMisses) {
    std::mt19937 rng(23);
    const auto base = adjacency_lists(build_hypercube(4));
    std::vector<VertexIndex> perm(base.size());
    std::iota(perm.begin(), perm.end(), VertexIndex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    AdjacencyLists relabeled(base.size());
    for (std::size_t v = 0; v < base.size(); ++v)
        for (VertexIndex w : base[v]) relabeled[perm[v]].push_back(perm[w]);
    EXPECT_TRUE(is_isomorphic_small(base, relabeled));

    // Same degree sequence, different graph: two disjoint 8-cycles vs. one 16-cycle.
    AdjacencyLists two_cycles(16), one_cycle(16);
    for (VertexIndex i = 0; i < 16; ++i) {
        const VertexIndex a = i, b = (i + 1) % 16;
        one_cycle[a].push_back(b);
        one_cycle[b].push_back(a);
        const VertexIndex c = (i / 8) * 8 + (i + 1) % 8;
        two_cycles[i].push_back(c);
        two_cycles[c].push_back(i);
    }
    EXPECT_FALSE(is_isomorphic_small(two_cycles, one_cycle));
}

TEST(Isomorphism, TooLarge) {
    EXPECT_THROW(is_isomorphic_small(build_hypercube(7), build_hypercube(7)), Error);
}
