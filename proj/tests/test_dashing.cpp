#include "qcube/dashing.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcube;

namespace {

DashingAssignment zero_on(const std::vector<Edge>& es) { return uniform_dashing(es, false); }

/// Closed walk from `start` following the given colors in order.
std::vector<Edge> walk(const QuotientGraph& g, VertexIndex start, const std::vector<int>& colors) {
    std::vector<Edge> out;
    VertexIndex at = start;
    for (int c : colors) {
        const VertexIndex next = g.neighbor(at, c);
        out.push_back(make_edge(at, next, c));
        at = next;
    }
    return out;
}

std::vector<DashingAssignment> all_valid_dashings(const QuotientGraph& g) {
    const auto es = edges(g);
    std::vector<DashingAssignment> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << es.size()); ++mask) {
        DashingAssignment d;
        for (std::size_t i = 0; i < es.size(); ++i) d.set(es[i], (mask >> i) & 1);
        if (validate_dashing(g, d).ok()) out.push_back(d);
    }
    return out;
}

} // namespace

TEST(Ndxor, TruthTable) {
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                const bool w = ndxor(x, y, z);
                EXPECT_EQ(w, (x + y + z) % 2 == 0);
                EXPECT_EQ((x + y + z + w) % 2, 1);
            }
}

TEST(Quadrilaterals, CountsMatchBruteForce) {
    EXPECT_EQ(quadrilaterals(build_hypercube(2), 0, 1).size(), 1u);
    EXPECT_EQ(quadrilaterals(build_hypercube(3), 0, 1).size(), 2u);
    EXPECT_EQ(quadrilaterals(build_quotient(fixtures::k44()), 0, 1).size(), 2u);
    for (const auto& code : {fixtures::hypercube_code(4), fixtures::k44(), fixtures::e8(), fixtures::column_swap_left()}) {
        const auto g = build_quotient(code);
        for (int i = 0; i < g.length(); ++i)
            for (int j = i + 1; j < g.length(); ++j)
                EXPECT_EQ(quadrilaterals(g, i, j).size(), oracle::count_two_color_squares(g, i, j));
    }
}

TEST(Quadrilaterals, ShapeAndOrder) {
    const auto g = build_hypercube(3);
    const auto qs = all_quadrilaterals(g);
    EXPECT_EQ(qs.size(), 6u);
    EXPECT_TRUE(std::is_sorted(qs.begin(), qs.end()));
    for (const auto& q : qs) {
        EXPECT_LT(q.color_i, q.color_j);
        for (int i = 1; i < 4; ++i) EXPECT_LT(q.vertices[0], q.vertices[i]);
        for (const auto& e : q.edges()) EXPECT_TRUE(has_edge(g, e));
    }
    EXPECT_EQ(quadrilaterals(g, 2, 0), quadrilaterals(g, 0, 2));
}

TEST(Quadrilaterals, Errors) {
    const auto g = build_hypercube(3);
    EXPECT_THROW(quadrilaterals(g, 1, 1), Error);
    EXPECT_THROW(quadrilaterals(g, 0, 3), Error);
    EXPECT_THROW(quadrilaterals(g, -1, 2), Error);
}

TEST(Completion, TwoCubeFromThreeEdges) {
    const auto g = build_hypercube(2);
    auto es = edges(g);
    const Edge last = es.back();
    es.pop_back();
    const auto r = complete_dashing(g, zero_on(es));
    ASSERT_TRUE(r.complete());
    EXPECT_EQ(r.assignment.get(last), true);
    EXPECT_TRUE(validate_dashing(g, r.assignment).ok());
}

TEST(Completion, TwoCubeAllZeroIsInconsistent) {
    const auto g = build_hypercube(2);
    const auto r = complete_dashing(g, zero_on(edges(g)));
    EXPECT_EQ(r.status, CompletionStatus::Inconsistent);
    ASSERT_TRUE(r.conflict.has_value());
    EXPECT_EQ(r.conflict->vertices[0], 0u);
}

TEST(Completion, ThreeCubeSingleEdgeIsStuck) {
    const auto g = build_hypercube(3);
    const auto es = edges(g);
    const auto r = complete_dashing(g, zero_on({es.front()}));
    EXPECT_EQ(r.status, CompletionStatus::Stuck);
    EXPECT_EQ(r.unknown_edges.size(), 11u);
    EXPECT_EQ(r.assignment.size(), 1u);
}

TEST(Completion, ForeignEdgeRejected) {
    DashingAssignment d;
    d.set(make_edge(0, 3, 0), false);
    EXPECT_THROW(complete_dashing(build_hypercube(2), d), Error);
}

TEST(Completion, EveryTwoCubeTreeCompletes) {
    const auto g = build_hypercube(2);
    const auto trees = oracle::all_spanning_trees(g);
    ASSERT_EQ(trees.size(), 4u);
    for (const auto& t : trees) {
        const auto r = complete_dashing(g, zero_on(t));
        ASSERT_TRUE(r.complete());
        EXPECT_TRUE(validate_dashing(g, r.assignment).ok());
    }
}

TEST(Completion, RandomThreeCubeTreesCompleteAndFlipsBreakThem) {
    const auto g = build_hypercube(3);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto tree = random_spanning_tree(g, rng);
        ASSERT_TRUE(is_spanning_tree(g, tree));
        const auto r = complete_dashing(g, zero_on(tree));
        ASSERT_TRUE(r.complete());
        EXPECT_TRUE(validate_dashing(g, r.assignment).ok());
        for (const auto& [e, bit] : r.assignment.bits()) {
            auto flipped = r.assignment;
            flipped.set(e, !bit);
            EXPECT_FALSE(validate_dashing(g, flipped).ok());
        }
    }
}

TEST(Completion, TreeBitsParametrizeAllValidDashings) {
    // Each of the 2^7 bit patterns on a 3-cube spanning tree completes to a
    // distinct valid dashing, and together they are every valid dashing.
    const auto g = build_hypercube(3);
    const auto valid = all_valid_dashings(g);
    EXPECT_EQ(valid.size(), 128u);
    std::mt19937_64 rng(47);
    const auto tree = random_spanning_tree(g, rng);
    std::set<std::string> completed;
    for (unsigned mask = 0; mask < 128; ++mask) {
        DashingAssignment d;
        for (std::size_t i = 0; i < tree.size(); ++i) d.set(tree[i], (mask >> i) & 1);
        const auto r = complete_dashing(g, d);
        ASSERT_TRUE(r.complete());
        completed.insert(format_dashing(r.assignment));
    }
    std::set<std::string> expected;
    for (const auto& d : valid) expected.insert(format_dashing(d));
    EXPECT_EQ(completed, expected);
}

TEST(Completion, FourColorCycleLeavesK44Stuck) {
    // The only cycles of K_{4,4} that are not generated by quadrilaterals
    // carry all four colors, so a zero tree dashing cannot be completed.
    const auto g = build_quotient(fixtures::k44());
    std::mt19937_64 rng(53);
    const auto r = complete_dashing(g, zero_on(random_spanning_tree(g, rng)));
    EXPECT_EQ(r.status, CompletionStatus::Stuck);
    EXPECT_FALSE(r.unknown_edges.empty());
}

TEST(Validate, IncompleteRejected) {
    const auto g = build_hypercube(2);
    auto es = edges(g);
    es.pop_back();
    EXPECT_THROW(validate_dashing(g, zero_on(es)), Error);
}

TEST(Validate, UniformDashings) {
    const auto g = build_hypercube(2);
    EXPECT_EQ(validate_dashing(g, uniform_dashing(edges(g), false)).even_quadrilaterals.size(), 1u);
    EXPECT_EQ(validate_dashing(g, uniform_dashing(edges(g), true)).even_quadrilaterals.size(), 1u);
}

TEST(SpanningTree, Checks) {
    const auto g = build_hypercube(2);
    auto es = edges(g);
    EXPECT_FALSE(is_spanning_tree(g, es));
    es.pop_back();
    EXPECT_TRUE(is_spanning_tree(g, es));
    EXPECT_FALSE(is_spanning_tree(g, {es[0], es[0], es[1]}));
}

TEST(SpanningTree, SeededGeneratorIsReproducible) {
    const auto g = build_hypercube(4);
    std::mt19937_64 a(5), b(5);
    EXPECT_EQ(random_spanning_tree(g, a), random_spanning_tree(g, b));
}

TEST(Baobab, K44TreePlusFourColorCycle) {
    const auto g = build_quotient(fixtures::k44());
    std::mt19937_64 rng(59);
    CandidateBaobab b{random_spanning_tree(g, rng), {walk(g, 0, {0, 1, 2, 3})}};
    const auto report = check_baobab(g, b);
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.violations().empty());
}

TEST(Baobab, QuadrilateralCycleHasTooFewOddColors) {
    const auto g = build_quotient(fixtures::k44());
    std::mt19937_64 rng(61);
    CandidateBaobab b{random_spanning_tree(g, rng), {walk(g, 0, {0, 1, 0, 1})}};
    const auto report = check_baobab(g, b);
    EXPECT_FALSE(report.ok());
    EXPECT_EQ(report.few_odd_colors, std::vector<std::size_t>{0});
    EXPECT_EQ(report.violations().size(), 1u);
}

TEST(Baobab, StructuralViolations) {
    const auto g = build_quotient(fixtures::e8());
    std::mt19937_64 rng(67);
    const auto tree = random_spanning_tree(g, rng);

    // Wrong cycle count and a broken walk.
    auto broken = walk(g, 0, {0, 1, 2, 3});
    broken.pop_back();
    const auto r1 = check_baobab(g, {tree, {broken}});
    EXPECT_FALSE(r1.cycle_count);
    EXPECT_EQ(r1.not_closed_walks, std::vector<std::size_t>{0});

    // Four cycles sharing all colors have no private color.
    const std::vector<int> colors{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<std::vector<Edge>> cycles(4, walk(g, 0, colors));
    const auto r2 = check_baobab(g, {tree, cycles});
    EXPECT_TRUE(r2.cycle_count);
    EXPECT_TRUE(r2.not_closed_walks.empty());
    EXPECT_EQ(r2.no_private_color.size(), 4u);

    auto short_tree = tree;
    short_tree.pop_back();
    EXPECT_FALSE(check_baobab(g, {short_tree, cycles}).spanning_tree);
}

TEST(DashingFile, RoundTrip) {
    const auto g = build_hypercube(2);
    auto es = edges(g);
    es.pop_back();
    const auto r = complete_dashing(g, zero_on(es));
    const std::string text = format_dashing(r.assignment);
    EXPECT_EQ(text, "0 1 2 0\n0 2 1 0\n1 3 1 0\n2 3 2 1\n");
    EXPECT_EQ(parse_dashing(text), r.assignment);
    EXPECT_EQ(parse_dashing("# comment\n\n1 0 2 0\n"), parse_dashing("0 1 2 0"));
}

TEST(DashingFile, Malformed) {
    EXPECT_THROW(parse_dashing("0 1 2"), Error);
    EXPECT_THROW(parse_dashing("0 1 0 1"), Error);
    EXPECT_THROW(parse_dashing("0 1 1 2"), Error);
    EXPECT_THROW(parse_dashing("0 1 1 1 9"), Error);
    EXPECT_THROW(parse_dashing("a b c d"), Error);
}
