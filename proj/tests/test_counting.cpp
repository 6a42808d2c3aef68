#include "qcube/counting.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcube;

namespace {

BigCount trees_of(const GeneratorMatrix& code) { return tree_count_from_spectrum(spectrum_closed_form(code)); }

} // namespace

TEST(TreeCount, BruteForceOracleOnTinyGraphs) {
    // Spanning trees counted by trying every edge subset of size V - 1.
    EXPECT_EQ(oracle::all_spanning_trees(build_hypercube(2)).size(), 4u);
    EXPECT_EQ(oracle::all_spanning_trees(build_hypercube(3)).size(), 384u);
    EXPECT_EQ(oracle::all_spanning_trees(build_quotient(fixtures::k44())).size(), 4096u);
}

TEST(TreeCount, FromSpectrumExamples) {
    EXPECT_EQ(trees_of(fixtures::hypercube_code(2)), 4);
    EXPECT_EQ(trees_of(fixtures::hypercube_code(3)), 384);
    EXPECT_EQ(trees_of(fixtures::k44()), 4096);
}

TEST(TreeCount, InexactDivisionIsAnError) {
    // Eigenvalues {0, 3}: product 3 over 2 vertices.
    const SpectrumTable bogus(SpectrumTable::Map{{0, 1}, {3, 1}});
    EXPECT_THROW(tree_count_from_spectrum(bogus), Error);
}

TEST(TreeCount, DisconnectedSpectrumGivesZero) {
    const SpectrumTable two_points(SpectrumTable::Map{{0, 2}});
    EXPECT_EQ(tree_count_from_spectrum(two_points), 0);
}

TEST(TreeCount, HypercubeClosedForm) {
    EXPECT_EQ(tree_count_hypercube(2), 4);
    EXPECT_EQ(tree_count_hypercube(3), 384);
    // (1/16) * 2^4 * 4^6 * 6^4 * 8^1
    EXPECT_EQ(tree_count_hypercube(4), 42467328);
    EXPECT_THROW(tree_count_hypercube(0), Error);
    EXPECT_THROW(tree_count_hypercube(21), Error);
}

TEST(TreeCount, HypercubeClosedFormMatchesSpectrum) {
    for (int n = 1; n <= 14; ++n) EXPECT_EQ(tree_count_hypercube(n), trees_of(fixtures::hypercube_code(n))) << n;
}

TEST(TreeCount, DeterminantExamples) {
    EXPECT_EQ(tree_count_determinant(build_hypercube(1)), 1);
    EXPECT_EQ(tree_count_determinant(build_hypercube(3)), 384);
    EXPECT_EQ(tree_count_determinant(build_quotient(fixtures::k44())), 4096);
    EXPECT_EQ(tree_count_determinant(build_hypercube(4)), 42467328);
}

TEST(TreeCount, DeterminantTooLarge) { EXPECT_THROW(tree_count_determinant(build_hypercube(10)), Error); }

TEST(TreeCount, DeterminantAgreesWithSpectrumOnAllLengthSevenCodes) {
    for (const auto& code : oracle::all_doubly_even_codes(7)) {
        const BigCount t = trees_of(code);
        EXPECT_GT(t, 0);
        EXPECT_EQ(tree_count_determinant(build_quotient(code)), t) << format_code(code);
    }
}

TEST(Bareiss, SmallMatrices) {
    EXPECT_EQ(bareiss_determinant({2, 1, 1, 3}, 2), 5);
    // Zero leading pivot forces a row swap.
    EXPECT_EQ(bareiss_determinant({0, 1, 1, 0}, 2), -1);
    EXPECT_EQ(bareiss_determinant({1, 2, 2, 4}, 2), 0);
    EXPECT_EQ(bareiss_determinant({}, 0), 1);
}

TEST(BaobabBounds, HypercubeCollapses) {
    const auto code = fixtures::hypercube_code(3);
    const auto b = baobab_bounds(code, spectrum_closed_form(code));
    EXPECT_EQ(b.trees, 384);
    EXPECT_EQ(b.naive, 384);
    EXPECT_EQ(b.lower, ExactRational(384));
    EXPECT_EQ(b.upper, ExactRational(384));
    EXPECT_TRUE(b.skipped_wedges.empty());
}

TEST(BaobabBounds, K44) {
    const auto code = fixtures::k44();
    const auto b = baobab_bounds(code, spectrum_closed_form(code));
    EXPECT_EQ(b.naive, 16384);
    EXPECT_EQ(b.upper, ExactRational(4096));
    EXPECT_EQ(b.lower, ExactRational(2048));
    EXPECT_LE(b.lower, b.upper);
    EXPECT_TRUE(b.upper_integral());
    EXPECT_EQ(b.lower_floor(), 2048);
}

TEST(BaobabBounds, ZeroWedgesAreSkippedAndReported) {
    // Disjoint supports: wedge of {1,2} is empty.
    const auto code = parse_code("11110000\n00001111");
    const auto b = baobab_bounds(code, spectrum_closed_form(code));
    EXPECT_EQ(b.skipped_wedges, std::vector<GeneratorSubset>{0b11});
    EXPECT_EQ(b.wedge_product, ExactRational(16));
}

TEST(BaobabBounds, LowerUsesCeilingThenPower) {
    // n = 6, k = 2: ceil((64 + 1) / 2) = 33, squared.
    const auto code = parse_code("11110000\n00111100");
    const auto b = baobab_bounds(code, spectrum_closed_form(code));
    EXPECT_EQ(b.lower, ExactRational(b.naive, BigCount(33 * 33)));
    // Wedge product 4 * 4 / 2.
    EXPECT_EQ(b.wedge_product, ExactRational(8));
}

TEST(BaobabBounds, OrderingAndWedgeIdentityOnAllLengthEightCodes) {
    for (const auto& code : oracle::all_doubly_even_codes(8)) {
        const auto b = baobab_bounds(code, spectrum_closed_form(code));
        EXPECT_LE(b.lower, b.upper);
        EXPECT_EQ(b.lower == b.upper, code.k() == 0);
        // naive / upper reproduces the inclusion-exclusion wedge product.
        BigCount num = 1, den = 1;
        for (const auto& [subset, w] : wedge_profile(code)) {
            if (w == 0) continue;
            (std::popcount(subset) % 2 ? num : den) *= w;
        }
        EXPECT_EQ(ExactRational(b.naive) / b.upper, ExactRational(num, den));
    }
}
