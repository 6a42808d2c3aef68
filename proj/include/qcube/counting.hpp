#pragma once

// Exact spanning-tree counts and baobab multiplicity bounds.

#include "qcube/codes.hpp"
#include "qcube/error.hpp"
#include "qcube/quotient_graph.hpp"
#include "qcube/spectrum.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <vector>

namespace qcube {

using BigCount = boost::multiprecision::mpz_int;
using ExactRational = boost::multiprecision::mpq_rational;

inline constexpr int kMaxHypercubeTreeN = 20;
inline constexpr std::size_t kMaxDeterminantVertices = 512;

inline BigCount power(const BigCount& base, std::uint64_t exponent) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline BigCount power_of_two(std::uint64_t exponent) {
    BigCount one = 1;
    return one << static_cast<unsigned>(exponent);
}

/// Matrix-Tree theorem: product of the nonzero eigenvalues over the vertex
/// count. A zero eigenvalue of multiplicity above one means a disconnected
/// graph and yields zero.
inline BigCount tree_count_from_spectrum(const SpectrumTable& s) {
    if (s.multiplicity(0) > 1) return 0;
    BigCount product = 1;
    for (const auto& [lambda, mult] : s.entries())
        if (lambda > 0) product *= power(BigCount(lambda), mult);
    const BigCount vertices = BigCount(s.total_multiplicity());
    if (vertices == 0 || product % vertices != 0)
        throw Error(Errc::InexactDivision, "eigenvalue product is not divisible by the vertex count");
    return product / vertices;
}

/// (1 / 2^n) * prod_{j=1..n} (2j)^C(n,j).
inline BigCount tree_count_hypercube(int n) {
    if (n < 1 || n > kMaxHypercubeTreeN)
        throw Error(Errc::OutOfRange, "hypercube tree count needs 1 <= n <= " + std::to_string(kMaxHypercubeTreeN));
    BigCount product = 1;
    std::uint64_t binom = 1;
    for (int j = 1; j <= n; ++j) {
        binom = binom * static_cast<std::uint64_t>(n - j + 1) / static_cast<std::uint64_t>(j);
        product *= power(BigCount(2 * j), binom);
    }
    return product >> static_cast<unsigned>(n);
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// `a` is row-major, size x size, and is consumed.
inline BigCount bareiss_determinant(std::vector<BigCount> a, std::size_t size) {
    if (size == 0) return 1;
    const auto at = [&](std::size_t i, std::size_t j) -> BigCount& { return a[i * size + j]; };
    BigCount previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == size) return 0;
            for (std::size_t j = 0; j < size; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        const BigCount& pivot = at(k, k);
        for (std::size_t i = k + 1; i < size; ++i) {
            const BigCount lead = at(i, k);
            for (std::size_t j = k + 1; j < size; ++j) {
                BigCount& cell = at(i, j);
                if (lead == 0)
                    cell *= pivot;
                else
                    cell = pivot * cell - lead * at(k, j);
                cell /= previous;
            }
            at(i, k) = 0;
        }
        previous = pivot;
    }
    BigCount det = at(size - 1, size - 1);
    return sign < 0 ? BigCount(-det) : det;
}

/// Kirchhoff: determinant of the Laplacian with row and column 0 removed.
inline BigCount tree_count_determinant(const QuotientGraph& g) {
    if (g.vertex_count() > kMaxDeterminantVertices)
        throw Error(Errc::TooLarge, "determinant oracle limited to " + std::to_string(kMaxDeterminantVertices) + " vertices");
    const LaplacianMatrix L = laplacian(g);
    const std::size_t m = g.vertex_count() - 1;
    std::vector<BigCount> minor(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            minor[i * m + j] = L(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(j + 1));
    return bareiss_determinant(std::move(minor), m);
}

struct BaobabBounds {
    BigCount trees;
    /// trees * 2^{(n-1)k}
    BigCount naive;
    /// naive / ceil((2^n + k - 1) / k)^k; equal to naive when k = 0.
    ExactRational lower;
    /// naive / prod over nonempty generator subsets S of wedge(S)^{(-1)^{|S|-1}}.
    ExactRational upper;
    /// The inclusion-exclusion wedge product itself.
    ExactRational wedge_product;
    /// Subsets whose wedge weight is zero; their factors are left out.
    std::vector<GeneratorSubset> skipped_wedges;

    BigCount lower_floor() const { return boost::multiprecision::numerator(lower) / boost::multiprecision::denominator(lower); }
    bool upper_integral() const { return boost::multiprecision::denominator(upper) == 1; }
};

inline BaobabBounds baobab_bounds(const GeneratorMatrix& code, const SpectrumTable& s) {
    const int n = code.n();
    const int k = code.k();
    BaobabBounds b;
    b.trees = tree_count_from_spectrum(s);
    b.naive = b.trees * power_of_two(static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(k));

    if (k == 0) {
        b.lower = ExactRational(b.naive);
    } else {
        // ceil((2^n + k - 1) / k)
        const BigCount numerator = power_of_two(static_cast<std::uint64_t>(n)) + (k - 1);
        const BigCount cycle = (numerator + (k - 1)) / k;
        b.lower = ExactRational(b.naive, power(cycle, static_cast<std::uint64_t>(k)));
    }

    BigCount num = 1, den = 1;
    for (const auto& [subset, w] : wedge_profile(code)) {
        if (w == 0) {
            b.skipped_wedges.push_back(subset);
            continue;
        }
        if (std::popcount(subset) % 2 == 1)
            num *= w;
        else
            den *= w;
    }
    b.wedge_product = ExactRational(num, den);
    b.upper = ExactRational(b.naive) / b.wedge_product;
    return b;
}

} // namespace qcube
