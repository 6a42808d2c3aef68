#pragma once

// Laplacian spectra of quotient hypercubes.
//
// The characters f_u(v) = (-1)^{u.v} with u orthogonal to the code are
// well defined on cosets and satisfy L f_u = 2 wt(u) f_u, so the spectrum is
// the weight distribution of the dual code scaled by two. Three routes are
// provided: that closed form, the same words split by private-column hits
// into an (m, p) table, and a dense numeric eigensolve.

#include "qcube/codes.hpp"
#include "qcube/error.hpp"
#include "qcube/quotient_graph.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qcube {

inline constexpr int kMaxClosedFormN = kMaxEnumerationRank;
inline constexpr std::size_t kMaxNumericVertices = 4096;

/// Exact eigenvalue -> multiplicity table. Eigenvalues are even integers.
class SpectrumTable {
public:
    using Map = std::map<long, std::uint64_t>;

    SpectrumTable() = default;
    explicit SpectrumTable(Map entries) {
        for (auto [lambda, mult] : entries)
            if (mult > 0) entries_[lambda] = mult;
    }

    void add(long lambda, std::uint64_t mult) {
        if (mult > 0) entries_[lambda] += mult;
    }

    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    std::uint64_t multiplicity(long lambda) const {
        auto it = entries_.find(lambda);
        return it == entries_.end() ? 0 : it->second;
    }

    std::uint64_t total_multiplicity() const noexcept {
        std::uint64_t s = 0;
        for (const auto& [lambda, mult] : entries_) s += mult;
        return s;
    }

    /// Sum of eigenvalues with multiplicity, i.e. trace(L).
    std::uint64_t trace() const noexcept {
        std::uint64_t s = 0;
        for (const auto& [lambda, mult] : entries_) s += static_cast<std::uint64_t>(lambda) * mult;
        return s;
    }

    long max_eigenvalue() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

    friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;
    friend auto operator<=>(const SpectrumTable&, const SpectrumTable&) = default;

private:
    Map entries_;
};

/// True iff the table could be the Laplacian spectrum of a connected
/// N-regular graph on 2^n vertices.
inline bool satisfies_spectrum_invariants(const SpectrumTable& s, int n, int length) {
    const std::uint64_t V = std::uint64_t{1} << n;
    if (s.total_multiplicity() != V) return false;
    if (s.trace() != static_cast<std::uint64_t>(length) * V) return false;
    if (s.multiplicity(0) != 1) return false;
    for (const auto& [lambda, mult] : s.entries())
        if (lambda < 0 || lambda % 2 != 0 || lambda > 2L * length) return false;
    return true;
}

/// Eigenvalue 2w with multiplicity A_w of the dual code.
inline SpectrumTable spectrum_closed_form(const GeneratorMatrix& code, unsigned threads = 1) {
    require_doubly_even(code);
    if (code.n() > kMaxClosedFormN)
        throw Error(Errc::NTooLarge, "closed form limited to n <= " + std::to_string(kMaxClosedFormN));
    const auto dist = weight_distribution(dual(code), threads);
    SpectrumTable table;
    for (std::size_t w = 0; w < dist.size(); ++w) table.add(2 * static_cast<long>(w), dist[w]);
    return table;
}

/// Counts of dual words u split by m + p = wt(u), where p is the number of
/// generators whose private column is set in u. Eigenvalue is 2(m + p).
using MultiplicityTable = std::map<std::pair<int, int>, std::uint64_t>;

inline MultiplicityTable multiplicity_table(const GeneratorMatrix& code) {
    require_doubly_even(code);
    if (code.n() > kMaxClosedFormN)
        throw Error(Errc::NTooLarge, "multiplicity table limited to n <= " + std::to_string(kMaxClosedFormN));
    const NormalizedCode normal = normalize_private_columns(code);
    Word private_mask = 0;
    for (int c : normal.private_columns) private_mask |= column_bit(code.length(), c);

    const GeneratorMatrix d = dual(normal.code);
    const auto rows = d.rows();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>((code.length() + 1) * (code.k() + 1)), 0);
    const auto tally = [&](Word u) {
        const int p = weight(u & private_mask);
        const int m = weight(u) - p;
        ++counts[static_cast<std::size_t>(m * (code.k() + 1) + p)];
    };
    Word u = 0;
    tally(u);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << rows.size()); ++i) {
        u ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        tally(u);
    }

    MultiplicityTable table;
    for (int m = 0; m <= code.length(); ++m)
        for (int p = 0; p <= code.k(); ++p)
            if (auto c = counts[static_cast<std::size_t>(m * (code.k() + 1) + p)]) table[{m, p}] = c;
    return table;
}

/// Collapses an (m, p) table onto eigenvalues 2(m + p).
inline SpectrumTable anti_diagonal_sums(const MultiplicityTable& table) {
    SpectrumTable s;
    for (const auto& [mp, count] : table) s.add(2L * (mp.first + mp.second), count);
    return s;
}

/// Dense symmetric eigensolve of the Laplacian. Every eigenvalue must lie
/// within `tol` of an even integer.
inline SpectrumTable spectrum_numeric(const QuotientGraph& g, double tol = 1e-8) {
    if (g.vertex_count() > kMaxNumericVertices)
        throw Error(Errc::TooLarge, "numeric spectrum limited to " + std::to_string(kMaxNumericVertices) + " vertices");
    const Eigen::MatrixXd L = laplacian(g).cast<double>();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(Errc::ResidualTooLarge, "eigensolver did not converge");

    SpectrumTable table;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        const double nearest = 2.0 * std::round(lambda / 2.0);
        if (std::abs(lambda - nearest) > tol)
            throw Error(Errc::ResidualTooLarge, "eigenvalue " + std::to_string(lambda) + " is not an even integer");
        table.add(static_cast<long>(nearest), 1);
    }
    return table;
}

/// max_v |(L f_u)(v) - 2 wt(u) f_u(v)| for the character f_u(v) = (-1)^{u.v}.
/// u must be orthogonal to the code for f_u to be defined on cosets.
inline double eigenvector_residual(const QuotientGraph& g, Word u) {
    const auto f = [&](VertexIndex v) { return (weight(u & g.representative(v)) & 1) ? -1.0 : 1.0; };
    const double lambda = 2.0 * weight(u);
    double worst = 0.0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        double lf = g.length() * f(v);
        for (int c = 0; c < g.length(); ++c) lf -= f(g.neighbor(v, c));
        worst = std::max(worst, std::abs(lf - lambda * f(v)));
    }
    return worst;
}

/// Adjacency eigenvalues N - lambda of an N-regular graph.
inline std::map<long, std::uint64_t> adjacency_spectrum(const SpectrumTable& s, int length) {
    std::map<long, std::uint64_t> out;
    for (const auto& [lambda, mult] : s.entries()) out[length - lambda] += mult;
    return out;
}

/// Eigenvalue of largest multiplicity; ties go to the smaller eigenvalue.
inline long spectral_mode(const SpectrumTable& s) {
    long best = 0;
    std::uint64_t best_mult = 0;
    for (const auto& [lambda, mult] : s.entries())
        if (mult > best_mult) {
            best = lambda;
            best_mult = mult;
        }
    return best;
}

inline bool cospectral(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return spectrum_closed_form(a) == spectrum_closed_form(b);
}

struct SpectralGroup {
    SpectrumTable spectrum;
    /// Column-permutation classes of input positions within this group.
    std::vector<std::vector<std::size_t>> classes;

    /// Cospectral but permutation-inequivalent codes are present.
    bool witness() const noexcept { return classes.size() >= 2; }
};

/// Groups codes by spectrum, then splits each group by column-permutation
/// equivalence. Groups appear in order of first occurrence.
inline std::vector<SpectralGroup> meta_equivalence_scan(const std::vector<GeneratorMatrix>& codes) {
    for (const auto& c : codes)
        if (c.length() != codes.front().length()) throw Error(Errc::LengthMismatch, "codes have different lengths");

    std::vector<SpectralGroup> groups;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const SpectrumTable s = spectrum_closed_form(codes[i]);
        auto g = std::find_if(groups.begin(), groups.end(), [&](const SpectralGroup& x) { return x.spectrum == s; });
        if (g == groups.end()) {
            groups.push_back({s, {{i}}});
            continue;
        }
        auto cls = std::find_if(g->classes.begin(), g->classes.end(), [&](const std::vector<std::size_t>& members) {
            return column_permutation_equivalent(codes[members.front()], codes[i]);
        });
        if (cls == g->classes.end())
            g->classes.push_back({i});
        else
            cls->push_back(i);
    }
    return groups;
}

} // namespace qcube
