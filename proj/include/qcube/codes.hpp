#pragma once

// Binary linear codes over GF(2), stored one machine word per codeword.
//
// Column c (0 = leftmost character of the textual form) lives in bit
// (length - 1 - c), so comparing words as integers is the same as comparing
// their strings lexicographically.

#include "qcube/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace qcube {

using Word = std::uint32_t;

inline constexpr int kMaxLength = 32;
inline constexpr int kMaxSpanRank = 20;
inline constexpr int kMaxEnumerationRank = 24;
inline constexpr int kMaxExactSearchLength = 12;

inline int weight(Word w) noexcept { return std::popcount(w); }

inline Word column_bit(int length, int column) noexcept {
    return Word{1} << (length - 1 - column);
}

inline Word length_mask(int length) noexcept {
    return length >= 32 ? ~Word{0} : (Word{1} << length) - 1;
}

/// Leftmost set column of a nonzero word.
inline int leading_column(Word w, int length) noexcept {
    return length - 1 - (31 - std::countl_zero(w));
}

inline std::string format_word(Word w, int length) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int c = 0; c < length; ++c)
        if (w & column_bit(length, c)) s[static_cast<std::size_t>(c)] = '1';
    return s;
}

/// A fixed-length binary vector.
class Codeword {
public:
    Codeword() = default;
    Codeword(Word bits, int length) : bits_(bits & length_mask(length)), length_(length) {}

    Word bits() const noexcept { return bits_; }
    int length() const noexcept { return length_; }
    int weight() const noexcept { return qcube::weight(bits_); }
    bool column(int c) const noexcept { return (bits_ & column_bit(length_, c)) != 0; }
    std::string to_string() const { return format_word(bits_, length_); }

    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend auto operator<=>(const Codeword&, const Codeword&) = default;

private:
    Word bits_ = 0;
    int length_ = 0;
};

/// k generator rows of common length N = n + k. Rows are kept in input order;
/// the order matters for reporting generator indices but never for the span.
class GeneratorMatrix {
public:
    GeneratorMatrix() = default;

    GeneratorMatrix(int length, std::vector<Word> rows) : length_(length), rows_(std::move(rows)) {
        if (length < 1 || length > kMaxLength)
            throw Error(Errc::LengthTooLarge, "code length must lie in 1.." + std::to_string(kMaxLength));
        for (Word r : rows_)
            if (r & ~length_mask(length))
                throw Error(Errc::RaggedRows, "row has bits beyond column " + std::to_string(length));
    }

    /// Rows given as '0'/'1' strings.
    static GeneratorMatrix from_strings(int length, const std::vector<std::string>& rows);

    int length() const noexcept { return length_; }
    int k() const noexcept { return static_cast<int>(rows_.size()); }
    int n() const noexcept { return length_ - k(); }

    std::span<const Word> rows() const noexcept { return rows_; }
    Word row(std::size_t i) const { return rows_.at(i); }
    Codeword codeword(std::size_t i) const { return {rows_.at(i), length_}; }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    int length_ = 1;
    std::vector<Word> rows_;
};

// ---------------------------------------------------------------------------
// Parsing

/// Code file: one generator per line as a '0'/'1' string, '#' comment lines
/// and blank lines skipped. An all-zero row only fixes the length, so a file
/// holding "0000" is the empty code on four coordinates.
inline GeneratorMatrix parse_code(std::string_view text) {
    std::vector<std::string> rows;
    int length = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line.front() == '#') continue;

        for (char ch : line)
            if (ch != '0' && ch != '1')
                throw Error(Errc::NonBinaryCharacter,
                            "line " + std::to_string(line_no) + ": unexpected character '" + std::string(1, ch) + "'");
        if (length < 0) {
            length = static_cast<int>(line.size());
        } else if (static_cast<int>(line.size()) != length) {
            throw Error(Errc::RaggedRows, "line " + std::to_string(line_no) + " has length " +
                                              std::to_string(line.size()) + ", expected " + std::to_string(length));
        }
        rows.emplace_back(line);
    }
    if (rows.empty()) throw Error(Errc::EmptyInput, "no codeword rows found");
    if (length > kMaxLength)
        throw Error(Errc::LengthTooLarge, "length " + std::to_string(length) + " exceeds " + std::to_string(kMaxLength));

    std::erase_if(rows, [](const std::string& r) { return r.find('1') == std::string::npos; });
    return GeneratorMatrix::from_strings(length, rows);
}

inline GeneratorMatrix GeneratorMatrix::from_strings(int length, const std::vector<std::string>& rows) {
    std::vector<Word> words;
    words.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != length)
            throw Error(Errc::RaggedRows, "row '" + r + "' does not have length " + std::to_string(length));
        Word w = 0;
        for (char ch : r) {
            if (ch != '0' && ch != '1') throw Error(Errc::NonBinaryCharacter, "row '" + r + "'");
            w = (w << 1) | static_cast<Word>(ch == '1');
        }
        words.push_back(w);
    }
    return GeneratorMatrix(length, std::move(words));
}

/// Inverse of parse_code. The empty code is written as a single all-zero row.
inline std::string format_code(const GeneratorMatrix& code) {
    std::string out;
    if (code.k() == 0) return std::string(static_cast<std::size_t>(code.length()), '0') + "\n";
    for (Word r : code.rows()) out += format_word(r, code.length()) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Row reduction

/// Reduced echelon basis. Each pivot is the highest set bit (leftmost column)
/// of its row and appears in no other row.
struct EchelonBasis {
    int length = 0;
    std::vector<Word> rows;
    std::vector<int> pivot_bits;

    int rank() const noexcept { return static_cast<int>(rows.size()); }

    Word pivot_mask() const noexcept {
        Word m = 0;
        for (int b : pivot_bits) m |= Word{1} << b;
        return m;
    }

    /// Clears every pivot bit of w. The result is the numerically (and
    /// lexicographically) smallest element of w + span.
    Word reduce(Word w) const noexcept {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (w & (Word{1} << pivot_bits[i])) w ^= rows[i];
        return w;
    }

    bool contains(Word w) const noexcept { return reduce(w) == 0; }
};

inline EchelonBasis echelon(int length, std::span<const Word> input) {
    EchelonBasis basis;
    basis.length = length;
    for (Word w : input) {
        w = basis.reduce(w);
        if (w == 0) continue;
        const int pivot = 31 - std::countl_zero(w);
        for (Word& r : basis.rows)
            if (r & (Word{1} << pivot)) r ^= w;
        basis.rows.push_back(w);
        basis.pivot_bits.push_back(pivot);
    }
    // Sort by pivot, highest first, so the basis is canonical for the span.
    std::vector<std::size_t> order(basis.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return basis.pivot_bits[a] > basis.pivot_bits[b]; });
    EchelonBasis sorted;
    sorted.length = length;
    for (std::size_t i : order) {
        sorted.rows.push_back(basis.rows[i]);
        sorted.pivot_bits.push_back(basis.pivot_bits[i]);
    }
    return sorted;
}

inline EchelonBasis echelon(const GeneratorMatrix& code) { return echelon(code.length(), code.rows()); }

inline int rank(const GeneratorMatrix& code) { return echelon(code).rank(); }

// ---------------------------------------------------------------------------
// Span, dual, weights

/// All XOR combinations of the rows, sorted ascending, without duplicates.
inline std::vector<Word> span(const GeneratorMatrix& code) {
    if (code.k() > kMaxSpanRank)
        throw Error(Errc::KTooLarge, "span enumeration limited to k <= " + std::to_string(kMaxSpanRank));
    const auto rows = code.rows();
    std::vector<Word> words;
    words.reserve(std::size_t{1} << rows.size());
    Word w = 0;
    words.push_back(w);
    for (std::uint32_t i = 1; i < (std::uint32_t{1} << rows.size()); ++i) {
        w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

/// Basis of the orthogonal complement, one row per non-pivot column.
inline GeneratorMatrix dual(const GeneratorMatrix& code) {
    const EchelonBasis basis = echelon(code);
    const Word pivots = basis.pivot_mask();
    std::vector<Word> rows;
    for (int c = 0; c < code.length(); ++c) {
        const int bit = code.length() - 1 - c;
        if (pivots & (Word{1} << bit)) continue;
        Word u = Word{1} << bit;
        for (std::size_t i = 0; i < basis.rows.size(); ++i)
            if (basis.rows[i] & (Word{1} << bit)) u |= Word{1} << basis.pivot_bits[i];
        rows.push_back(u);
    }
    return GeneratorMatrix(code.length(), std::move(rows));
}

namespace detail {

inline void tally_weights(std::span<const Word> rows, std::uint64_t prefix_index, int low_bits,
                          std::vector<std::uint64_t>& counts) {
    Word w = 0;
    for (std::size_t j = 0; j < rows.size() - static_cast<std::size_t>(low_bits); ++j)
        if (prefix_index & (std::uint64_t{1} << j)) w ^= rows[static_cast<std::size_t>(low_bits) + j];
    ++counts[static_cast<std::size_t>(weight(w))];
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << low_bits); ++i) {
        w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        ++counts[static_cast<std::size_t>(weight(w))];
    }
}

} // namespace detail

/// A_w = number of span elements of weight w, for w = 0..N. Rows must be
/// independent for the counts to describe the code (otherwise each element
/// is counted once per representation).
///
/// The 2^k combinations may be split over `threads` workers; partial tallies
/// are summed, so the result does not depend on the split.
inline std::vector<std::uint64_t> weight_distribution(const GeneratorMatrix& code, unsigned threads = 1) {
    const int k = code.k();
    if (k > kMaxEnumerationRank)
        throw Error(Errc::KTooLarge, "weight enumeration limited to k <= " + std::to_string(kMaxEnumerationRank));
    const auto rows = code.rows();
    const std::size_t slots = static_cast<std::size_t>(code.length()) + 1;

    int split_bits = 0;
    while ((1u << (split_bits + 1)) <= std::max(threads, 1u) && split_bits + 1 <= k - 8) ++split_bits;
    const int low_bits = k - split_bits;
    const std::size_t parts = std::size_t{1} << split_bits;

    std::vector<std::vector<std::uint64_t>> partial(parts, std::vector<std::uint64_t>(slots, 0));
    if (parts == 1) {
        detail::tally_weights(rows, 0, low_bits, partial[0]);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t p = 0; p < parts; ++p)
            workers.emplace_back([&, p] { detail::tally_weights(rows, p, low_bits, partial[p]); });
    }
    std::vector<std::uint64_t> total(slots, 0);
    for (const auto& part : partial)
        for (std::size_t w = 0; w < slots; ++w) total[w] += part[w];
    return total;
}

// ---------------------------------------------------------------------------
// Doubly even validation

struct ValidationReport {
    int length = 0;
    int k = 0;
    int rank = 0;
    int kmax = 0;
    /// Span elements whose weight is not a multiple of four (full-span scan).
    std::vector<Word> bad_span_words;
    bool span_scanned = false;
    /// Generator-level criterion: rows of weight not 0 mod 4 ...
    std::vector<int> bad_row_weights;
    /// ... and row pairs whose supports overlap in an odd number of columns.
    std::vector<std::pair<int, int>> odd_overlaps;
    /// Rows that lie in the span of the rows before them.
    std::vector<int> dependent_rows;

    bool doubly_even() const noexcept { return bad_row_weights.empty() && odd_overlaps.empty(); }
    bool independent() const noexcept { return dependent_rows.empty(); }
    bool ok() const noexcept { return doubly_even() && independent(); }
    bool within_kmax() const noexcept { return k <= kmax; }
};

inline int kmax(int length);

/// Checks the doubly even property both by scanning the span and by the
/// generator criterion (row weights 0 mod 4, pairwise overlaps even). The two
/// must agree; a disagreement is an internal error.
inline ValidationReport validate_doubly_even(const GeneratorMatrix& code) {
    ValidationReport report;
    report.length = code.length();
    report.k = code.k();
    report.kmax = kmax(code.length());

    const auto rows = code.rows();
    for (int i = 0; i < code.k(); ++i) {
        if (weight(rows[static_cast<std::size_t>(i)]) % 4 != 0) report.bad_row_weights.push_back(i);
        for (int j = i + 1; j < code.k(); ++j)
            if (weight(rows[static_cast<std::size_t>(i)] & rows[static_cast<std::size_t>(j)]) % 2 != 0)
                report.odd_overlaps.emplace_back(i, j);
    }

    EchelonBasis basis;
    basis.length = code.length();
    for (int i = 0; i < code.k(); ++i) {
        const EchelonBasis next = echelon(code.length(), rows.first(static_cast<std::size_t>(i) + 1));
        if (next.rank() == basis.rank()) report.dependent_rows.push_back(i);
        basis = next;
    }
    report.rank = basis.rank();

    if (basis.rank() <= kMaxSpanRank) {
        report.span_scanned = true;
        const GeneratorMatrix reduced(code.length(), basis.rows);
        for (Word w : span(reduced))
            if (weight(w) % 4 != 0) report.bad_span_words.push_back(w);
        if (report.bad_span_words.empty() != report.doubly_even())
            throw Error(Errc::CodeInvalid, "span scan and generator criterion disagree");
    }
    return report;
}

inline bool is_doubly_even_code(const GeneratorMatrix& code) { return validate_doubly_even(code).ok(); }

inline void require_doubly_even(const GeneratorMatrix& code) {
    const auto report = validate_doubly_even(code);
    if (!report.ok())
        throw Error(Errc::CodeInvalid, report.independent() ? "code is not doubly even"
                                                            : "generator rows are linearly dependent");
}

// ---------------------------------------------------------------------------
// Wedge weights

/// Weight of the bitwise AND of the selected rows (0-based indices).
inline int wedge_weight(const GeneratorMatrix& code, std::span<const int> indices) {
    if (indices.empty()) throw Error(Errc::EmptySubset, "wedge of an empty set of generators");
    Word acc = length_mask(code.length());
    for (int i : indices) {
        if (i < 0 || i >= code.k())
            throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i) + " out of range");
        acc &= code.row(static_cast<std::size_t>(i));
    }
    return weight(acc);
}

/// Subset of generator indices encoded as a bitmask (bit i = generator i).
using GeneratorSubset = std::uint32_t;

inline std::vector<int> subset_indices(GeneratorSubset s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1) out.push_back(i);
    return out;
}

/// Wedge weight of every nonempty generator subset.
inline std::map<GeneratorSubset, int> wedge_profile(const GeneratorMatrix& code) {
    if (code.k() > kMaxSpanRank) throw Error(Errc::KTooLarge, "wedge profile limited to k <= 20");
    std::map<GeneratorSubset, int> profile;
    const std::uint32_t count = std::uint32_t{1} << code.k();
    std::vector<Word> meet(count);
    meet[0] = length_mask(code.length());
    for (std::uint32_t s = 1; s < count; ++s) {
        const int low = std::countr_zero(s);
        meet[s] = meet[s & (s - 1)] & code.row(static_cast<std::size_t>(low));
        profile.emplace(s, weight(meet[s]));
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Private-column normal form

struct NormalizedCode {
    GeneratorMatrix code;
    /// private_columns[i]: a column where row i holds the only 1 (0-based).
    std::vector<int> private_columns;
};

namespace detail {

/// Smallest column in which `row` is the only generator with a 1, or -1.
inline int first_private_column(std::span<const Word> rows, std::size_t row, int length) {
    Word others = 0;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (j != row) others |= rows[j];
    const Word own = rows[row] & ~others;
    return own ? leading_column(own, length) : -1;
}

} // namespace detail

/// Row-reduces the generators until every row owns a private column: while
/// some row i has none, take its leftmost set column x and add row i to
/// every other row that has a 1 in column x.
inline NormalizedCode normalize_private_columns(const GeneratorMatrix& code) {
    std::vector<Word> rows(code.rows().begin(), code.rows().end());
    const int k = code.k();
    const std::uint64_t cap = k >= 31 ? UINT64_MAX : (std::uint64_t{1} << (2 * k));

    for (std::uint64_t step = 0;; ++step) {
        int missing = -1;
        for (int i = 0; i < k && missing < 0; ++i)
            if (detail::first_private_column(rows, static_cast<std::size_t>(i), code.length()) < 0) missing = i;
        if (missing < 0) break;
        if (step >= cap)
            throw Error(Errc::NormalizationDiverged, "no private-column form after " + std::to_string(cap) + " steps");

        const Word ri = rows[static_cast<std::size_t>(missing)];
        if (ri == 0) throw Error(Errc::NormalizationDiverged, "zero generator has no private column");
        const Word x = column_bit(code.length(), leading_column(ri, code.length()));
        for (int j = 0; j < k; ++j)
            if (j != missing && (rows[static_cast<std::size_t>(j)] & x)) rows[static_cast<std::size_t>(j)] ^= ri;
    }

    NormalizedCode out{GeneratorMatrix(code.length(), rows), {}};
    for (int i = 0; i < k; ++i)
        out.private_columns.push_back(detail::first_private_column(rows, static_cast<std::size_t>(i), code.length()));
    return out;
}

// ---------------------------------------------------------------------------
// Maximal dimension

/// Largest dimension of a doubly even code of length N = 8m + s.
inline int kmax(int length) {
    if (length < 1) throw Error(Errc::NonPositiveN, "length must be positive");
    const int m = length / 8;
    switch (length % 8) {
    case 4:
    case 5: return 4 * m + 1;
    case 6: return 4 * m + 2;
    case 7: return 4 * m + 3;
    default: return 4 * m;
    }
}

// ---------------------------------------------------------------------------
// Column permutations

/// perm[c] is the destination column of source column c.
inline Word permute_word(Word w, int length, std::span<const int> perm) {
    Word out = 0;
    for (int c = 0; c < length; ++c)
        if (w & column_bit(length, c)) out |= column_bit(length, perm[static_cast<std::size_t>(c)]);
    return out;
}

inline GeneratorMatrix permute_columns(const GeneratorMatrix& code, std::span<const int> perm) {
    std::vector<Word> rows;
    for (Word r : code.rows()) rows.push_back(permute_word(r, code.length(), perm));
    return GeneratorMatrix(code.length(), std::move(rows));
}

namespace detail {

using ColumnSignature = std::vector<int>;

/// For column c: how many span words of each weight have a 1 in column c.
inline std::vector<ColumnSignature> column_signatures(std::span<const Word> words, int length) {
    std::vector<ColumnSignature> sig(static_cast<std::size_t>(length), ColumnSignature(static_cast<std::size_t>(length) + 1, 0));
    for (Word w : words)
        for (int c = 0; c < length; ++c)
            if (w & column_bit(length, c)) ++sig[static_cast<std::size_t>(c)][static_cast<std::size_t>(weight(w))];
    return sig;
}

inline std::vector<Word> project(std::span<const Word> words, int length, std::span<const int> columns) {
    std::vector<Word> out;
    out.reserve(words.size());
    for (Word w : words) {
        Word p = 0;
        for (int c : columns) p = (p << 1) | static_cast<Word>((w & column_bit(length, c)) != 0);
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct PermutationSearch {
    int length;
    std::vector<Word> span_a, span_b;
    std::vector<ColumnSignature> sig_a, sig_b;
    std::vector<int> a_cols, b_cols;
    std::vector<bool> used;

    bool extend(int depth) {
        if (depth == length) return true;
        for (int cb = 0; cb < length; ++cb) {
            if (used[static_cast<std::size_t>(cb)] || sig_b[static_cast<std::size_t>(cb)] != sig_a[static_cast<std::size_t>(depth)]) continue;
            b_cols.push_back(cb);
            used[static_cast<std::size_t>(cb)] = true;
            a_cols.push_back(depth);
            if (project(span_a, length, a_cols) == project(span_b, length, b_cols) && extend(depth + 1)) return true;
            a_cols.pop_back();
            used[static_cast<std::size_t>(cb)] = false;
            b_cols.pop_back();
        }
        return false;
    }
};

} // namespace detail

/// True iff some column permutation maps span(a) onto span(b).
inline bool column_permutation_equivalent(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (a.length() != b.length()) throw Error(Errc::LengthMismatch, "codes have different lengths");
    if (a.length() > kMaxExactSearchLength)
        throw Error(Errc::NTooLargeForExactSearch,
                    "exact permutation search limited to N <= " + std::to_string(kMaxExactSearchLength));
    detail::PermutationSearch search{a.length(), span(a), span(b), {}, {}, {}, {}, {}};
    if (search.span_a.size() != search.span_b.size()) return false;

    search.sig_a = detail::column_signatures(search.span_a, a.length());
    search.sig_b = detail::column_signatures(search.span_b, a.length());
    auto sorted_a = search.sig_a;
    auto sorted_b = search.sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;

    search.used.assign(static_cast<std::size_t>(a.length()), false);
    return search.extend(0);
}

} // namespace qcube
