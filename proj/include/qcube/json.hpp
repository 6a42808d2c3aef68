#pragma once

// JSON views of library results. Field order is fixed (ordered_json) and
// big counts are decimal strings. Generator, column and color indices are
// 1-based here; vertex indices stay 0-based.

#include "qcube/codes.hpp"
#include "qcube/counting.hpp"
#include "qcube/dashing.hpp"
#include "qcube/spectrum.hpp"
#include "qcube/thermo.hpp"

#include <json.hpp>

namespace qcube::json {

using Json = nlohmann::ordered_json;

inline Json eigenvalues(const SpectrumTable& s) {
    Json arr = Json::array();
    for (const auto& [lambda, mult] : s.entries()) arr.push_back({{"lambda", lambda}, {"multiplicity", mult}});
    return arr;
}

inline Json spectrum(const GeneratorMatrix& code, const SpectrumTable& s) {
    return {{"n", code.n()}, {"k", code.k()}, {"eigenvalues", eigenvalues(s)}};
}

inline Json code_summary(const GeneratorMatrix& code) {
    Json rows = Json::array();
    for (Word r : code.rows()) rows.push_back(format_word(r, code.length()));
    return {{"N", code.length()}, {"n", code.n()}, {"k", code.k()}, {"kmax", kmax(code.length())}, {"generators", rows}};
}

inline Json validation(const ValidationReport& r) {
    Json bad_words = Json::array();
    for (Word w : r.bad_span_words) bad_words.push_back(format_word(w, r.length));
    Json bad_rows = Json::array();
    for (int i : r.bad_row_weights) bad_rows.push_back(i + 1);
    Json overlaps = Json::array();
    for (auto [i, j] : r.odd_overlaps) overlaps.push_back({i + 1, j + 1});
    Json dependent = Json::array();
    for (int i : r.dependent_rows) dependent.push_back(i + 1);
    return {{"N", r.length},
            {"n", r.length - r.k},
            {"k", r.k},
            {"rank", r.rank},
            {"kmax", r.kmax},
            {"doubly_even", r.doubly_even()},
            {"independent", r.independent()},
            {"within_kmax", r.within_kmax()},
            {"ok", r.ok() && r.within_kmax()},
            {"span_scanned", r.span_scanned},
            {"bad_span_words", bad_words},
            {"bad_row_weights", bad_rows},
            {"odd_overlaps", overlaps},
            {"dependent_rows", dependent}};
}

inline Json rational(const ExactRational& q) {
    return {{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

inline Json bounds(const BaobabBounds& b) {
    Json skipped = Json::array();
    for (GeneratorSubset s : b.skipped_wedges) {
        Json idx = Json::array();
        for (int i : subset_indices(s)) idx.push_back(i + 1);
        skipped.push_back(idx);
    }
    return {{"trees", b.trees.str()},
            {"naive", b.naive.str()},
            {"lower", rational(b.lower)},
            {"upper", rational(b.upper)},
            {"skipped_wedges", skipped}};
}

inline Json entropy(const EntropyReport& e, const LatentHeat& heat) {
    return {{"k_b", e.k_b},
            {"s_lower", e.s_lower},
            {"s_upper", e.s_upper},
            {"s_approx", e.s_approx},
            {"delta_q_min_at_T", {{"T", heat.temperature}, {"q", heat.delta_q}}}};
}

inline Json edge(const Edge& e) { return Json::array({e.u, e.v, e.color + 1}); }

inline Json quadrilateral(const Quadrilateral& q) {
    return {{"colors", {q.color_i + 1, q.color_j + 1}},
            {"vertices", {q.vertices[0], q.vertices[1], q.vertices[2], q.vertices[3]}}};
}

inline Json completion_failure(const CompletionResult& r) {
    Json out = {{"status", std::string(to_string(r.status))}, {"known_edges", r.assignment.size()}};
    if (r.status == CompletionStatus::Stuck) {
        Json unknown = Json::array();
        for (const auto& e : r.unknown_edges) unknown.push_back(edge(e));
        out["unknown_edges"] = unknown;
    } else if (r.conflict) {
        out["quadrilateral"] = quadrilateral(*r.conflict);
    }
    return out;
}

} // namespace qcube::json
