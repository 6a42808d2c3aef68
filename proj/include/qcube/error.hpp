#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcube {

enum class Errc {
    EmptyInput,
    NonBinaryCharacter,
    RaggedRows,
    LengthTooLarge,
    KTooLarge,
    NTooLarge,
    IndexOutOfRange,
    EmptySubset,
    NormalizationDiverged,
    NonPositiveN,
    NTooLargeForExactSearch,
    LengthMismatch,
    CodeInvalid,
    TooLarge,
    ResidualTooLarge,
    InexactDivision,
    OutOfRange,
    NonPositiveBound,
    NegativeTemperature,
    SameColor,
    NotAnEdge,
    IncompleteAssignment,
    MalformedInput,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonBinaryCharacter: return "NonBinaryCharacter";
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::LengthTooLarge: return "LengthTooLarge";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::NormalizationDiverged: return "NormalizationDiverged";
    case Errc::NonPositiveN: return "NonPositiveN";
    case Errc::NTooLargeForExactSearch: return "NTooLargeForExactSearch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CodeInvalid: return "CodeInvalid";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NonPositiveBound: return "NonPositiveBound";
    case Errc::NegativeTemperature: return "NegativeTemperature";
    case Errc::SameColor: return "SameColor";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the Errc tags.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace qcube
