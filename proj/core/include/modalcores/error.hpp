#pragma once

#include <stdexcept>
#include <string>

namespace mcores {

// Error categories. The CLI maps these onto exit codes: Io -> 1,
// Config -> 2, Data -> 3.
enum class ErrorKind {
    IoError,
    ParseError,
    EmptyDataset,
    InvalidK,
    InvalidDimension,
    InvalidDelta,
    TooFewPoints,
    ZeroRadius,
    DuplicateNode,
    InactiveNode,
    InvalidConfig,
    NoEstimates,
    EmptySet,
    LengthMismatch,
    InvalidSpec,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::InvalidK: return "InvalidK";
        case ErrorKind::InvalidDimension: return "InvalidDimension";
        case ErrorKind::InvalidDelta: return "InvalidDelta";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::ZeroRadius: return "ZeroRadius";
        case ErrorKind::DuplicateNode: return "DuplicateNode";
        case ErrorKind::InactiveNode: return "InactiveNode";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::NoEstimates: return "NoEstimates";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
    }
    return "Error";
}

}  // namespace mcores
