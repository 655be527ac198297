#pragma once

#include <stdexcept>
#include <string>

namespace e7f {

enum class ErrorKind {
    DivisionByZero,
    NotTraceless,
    ExactFieldOverflow,
    DimensionMismatch,
    NotClosed,
    NotSubalgebra,
    PeriodMismatch,
    StructureMismatch,
    NotCommuting,
    NotDiagonalizable,
    WrongType,
    NotUnitary,
    NotRepresentable,
    OutOfRange,
    ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotTraceless: return "NotTraceless";
        case ErrorKind::ExactFieldOverflow: return "ExactFieldOverflow";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotSubalgebra: return "NotSubalgebra";
        case ErrorKind::PeriodMismatch: return "PeriodMismatch";
        case ErrorKind::StructureMismatch: return "StructureMismatch";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
        case ErrorKind::WrongType: return "WrongType";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotRepresentable: return "NotRepresentable";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace e7f
