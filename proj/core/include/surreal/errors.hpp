#pragma once

#include <stdexcept>
#include <string>

namespace surreal {

/// Failure classes surfaced by the kernel. The CLI maps these onto exit
/// codes, so new kinds should be added to the mapping there as well.
enum class ErrorKind {
  ParseError,
  BudgetExceeded,
  EmptyCut,
  NotDyadic,
  NotOrdinal,
  NotFiniteLength,
  NotAChain,
  Undecidable,
  Unrepresentable,
  Unsupported,
  MissingBracket,
  NotSharp,
  NotPositive,
  DomainMismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::EmptyCut: return "empty cut";
    case ErrorKind::NotDyadic: return "not dyadic";
    case ErrorKind::NotOrdinal: return "not an ordinal";
    case ErrorKind::NotFiniteLength: return "not of finite length";
    case ErrorKind::NotAChain: return "not a chain";
    case ErrorKind::Undecidable: return "undecidable";
    case ErrorKind::Unrepresentable: return "not representable";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::MissingBracket: return "no induced bracket";
    case ErrorKind::NotSharp: return "not certified sharp";
    case ErrorKind::NotPositive: return "not positive";
    case ErrorKind::DomainMismatch: return "domain mismatch";
  }
  return "unknown error";
}

}  // namespace surreal
