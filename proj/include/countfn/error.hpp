#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace countfn {

enum class ErrorKind {
  InvalidRank,
  AlphabetMismatch,
  InvalidLetter,
  UnreducedWord,
  InverseInMonoid,
  NonCyclicallyReduced,
  WrongMode,
  EmptyWord,
  NoWitnessFound,
  SyntaxError,
  LetterOutOfRank,
  PhiEpsilon,
  AtomModeMismatch,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::UnreducedWord: return "UnreducedWord";
    case ErrorKind::InverseInMonoid: return "InverseInMonoid";
    case ErrorKind::NonCyclicallyReduced: return "NonCyclicallyReduced";
    case ErrorKind::WrongMode: return "WrongMode";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::NoWitnessFound: return "NoWitnessFound";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::LetterOutOfRank: return "LetterOutOfRank";
    case ErrorKind::PhiEpsilon: return "PhiEpsilon";
    case ErrorKind::AtomModeMismatch: return "AtomModeMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library. `position()` is meaningful for
/// parse errors only (byte offset into the parsed text).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t position = npos)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ErrorKind kind_;
  std::size_t position_;
};

}  // namespace countfn
