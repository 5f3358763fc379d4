#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charprod {

/// Base of every error the engine raises. Callers that only need a
/// diagnostic catch this; tests catch the concrete kinds below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHARPROD_DEFINE_ERROR(Name)      \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// perm-core
CHARPROD_DEFINE_ERROR(ClosureCapExceeded);
CHARPROD_DEFINE_ERROR(EmptyGeneratorSet);
CHARPROD_DEFINE_ERROR(DegreeMismatch);
CHARPROD_DEFINE_ERROR(InvalidIndex);

// chartab
CHARPROD_DEFINE_ERROR(EigensplitStall);
CHARPROD_DEFINE_ERROR(LiftInconsistent);

// charops
CHARPROD_DEFINE_ERROR(GroupMismatch);
CHARPROD_DEFINE_ERROR(IntegralityViolation);
CHARPROD_DEFINE_ERROR(NotACharacter);
CHARPROD_DEFINE_ERROR(NotASubgroup);
CHARPROD_DEFINE_ERROR(NotNormal);
CHARPROD_DEFINE_ERROR(NoCorrespondent);
CHARPROD_DEFINE_ERROR(NotUnique);

// structure / verify
CHARPROD_DEFINE_ERROR(NotAPGroup);
CHARPROD_DEFINE_ERROR(HypothesisNotMet);
CHARPROD_DEFINE_ERROR(SearchExhausted);

// catalog
CHARPROD_DEFINE_ERROR(UnknownId);
CHARPROD_DEFINE_ERROR(ManifestError);

#undef CHARPROD_DEFINE_ERROR

/// Malformed permutation text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace charprod
