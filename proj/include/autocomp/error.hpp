#pragma once

#include <stdexcept>
#include <string>

namespace autocomp {

// Error codes are part of the library's contract; the CLI maps them to exit
// codes (usage -> 2, guard violation -> 3).
enum class Errc {
  OutOfRangeState,
  OutOfRangeSymbol,
  DuplicateTransition,
  AlphabetMismatch,
  StateCountTooLargeForWordCounting,
  NoAcceptanceAtLength,
  BaseTooSmall,
  LengthMismatch,
  WordTooLong,
  LengthTooLarge,
  SearchBudgetExceeded,
  BadCardinality,
  EmptyWord,
  UnknownFixture,
  BadBase,
  BadEpsilon,
  InfiniteLogAcc,
  UnknownTheorem,
  BudgetExceeded,
  BadArgument,
};

const char* errc_name(Errc c);

// True for errors that mean "input exceeds a configured guard" rather than
// "input is malformed".
bool is_guard_violation(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace autocomp
