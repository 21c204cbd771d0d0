#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "autocomp/nfa.hpp"

namespace autocomp {

using Count = boost::multiprecision::cpp_int;

// A nonnegative count, or the distinguished infinite value (delta mode on a
// nondeterministic automaton).
struct AcceptanceCount {
  bool infinite = false;
  Count value = 0;

  static AcceptanceCount inf() { return {true, 0}; }
  static AcceptanceCount of(Count v) { return {false, std::move(v)}; }
  bool operator==(const AcceptanceCount&) const = default;
};

std::string to_string(const AcceptanceCount& c);

// Ceiling log, or infinity. Ordered: every finite value < infinity.
class LogAcc {
 public:
  LogAcc() : value_(kInf) {}
  explicit LogAcc(int v) : value_(v) {}
  static LogAcc inf() { return LogAcc(); }

  bool is_infinite() const { return value_ == kInf; }
  int value() const { return value_; }

  auto operator<=>(const LogAcc&) const = default;

 private:
  static constexpr int kInf = INT32_MAX;
  int value_;
};

std::string to_string(LogAcc l);

// Smallest m >= 0 with b^m >= count. Requires count >= 1, b >= 2.
int ceil_log(const Count& count, int b);

// Number of length-n walks from the initial to the accept state over the
// label-forgetting multigraph (parallel edges with different symbols are
// distinct steps). n = 0 yields 1 iff initial == accept.
Count count_paths_total(const Nfa& m, int n);

// Number of accepting paths spelling exactly w.
Count count_paths_for_word(const Nfa& m, const Word& w);

// |L(M) ∩ [b]^n|, via subset-construction DP. Guarded at q <= 12 for
// nondeterministic automata; deterministic automata of any size are counted
// through the path DP (each accepted word has exactly one accepting path).
Count count_words(const Nfa& m, int n);

// Acc_n^mode(M): paths for pi, words for omega; for delta, words when M is
// deterministic and the infinite value otherwise.
AcceptanceCount acceptance_count(const Nfa& m, int n, Mode mode);

// ceil(log_b Acc_n^mode(M)); infinity in delta mode when M is
// nondeterministic. Errors: NoAcceptanceAtLength when Acc = 0, BaseTooSmall
// when b < 2.
LogAcc log_acc(const Nfa& m, int n, int b, Mode mode);

}  // namespace autocomp
