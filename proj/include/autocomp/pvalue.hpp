#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "autocomp/config.hpp"
#include "autocomp/counting.hpp"
#include "autocomp/nfa.hpp"
#include "autocomp/rational.hpp"

namespace autocomp {

// Probability that a uniformly random length-n word admits a model with at
// most q states and logAcc at most m. Exact rational: numerator counts
// qualifying words, denominator is b^n.
struct PValue {
  Count numerator = 0;
  Count denominator = 1;

  Rational ratio() const { return Rational::make(numerator, denominator); }
  std::string fraction() const { return to_fraction_string(ratio()); }
  std::string decimal(int places = 6) const { return to_decimal_string(ratio(), places); }
  // Two-decimal half-up rendering, the precision used in reported values.
  std::string rounded2() const { return to_decimal_string(ratio(), 2); }
  bool operator==(const PValue&) const = default;
};

// Append-only persistent store of qualifying-word counts keyed by
// (q, m, n, b, mode). One record per line after a version header; hits are
// byte-stable across runs. Safe for concurrent readers within one process; a
// single writer appends.
class PValueCache {
 public:
  // path of the record file; empty disables persistence (memory only).
  explicit PValueCache(std::string path);

  std::optional<Count> lookup(int q, int m, int n, int b, Mode mode);
  void insert(int q, int m, int n, int b, Mode mode, const Count& numerator);

  const std::string& path() const { return path_; }

 private:
  using Key = std::tuple<int, int, int, int, int>;
  std::string path_;
  std::map<Key, Count> entries_;
  std::mutex mu_;
};

// Resolves the cache directory: AC_CACHE_DIR, else XDG_CACHE_HOME/autocomp,
// else ~/.cache/autocomp, else the working directory.
std::string default_cache_dir();

// |{y in [b]^n : some NFA with <= q states and logAcc <= m accepts y}|.
// Scans one representative per symbol-relabeling/reversal orbit (reversal
// excluded in delta mode, where it can break determinism) and decides each by
// sequence-induced search. Guards: n <= guards.pvalue_max_n and b^n <= 2^20.
Count qualifying_word_count(int q, int m, int n, int b, Mode mode, PValueCache* cache = nullptr,
                            int jobs = 1, const Guards& guards = {});

PValue pvalue(int q, int m, int n, int b, Mode mode, PValueCache* cache = nullptr, int jobs = 1,
              const Guards& guards = {});

// p-value achieved by a concrete model: pvalue at its raw state count and its
// length-n logAcc. Errors: NoAcceptanceAtLength when the model accepts no
// length-n word, InfiniteLogAcc in delta mode on a nondeterministic model.
PValue pvalue_of_model(const Nfa& m, int n, int b, Mode mode, PValueCache* cache = nullptr,
                       int jobs = 1, const Guards& guards = {});

// Independent strategy for tests: unions accepted-word sets over the dense
// enumeration of all automata with <= q states. Binary alphabet, q <= 3.
Count qualifying_word_count_by_union(int q, int m, int n, int b, Mode mode);

}  // namespace autocomp
