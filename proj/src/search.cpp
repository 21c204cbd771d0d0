#include "autocomp/search.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "autocomp/error.hpp"

namespace autocomp {

namespace {
constexpr int kUnsetLog = INT32_MAX;
}

int ceil_log_u128(unsigned __int128 value, int b) {
  int m = 0;
  unsigned __int128 p = 1;
  while (p < value) {
    p *= static_cast<unsigned>(b);
    ++m;
  }
  return m;
}

unsigned __int128 pow_u128(int b, int m) {
  unsigned __int128 r = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 120;
  for (int i = 0; i < m; ++i) {
    if (r > cap) return r;  // saturate: already above any count a search can produce
    r *= static_cast<unsigned>(b);
  }
  return r;
}

namespace detail {

TransitionLedger::TransitionLedger() { std::memset(edge_pos, 0xff, sizeof(edge_pos)); }

int TransitionLedger::add(int u, int sym, int v) {
  std::uint8_t& rc = ref[u][sym][v];
  if (rc == 0) {
    edge_pos[u][sym][v] = static_cast<std::int16_t>(num_edges);
    edges[num_edges++] = {static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(sym),
                          static_cast<std::uint8_t>(v)};
    pair_mult[u][v] += 1;
    row[sym][u] |= 1u << v;
    if (++outdeg[u][sym] == 2) ++nondet;
  }
  ++rc;
  const int mult = pair_mult[u][v];
  prod *= static_cast<std::uint64_t>(mult);
  return mult;
}

void TransitionLedger::remove(int u, int sym, int v) {
  // LIFO discipline: the ledger is in the exact state the matching add left
  // it in, so pair_mult is the multiplicity that add() multiplied into prod.
  prod /= pair_mult[u][v];
  std::uint8_t& rc = ref[u][sym][v];
  if (--rc == 0) {
    if (outdeg[u][sym]-- == 2) --nondet;
    pair_mult[u][v] -= 1;
    row[sym][u] &= ~(1u << v);
    const int pos = edge_pos[u][sym][v];
    const Edge last = edges[--num_edges];
    edges[pos] = last;
    edge_pos[last.u][last.sym][last.v] = static_cast<std::int16_t>(pos);
    edge_pos[u][sym][v] = -1;
  }
}

unsigned __int128 TransitionLedger::count_paths(int n, int accept, int num_states) const {
  unsigned __int128 cur[kMaxSearchStates];
  unsigned __int128 nxt[kMaxSearchStates];
  for (int i = 0; i < num_states; ++i) cur[i] = 0;
  cur[0] = 1;
  for (int step = 0; step < n; ++step) {
    for (int i = 0; i < num_states; ++i) nxt[i] = 0;
    for (int e = 0; e < num_edges; ++e) nxt[edges[e].v] += cur[edges[e].u];
    for (int i = 0; i < num_states; ++i) cur[i] = nxt[i];
  }
  return cur[accept];
}

std::uint64_t WordCounter::count(const TransitionLedger& ledger, int n, int accept,
                                 int num_states, int base) {
  const std::uint32_t size = 1u << num_states;
  if (stamp_.size() < size) {
    stamp_.assign(size, 0);
    pos_.assign(size, 0);
    gen_ = 0;
  }
  if (gen_ >= UINT32_MAX - 2) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    gen_ = 0;
  }
  cur_.clear();
  cur_.push_back({1u, 1});  // the singleton {initial}
  for (int step = 0; step < n; ++step) {
    next_.clear();
    ++gen_;
    for (const auto& [subset, cnt] : cur_) {
      for (int sym = 0; sym < base; ++sym) {
        std::uint32_t t = 0;
        std::uint32_t rest = subset;
        while (rest) {
          const int u = std::countr_zero(rest);
          rest &= rest - 1;
          t |= ledger.row[sym][u];
        }
        if (!t) continue;
        if (stamp_[t] == gen_) {
          next_[pos_[t]].second += cnt;
        } else {
          stamp_[t] = gen_;
          pos_[t] = static_cast<std::uint32_t>(next_.size());
          next_.push_back({t, cnt});
        }
      }
    }
    cur_.swap(next_);
    if (cur_.empty()) return 0;
  }
  std::uint64_t total = 0;
  const std::uint32_t abit = 1u << accept;
  for (const auto& [subset, cnt] : cur_)
    if (subset & abit) total += cnt;
  return total;
}

}  // namespace detail

void SequenceSearcher::set_word(const Word& w) {
  if (static_cast<int>(w.size()) > kMaxSearchLength)
    fail(Errc::WordTooLong, "word longer than the search engine supports");
  if (w.base < 2 || w.base > kMaxSearchBase)
    fail(Errc::BadArgument, "search supports alphabet sizes 2..4");
  n_ = static_cast<int>(w.size());
  b_ = w.base;
  for (int i = 0; i < n_; ++i) w_[i] = w.symbols[i];
}

void SequenceSearcher::prepare(int max_states, Mode mode, Purpose purpose, int m) {
  if (max_states < 1 || max_states > kMaxSearchStates)
    fail(Errc::BadArgument, "state bound out of range for search");
  if (m < 0) fail(Errc::BadArgument, "negative log-count bound");
  qmax_ = max_states;
  mode_ = mode;
  purpose_ = purpose;
  thr_ = pow_u128(b_, m);
  leaves_ = 0;
  seq_[0] = 0;
}

bool SequenceSearcher::leaf_qualifies(int num_states) {
  const unsigned __int128 paths = ledger_.count_paths(n_, seq_[n_], num_states);
  if (mode_ != Mode::omega) return paths <= thr_;
  if (paths <= thr_) return true;  // distinct words <= paths
  if (num_states > kMaxSubsetStates)
    fail(Errc::StateCountTooLargeForWordCounting, "word-count DP state bound exceeded");
  const std::uint64_t wc = words_.count(ledger_, n_, seq_[n_], num_states, b_);
  return static_cast<unsigned __int128>(wc) <= thr_;
}

bool SequenceSearcher::dfs(int depth, int cur, int maxv) {
  if (depth == n_) {
    ++leaves_;
    const int q = maxv + 1;
    if (purpose_ == Purpose::kMinTable) {
      int la;
      if (mode_ == Mode::omega) {
        if (q > kMaxSubsetStates)
          fail(Errc::StateCountTooLargeForWordCounting, "word-count DP state bound exceeded");
        const std::uint64_t wc = words_.count(ledger_, n_, seq_[n_], q, b_);
        la = ceil_log_u128(wc, b_);
      } else {
        la = ceil_log_u128(ledger_.count_paths(n_, seq_[n_], q), b_);
      }
      if (la < best_[q - 1]) best_[q - 1] = la;
      return false;
    }
    if (leaf_qualifies(q)) {
      if (purpose_ == Purpose::kDecide) {
        if (witness_) witness_->entries.assign(seq_, seq_ + n_ + 1);
        return true;
      }
      StateSequence s;
      s.entries.assign(seq_, seq_ + n_ + 1);
      if (!(*fn_)(s)) return true;  // caller stopped the enumeration
    }
    return false;
  }
  const int sym = w_[depth];
  const int limit = std::min(maxv + 1, qmax_ - 1);
  for (int v = 0; v <= limit; ++v) {
    ledger_.add(cur, sym, v);
    bool prune = (mode_ == Mode::delta && ledger_.nondet > 0);
    if (!prune) {
      if (purpose_ == Purpose::kMinTable) {
        const int nmaxv = v > maxv ? v : maxv;
        const int dlo = nmaxv + 1;
        const int dhi = std::min(qmax_, dlo + (n_ - depth - 1));
        int need = 0;
        for (int d = dlo; d <= dhi; ++d) need = std::max(need, best_[d - 1]);
        if (need != kUnsetLog && need != 0)
          prune = ceil_log_u128(ledger_.prod, b_) >= need;
        else if (need == 0)
          prune = true;  // every reachable state count already has logAcc 0
      } else {
        prune = ledger_.prod > thr_;
      }
    }
    if (!prune) {
      seq_[depth + 1] = v;
      if (dfs(depth + 1, v, v > maxv ? v : maxv)) {
        ledger_.remove(cur, sym, v);
        return true;
      }
    }
    ledger_.remove(cur, sym, v);
  }
  return false;
}

bool SequenceSearcher::decide(int max_states, int m, Mode mode, StateSequence* witness) {
  prepare(max_states, mode, Purpose::kDecide, m);
  witness_ = witness;
  const bool found = dfs(0, 0, 0);
  witness_ = nullptr;
  return found;
}

namespace {
std::vector<LogAcc> to_logacc_vector(const std::vector<int>& best) {
  std::vector<LogAcc> out;
  out.reserve(best.size());
  for (int v : best) out.push_back(v == kUnsetLog ? LogAcc::inf() : LogAcc(v));
  return out;
}
}  // namespace

std::vector<LogAcc> SequenceSearcher::min_logacc_by_states(int max_states, Mode mode) {
  prepare(max_states, mode, Purpose::kMinTable, 0);
  best_.assign(qmax_, kUnsetLog);
  dfs(0, 0, 0);
  return to_logacc_vector(best_);
}

std::vector<LogAcc> SequenceSearcher::min_logacc_by_states_prefix(const StateSequence& prefix,
                                                                  int max_states, Mode mode) {
  prepare(max_states, mode, Purpose::kMinTable, 0);
  best_.assign(qmax_, kUnsetLog);
  const auto& e = prefix.entries;
  if (e.empty() || e[0] != 0 || static_cast<int>(e.size()) > n_ + 1)
    fail(Errc::BadArgument, "prefix must start at state 0 and fit the word");
  int maxv = 0;
  bool dead = false;
  int applied = 0;
  for (std::size_t i = 1; i < e.size() && !dead; ++i) {
    const int v = e[i];
    if (v < 0 || v > maxv + 1 || v >= qmax_)
      fail(Errc::BadArgument, "prefix is not a restricted-growth sequence within the bound");
    ledger_.add(e[i - 1], w_[i - 1], v);
    ++applied;
    seq_[i] = v;
    maxv = std::max(maxv, v);
    if (mode_ == Mode::delta && ledger_.nondet > 0) dead = true;
  }
  if (!dead) dfs(applied, e[applied], maxv);
  for (int i = applied; i >= 1; --i) ledger_.remove(e[i - 1], w_[i - 1], e[i]);
  return to_logacc_vector(best_);
}

void SequenceSearcher::enumerate_qualifying(int max_states, int m, Mode mode,
                                            const std::function<bool(const StateSequence&)>& fn) {
  prepare(max_states, mode, Purpose::kEnumerate, m);
  fn_ = &fn;
  dfs(0, 0, 0);
  fn_ = nullptr;
}

namespace {

// Joint DFS over state sequences for a pair of words: first a full accepting
// path for x, then one for y drawing from the same state pool (restricted
// growth continues across the phases), sharing initial state 0 and the accept
// state. Pruning uses the same step-multiplicity product; once the two
// sequences have diverged the two paths are distinct, so in pi mode the path
// counts of the phases add.
struct PairSearch {
  detail::TransitionLedger ledger;
  detail::WordCounter words;
  int n = 0;
  int b = 2;
  int qmax = 1;
  Mode mode = Mode::pi;
  const std::uint8_t* xs = nullptr;
  const std::uint8_t* ys = nullptr;
  long long budget = 0;
  std::uint64_t r_s = 1;
  int seq1[kMaxSearchLength + 2] = {};
  int seq2[kMaxSearchLength + 2] = {};

  void spend() {
    if (--budget < 0) fail(Errc::SearchBudgetExceeded, "pair search node budget exhausted");
  }

  bool leaf(int q) {
    const unsigned __int128 paths = ledger.count_paths(n, seq1[n], q);
    if (mode != Mode::omega) {
      if (paths != 2) return false;
      if (q <= kMaxSubsetStates && words.count(ledger, n, seq1[n], q, b) != 2) return false;
      return true;
    }
    if (q > kMaxSubsetStates)
      fail(Errc::StateCountTooLargeForWordCounting, "word-count DP state bound exceeded");
    return words.count(ledger, n, seq1[n], q, b) == 2;
  }

  bool dfs2(int depth, int cur, int maxv, bool diverged) {
    if (depth == n) return leaf(maxv + 1);
    const int sym = ys[depth];
    const int limit = std::min(maxv + 1, qmax - 1);
    for (int v = 0; v <= limit; ++v) {
      if (depth == n - 1 && v != seq1[n]) continue;  // shared accept state
      spend();
      ledger.add(cur, sym, v);
      const bool div2 = diverged || v != seq1[depth + 1];
      bool prune = (mode == Mode::delta && ledger.nondet > 0);
      if (!prune) {
        const std::uint64_t r_t = ledger.prod / r_s;
        if (mode == Mode::pi)
          prune = div2 ? (r_s + r_t > 2) : (r_t > 2);
        else
          prune = r_t > 2;
      }
      if (!prune) {
        seq2[depth + 1] = v;
        if (dfs2(depth + 1, v, v > maxv ? v : maxv, div2)) {
          ledger.remove(cur, sym, v);
          return true;
        }
      }
      ledger.remove(cur, sym, v);
    }
    return false;
  }

  bool dfs1(int depth, int cur, int maxv) {
    if (depth == n) {
      r_s = ledger.prod;
      seq2[0] = 0;
      return dfs2(0, 0, maxv, false);
    }
    const int sym = xs[depth];
    const int limit = std::min(maxv + 1, qmax - 1);
    for (int v = 0; v <= limit; ++v) {
      spend();
      ledger.add(cur, sym, v);
      bool prune = (mode == Mode::delta && ledger.nondet > 0);
      if (!prune) prune = ledger.prod > 2;
      if (!prune) {
        seq1[depth + 1] = v;
        if (dfs1(depth + 1, v, v > maxv ? v : maxv)) {
          ledger.remove(cur, sym, v);
          return true;
        }
      }
      ledger.remove(cur, sym, v);
    }
    return false;
  }
};

}  // namespace

int pair_min_states(const Word& x, const Word& y, Mode mode, int qmax, long long node_budget) {
  if (x.size() != y.size() || x.symbols == y.symbols)
    fail(Errc::BadArgument, "pair search needs two distinct words of equal length");
  if (x.base != y.base) fail(Errc::BadArgument, "pair search needs a common alphabet");
  const int n = static_cast<int>(x.size());
  if (n > 12) fail(Errc::WordTooLong, "pair search length bound exceeded");
  if (x.base < 2 || x.base > kMaxSearchBase)
    fail(Errc::BadArgument, "search supports alphabet sizes 2..4");
  qmax = std::min(qmax, 2 * n + 1);  // joint sequence with shared accept uses at most 2n+1 states
  if (mode == Mode::omega) qmax = std::min(qmax, kMaxSubsetStates);
  PairSearch ps;
  ps.n = n;
  ps.b = x.base;
  ps.mode = mode;
  ps.xs = x.symbols.data();
  ps.ys = y.symbols.data();
  ps.budget = node_budget;
  ps.seq1[0] = 0;
  for (int q = 1; q <= qmax; ++q) {
    ps.qmax = q;
    if (ps.dfs1(0, 0, 0)) return q;
  }
  return -1;
}

}  // namespace autocomp
