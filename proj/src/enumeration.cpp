#include "autocomp/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "autocomp/error.hpp"

namespace autocomp {

Nfa TinyNfa::to_nfa() const {
  Nfa m;
  m.num_states = q;
  m.alphabet_size = b;
  m.initial = 0;
  m.accept = accept;
  for (int u = 0; u < q; ++u)
    for (int sym = 0; sym < b; ++sym)
      for (int v = 0; v < q; ++v)
        if (row[u][sym] & (1u << v))
          m.transitions.push_back({u, static_cast<Symbol>(sym), v});
  return normalized(std::move(m));
}

namespace {

// Permutations of {0..q-1} fixing 0, as state maps, identity excluded.
std::vector<std::array<std::uint8_t, 4>> nontrivial_perms(int q) {
  std::vector<std::array<std::uint8_t, 4>> out;
  std::array<std::uint8_t, 4> p{0, 1, 2, 3};
  std::sort(p.begin() + 1, p.begin() + q);
  while (std::next_permutation(p.begin() + 1, p.begin() + q)) out.push_back(p);
  return out;
}

// Image of a target mask under a state map.
std::uint8_t map_mask(std::uint8_t mask, const std::array<std::uint8_t, 4>& p) {
  std::uint8_t out = 0;
  while (mask) {
    const int v = std::countr_zero(static_cast<unsigned>(mask));
    mask &= static_cast<std::uint8_t>(mask - 1);
    out |= static_cast<std::uint8_t>(1u << p[v]);
  }
  return out;
}

// Lexicographic comparison of (cells..., accept) against the relabeled image;
// the automaton is canonical iff no image is strictly smaller.
bool is_canonical(const TinyNfa& t, const std::vector<std::array<std::uint8_t, 4>>& perms) {
  for (const auto& p : perms) {
    int cmp = 0;
    for (int u = 0; u < t.q && cmp == 0; ++u) {
      for (int sym = 0; sym < t.b && cmp == 0; ++sym) {
        // image cell at (u, sym) is the mapped row of the preimage of u
        const int pre = [&] {
          for (int w = 0; w < t.q; ++w)
            if (p[w] == u) return w;
          return 0;
        }();
        const std::uint8_t img = map_mask(t.row[pre][sym], p);
        if (img != t.row[u][sym]) cmp = img < t.row[u][sym] ? -1 : 1;
      }
    }
    if (cmp == 0) {
      const int img_acc = p[t.accept];
      if (img_acc < t.accept) cmp = -1;
    }
    if (cmp < 0) return false;
  }
  return true;
}

}  // namespace

long long for_each_tiny(int q, int b, bool canonical_only,
                        const std::function<bool(const TinyNfa&)>& fn) {
  if (q < 1 || q > 4 || b < 1 || b > 4) fail(Errc::BadArgument, "tiny enumeration supports q,b in 1..4");
  const int cells = q * b;
  const std::uint32_t vals = 1u << q;
  std::vector<std::uint8_t> cell(cells, 0);
  const auto perms = canonical_only ? nontrivial_perms(q) : std::vector<std::array<std::uint8_t, 4>>{};
  TinyNfa t;
  t.q = q;
  t.b = b;
  long long visited = 0;
  for (;;) {
    for (int u = 0; u < q; ++u)
      for (int sym = 0; sym < b; ++sym) t.row[u][sym] = cell[u * b + sym];
    for (int acc = 0; acc < q; ++acc) {
      t.accept = acc;
      if (canonical_only && !is_canonical(t, perms)) continue;
      ++visited;
      if (!fn(t)) return -1;
    }
    int i = 0;
    while (i < cells && cell[i] == vals - 1) cell[i++] = 0;
    if (i == cells) break;
    ++cell[i];
  }
  return visited;
}

bool tiny_is_deterministic(const TinyNfa& t) {
  for (int u = 0; u < t.q; ++u)
    for (int sym = 0; sym < t.b; ++sym)
      if (std::popcount(static_cast<unsigned>(t.row[u][sym])) > 1) return false;
  return true;
}

namespace {

inline void tiny_step(const TinyNfa& t, const std::uint64_t* cur, int sym, std::uint64_t* nxt) {
  for (int v = 0; v < t.q; ++v) nxt[v] = 0;
  for (int u = 0; u < t.q; ++u) {
    if (!cur[u]) continue;
    std::uint8_t mask = t.row[u][sym];
    while (mask) {
      const int v = std::countr_zero(static_cast<unsigned>(mask));
      mask &= static_cast<std::uint8_t>(mask - 1);
      nxt[v] += cur[u];
    }
  }
}

inline std::uint8_t subset_step(const TinyNfa& t, std::uint8_t subset, int sym) {
  std::uint8_t out = 0;
  while (subset) {
    const int u = std::countr_zero(static_cast<unsigned>(subset));
    subset &= static_cast<std::uint8_t>(subset - 1);
    out |= t.row[u][sym];
  }
  return out;
}

}  // namespace

std::uint64_t tiny_paths_total(const TinyNfa& t, int n) {
  std::uint64_t cur[4] = {1, 0, 0, 0};
  std::uint64_t nxt[4];
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < t.q; ++v) nxt[v] = 0;
    for (int sym = 0; sym < t.b; ++sym) {
      std::uint64_t tmp[4];
      tiny_step(t, cur, sym, tmp);
      for (int v = 0; v < t.q; ++v) nxt[v] += tmp[v];
    }
    for (int v = 0; v < t.q; ++v) cur[v] = nxt[v];
  }
  return cur[t.accept];
}

std::uint64_t tiny_paths_for_word(const TinyNfa& t, const std::uint8_t* w, int n) {
  std::uint64_t cur[4] = {1, 0, 0, 0};
  std::uint64_t nxt[4];
  for (int i = 0; i < n; ++i) {
    tiny_step(t, cur, w[i], nxt);
    for (int v = 0; v < t.q; ++v) cur[v] = nxt[v];
  }
  return cur[t.accept];
}

std::uint64_t tiny_words_count(const TinyNfa& t, int n) {
  std::uint64_t cur[16] = {};
  std::uint64_t nxt[16];
  cur[1] = 1;  // the singleton {initial}
  const int size = 1 << t.q;
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < size; ++s) nxt[s] = 0;
    for (int s = 1; s < size; ++s) {
      if (!cur[s]) continue;
      for (int sym = 0; sym < t.b; ++sym) {
        const std::uint8_t ss = subset_step(t, static_cast<std::uint8_t>(s), sym);
        if (ss) nxt[ss] += cur[s];
      }
    }
    for (int s = 0; s < size; ++s) cur[s] = nxt[s];
  }
  std::uint64_t total = 0;
  for (int s = 1; s < size; ++s)
    if (s & (1 << t.accept)) total += cur[s];
  return total;
}

namespace {

bool accepted_words_rec(const TinyNfa& t, int n, int depth, std::uint8_t subset,
                        std::uint32_t code, const std::function<bool(std::uint32_t)>& fn) {
  if (!subset) return true;
  if (depth == n) {
    if (subset & (1u << t.accept)) return fn(code);
    return true;
  }
  for (int sym = 0; sym < t.b; ++sym) {
    if (!accepted_words_rec(t, n, depth + 1, subset_step(t, subset, sym),
                            code * static_cast<std::uint32_t>(t.b) + static_cast<std::uint32_t>(sym),
                            fn))
      return false;
  }
  return true;
}

}  // namespace

bool tiny_accepted_words(const TinyNfa& t, int n, const std::function<bool(std::uint32_t)>& fn) {
  return accepted_words_rec(t, n, 0, 1, 0, fn);
}

bool tiny_language_equals(const TinyNfa& t, int n, const std::vector<std::uint32_t>& codes) {
  std::size_t idx = 0;
  const bool completed = tiny_accepted_words(t, n, [&](std::uint32_t c) {
    if (idx >= codes.size() || codes[idx] != c) return false;
    ++idx;
    return true;
  });
  return completed && idx == codes.size();
}

namespace {

bool unique_single_path_rec(const TinyNfa& t, const std::uint8_t* x, int n, int depth,
                            const std::uint64_t* vec, bool on_x) {
  bool alive = false;
  for (int v = 0; v < t.q; ++v)
    if (vec[v]) alive = true;
  if (!alive) return !on_x;  // x must keep a live prefix; dead other-words all have count 0
  if (depth == n) {
    const std::uint64_t c = vec[t.accept];
    return on_x ? c == 1 : c != 1;
  }
  for (int sym = 0; sym < t.b; ++sym) {
    std::uint64_t nxt[4];
    tiny_step(t, vec, sym, nxt);
    if (!unique_single_path_rec(t, x, n, depth + 1, nxt, on_x && sym == x[depth])) return false;
  }
  return true;
}

}  // namespace

bool tiny_unique_single_path_word(const TinyNfa& t, const std::uint8_t* x, int n) {
  if (tiny_paths_for_word(t, x, n) != 1) return false;
  const std::uint64_t init[4] = {1, 0, 0, 0};
  return unique_single_path_rec(t, x, n, 0, init, true);
}

const OracleTable& oracle_table(int n, Mode mode) {
  static std::map<std::pair<int, int>, std::unique_ptr<OracleTable>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(n, static_cast<int>(mode));
  auto it = memo.find(key);
  if (it != memo.end()) return *it->second;
  if (n < 0 || n > 10) fail(Errc::BadArgument, "oracle table supports lengths 0..10");
  auto table = std::make_unique<OracleTable>();
  table->n = n;
  table->b = 2;
  table->mode = mode;
  table->best.assign(std::size_t{1} << n, {-1, -1, -1});
  for (int q = 1; q <= 3; ++q) {
    for_each_tiny(q, 2, /*canonical_only=*/true, [&](const TinyNfa& t) {
      if (mode == Mode::delta && !tiny_is_deterministic(t)) return true;
      const std::uint64_t acc =
          mode == Mode::pi ? tiny_paths_total(t, n) : tiny_words_count(t, n);
      if (acc == 0) return true;
      const int la = ceil_log(Count(acc), 2);
      tiny_accepted_words(t, n, [&](std::uint32_t code) {
        int& slot = table->best[code][q - 1];
        if (slot < 0 || la < slot) slot = la;
        return true;
      });
      return true;
    });
  }
  auto [pos, _] = memo.emplace(key, std::move(table));
  return *pos->second;
}

Nfa canonical_form(const Nfa& m) {
  validate(m);
  if (m.num_states > 8) fail(Errc::BadArgument, "canonical form supports at most 8 states");
  std::vector<int> perm(static_cast<std::size_t>(m.num_states));
  for (int i = 0; i < m.num_states; ++i) perm[static_cast<std::size_t>(i)] = i;
  Nfa best = normalized(m);
  do {
    Nfa cand = m;
    cand.accept = perm[static_cast<std::size_t>(m.accept)];
    for (auto& t : cand.transitions) {
      t.from = perm[static_cast<std::size_t>(t.from)];
      t.to = perm[static_cast<std::size_t>(t.to)];
    }
    cand = normalized(std::move(cand));
    if (std::tie(cand.transitions, cand.accept) < std::tie(best.transitions, best.accept))
      best = std::move(cand);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::uint32_t word_code(const Word& w) {
  std::uint32_t code = 0;
  for (const Symbol s : w.symbols) code = code * static_cast<std::uint32_t>(w.base) + s;
  return code;
}

Word word_from_code(std::uint32_t code, int n, int b) {
  Word w;
  w.base = b;
  w.symbols.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    w.symbols[i] = static_cast<Symbol>(code % static_cast<std::uint32_t>(b));
    code /= static_cast<std::uint32_t>(b);
  }
  return w;
}

}  // namespace autocomp
