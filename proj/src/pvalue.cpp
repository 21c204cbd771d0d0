#include "autocomp/pvalue.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "autocomp/parallel.hpp"
#include "autocomp/search.hpp"

namespace autocomp {

namespace {
constexpr const char* kCacheHeader = "autocomp-pvalue-cache v1";
constexpr long long kMaxWordSpace = 1 << 20;

long long pow_ll(int b, int n) {
  long long r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > kMaxWordSpace) return r;
    r *= b;
  }
  return r;
}
}  // namespace

PValueCache::PValueCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) return;  // unknown format: ignore
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int version = 0, q = 0, m = 0, n = 0, b = 0;
    std::string mode_name, numerator;
    if (!(row >> version >> q >> m >> n >> b >> mode_name >> numerator) || version != 1) continue;
    const auto mode = parse_mode(mode_name);
    if (!mode) continue;
    try {
      entries_[Key{q, m, n, b, static_cast<int>(*mode)}] = Count(numerator);
    } catch (...) {
      // malformed record: skip
    }
  }
}

std::optional<Count> PValueCache::lookup(int q, int m, int n, int b, Mode mode) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = entries_.find(Key{q, m, n, b, static_cast<int>(mode)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PValueCache::insert(int q, int m, int n, int b, Mode mode, const Count& numerator) {
  std::lock_guard<std::mutex> lock(mu_);
  const Key key{q, m, n, b, static_cast<int>(mode)};
  if (entries_.count(key)) return;
  entries_[key] = numerator;
  if (path_.empty()) return;
  const std::filesystem::path p(path_);
  if (p.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  const bool fresh = !std::filesystem::exists(p);
  std::ofstream out(path_, std::ios::app);
  if (!out) return;  // persistence is best-effort; memory entry stands
  if (fresh) out << kCacheHeader << '\n';
  out << 1 << ' ' << q << ' ' << m << ' ' << n << ' ' << b << ' ' << mode_name(mode) << ' '
      << numerator.str() << '\n';
}

std::string default_cache_dir() {
  if (const char* dir = std::getenv("AC_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::string(xdg) + "/autocomp";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/autocomp";
  return ".";
}

namespace {

// Digit helpers over word codes (MSB-first base-b numerals).
std::uint32_t complement_code(std::uint32_t code, int n, int b) {
  std::uint32_t out = 0;
  std::uint32_t p = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t digit = code % static_cast<std::uint32_t>(b);
    out += (static_cast<std::uint32_t>(b - 1) - digit) * p;
    code /= static_cast<std::uint32_t>(b);
    p *= static_cast<std::uint32_t>(b);
  }
  return out;
}

std::uint32_t reverse_code_b(std::uint32_t code, int n, int b) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    out = out * static_cast<std::uint32_t>(b) + code % static_cast<std::uint32_t>(b);
    code /= static_cast<std::uint32_t>(b);
  }
  return out;
}

void check_pvalue_args(int q, int m, int n, int b, const Guards& guards) {
  if (q < 1) fail(Errc::BadArgument, "state bound must be positive");
  if (m < 0) fail(Errc::BadArgument, "log-count bound must be nonnegative");
  if (n < 0) fail(Errc::BadArgument, "length must be nonnegative");
  if (b < 2) fail(Errc::BaseTooSmall, "base must be at least 2");
  if (b > 4) fail(Errc::BadArgument, "alphabets larger than 4 are unsupported");
  if (n > guards.pvalue_max_n || pow_ll(b, n) > kMaxWordSpace)
    fail(Errc::LengthTooLarge, "exact p-values enumerate all b^n words; length guard exceeded");
}

}  // namespace

Count qualifying_word_count(int q, int m, int n, int b, Mode mode, PValueCache* cache, int jobs,
                            const Guards& guards) {
  check_pvalue_args(q, m, n, b, guards);
  if (cache) {
    if (auto hit = cache->lookup(q, m, n, b, mode)) return *hit;
  }

  const std::uint32_t total = static_cast<std::uint32_t>(pow_ll(b, n));
  const bool use_reversal = mode != Mode::delta;
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> weights;
  for (std::uint32_t code = 0; code < total; ++code) {
    const std::uint32_t comp = complement_code(code, n, b);
    std::uint32_t canon = std::min(code, comp);
    if (use_reversal) {
      const std::uint32_t rev = reverse_code_b(code, n, b);
      canon = std::min({canon, rev, complement_code(rev, n, b)});
    }
    if (canon != code) continue;
    // orbit size = number of distinct images
    std::uint32_t size = 1;
    if (comp != code) ++size;
    if (use_reversal) {
      const std::uint32_t rev = reverse_code_b(code, n, b);
      const std::uint32_t revcomp = complement_code(rev, n, b);
      if (rev != code && rev != comp) ++size;
      if (revcomp != code && revcomp != comp && revcomp != rev) ++size;
    }
    reps.push_back(code);
    weights.push_back(size);
  }

  const int cap = std::min(q, n + 1);
  const auto qualifies = run_indexed<std::uint8_t>(
      static_cast<int>(reps.size()), jobs, [&](int i) -> std::uint8_t {
        SequenceSearcher ss;
        ss.set_word(word_from_code(reps[static_cast<std::size_t>(i)], n, b));
        return ss.decide(cap, m, mode) ? 1 : 0;
      });

  Count numerator = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (qualifies[i]) numerator += weights[i];

  if (cache) cache->insert(q, m, n, b, mode, numerator);
  return numerator;
}

PValue pvalue(int q, int m, int n, int b, Mode mode, PValueCache* cache, int jobs,
              const Guards& guards) {
  PValue p;
  p.numerator = qualifying_word_count(q, m, n, b, mode, cache, jobs, guards);
  p.denominator = boost::multiprecision::pow(Count(b), static_cast<unsigned>(n));
  return p;
}

PValue pvalue_of_model(const Nfa& m, int n, int b, Mode mode, PValueCache* cache, int jobs,
                       const Guards& guards) {
  validate(m);
  const LogAcc la = log_acc(m, n, b, mode);  // raises NoAcceptanceAtLength on zero
  if (la.is_infinite())
    fail(Errc::InfiniteLogAcc, "deterministic-mode log-count of a nondeterministic model");
  return pvalue(m.num_states, la.value(), n, b, mode, cache, jobs, guards);
}

Count qualifying_word_count_by_union(int q, int m, int n, int b, Mode mode) {
  if (b != 2) fail(Errc::BadArgument, "union strategy supports binary alphabets");
  if (q > 3) fail(Errc::BadArgument, "union strategy enumerates at most 3 states");
  if (n > 16) fail(Errc::LengthTooLarge, "union strategy length guard exceeded");
  if (m < 0) fail(Errc::BadArgument, "log-count bound must be nonnegative");
  std::vector<std::uint8_t> hit(std::size_t{1} << n, 0);
  for (int qq = 1; qq <= q; ++qq) {
    for_each_tiny(qq, 2, /*canonical_only=*/true, [&](const TinyNfa& t) {
      if (mode == Mode::delta && !tiny_is_deterministic(t)) return true;
      const std::uint64_t acc =
          mode == Mode::pi ? tiny_paths_total(t, n) : tiny_words_count(t, n);
      if (acc == 0) return true;
      if (ceil_log(Count(acc), 2) > m) return true;
      tiny_accepted_words(t, n, [&](std::uint32_t code) {
        hit[code] = 1;
        return true;
      });
      return true;
    });
  }
  long long total = 0;
  for (const std::uint8_t h : hit) total += h;
  return Count(total);
}

}  // namespace autocomp
