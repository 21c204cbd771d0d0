#include "autocomp/constructions.hpp"

#include <algorithm>

#include "autocomp/counting.hpp"

namespace autocomp {

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational Rational::make(Count n, Count d) {
  if (d == 0) fail(Errc::BadArgument, "rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  if (n < 0) fail(Errc::BadArgument, "negative rational not supported");
  Count g = boost::multiprecision::gcd(n, d);
  if (g > 1) { n /= g; d /= g; }
  return Rational{std::move(n), std::move(d)};
}

int compare(const Rational& a, const Rational& b) {
  Count lhs = a.num * b.den;
  Count rhs = b.num * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::string to_fraction_string(const Rational& r) {
  return r.num.str() + "/" + r.den.str();
}

std::string to_decimal_string(const Rational& r, int places) {
  Count scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Count scaled = r.num * scale;
  Count q = scaled / r.den;
  Count rem = scaled % r.den;
  if (rem * 2 >= r.den) ++q;  // half-up
  std::string digits = q.str();
  if (places == 0) return digits;
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<size_t>(places + 1) - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), ".");
  return digits;
}

namespace {

Count parse_digits(const std::string& text, const std::string& whole) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::BadArgument, "bad rational: " + whole);
  return Count(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(Errc::BadArgument, "empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Count n = parse_digits(text.substr(0, slash), text);
    Count d = parse_digits(text.substr(slash + 1), text);
    return Rational::make(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    Count den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Count num = (whole.empty() ? Count(0) : parse_digits(whole, text)) * den +
                (frac.empty() ? Count(0) : parse_digits(frac, text));
    return Rational::make(num, den);
  }
  return Rational::make(parse_digits(text, text), 1);
}

// ---------------------------------------------------------------------------
// DoubletonQuery
// ---------------------------------------------------------------------------

DoubletonQuery DoubletonQuery::of(std::vector<Word> ws) {
  if (ws.empty() || ws.size() > 2)
    fail(Errc::BadCardinality, "query takes 1 or 2 words, got " + std::to_string(ws.size()));
  if (ws.size() == 2) {
    if (ws[0].size() != ws[1].size())
      fail(Errc::LengthMismatch, "query words must have equal length");
    if (ws[0].symbols == ws[1].symbols)
      fail(Errc::BadCardinality, "query words must be distinct");
  }
  int base = 2;
  for (const Word& w : ws) base = std::max(base, w.base);
  for (Word& w : ws) w.base = base;
  std::sort(ws.begin(), ws.end());
  DoubletonQuery f;
  f.words = std::move(ws);
  f.base = base;
  return f;
}

// ---------------------------------------------------------------------------
// Kayleigh graphs
// ---------------------------------------------------------------------------

namespace {

// Odd-length core on states root, root+delta, ..., root+m*delta... kept
// simple: builds the odd-n graph on explicitly supplied state ids
// chain[0..m], with the final backward edge going to `final_target`
// (normally chain[0]; the shared-accept doubleton branch redirects it).
void build_odd_cycle(const Word& x, const std::vector<State>& chain, State final_target,
                     std::vector<Transition>& out) {
  const int n = x.size();
  const int m = (n - 1) / 2;
  for (int i = 0; i < m; ++i) out.push_back({chain[i], x[i], chain[i + 1]});
  out.push_back({chain[m], x[m], chain[m]});  // loop
  for (int j = 1; j <= m; ++j) {
    State to = (j == m) ? final_target : chain[m - j];
    out.push_back({chain[m + 1 - j], x[m + j], to});
  }
}

}  // namespace

Nfa kayleigh(const Word& x) {
  const int n = x.size();
  if (n == 0) fail(Errc::EmptyWord, "construction requires a nonempty word");
  Nfa a;
  a.alphabet_size = x.base;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    a.num_states = m + 1;
    a.accept = 0;
    std::vector<State> chain(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) chain[static_cast<size_t>(i)] = i;
    build_odd_cycle(x, chain, 0, a.transitions);
  } else {
    Word prefix = x;
    prefix.symbols.pop_back();
    a = kayleigh(prefix);
    State fresh = a.num_states;
    a.num_states += 1;
    a.accept = fresh;
    a.transitions.push_back({0, x[n - 1], fresh});
  }
  return normalized(std::move(a));
}

Nfa exploded_kayleigh(const Word& x) {
  const int n = x.size();
  if (n == 0) fail(Errc::EmptyWord, "construction requires a nonempty word");
  const bool even = (n % 2 == 0);
  const int odd_n = even ? n - 1 : n;   // length of the cycle part
  const int m = (odd_n - 1) / 2;
  // Conflicted states of the odd cycle: interior s in 1..m-1 when the forward
  // out-label x[s] equals the backward out-label x[2m+1-s]; the loop state m
  // when x[m] == x[m+1]; for even n additionally the root when its forward
  // label x[0] equals the fresh accept label x[n-1].
  std::vector<char> split(static_cast<size_t>(m) + 1, 0);
  if (odd_n >= 3) {
    for (int s = 1; s < m; ++s)
      if (x[s] == x[2 * m + 1 - s]) split[static_cast<size_t>(s)] = 1;
    if (x[m] == x[m + 1]) split[static_cast<size_t>(m)] = 1;
  }
  if (even && x[0] == x[n - 1]) split[0] = 1;

  Nfa a;
  a.alphabet_size = x.base;
  int next_id = m + 1;
  State fresh_accept = -1;
  if (even) fresh_accept = next_id++;
  std::vector<State> starred(static_cast<size_t>(m) + 1, -1);
  for (int s = 0; s <= m; ++s)
    if (split[static_cast<size_t>(s)]) starred[static_cast<size_t>(s)] = next_id++;
  a.num_states = next_id;
  a.accept = even ? fresh_accept : 0;

  auto bwd_copy = [&](int s) { return split[static_cast<size_t>(s)] ? starred[static_cast<size_t>(s)] : s; };

  // forward chain (always on unstarred states)
  for (int i = 0; i < m; ++i) a.transitions.push_back({i, x[i], i + 1});
  // loop state: a self-loop, or a transfer edge into the starred copy
  if (split[static_cast<size_t>(m)]) {
    a.transitions.push_back({m, x[m], starred[static_cast<size_t>(m)]});
  } else {
    a.transitions.push_back({m, x[m], m});
  }
  // backward chain through starred copies where present
  for (int u = m; u >= 1; --u)
    a.transitions.push_back({bwd_copy(u), x[2 * m + 1 - u], bwd_copy(u - 1)});
  // even n: the accept edge leaves the backward copy of the root
  if (even) a.transitions.push_back({bwd_copy(0), x[n - 1], fresh_accept});
  return normalized(std::move(a));
}

Nfa chambers_hyde(const DoubletonQuery& f) {
  if (f.cardinality() == 1) return kayleigh(f.words[0]);
  const Word& x = f.words[0];
  const Word& y = f.words[1];
  const int n = f.length();
  Nfa a;
  a.alphabet_size = f.base;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    a.num_states = 2 * m + 1;
    a.accept = 0;
    std::vector<State> chain_x(static_cast<size_t>(m) + 1), chain_y(static_cast<size_t>(m) + 1);
    chain_x[0] = chain_y[0] = 0;
    for (int i = 1; i <= m; ++i) {
      chain_x[static_cast<size_t>(i)] = i;
      chain_y[static_cast<size_t>(i)] = m + i;
    }
    build_odd_cycle(x, chain_x, 0, a.transitions);
    build_odd_cycle(y, chain_y, 0, a.transitions);
  } else if (n == 2) {
    // No backward edge exists to redirect at this size; route both words
    // into the accept state directly.
    a.num_states = 3;
    a.accept = 1;
    if (x[0] == y[0]) {
      a.transitions.push_back({0, x[0], 2});
      a.transitions.push_back({2, x[1], 1});
      a.transitions.push_back({2, y[1], 1});
    } else {
      a.transitions.push_back({0, x[0], 1});
      a.transitions.push_back({1, x[1], 1});
      a.transitions.push_back({0, y[0], 2});
      a.transitions.push_back({2, y[1], 1});
    }
  } else {
    // Fresh initial 0; shared accept 1; each branch peels its first symbol
    // and runs the odd cycle of the rest, the second branch redirecting its
    // final backward edge into the shared accept.
    const int mp = (n - 2) / 2;
    a.num_states = 2 * mp + 3;
    a.accept = 1;
    Word x_rest{{x.symbols.begin() + 1, x.symbols.end()}, f.base};
    Word y_rest{{y.symbols.begin() + 1, y.symbols.end()}, f.base};
    std::vector<State> chain_x(static_cast<size_t>(mp) + 1), chain_y(static_cast<size_t>(mp) + 1);
    chain_x[0] = 1;  // branch 1 is rooted at the shared accept
    for (int i = 1; i <= mp; ++i) chain_x[static_cast<size_t>(i)] = 1 + i;
    chain_y[0] = mp + 2;
    for (int i = 1; i <= mp; ++i) chain_y[static_cast<size_t>(i)] = mp + 2 + i;
    a.transitions.push_back({0, x[0], 1});
    a.transitions.push_back({0, y[0], mp + 2});
    build_odd_cycle(x_rest, chain_x, 1, a.transitions);
    build_odd_cycle(y_rest, chain_y, 1, a.transitions);
  }
  return normalized(std::move(a));
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

namespace {

Nfa make_fixture(int q, int b, State accept, std::vector<Transition> ts) {
  Nfa a;
  a.num_states = q;
  a.alphabet_size = b;
  a.accept = accept;
  a.transitions = std::move(ts);
  return normalized(std::move(a));
}

}  // namespace

std::vector<std::string> fixture_ids() {
  return {"fig2", "fig3", "fig4-left", "fig4-right", "fig5", "fig6", "fig7", "fig8"};
}

Nfa fixture(const std::string& id) {
  if (id == "fig2")
    return make_fixture(4, 2, 0, {{0, 0, 1}, {1, 1, 2}, {2, 0, 0}, {2, 0, 3}, {3, 0, 1}, {3, 1, 3}});
  if (id == "fig3")
    return make_fixture(4, 2, 2, {{0, 0, 1}, {1, 0, 2}, {2, 0, 1}, {2, 0, 3}, {3, 0, 3}, {3, 1, 0}});
  if (id == "fig4-left")
    return make_fixture(3, 2, 0, {{0, 0, 1}, {1, 1, 2}, {2, 1, 0}, {2, 1, 1}});
  if (id == "fig4-right")
    return make_fixture(3, 2, 0, {{0, 0, 1}, {0, 1, 2}, {1, 1, 2}, {2, 1, 0}});
  if (id == "fig5")
    return make_fixture(5, 2, 1,
                        {{0, 0, 1}, {0, 1, 3}, {1, 1, 2}, {2, 0, 1}, {2, 1, 2}, {3, 1, 4}, {4, 1, 1}, {4, 1, 4}});
  if (id == "fig6")
    return make_fixture(3, 2, 2, {{0, 0, 2}, {0, 1, 1}, {1, 1, 0}, {1, 1, 2}, {2, 1, 1}});
  if (id == "fig7")
    return make_fixture(8, 2, 0,
                        {{0, 0, 1}, {1, 0, 0}, {1, 1, 2}, {2, 0, 3}, {2, 1, 1}, {3, 1, 4}, {4, 0, 5},
                         {4, 1, 7}, {5, 0, 4}, {5, 1, 6}, {6, 0, 6}, {6, 1, 5}, {7, 1, 2}});
  if (id == "fig8")
    return make_fixture(2, 2, 0, {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}});
  fail(Errc::UnknownFixture, "no fixture named '" + id + "'");
}

// ---------------------------------------------------------------------------
// Density of short exploded witnesses
// ---------------------------------------------------------------------------

namespace {

void check_density_args(int n, int b, const Rational& epsilon) {
  if (n < 1 || n % 2 == 0) fail(Errc::BadArgument, "density requires odd n >= 1");
  if (b < 1 || b > 4) fail(Errc::BadBase, "density base must be in 1..4");
  if (epsilon.num == 0) fail(Errc::BadEpsilon, "epsilon must be > 0");
}

// floor((1/2 + 1/(2b) + eps) * n) - (m+1), the conflict budget.
int conflict_budget(int n, int b, const Rational& epsilon, int m) {
  // theta = (b + 1) / (2b) + eps
  Rational theta = Rational::make(Count(b + 1) * epsilon.den + 2 * b * epsilon.num,
                                  Count(2) * b * epsilon.den);
  Count floor_theta_n = (theta.num * n) / theta.den;
  Count t = floor_theta_n - (m + 1);
  if (t < 0) return -1;
  if (t > m) return m;
  return static_cast<int>(t);
}

}  // namespace

Rational density_fraction(int n, int b, const Rational& epsilon) {
  check_density_args(n, b, epsilon);
  const int m = (n - 1) / 2;
  const int t = conflict_budget(n, b, epsilon, m);
  if (t < 0) return Rational::make(0, 1);
  // sum_{k<=t} C(m,k) (b-1)^{m-k} / b^m
  Count num = 0;
  Count binom = 1;  // C(m,0)
  for (int k = 0; k <= t; ++k) {
    Count pw = 1;
    for (int i = 0; i < m - k; ++i) pw *= (b - 1);
    num += binom * pw;
    binom = binom * (m - k) / (k + 1);
  }
  Count den = 1;
  for (int i = 0; i < m; ++i) den *= b;
  return Rational::make(num, den);
}

Rational density_fraction_by_enumeration(int n, int b, const Rational& epsilon) {
  check_density_args(n, b, epsilon);
  Count total = 1;
  for (int i = 0; i < n; ++i) total *= b;
  if (total > (Count(1) << 20))
    fail(Errc::LengthTooLarge, "enumeration cross-check guarded at 2^20 words");
  // states <= theta*n  <=>  states * (2b * eps_den) <= (b+1)*eps_den*n + 2b*eps_num*n
  Count rhs = (Count(b + 1) * epsilon.den + Count(2) * b * epsilon.num) * n;
  Count scale = Count(2) * b * epsilon.den;
  Count hits = 0;
  Word x;
  x.base = b;
  x.symbols.assign(static_cast<size_t>(n), 0);
  std::uint64_t words = static_cast<std::uint64_t>(total);
  for (std::uint64_t code = 0; code < words; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < n; ++i) {
      x.symbols[static_cast<size_t>(i)] = static_cast<Symbol>(rest % static_cast<unsigned>(b));
      rest /= static_cast<unsigned>(b);
    }
    if (Count(exploded_kayleigh(x).num_states) * scale <= rhs) ++hits;
  }
  return Rational::make(hits, total);
}

}  // namespace autocomp
