#include "autocomp/explain.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "autocomp/search.hpp"

namespace autocomp {

namespace {

std::string automaton_key(const Nfa& m) {
  std::ostringstream out;
  out << m.num_states << ';' << m.accept;
  for (const auto& t : m.transitions)
    out << ';' << t.from << ',' << static_cast<int>(t.symbol) << ',' << t.to;
  return out.str();
}

std::string canonical_key(const StateSequence& s, const Word& w) {
  return automaton_key(canonical_form(induced_nfa(s, w)));
}

}  // namespace

ExplanationReport explain(const Word& x, int b, Mode mode, PValueCache* cache, int jobs,
                          const Guards& guards) {
  const auto t0 = std::chrono::steady_clock::now();
  if (static_cast<int>(x.size()) > guards.pvalue_max_n)
    fail(Errc::WordTooLong, "explanations need exact p-values; length guard exceeded");
  const int n = static_cast<int>(x.size());

  ExplanationReport r;
  r.frontier = structure_frontier(x, b, mode, jobs, guards);
  r.word = r.frontier.word;
  r.base = b;
  r.mode = mode;

  int best = -1;
  for (std::size_t i = 0; i < r.frontier.points.size(); ++i) {
    const auto& pt = r.frontier.points[i];
    r.frontier_pvalues.push_back(pvalue(pt.states, pt.log_acc, n, b, mode, cache, jobs, guards));
    if (best < 0 ||
        r.frontier_pvalues[i].ratio() < r.frontier_pvalues[static_cast<std::size_t>(best)].ratio())
      best = static_cast<int>(i);
  }
  const auto& opt = r.frontier.points[static_cast<std::size_t>(best)];
  r.optimal_states = opt.states;
  r.optimal_log_acc = opt.log_acc;
  r.p_value = r.frontier_pvalues[static_cast<std::size_t>(best)];

  SequenceSearcher ss;
  ss.set_word(r.word);
  std::map<std::string, StateSequence> by_class;
  ss.enumerate_qualifying(r.optimal_states, r.optimal_log_acc, mode, [&](const StateSequence& s) {
    by_class.emplace(canonical_key(s, r.word), s);  // first hit is lexicographically least
    return true;
  });
  r.candidates_considered = ss.leaves();
  for (auto& [key, s] : by_class) r.witnesses.push_back(s);
  std::sort(r.witnesses.begin(), r.witnesses.end());

  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool witnesses_disjoint(const Word& x, const std::vector<StateSequence>& a,
                        const std::vector<StateSequence>& b) {
  std::set<std::string> keys;
  for (const auto& s : a) keys.insert(canonical_key(s, x));
  for (const auto& s : b)
    if (keys.count(canonical_key(s, x))) return false;
  return true;
}

ModeComparison compare_modes(const Word& x, int b, PValueCache* cache, int jobs,
                             const Guards& guards) {
  ModeComparison c;
  c.delta_report = explain(x, b, Mode::delta, cache, jobs, guards);
  c.pi_report = explain(x, b, Mode::pi, cache, jobs, guards);
  c.omega_report = explain(x, b, Mode::omega, cache, jobs, guards);
  const Word& w = c.pi_report.word;
  c.disjoint_delta_pi = witnesses_disjoint(w, c.delta_report.witnesses, c.pi_report.witnesses);
  c.disjoint_delta_omega =
      witnesses_disjoint(w, c.delta_report.witnesses, c.omega_report.witnesses);
  c.disjoint_pi_omega = witnesses_disjoint(w, c.pi_report.witnesses, c.omega_report.witnesses);
  return c;
}

}  // namespace autocomp
