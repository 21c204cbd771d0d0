// ac — automatic-complexity toolkit command line.
//
// Subcommands: complexity, structure, pvalue, explain, verify, census, dot.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard
// violation. Output is deterministic given (arguments, cache state); timing
// goes to stderr only.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autocomp/complexity.hpp"
#include "autocomp/constructions.hpp"
#include "autocomp/counting.hpp"
#include "autocomp/dot.hpp"
#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "autocomp/explain.hpp"
#include "autocomp/nfa.hpp"
#include "autocomp/pvalue.hpp"
#include "autocomp/rational.hpp"
#include "autocomp/search.hpp"
#include "autocomp/state_sequence.hpp"
#include "autocomp/verify.hpp"

namespace {

using autocomp::Config;
using autocomp::Count;
using autocomp::Errc;
using autocomp::Mode;
using autocomp::Rational;
using autocomp::Word;
using nlohmann::json;

enum class Format { tsv, json };

struct CliState {
  Config config;
  Format format = Format::tsv;
};

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void kv(const std::string& key, const std::string& value) {
  std::cout << key << '\t' << value << '\n';
}

// Base is inferred from the largest symbol; an explicit --base may only widen
// the alphabet, never shrink it below a symbol that occurs.
Word parse_cli_word(const std::string& text, const std::optional<int>& base) {
  Word w = autocomp::parse_word(text);
  if (base) {
    if (*base < w.base)
      autocomp::fail(Errc::BadBase, "--base " + std::to_string(*base) +
                                        " is below the smallest alphabet that fits the word (" +
                                        std::to_string(w.base) + ")");
    w = autocomp::parse_word(text, *base);
  }
  return w;
}

Mode require_mode(const std::string& name) {
  const auto m = autocomp::parse_mode(name);
  if (!m) autocomp::fail(Errc::BadArgument, "unknown mode '" + name + "'");
  return *m;
}

autocomp::PValueCache make_cache(const Config& config) {
  if (config.cache_dir.empty()) return autocomp::PValueCache("");
  return autocomp::PValueCache(config.cache_dir + "/pvalue-cache.txt");
}

json log_acc_json(const autocomp::LogAcc& v) {
  if (v.is_infinite()) return json("inf");
  return json(v.value());
}

json pvalue_json(const autocomp::PValue& p) {
  return json{{"fraction", p.fraction()}, {"decimal", p.decimal()}, {"rounded", p.rounded2()}};
}

json report_json(const autocomp::ExplanationReport& r) {
  json frontier = json::array();
  for (size_t i = 0; i < r.frontier.points.size(); ++i) {
    const auto& pt = r.frontier.points[i];
    frontier.push_back(json{{"states", pt.states},
                            {"log_acc", pt.log_acc},
                            {"p_value", pvalue_json(r.frontier_pvalues[i])}});
  }
  json witnesses = json::array();
  for (const auto& s : r.witnesses) witnesses.push_back(autocomp::format_sequence(s));
  return json{{"word", autocomp::format_word(r.word)},
              {"base", r.base},
              {"mode", autocomp::mode_name(r.mode)},
              {"frontier", frontier},
              {"optimal_states", r.optimal_states},
              {"optimal_log_acc", r.optimal_log_acc},
              {"p_value", pvalue_json(r.p_value)},
              {"witnesses", witnesses},
              {"candidates_considered", r.candidates_considered}};
}

void print_report_tsv(const autocomp::ExplanationReport& r) {
  kv("word", autocomp::format_word(r.word));
  kv("base", std::to_string(r.base));
  kv("mode", autocomp::mode_name(r.mode));
  for (size_t i = 0; i < r.frontier.points.size(); ++i) {
    const auto& pt = r.frontier.points[i];
    std::cout << "frontier\t" << pt.states << '\t' << pt.log_acc << '\t'
              << r.frontier_pvalues[i].fraction() << '\t' << r.frontier_pvalues[i].rounded2()
              << '\n';
  }
  kv("optimal_states", std::to_string(r.optimal_states));
  kv("optimal_log_acc", std::to_string(r.optimal_log_acc));
  kv("p_value", r.p_value.fraction());
  kv("p_value_decimal", r.p_value.decimal());
  kv("p_value_rounded", r.p_value.rounded2());
  for (const auto& s : r.witnesses) kv("witness", autocomp::format_sequence(s));
  kv("candidates_considered", std::to_string(r.candidates_considered));
}

// ---------------------------------------------------------------------------
// complexity
// ---------------------------------------------------------------------------

int run_complexity(const CliState& st, const std::string& word_text,
                   const std::optional<int>& base, const std::string& mode_name) {
  const Word w = parse_cli_word(word_text, base);
  autocomp::StateSequence witness;
  int value = 0;
  bool have_witness = true;
  if (mode_name == "dagger") {
    value = autocomp::a_dagger(w, st.config.guards);
    have_witness = false;
  } else if (mode_name == "aminus" || mode_name == "delta") {
    value = autocomp::a_minus(w, &witness, st.config.guards);
  } else if (mode_name == "pi") {
    value = autocomp::a_pi(w, &witness, st.config.guards);
  } else {
    value = autocomp::a_omega(w, &witness, st.config.guards);
  }
  if (st.format == Format::json) {
    json j{{"word", autocomp::format_word(w)},
           {"base", w.base},
           {"mode", mode_name},
           {"value", value}};
    if (have_witness) j["witness_sequence"] = autocomp::format_sequence(witness);
    emit_json(j);
  } else {
    kv("word", autocomp::format_word(w));
    kv("base", std::to_string(w.base));
    kv("mode", mode_name);
    kv("value", std::to_string(value));
    if (have_witness) kv("witness_sequence", autocomp::format_sequence(witness));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// structure
// ---------------------------------------------------------------------------

int run_structure(const CliState& st, const std::string& word_text, const std::optional<int>& base,
                  const std::string& mode_name) {
  const Word w = parse_cli_word(word_text, base);
  const Mode mode = require_mode(mode_name);
  const int n = w.size();
  const auto sf =
      autocomp::structure_frontier(w, w.base, mode, st.config.jobs, st.config.guards);
  std::vector<std::pair<int, autocomp::LogAcc>> h_table;
  for (int k = 1; k <= autocomp::hyde_bound(n); ++k)
    h_table.emplace_back(k, autocomp::h(w, k, w.base, mode, st.config.guards));
  std::vector<std::pair<int, int>> hstar_table;
  for (int m = 0; m <= n; ++m)
    hstar_table.emplace_back(m, autocomp::h_star(w, m, w.base, mode, nullptr, st.config.guards));

  if (st.format == Format::json) {
    json frontier = json::array();
    for (const auto& pt : sf.points)
      frontier.push_back(json{{"states", pt.states}, {"log_acc", pt.log_acc}});
    json h_rows = json::array();
    for (const auto& [k, v] : h_table)
      h_rows.push_back(json{{"states", k}, {"log_acc", log_acc_json(v)}});
    json hstar_rows = json::array();
    for (const auto& [m, q] : hstar_table)
      hstar_rows.push_back(json{{"log_acc", m}, {"states", q}});
    emit_json(json{{"word", autocomp::format_word(w)},
                   {"base", w.base},
                   {"mode", mode_name},
                   {"frontier", frontier},
                   {"h", h_rows},
                   {"h_star", hstar_rows}});
  } else {
    kv("word", autocomp::format_word(w));
    kv("base", std::to_string(w.base));
    kv("mode", mode_name);
    for (const auto& pt : sf.points)
      std::cout << "frontier\t" << pt.states << '\t' << pt.log_acc << '\n';
    for (const auto& [k, v] : h_table)
      std::cout << "h\t" << k << '\t' << autocomp::to_string(v) << '\n';
    for (const auto& [m, q] : hstar_table) std::cout << "hstar\t" << m << '\t' << q << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// pvalue
// ---------------------------------------------------------------------------

int run_pvalue(const CliState& st, int q, int m, int n, int b, const std::string& mode_name) {
  const Mode mode = require_mode(mode_name);
  auto cache = make_cache(st.config);
  const auto pv =
      autocomp::pvalue(q, m, n, b, mode, &cache, st.config.jobs, st.config.guards);
  if (st.format == Format::json) {
    emit_json(json{{"states", q},
                   {"log_acc", m},
                   {"length", n},
                   {"base", b},
                   {"mode", mode_name},
                   {"p_value", pvalue_json(pv)}});
  } else {
    kv("states", std::to_string(q));
    kv("log_acc", std::to_string(m));
    kv("length", std::to_string(n));
    kv("base", std::to_string(b));
    kv("mode", mode_name);
    kv("p_value", pv.fraction());
    kv("p_value_decimal", pv.decimal());
    kv("p_value_rounded", pv.rounded2());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// explain
// ---------------------------------------------------------------------------

int run_explain(const CliState& st, const std::string& word_text, const std::optional<int>& base,
                const std::string& mode_name, bool all_modes) {
  const Word w = parse_cli_word(word_text, base);
  auto cache = make_cache(st.config);
  if (!all_modes) {
    const Mode mode = require_mode(mode_name);
    const auto r = autocomp::explain(w, w.base, mode, &cache, st.config.jobs, st.config.guards);
    if (st.format == Format::json)
      emit_json(report_json(r));
    else
      print_report_tsv(r);
    return 0;
  }
  const auto cmp =
      autocomp::compare_modes(w, w.base, &cache, st.config.jobs, st.config.guards);
  if (st.format == Format::json) {
    emit_json(json{{"word", autocomp::format_word(w)},
                   {"base", w.base},
                   {"delta", report_json(cmp.delta_report)},
                   {"pi", report_json(cmp.pi_report)},
                   {"omega", report_json(cmp.omega_report)},
                   {"disjoint", json{{"delta_pi", cmp.disjoint_delta_pi},
                                     {"delta_omega", cmp.disjoint_delta_omega},
                                     {"pi_omega", cmp.disjoint_pi_omega}}}});
  } else {
    print_report_tsv(cmp.delta_report);
    print_report_tsv(cmp.pi_report);
    print_report_tsv(cmp.omega_report);
    kv("disjoint_delta_pi", cmp.disjoint_delta_pi ? "true" : "false");
    kv("disjoint_delta_omega", cmp.disjoint_delta_omega ? "true" : "false");
    kv("disjoint_pi_omega", cmp.disjoint_pi_omega ? "true" : "false");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const CliState& st, const std::vector<std::string>& ids, bool all,
               const std::string& budget_text) {
  if (all == !ids.empty())
    autocomp::fail(Errc::BadArgument, "pass either theorem ids or --all (not both, not neither)");
  const auto budget = autocomp::parse_budget(budget_text);
  std::vector<autocomp::TheoremReport> reports;
  if (all) {
    reports = autocomp::verify_all(budget, st.config);
  } else {
    for (const auto& id : ids)
      reports.push_back(autocomp::verify_theorem(id, budget, st.config));
  }
  bool all_pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    std::cerr << "# " << r.id << ' ' << r.elapsed_seconds << "s\n";
    if (st.format == Format::json) {
      json j = autocomp::report_to_json(r);
      j.erase("elapsed_seconds");  // timing is not part of the deterministic output
      arr.push_back(std::move(j));
    } else {
      std::cout << r.id << '\t' << (r.pass ? "pass" : "fail") << '\n';
      if (!r.note.empty()) std::cout << "# " << r.id << ": " << r.note << '\n';
    }
  }
  if (st.format == Format::json) emit_json(arr);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

long long pow_ll(int b, int n) {
  long long r = 1;
  for (int i = 0; i < n; ++i) r *= b;
  return r;
}

int run_census(const CliState& st, int n, int b, const std::string& mode_name,
               const std::string& epsilon_text) {
  const bool with_mode = !mode_name.empty();
  const bool with_eps = !epsilon_text.empty();
  if (!with_mode && !with_eps)
    autocomp::fail(Errc::BadArgument, "census requires --mode and/or --epsilon");
  const long long total = pow_ll(b, n);
  if (with_mode && total > 16384)
    autocomp::fail(Errc::LengthTooLarge,
                   "per-word complexity census is limited to b^n <= 16384");
  if (total > (1 << 20))
    autocomp::fail(Errc::LengthTooLarge, "census is limited to b^n <= 2^20 words");
  const Mode mode = with_mode ? require_mode(mode_name) : Mode::pi;
  Rational eps;
  if (with_eps) eps = autocomp::parse_rational(epsilon_text);

  // x is within the density bound iff its deterministic witness has at most
  // (1/2 + 1/(2b) + eps) * n states, i.e. 2*b*eden*states <= n*((b+1)*eden +
  // 2*b*enum) with eps = enum/eden.
  const Count bound_rhs =
      with_eps ? Count(n) * ((b + 1) * eps.den + 2 * b * eps.num) : Count(0);
  const Count bound_scale = Count(2) * b * eps.den;

  std::map<int, long long> histogram;
  long long within = 0;
  json rows = json::array();
  if (st.format == Format::tsv) {
    std::cout << "word";
    if (with_mode) std::cout << "\tvalue";
    if (with_eps) std::cout << "\twitness_states";
    std::cout << '\n';
  }
  for (long long code = 0; code < total; ++code) {
    const Word w =
        autocomp::word_from_code(static_cast<std::uint32_t>(code), n, b);
    std::optional<int> value;
    std::optional<int> witness_states;
    if (with_mode)
      value = autocomp::h_star(w, 0, b, mode, nullptr, st.config.guards);
    if (with_eps) {
      witness_states = autocomp::exploded_kayleigh(w).num_states;
      if (Count(*witness_states) * bound_scale <= bound_rhs) ++within;
    }
    ++histogram[with_mode ? *value : *witness_states];
    if (st.format == Format::tsv) {
      std::cout << autocomp::format_word(w);
      if (value) std::cout << '\t' << *value;
      if (witness_states) std::cout << '\t' << *witness_states;
      std::cout << '\n';
    } else {
      json row{{"word", autocomp::format_word(w)}};
      if (value) row["value"] = *value;
      if (witness_states) row["witness_states"] = *witness_states;
      rows.push_back(std::move(row));
    }
  }

  json summary{{"words", total}};
  json hist_rows = json::array();
  for (const auto& [v, c] : histogram) hist_rows.push_back(json::array({v, c}));
  summary["histogram"] = hist_rows;
  summary["max"] = histogram.empty() ? 0 : histogram.rbegin()->first;
  std::optional<Rational> density;
  std::optional<Rational> closed_form;
  if (with_eps) {
    density = Rational::make(within, total);
    closed_form = autocomp::density_fraction(n, b, eps);
    summary["density"] = json{{"fraction", autocomp::to_fraction_string(*density)},
                              {"decimal", autocomp::to_decimal_string(*density, 6)}};
    summary["density_closed_form"] =
        json{{"fraction", autocomp::to_fraction_string(*closed_form)},
             {"decimal", autocomp::to_decimal_string(*closed_form, 6)}};
    summary["density_agrees"] = (*density == *closed_form);
  }

  if (st.format == Format::json) {
    json out{{"length", n}, {"base", b}, {"rows", rows}, {"summary", summary}};
    if (with_mode) out["mode"] = mode_name;
    if (with_eps) out["epsilon"] = autocomp::to_fraction_string(eps);
    emit_json(out);
  } else {
    std::cout << "# words\t" << total << '\n';
    std::cout << "# histogram";
    for (const auto& [v, c] : histogram) std::cout << ' ' << v << ':' << c;
    std::cout << '\n';
    std::cout << "# max\t" << (histogram.empty() ? 0 : histogram.rbegin()->first) << '\n';
    if (with_eps) {
      std::cout << "# density\t" << autocomp::to_fraction_string(*density) << '\t'
                << autocomp::to_decimal_string(*density, 6) << '\n';
      std::cout << "# density_closed_form\t" << autocomp::to_fraction_string(*closed_form)
                << '\t' << autocomp::to_decimal_string(*closed_form, 6) << '\n';
      std::cout << "# density_agrees\t" << ((*density == *closed_form) ? "true" : "false")
                << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// dot
// ---------------------------------------------------------------------------

int run_dot(const std::string& token, const std::string& construction,
            const std::optional<int>& base) {
  autocomp::Nfa m;
  if (construction.empty()) {
    m = autocomp::fixture(token);
  } else if (construction == "kayleigh") {
    m = autocomp::kayleigh(parse_cli_word(token, base));
  } else if (construction == "exploded") {
    m = autocomp::exploded_kayleigh(parse_cli_word(token, base));
  } else {
    std::vector<Word> words;
    size_t start = 0;
    while (true) {
      const size_t comma = token.find(',', start);
      words.push_back(parse_cli_word(token.substr(start, comma - start), base));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    m = autocomp::chambers_hyde(autocomp::DoubletonQuery::of(std::move(words)));
  }
  std::cout << autocomp::to_dot(m);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automatic-complexity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  CliState st;
  st.config.jobs = std::max(1u, std::thread::hardware_concurrency());
  st.config.cache_dir = autocomp::default_cache_dir();
  std::string format_name = "tsv";
  app.add_option("--jobs", st.config.jobs, "worker count")->check(CLI::Range(1, 256));
  app.add_option("--cache-dir", st.config.cache_dir,
                 "p-value cache directory (empty disables persistence)");
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  auto* guards_group = app.add_option_group("guards", "length and budget guards");
  guards_group->add_option("--frontier-max-n", st.config.guards.frontier_max_n);
  guards_group->add_option("--pvalue-max-n", st.config.guards.pvalue_max_n);
  guards_group->add_option("--doubleton-max-n", st.config.guards.doubleton_max_n);
  guards_group->add_option("--equality-scan-max-len", st.config.guards.equality_scan_max_len);
  guards_group->add_option("--dagger-max-n", st.config.guards.dagger_max_n);
  guards_group->add_option("--dagger-node-budget", st.config.guards.dagger_node_budget);
  guards_group->add_option("--pair-node-budget", st.config.guards.pair_node_budget);

  // complexity
  auto* c_cmd = app.add_subcommand("complexity", "automatic complexity of a word");
  std::string c_word;
  std::optional<int> c_base;
  std::string c_mode;
  c_cmd->add_option("word", c_word, "symbol string over 0-3")->required();
  c_cmd->add_option("--base,-b", c_base, "alphabet size (>= inferred)")->check(CLI::Range(2, 4));
  c_cmd->add_option("--mode", c_mode, "complexity flavor")
      ->required()
      ->check(CLI::IsMember({"delta", "pi", "omega", "dagger", "aminus"}));

  // structure
  auto* s_cmd = app.add_subcommand("structure", "structure function tables of a word");
  std::string s_word;
  std::optional<int> s_base;
  std::string s_mode;
  s_cmd->add_option("word", s_word, "symbol string over 0-3")->required();
  s_cmd->add_option("--base,-b", s_base, "alphabet size (>= inferred)")->check(CLI::Range(2, 4));
  s_cmd->add_option("--mode", s_mode, "acceptance-counting mode")
      ->required()
      ->check(CLI::IsMember({"delta", "pi", "omega"}));

  // pvalue
  auto* p_cmd = app.add_subcommand("pvalue", "exact p-value of a model size");
  int p_q = 0, p_m = 0, p_n = 0, p_b = 2;
  std::string p_mode;
  p_cmd->add_option("--states,-q", p_q, "state budget")->required()->check(CLI::Range(1, 64));
  p_cmd->add_option("--logacc,-m", p_m, "log-acceptance budget")
      ->required()
      ->check(CLI::Range(0, 64));
  p_cmd->add_option("--length,-n", p_n, "word length")->required()->check(CLI::Range(1, 64));
  p_cmd->add_option("--base,-b", p_b, "alphabet size")->check(CLI::Range(2, 4));
  p_cmd->add_option("--mode", p_mode, "acceptance-counting mode")
      ->required()
      ->check(CLI::IsMember({"delta", "pi", "omega"}));

  // explain
  auto* e_cmd = app.add_subcommand("explain", "optimal models and their p-values");
  std::string e_word;
  std::optional<int> e_base;
  std::string e_mode;
  bool e_all = false;
  e_cmd->add_option("word", e_word, "symbol string over 0-3")->required();
  e_cmd->add_option("--base,-b", e_base, "alphabet size (>= inferred)")->check(CLI::Range(2, 4));
  auto* e_mode_opt = e_cmd->add_option("--mode", e_mode, "acceptance-counting mode")
                         ->check(CLI::IsMember({"delta", "pi", "omega"}));
  auto* e_all_opt =
      e_cmd->add_flag("--all-modes", e_all, "explain in all three modes and compare");
  e_mode_opt->excludes(e_all_opt);

  // verify
  auto* v_cmd = app.add_subcommand("verify", "check recorded results against recomputation");
  std::vector<std::string> v_ids;
  bool v_all = false;
  std::string v_budget = "fast";
  v_cmd->add_option("id", v_ids, "result identifiers (see --help-ids)");
  v_cmd->add_flag("--all", v_all, "verify everything the budget allows");
  v_cmd->add_option("--budget", v_budget, "fast | standard | extended | max scan length");

  // census
  auto* n_cmd = app.add_subcommand("census", "per-word table over all words of one length");
  int n_len = 0, n_base = 2;
  std::string n_mode;
  std::string n_eps;
  n_cmd->add_option("--length,-n", n_len, "word length")->required()->check(CLI::Range(1, 20));
  n_cmd->add_option("--base,-b", n_base, "alphabet size")->check(CLI::Range(2, 4));
  n_cmd->add_option("--mode", n_mode, "complexity column mode")
      ->check(CLI::IsMember({"delta", "pi", "omega"}));
  n_cmd->add_option("--epsilon", n_eps,
                    "density margin (rational like 0.1 or 1/10); adds the witness-size column "
                    "and density footer");

  // dot
  auto* d_cmd = app.add_subcommand("dot", "render an automaton as DOT");
  std::string d_token;
  std::string d_construction;
  std::optional<int> d_base;
  d_cmd->add_option("target", d_token,
                    "fixture id, or word (comma-separated pair for chambers-hyde)")
      ->required();
  d_cmd->add_option("--construction", d_construction, "build from the word instead of a fixture")
      ->check(CLI::IsMember({"kayleigh", "exploded", "chambers-hyde"}));
  d_cmd->add_option("--base,-b", d_base, "alphabet size (>= inferred)")->check(CLI::Range(2, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  st.format = (format_name == "json") ? Format::json : Format::tsv;

  try {
    if (*c_cmd) return run_complexity(st, c_word, c_base, c_mode);
    if (*s_cmd) return run_structure(st, s_word, s_base, s_mode);
    if (*p_cmd) return run_pvalue(st, p_q, p_m, p_n, p_b, p_mode);
    if (*e_cmd) {
      if (e_mode.empty() && !e_all)
        autocomp::fail(Errc::BadArgument, "explain requires --mode or --all-modes");
      return run_explain(st, e_word, e_base, e_mode, e_all);
    }
    if (*v_cmd) return run_verify(st, v_ids, v_all, v_budget);
    if (*n_cmd) return run_census(st, n_len, n_base, n_mode, n_eps);
    if (*d_cmd) return run_dot(d_token, d_construction, d_base);
  } catch (const autocomp::Error& e) {
    std::cerr << "error (" << autocomp::errc_name(e.code()) << "): " << e.what() << '\n';
    return autocomp::is_guard_violation(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
