#include "autocomp/state_sequence.hpp"

#include <algorithm>

namespace autocomp {

int StateSequence::num_states() const {
  int mx = -1;
  for (int v : entries) mx = std::max(mx, v);
  return mx + 1;
}

bool is_restricted_growth(const std::vector<int>& entries) {
  int mx = -1;
  for (int v : entries) {
    if (v < 0 || v > mx + 1) return false;
    mx = std::max(mx, v);
  }
  return true;
}

std::string format_sequence(const StateSequence& s) {
  bool digits = std::all_of(s.entries.begin(), s.entries.end(), [](int v) { return v <= 9; });
  std::string out;
  for (size_t i = 0; i < s.entries.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + s.entries[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(s.entries[i]);
    }
  }
  return out;
}

StateSequence parse_sequence(const std::string& text) {
  StateSequence s;
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      std::string part = text.substr(pos, comma - pos);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::BadArgument, "bad state sequence entry '" + part + "'");
      s.entries.push_back(std::stoi(part));
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') fail(Errc::BadArgument, "bad state sequence digit");
      s.entries.push_back(c - '0');
    }
  }
  if (!is_restricted_growth(s.entries))
    fail(Errc::BadArgument, "sequence violates restricted growth: " + text);
  return s;
}

Nfa induced_nfa(const StateSequence& s, const Word& w) {
  if (s.size() != w.size() + 1)
    fail(Errc::LengthMismatch, "sequence length " + std::to_string(s.size()) +
                                   " does not match word length " + std::to_string(w.size()) + " + 1");
  if (!is_restricted_growth(s.entries))
    fail(Errc::BadArgument, "sequence violates restricted growth");
  Nfa m;
  m.num_states = std::max(1, s.num_states());
  m.alphabet_size = w.base;
  m.initial = 0;
  m.accept = s.entries.empty() ? 0 : s.entries.back();
  for (int i = 0; i < w.size(); ++i)
    m.transitions.push_back({s[i], w[i], s[i + 1]});
  std::sort(m.transitions.begin(), m.transitions.end());
  m.transitions.erase(std::unique(m.transitions.begin(), m.transitions.end()),
                      m.transitions.end());
  return m;
}

namespace {

void enumerate_rec(std::vector<int>& cur, int mx, int length, int max_states,
                   const std::function<void(const StateSequence&)>& fn,
                   StateSequence& scratch) {
  if (static_cast<int>(cur.size()) == length) {
    scratch.entries = cur;
    fn(scratch);
    return;
  }
  int limit = std::min(mx + 1, max_states - 1);
  for (int v = 0; v <= limit; ++v) {
    cur.push_back(v);
    enumerate_rec(cur, std::max(mx, v), length, max_states, fn, scratch);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_state_sequences(int length, int max_states,
                               const std::function<void(const StateSequence&)>& fn) {
  if (length <= 0 || max_states < 1) {
    if (length == 0) fn(StateSequence{});
    return;
  }
  std::vector<int> cur;
  cur.reserve(static_cast<size_t>(length));
  cur.push_back(0);
  StateSequence scratch;
  enumerate_rec(cur, 0, length, max_states, fn, scratch);
}

void enumerate_state_sequences_with_prefix(const StateSequence& prefix, int length, int max_states,
                                           const std::function<void(const StateSequence&)>& fn) {
  if (!is_restricted_growth(prefix.entries))
    fail(Errc::BadArgument, "prefix violates restricted growth");
  if (prefix.size() > length) return;
  if (prefix.size() == 0) {
    enumerate_state_sequences(length, max_states, fn);
    return;
  }
  if (prefix.num_states() > max_states) return;
  std::vector<int> cur = prefix.entries;
  int mx = 0;
  for (int v : cur) mx = std::max(mx, v);
  StateSequence scratch;
  enumerate_rec(cur, mx, length, max_states, fn, scratch);
}

std::vector<StateSequence> partition_prefixes(int length, int max_states, int depth) {
  depth = std::min(depth, length);
  std::vector<StateSequence> out;
  enumerate_state_sequences(depth, max_states, [&](const StateSequence& s) { out.push_back(s); });
  return out;
}

Count count_state_sequences(int length, int max_states) {
  if (length == 0) return 1;
  // stirling[k] = S(i, k) rolled over i
  std::vector<Count> stirling(static_cast<size_t>(max_states) + 1, 0);
  stirling[1] = 1;  // S(1,1)
  for (int i = 2; i <= length; ++i)
    for (int k = std::min(i, max_states); k >= 1; --k)
      stirling[static_cast<size_t>(k)] = k * stirling[static_cast<size_t>(k)] +
                                         (k >= 2 ? stirling[static_cast<size_t>(k) - 1] : 0);
  Count total = 0;
  for (int k = 1; k <= max_states; ++k) total += stirling[static_cast<size_t>(k)];
  return total;
}

}  // namespace autocomp
