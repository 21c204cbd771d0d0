#include "autocomp/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace autocomp {

std::string to_dot(const Nfa& m) {
  validate(m);
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  start [shape=point];\n";
  for (int s = 0; s < m.num_states; ++s) {
    out << "  q" << s << " [shape=" << (s == m.accept ? "doublecircle" : "circle") << "];\n";
  }
  out << "  start -> q" << m.initial << ";\n";
  // merge parallel symbols into one edge label, symbols ascending
  std::map<std::pair<State, State>, std::vector<int>> labels;
  for (const Transition& t : m.transitions)
    labels[{t.from, t.to}].push_back(t.symbol);
  for (auto& [pair, syms] : labels) {
    std::sort(syms.begin(), syms.end());
    out << "  q" << pair.first << " -> q" << pair.second << " [label=\"";
    for (size_t i = 0; i < syms.size(); ++i) {
      if (i) out << ",";
      out << syms[i];
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace autocomp
