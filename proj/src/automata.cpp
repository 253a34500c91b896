#include "hymas/automata.hpp"

#include <map>
#include <sstream>

#include "hymas/games.hpp"

namespace hymas {

std::string Alphabet::letter_name(Letter l) const {
  if (!structured_) return "l" + std::to_string(l);
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out << ",";
    out << vars_[i] << "->s" << state_of(l, i);
  }
  out << "]";
  return out.str();
}

std::string Apa::dump() const {
  std::ostringstream out;
  out << "apa states=" << num_states() << " alphabet=" << alphabet.size()
      << " init=q" << init << "\n";
  for (StateId q = 0; q < num_states(); ++q) {
    out << "q" << q << " color=" << color[q] << "\n";
    for (Letter l = 0; l < alphabet.size(); ++l)
      out << "  " << alphabet.letter_name(l) << " -> " << pool.to_string(d(q, l))
          << "\n";
  }
  return out.str();
}

std::string Nba::dump() const {
  std::ostringstream out;
  out << "nba states=" << num_states() << " alphabet=" << alphabet.size()
      << " init=q" << init << "\n";
  for (StateId q = 0; q < num_states(); ++q) {
    out << "q" << q << (accepting[q] ? " accepting" : "") << "\n";
    for (Letter l = 0; l < alphabet.size(); ++l) {
      out << "  " << alphabet.letter_name(l) << " ->";
      for (StateId s : d(q, l)) out << " q" << s;
      out << "\n";
    }
  }
  return out.str();
}

std::string Dpa::dump() const {
  std::ostringstream out;
  out << "dpa states=" << num_states() << " alphabet=" << alphabet.size()
      << " init=q" << init << "\n";
  for (StateId q = 0; q < num_states(); ++q) {
    out << "q" << q << " color=" << color[q] << "\n";
    for (Letter l = 0; l < alphabet.size(); ++l)
      out << "  " << alphabet.letter_name(l) << " -> q" << d(q, l) << "\n";
  }
  return out.str();
}

bool dpa_member_lasso(const Dpa& d, const LassoWord& w) {
  if (w.cycle.empty()) throw ValidationError("lasso cycle must be nonempty");
  for (Letter l : w.prefix)
    if (l >= d.alphabet.size()) throw ValidationError("letter outside alphabet");
  for (Letter l : w.cycle)
    if (l >= d.alphabet.size()) throw ValidationError("letter outside alphabet");

  // run until a (collapsed position, state) pair repeats
  std::map<std::pair<std::size_t, StateId>, std::size_t> seen;
  std::vector<int> colors_along;  // color of the state at each step index
  std::size_t pos = 0;
  StateId q = d.init;
  std::size_t step = 0;
  for (;;) {
    auto key = std::make_pair(pos, q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      int min_color = d.color[q];
      for (std::size_t t = it->second; t < step; ++t)
        min_color = std::min(min_color, colors_along[t]);
      return min_color % 2 == 0;
    }
    seen[key] = step;
    colors_along.push_back(d.color[q]);
    q = d.d(q, w.at(pos));
    pos = w.next_pos(pos);
    ++step;
  }
}

bool nba_member_lasso(const Nba& n, const LassoWord& w) {
  if (w.cycle.empty()) throw ValidationError("lasso cycle must be nonempty");
  // product of the automaton with the collapsed word positions; accepting iff
  // some accepting state lies on a cycle reachable from the initial product
  // node.  Nodes: (pos, state).
  std::size_t len = w.length();
  std::size_t nn = len * n.num_states();
  auto id = [&](std::size_t pos, StateId q) { return pos * n.num_states() + q; };

  std::vector<char> reach(nn, 0);
  std::vector<std::size_t> stack{id(0, n.init)};
  reach[stack[0]] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    std::size_t pos = v / n.num_states();
    StateId q = static_cast<StateId>(v % n.num_states());
    for (StateId s : n.d(q, w.at(pos))) {
      std::size_t u = id(w.next_pos(pos), s);
      if (!reach[u]) {
        reach[u] = 1;
        stack.push_back(u);
      }
    }
  }

  // For each reachable accepting node, check whether it can reach itself.
  for (std::size_t v = 0; v < nn; ++v) {
    if (!reach[v]) continue;
    StateId q = static_cast<StateId>(v % n.num_states());
    if (!n.accepting[q]) continue;
    std::vector<char> seen(nn, 0);
    std::vector<std::size_t> st{v};
    bool cycle = false;
    while (!st.empty() && !cycle) {
      std::size_t u = st.back();
      st.pop_back();
      std::size_t pos = u / n.num_states();
      StateId p = static_cast<StateId>(u % n.num_states());
      for (StateId s : n.d(p, w.at(pos))) {
        std::size_t t = id(w.next_pos(pos), s);
        if (t == v) {
          cycle = true;
          break;
        }
        if (!seen[t]) {
          seen[t] = 1;
          st.push_back(t);
        }
      }
    }
    if (cycle) return true;
  }
  return false;
}

bool apa_member_lasso(const Apa& a, const LassoWord& w) {
  if (w.cycle.empty()) throw ValidationError("lasso cycle must be nonempty");
  for (Letter l : w.prefix)
    if (l >= a.alphabet.size()) throw ValidationError("letter outside alphabet");
  for (Letter l : w.cycle)
    if (l >= a.alphabet.size()) throw ValidationError("letter outside alphabet");
  ParityGame g = apa_word_game(a, w);
  WinningRegions r = solve(g);
  return r.even_wins[g.initial] != 0;
}

Apa dpa_to_apa(const Dpa& d) {
  Apa a;
  a.alphabet = d.alphabet;
  a.init = d.init;
  a.color = d.color;
  a.delta.resize(d.delta.size());
  for (std::size_t i = 0; i < d.delta.size(); ++i)
    a.delta[i] = a.pool.state(d.delta[i]);
  return a;
}

Apa nba_to_apa(const Nba& n) {
  Apa a;
  a.alphabet = n.alphabet;
  a.init = n.init;
  a.color.resize(n.num_states());
  for (StateId q = 0; q < n.num_states(); ++q) a.color[q] = n.accepting[q] ? 0 : 1;
  a.delta.resize(n.delta.size());
  for (std::size_t i = 0; i < n.delta.size(); ++i) {
    PosBool acc = PosBoolPool::ff();
    for (StateId s : n.delta[i]) acc = a.pool.disj(acc, a.pool.state(s));
    a.delta[i] = acc;
  }
  return a;
}

}  // namespace hymas
