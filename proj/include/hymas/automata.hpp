#pragma once

#include <string>
#include <vector>

#include "hymas/alphabet.hpp"
#include "hymas/posbool.hpp"

namespace hymas {

/// Alternating parity automaton, min-even acceptance: a run tree is accepting
/// iff on every branch the minimal color occurring infinitely often is even.
struct Apa {
  Alphabet alphabet;
  StateId init = 0;
  std::vector<int> color;  // per state
  PosBoolPool pool;
  std::vector<PosBool> delta;  // dense [state * |Sigma| + letter]

  std::size_t num_states() const { return color.size(); }
  PosBool d(StateId q, Letter l) const { return delta[q * alphabet.size() + l]; }
  int max_color() const {
    int m = 0;
    for (int c : color) m = std::max(m, c);
    return m;
  }
  std::string dump() const;
};

/// Nondeterministic Buechi automaton.  An empty successor set is a rejecting
/// dead end.
struct Nba {
  Alphabet alphabet;
  StateId init = 0;
  std::vector<char> accepting;
  std::vector<std::vector<StateId>> delta;  // [state * |Sigma| + letter]

  std::size_t num_states() const { return accepting.size(); }
  const std::vector<StateId>& d(StateId q, Letter l) const {
    return delta[q * alphabet.size() + l];
  }
  std::string dump() const;
};

/// Deterministic parity automaton (min-even).
struct Dpa {
  Alphabet alphabet;
  StateId init = 0;
  std::vector<int> color;
  std::vector<StateId> delta;  // [state * |Sigma| + letter], total

  std::size_t num_states() const { return color.size(); }
  StateId d(StateId q, Letter l) const { return delta[q * alphabet.size() + l]; }
  int max_color() const {
    int m = 0;
    for (int c : color) m = std::max(m, c);
    return m;
  }
  std::string dump() const;
};

/// Runs the DPA on the lasso until a (cycle position, state) pair repeats and
/// checks the minimal color on the repeating segment.
bool dpa_member_lasso(const Dpa& d, const LassoWord& w);

/// Membership of an ultimately periodic word in an NBA, decided by a
/// product-graph search for a reachable accepting cycle.
bool nba_member_lasso(const Nba& n, const LassoWord& w);

/// True iff the APA has an accepting run tree on the word; decided by
/// building the acceptance parity game and solving it (see games.hpp).
bool apa_member_lasso(const Apa& a, const LassoWord& w);

/// An APA whose every transition is a single state reference, viewed as the
/// DPA it is.  Used for tests and for re-entering the alternating pipeline.
Apa dpa_to_apa(const Dpa& d);

/// NBA as an APA with colors {0,1}: disjunction of successors, accepting
/// states colored 0.
Apa nba_to_apa(const Nba& n);

}  // namespace hymas
