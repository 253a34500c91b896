#pragma once

#include <string>
#include <vector>

#include "hymas/automata.hpp"

namespace hymas {

/// Two-player min-even parity game.  Even is the existential/disjunctive
/// player, Odd the universal/conjunctive one.  A position without successors
/// loses for its owner.
struct ParityGame {
  enum class Owner : char { Even, Odd };

  struct Position {
    Owner owner;
    int color;
    std::vector<int> succs;
  };

  std::vector<Position> positions;
  int initial = 0;

  std::size_t size() const { return positions.size(); }
  int max_color() const {
    int m = 0;
    for (const auto& p : positions) m = std::max(m, p.color);
    return m;
  }
  std::string dump() const;
};

/// Positional winning regions and strategies.
struct WinningRegions {
  std::vector<char> even_wins;       // per position
  std::vector<int> even_strategy;    // successor or -1
  std::vector<int> odd_strategy;
};

/// Zielonka's recursive algorithm.
WinningRegions solve(const ParityGame& g);

/// Checks that the regions are consistent winning certificates: strategies
/// stay inside the owner's region and every cycle of the induced subgraph has
/// min color of the winning parity (checked per SCC).
bool verify_strategy(const ParityGame& g, const WinningRegions& r);

/// Acceptance game of an APA on a lasso word: Even resolves disjunctions,
/// Odd conjunctions; state positions carry the automaton color, connective
/// positions are neutral.  Even wins the initial position iff the word has an
/// accepting run tree.
ParityGame apa_word_game(const Apa& a, const LassoWord& w);

}  // namespace hymas
