#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hymas/basics.hpp"
#include "hymas/formula.hpp"

namespace hymas {

/// Partial action vector: (agent index, action index) pairs, agent-sorted.
using ActionVector = std::vector<std::pair<int, int>>;

/// Finite concurrent game structure with a total deterministic transition
/// table.  States, agents and actions are referenced by name externally and
/// by dense index internally.
class Cgs {
public:
  struct State {
    std::string name;
    std::set<std::string> labels;
  };

  std::vector<State> states;
  StateId init = 0;
  std::vector<std::string> agents;                 // ordered as declared
  std::vector<std::vector<std::string>> actions;   // per agent, declared order
  std::set<std::string> ap;                        // declared proposition set

  std::size_t num_states() const { return states.size(); }
  std::size_t num_agents() const { return agents.size(); }

  int state_index(const std::string& name) const;
  int agent_index(const std::string& name) const;
  int action_index(int agent, const std::string& name) const;

  bool has_label(StateId s, const std::string& a) const {
    return states[s].labels.count(a) > 0;
  }
  void add_label(StateId s, const std::string& a) {
    states[s].labels.insert(a);
    ap.insert(a);
  }

  std::set<std::string> agent_name_set() const {
    return {agents.begin(), agents.end()};
  }

  /// Number of full action vectors.
  std::size_t num_vectors() const { return vector_count_; }

  /// Dense index of a full action vector (one action index per agent).
  std::size_t vector_index(const std::vector<int>& acts) const;

  /// Inverse of vector_index.
  std::vector<int> vector_actions(std::size_t idx) const;

  /// Transition function on full vectors; protocol rerouting already applied.
  StateId successor(StateId s, const std::vector<int>& acts) const;
  StateId successor_by_index(StateId s, std::size_t vec_idx) const {
    return kappa_[s * vector_count_ + reroute_[s * vector_count_ + vec_idx]];
  }

  /// Builds the table; called once after parsing/construction.  Applies
  /// protocol rerouting, then checks totality and determinism.  Each map
  /// assigns targets to full-vector indices of one state.
  void finalize(const std::vector<std::map<std::size_t, StateId>>& rows_by_state,
                const std::map<std::pair<StateId, int>, std::set<int>>& protocol);

  /// Bounded play: p(0)=s, p(t+1)=kappa(p(t), joint action at t), where each
  /// agent's action is drawn from its strategy on the prefix p[0..t].
  /// Strategies map state-index sequences to action indices.
  template <typename Strategy>
  std::vector<StateId> play_prefix(StateId s, const std::vector<Strategy>& strats,
                                   std::size_t horizon) const {
    std::vector<StateId> p{s};
    std::vector<int> acts(num_agents());
    for (std::size_t t = 0; t < horizon; ++t) {
      for (std::size_t i = 0; i < num_agents(); ++i) acts[i] = strats[i](p);
      p.push_back(successor(p.back(), acts));
    }
    return p;
  }

private:
  std::size_t vector_count_ = 0;
  std::vector<StateId> kappa_;        // [state * vector_count + vec]
  std::vector<std::size_t> reroute_;  // [state * vector_count + vec] -> vec'
};

/// Parses the `.cgm` model format.
Cgs parse_cgs(const std::string& text);

/// All partial action vectors over `coalition` (agent indices into g) that
/// satisfy the sharing constraint, in lexicographic order by agent then
/// action index.  Sharing classes are formed by union-find over xi; a class
/// whose members have no common action alphabet is an error.
std::vector<ActionVector> enumerate_vectors(const Cgs& g,
                                            const std::vector<int>& coalition,
                                            const SharingConstraint& xi);

/// Applies a partial vector on top of another (domains must be disjoint).
ActionVector merge_vectors(const ActionVector& a, const ActionVector& b);

}  // namespace hymas
