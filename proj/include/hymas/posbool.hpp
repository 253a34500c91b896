#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hymas/basics.hpp"

namespace hymas {

/// Node id inside a PosBoolPool.
using PosBool = std::uint32_t;

/// Hash-consed DAG of positive Boolean formulas over automaton states.
///
/// Ids 0 and 1 are reserved for the constants false and true.  Smart
/// constructors apply constant absorption and deduplicate structurally equal
/// nodes, so the number of distinct subterms stays small even for the large
/// disjunctions/conjunctions built by the quantifier-elimination product.
class PosBoolPool {
public:
  enum class Kind : std::uint8_t { False, True, State, And, Or };

  struct Node {
    Kind kind;
    StateId state = 0;  // for State
    PosBool lhs = 0, rhs = 0;  // for And/Or
  };

  PosBoolPool() {
    nodes_.push_back({Kind::False, 0, 0, 0});
    nodes_.push_back({Kind::True, 0, 0, 0});
  }

  static constexpr PosBool ff() { return 0; }
  static constexpr PosBool tt() { return 1; }

  PosBool state(StateId q) {
    std::uint64_t key = make_key(Kind::State, q, 0);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    nodes_.push_back({Kind::State, q, 0, 0});
    PosBool id = static_cast<PosBool>(nodes_.size() - 1);
    memo_.emplace(key, id);
    return id;
  }

  PosBool conj(PosBool a, PosBool b) {
    if (a == ff() || b == ff()) return ff();
    if (a == tt()) return b;
    if (b == tt()) return a;
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    return intern(Kind::And, a, b);
  }

  PosBool disj(PosBool a, PosBool b) {
    if (a == tt() || b == tt()) return tt();
    if (a == ff()) return b;
    if (b == ff()) return a;
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    return intern(Kind::Or, a, b);
  }

  PosBool conj_all(const std::vector<PosBool>& xs) {
    PosBool r = tt();
    for (PosBool x : xs) r = conj(r, x);
    return r;
  }

  PosBool disj_all(const std::vector<PosBool>& xs) {
    PosBool r = ff();
    for (PosBool x : xs) r = disj(r, x);
    return r;
  }

  const Node& node(PosBool id) const { return nodes_[id]; }
  std::size_t num_nodes() const { return nodes_.size(); }

  /// X |= theta, where X is given as a characteristic vector over states.
  bool eval(PosBool id, const std::vector<char>& member) const {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case Kind::False: return false;
      case Kind::True: return true;
      case Kind::State: return n.state < member.size() && member[n.state];
      case Kind::And: return eval(n.lhs, member) && eval(n.rhs, member);
      case Kind::Or: return eval(n.lhs, member) || eval(n.rhs, member);
    }
    return false;
  }

  /// All minimal satisfying state sets, each sorted ascending.
  std::vector<std::vector<StateId>> minimal_models(PosBool id) const;

  /// Collects every state referenced below `id`.
  void collect_states(PosBool id, std::vector<char>& seen) const {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case Kind::State:
        if (n.state >= seen.size()) seen.resize(n.state + 1, 0);
        seen[n.state] = 1;
        break;
      case Kind::And:
      case Kind::Or:
        collect_states(n.lhs, seen);
        collect_states(n.rhs, seen);
        break;
      default: break;
    }
  }

  /// Prefix-notation dump, n-ary flattened: (and q0 (or q1 q2)).
  std::string to_string(PosBool id) const;

  /// Structural copy of `id` from `src` into this pool, remapping states.
  PosBool import(const PosBoolPool& src, PosBool id,
                 const std::vector<PosBool>& state_subst);

private:
  std::uint64_t make_key(Kind k, std::uint64_t a, std::uint64_t b) const {
    return (static_cast<std::uint64_t>(k) << 60) ^ (a << 30) ^ b;
  }

  PosBool intern(Kind k, PosBool a, PosBool b) {
    std::uint64_t key = make_key(k, a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    nodes_.push_back({k, 0, a, b});
    PosBool id = static_cast<PosBool>(nodes_.size() - 1);
    memo_.emplace(key, id);
    return id;
  }

  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, PosBool> memo_;
};

}  // namespace hymas
