#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hymas/basics.hpp"

namespace hymas {

/// Agent name inside a game structure.
struct AgentId {
  std::string name;
  bool operator==(const AgentId& o) const { return name == o.name; }
  bool operator<(const AgentId& o) const { return name < o.name; }
};

/// Path variable bound by a strategy quantifier.
struct PathVar {
  std::string name;
  bool operator==(const PathVar& o) const { return name == o.name; }
  bool operator<(const PathVar& o) const { return name < o.name; }
};

/// Set of unordered agent pairs forced to play identical strategies.
///
/// Pairs are stored name-sorted; validation checks that each pair lies
/// entirely inside the quantified coalition or entirely inside its
/// complement.
struct SharingConstraint {
  std::set<std::pair<std::string, std::string>> pairs;

  void add(const std::string& a, const std::string& b) {
    if (a <= b)
      pairs.emplace(a, b);
    else
      pairs.emplace(b, a);
  }
  bool empty() const { return pairs.empty(); }
  bool operator==(const SharingConstraint& o) const { return pairs == o.pairs; }
};

class StateFormula;
using StateFormulaPtr = std::shared_ptr<const StateFormula>;

/// Temporal path formula with path-indexed atoms and nested state formulas.
class PathFormula {
public:
  enum class Kind {
    True, False, Atom, NestedState,
    Not, And, Or, Implies, Iff,
    Next, Until, Release
  };

  Kind kind;
  std::string ap;          // Atom
  PathVar var;             // Atom, NestedState
  StateFormulaPtr nested;  // NestedState
  std::shared_ptr<const PathFormula> lhs, rhs;  // unary ops use lhs only

  std::size_t hash() const;
  bool equals(const PathFormula& o) const;
};

using PathFormulaPtr = std::shared_ptr<const PathFormula>;

/// Quantifier-prefixed state formula.
class StateFormula {
public:
  enum class QuantKind { Exists, Forall };

  bool is_leaf;
  // Quantifier case:
  QuantKind quant;
  std::vector<AgentId> coalition;  // name-sorted, deduplicated
  SharingConstraint sharing;
  PathVar var;
  StateFormulaPtr body;
  // Leaf case:
  PathFormulaPtr path;

  std::size_t hash() const;
  bool equals(const StateFormula& o) const;
};

// --- construction helpers ---------------------------------------------------

PathFormulaPtr p_true();
PathFormulaPtr p_false();
PathFormulaPtr p_atom(std::string ap, PathVar var);
PathFormulaPtr p_nested(StateFormulaPtr phi, PathVar var);
PathFormulaPtr p_not(PathFormulaPtr a);
PathFormulaPtr p_and(PathFormulaPtr a, PathFormulaPtr b);
PathFormulaPtr p_or(PathFormulaPtr a, PathFormulaPtr b);
PathFormulaPtr p_implies(PathFormulaPtr a, PathFormulaPtr b);
PathFormulaPtr p_iff(PathFormulaPtr a, PathFormulaPtr b);
PathFormulaPtr p_next(PathFormulaPtr a);
PathFormulaPtr p_until(PathFormulaPtr a, PathFormulaPtr b);
PathFormulaPtr p_release(PathFormulaPtr a, PathFormulaPtr b);
/// F a := true U a
PathFormulaPtr p_eventually(PathFormulaPtr a);
/// G a := false R a
PathFormulaPtr p_globally(PathFormulaPtr a);

StateFormulaPtr s_leaf(PathFormulaPtr p);
StateFormulaPtr s_quant(StateFormula::QuantKind k, std::vector<AgentId> coalition,
                        SharingConstraint sharing, PathVar var, StateFormulaPtr body);

// --- parsing and printing ---------------------------------------------------

/// Parses the concrete ASCII syntax, validating agents, coalition membership,
/// sharing-pair sides, variable binding and closedness.
StateFormulaPtr parse_state_formula(const std::string& text,
                                    const std::set<std::string>& agents);

std::string pretty_print(const StateFormulaPtr& phi);
std::string pretty_print(const PathFormulaPtr& psi);

/// Re-validates an AST built programmatically (same checks as the parser).
void validate_state_formula(const StateFormulaPtr& phi,
                            const std::set<std::string>& agents);

// --- transformations ---------------------------------------------------------

/// Negation normal form.  Input must be free of NestedState nodes; the result
/// has Not only directly over atoms and uses the Until/Release duals.
PathFormulaPtr to_nnf(const PathFormulaPtr& psi);

/// Not followed by to_nnf.
PathFormulaPtr negate_path(const PathFormulaPtr& psi);

/// Nesting rank: number of chained quantifiers, maximised over nested
/// state formulas.
int rank(const StateFormulaPtr& phi);
int rank(const PathFormulaPtr& psi);

/// All nested state formulas of `psi`, innermost first, each returned once.
std::vector<StateFormulaPtr> extract_nested_state_formulas(const PathFormulaPtr& psi);

/// Replaces every NestedState(target, pi) with Atom(fresh, pi).
PathFormulaPtr substitute_nested(const PathFormulaPtr& psi,
                                 const StateFormulaPtr& target,
                                 const std::string& fresh);

/// Free path variables (variables of atoms not bound by a quantifier above).
std::set<std::string> free_path_vars(const PathFormulaPtr& psi);

bool contains_nested(const PathFormulaPtr& psi);

// --- plain strategic formulas (no path variables) ----------------------------

/// AST for formulas of the variable-free strategic fragment; used by the
/// embedding into the path-variable logic.
class AtlFormula {
public:
  enum class Kind {
    True, False, Atom,
    Not, And, Or, Implies, Iff,
    Next, Until, Release,
    Exists, Forall  // quantifier over a coalition, body is a path formula
  };
  Kind kind;
  std::string ap;
  std::vector<AgentId> coalition;
  std::shared_ptr<const AtlFormula> lhs, rhs;
};

using AtlFormulaPtr = std::shared_ptr<const AtlFormula>;

AtlFormulaPtr a_true();
AtlFormulaPtr a_atom(std::string ap);
AtlFormulaPtr a_not(AtlFormulaPtr a);
AtlFormulaPtr a_and(AtlFormulaPtr a, AtlFormulaPtr b);
AtlFormulaPtr a_or(AtlFormulaPtr a, AtlFormulaPtr b);
AtlFormulaPtr a_next(AtlFormulaPtr a);
AtlFormulaPtr a_until(AtlFormulaPtr a, AtlFormulaPtr b);
AtlFormulaPtr a_quant(bool exists, std::vector<AgentId> coalition, AtlFormulaPtr body);

/// Embedding: every implicit path becomes the fixed variable `v0`, every
/// quantifier becomes the sharing-free quantifier binding `v0`.
/// Input must be a state formula (quantifier at the root).
StateFormulaPtr atl_to_hyper(const AtlFormulaPtr& phi);

}  // namespace hymas
