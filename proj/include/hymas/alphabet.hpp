#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hymas/basics.hpp"

namespace hymas {

/// Index of a letter within an enumerated alphabet.
using Letter = std::uint32_t;

/// Enumerated alphabet of an automaton.
///
/// The alphabets used by the model-checking pipeline are "zipped" alphabets:
/// a letter is a total map from an ordered set of path variables to states of
/// a fixed game structure, encoded as a mixed-radix number (all digits have
/// radix `num_states`, variable i is digit i).  Test automata over plain
/// alphabets (e.g. {a,b,c}) use the unstructured constructor.
class Alphabet {
public:
  Alphabet() = default;

  /// Plain alphabet of `n` abstract letters.
  static Alphabet plain(std::size_t n) {
    Alphabet a;
    a.size_ = n;
    a.structured_ = false;
    return a;
  }

  /// Zipped alphabet: every letter maps each of `vars` to a state < num_states.
  static Alphabet zipped(std::vector<std::string> vars, std::size_t num_states) {
    Alphabet a;
    a.vars_ = std::move(vars);
    a.num_states_ = num_states;
    a.structured_ = true;
    a.size_ = 1;
    for (std::size_t i = 0; i < a.vars_.size(); ++i) a.size_ *= num_states;
    return a;
  }

  std::size_t size() const { return size_; }
  bool structured() const { return structured_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t num_states() const { return num_states_; }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  /// State assigned to variable `var` (by position) in letter `l`.
  StateId state_of(Letter l, std::size_t var) const {
    std::uint64_t v = l;
    for (std::size_t i = 0; i < var; ++i) v /= num_states_;
    return static_cast<StateId>(v % num_states_);
  }

  /// Letter from a full assignment, one state per variable in order.
  Letter make_letter(const std::vector<StateId>& states) const {
    std::uint64_t v = 0;
    for (std::size_t i = states.size(); i-- > 0;) v = v * num_states_ + states[i];
    return static_cast<Letter>(v);
  }

  /// Extends a letter of the sub-alphabet lacking variable `var_pos` with a
  /// state for that variable, yielding a letter of this alphabet.
  Letter extend(Letter sub, std::size_t var_pos, StateId s) const {
    std::uint64_t radix_pow = 1;
    for (std::size_t i = 0; i < var_pos; ++i) radix_pow *= num_states_;
    std::uint64_t low = sub % radix_pow;
    std::uint64_t high = sub / radix_pow;
    return static_cast<Letter>((high * num_states_ + s) * radix_pow + low);
  }

  /// Alphabet with variable `var_pos` removed.
  Alphabet without(std::size_t var_pos) const {
    std::vector<std::string> vs = vars_;
    vs.erase(vs.begin() + static_cast<long>(var_pos));
    return zipped(std::move(vs), num_states_);
  }

  bool operator==(const Alphabet& o) const {
    return size_ == o.size_ && structured_ == o.structured_ &&
           vars_ == o.vars_ && num_states_ == o.num_states_;
  }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  std::string letter_name(Letter l) const;

private:
  std::size_t size_ = 0;
  bool structured_ = false;
  std::vector<std::string> vars_;
  std::size_t num_states_ = 0;
};

/// Ultimately periodic word: finite prefix followed by a repeated cycle.
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> cycle;  // nonempty

  std::size_t length() const { return prefix.size() + cycle.size(); }

  /// Letter at absolute position `i` of the infinite word.
  Letter at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return cycle[(i - prefix.size()) % cycle.size()];
  }

  /// Position reached from `i` by one step, collapsed onto prefix+cycle.
  std::size_t next_pos(std::size_t i) const {
    return i + 1 < length() ? i + 1 : prefix.size();
  }
};

}  // namespace hymas
