#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hymas {

using StateId = std::uint32_t;

/// Base class for all structured errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in a formula or model file; carries a 1-based position.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line), col(col) {}
  int line;
  int col;
};

/// Semantic validation failure (unknown agent, unbound variable, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Raised when an automaton exceeds the configured state budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string& stage, std::size_t states, std::size_t budget)
      : Error("state budget exceeded in " + stage + ": " +
              std::to_string(states) + " > " + std::to_string(budget)),
        stage(stage), states(states), budget(budget) {}
  std::string stage;
  std::size_t states;
  std::size_t budget;
};

/// Resource limits threaded through every automaton construction.
struct Limits {
  std::size_t state_budget = 1000000;

  void check(const char* stage, std::size_t states) const {
    if (states > state_budget) throw BudgetError(stage, states, state_budget);
  }
};

inline bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace hymas
