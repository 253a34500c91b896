#include "hymas/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace hymas {

namespace {

PathFormulaPtr mk(PathFormula::Kind k, PathFormulaPtr a = nullptr,
                  PathFormulaPtr b = nullptr) {
  auto n = std::make_shared<PathFormula>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

}  // namespace

PathFormulaPtr p_true() { return mk(PathFormula::Kind::True); }
PathFormulaPtr p_false() { return mk(PathFormula::Kind::False); }

PathFormulaPtr p_atom(std::string ap, PathVar var) {
  auto n = std::make_shared<PathFormula>();
  n->kind = PathFormula::Kind::Atom;
  n->ap = std::move(ap);
  n->var = std::move(var);
  return n;
}

PathFormulaPtr p_nested(StateFormulaPtr phi, PathVar var) {
  auto n = std::make_shared<PathFormula>();
  n->kind = PathFormula::Kind::NestedState;
  n->nested = std::move(phi);
  n->var = std::move(var);
  return n;
}

PathFormulaPtr p_not(PathFormulaPtr a) { return mk(PathFormula::Kind::Not, std::move(a)); }
PathFormulaPtr p_and(PathFormulaPtr a, PathFormulaPtr b) {
  return mk(PathFormula::Kind::And, std::move(a), std::move(b));
}
PathFormulaPtr p_or(PathFormulaPtr a, PathFormulaPtr b) {
  return mk(PathFormula::Kind::Or, std::move(a), std::move(b));
}
PathFormulaPtr p_implies(PathFormulaPtr a, PathFormulaPtr b) {
  return mk(PathFormula::Kind::Implies, std::move(a), std::move(b));
}
PathFormulaPtr p_iff(PathFormulaPtr a, PathFormulaPtr b) {
  return mk(PathFormula::Kind::Iff, std::move(a), std::move(b));
}
PathFormulaPtr p_next(PathFormulaPtr a) { return mk(PathFormula::Kind::Next, std::move(a)); }
PathFormulaPtr p_until(PathFormulaPtr a, PathFormulaPtr b) {
  return mk(PathFormula::Kind::Until, std::move(a), std::move(b));
}
PathFormulaPtr p_release(PathFormulaPtr a, PathFormulaPtr b) {
  return mk(PathFormula::Kind::Release, std::move(a), std::move(b));
}
PathFormulaPtr p_eventually(PathFormulaPtr a) { return p_until(p_true(), std::move(a)); }
PathFormulaPtr p_globally(PathFormulaPtr a) { return p_release(p_false(), std::move(a)); }

StateFormulaPtr s_leaf(PathFormulaPtr p) {
  auto n = std::make_shared<StateFormula>();
  n->is_leaf = true;
  n->path = std::move(p);
  return n;
}

StateFormulaPtr s_quant(StateFormula::QuantKind k, std::vector<AgentId> coalition,
                        SharingConstraint sharing, PathVar var, StateFormulaPtr body) {
  std::sort(coalition.begin(), coalition.end());
  coalition.erase(std::unique(coalition.begin(), coalition.end()),
                  coalition.end());
  auto n = std::make_shared<StateFormula>();
  n->is_leaf = false;
  n->quant = k;
  n->coalition = std::move(coalition);
  n->sharing = std::move(sharing);
  n->var = std::move(var);
  n->body = std::move(body);
  return n;
}

// --- structural hash / equality ----------------------------------------------

std::size_t PathFormula::hash() const {
  std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b9;
  hash_combine(h, std::hash<std::string>{}(ap));
  hash_combine(h, std::hash<std::string>{}(var.name));
  if (nested) hash_combine(h, nested->hash());
  if (lhs) hash_combine(h, lhs->hash());
  if (rhs) hash_combine(h, rhs->hash());
  return h;
}

bool PathFormula::equals(const PathFormula& o) const {
  if (kind != o.kind || ap != o.ap || var.name != o.var.name) return false;
  if ((nested == nullptr) != (o.nested == nullptr)) return false;
  if (nested && !nested->equals(*o.nested)) return false;
  if ((lhs == nullptr) != (o.lhs == nullptr)) return false;
  if (lhs && !lhs->equals(*o.lhs)) return false;
  if ((rhs == nullptr) != (o.rhs == nullptr)) return false;
  if (rhs && !rhs->equals(*o.rhs)) return false;
  return true;
}

std::size_t StateFormula::hash() const {
  if (is_leaf) {
    std::size_t h = 0x51ea5;
    hash_combine(h, path->hash());
    return h;
  }
  std::size_t h = quant == QuantKind::Exists ? 0xe715 : 0xa11;
  for (const auto& a : coalition) hash_combine(h, std::hash<std::string>{}(a.name));
  for (const auto& p : sharing.pairs) {
    hash_combine(h, std::hash<std::string>{}(p.first));
    hash_combine(h, std::hash<std::string>{}(p.second));
  }
  hash_combine(h, std::hash<std::string>{}(var.name));
  hash_combine(h, body->hash());
  return h;
}

bool StateFormula::equals(const StateFormula& o) const {
  if (is_leaf != o.is_leaf) return false;
  if (is_leaf) return path->equals(*o.path);
  return quant == o.quant && coalition == o.coalition && sharing == o.sharing &&
         var.name == o.var.name && body->equals(*o.body);
}

// --- parser --------------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {  // comment to end of line
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      // keywords must not be glued to a following identifier character
      if (is_ident_start(s[0]) && pos + s.size() < text.size() &&
          is_ident_char(text[pos + s.size()]))
        return false;
      for (std::size_t i = 0; i < s.size(); ++i) advance();
      return true;
    }
    return false;
  }

  void expect(const std::string& s) {
    if (!try_consume(s)) fail("expected '" + s + "'");
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !is_ident_start(text[pos]))
      fail("expected identifier");
    std::string r;
    while (pos < text.size() && is_ident_char(text[pos])) {
      r.push_back(text[pos]);
      advance();
    }
    return r;
  }
};

struct FormulaParser {
  Lexer lx;
  const std::set<std::string>& agents;

  FormulaParser(const std::string& t, const std::set<std::string>& ag)
      : lx(t), agents(ag) {}

  StateFormulaPtr parse() {
    auto phi = state_formula();
    if (!lx.eof()) lx.fail("trailing input after formula");
    return phi;
  }

  StateFormulaPtr state_formula() {
    if (lx.try_consume("<<")) return quantifier(StateFormula::QuantKind::Exists, ">>");
    if (lx.try_consume("[[")) return quantifier(StateFormula::QuantKind::Forall, "]]");
    return s_leaf(iff_formula());
  }

  StateFormulaPtr quantifier(StateFormula::QuantKind k, const std::string& close) {
    std::vector<AgentId> coalition;
    if (!lx.try_consume(close)) {
      for (;;) {
        std::string a = lx.ident();
        if (!agents.count(a)) lx.fail("unknown agent '" + a + "'");
        coalition.push_back({a});
        if (lx.try_consume(close)) break;
        lx.expect(",");
      }
    }
    SharingConstraint xi;
    if (lx.try_consume("share")) {
      lx.expect("{");
      if (!lx.try_consume("}")) {
        for (;;) {
          std::string a = lx.ident();
          lx.expect("=");
          std::string b = lx.ident();
          if (!agents.count(a)) lx.fail("unknown agent '" + a + "'");
          if (!agents.count(b)) lx.fail("unknown agent '" + b + "'");
          xi.add(a, b);
          if (lx.try_consume("}")) break;
          lx.expect(",");
        }
      }
    }
    std::string v = lx.ident();
    lx.expect(".");
    auto body = state_formula();
    return s_quant(k, std::move(coalition), std::move(xi), PathVar{v}, std::move(body));
  }

  PathFormulaPtr iff_formula() {
    auto l = implies_formula();
    while (lx.try_consume("<->")) l = p_iff(l, implies_formula());
    return l;
  }

  PathFormulaPtr implies_formula() {
    auto l = or_formula();
    if (lx.try_consume("->")) return p_implies(l, implies_formula());  // right assoc
    return l;
  }

  PathFormulaPtr or_formula() {
    auto l = and_formula();
    while (lx.try_consume("|")) l = p_or(l, and_formula());
    return l;
  }

  PathFormulaPtr and_formula() {
    auto l = until_formula();
    while (lx.peek() == '&') {
      lx.expect("&");
      l = p_and(l, until_formula());
    }
    return l;
  }

  PathFormulaPtr until_formula() {
    auto l = unary_formula();
    if (lx.try_consume("U")) return p_until(l, until_formula());  // right assoc
    if (lx.try_consume("R")) return p_release(l, until_formula());
    return l;
  }

  PathFormulaPtr unary_formula() {
    if (lx.try_consume("!")) return p_not(unary_formula());
    if (lx.try_consume("X")) return p_next(unary_formula());
    if (lx.try_consume("F")) return p_eventually(unary_formula());
    if (lx.try_consume("G")) return p_globally(unary_formula());
    return atom_formula();
  }

  PathFormulaPtr atom_formula() {
    if (lx.try_consume("true")) return p_true();
    if (lx.try_consume("false")) return p_false();
    if (lx.try_consume("(")) {
      auto f = iff_formula();
      lx.expect(")");
      return f;
    }
    if (lx.try_consume("{")) {
      auto phi = state_formula();
      lx.expect("}");
      lx.expect("[");
      std::string v = lx.ident();
      lx.expect("]");
      return p_nested(phi, PathVar{v});
    }
    std::string name = lx.ident();
    lx.expect("[");
    std::string v = lx.ident();
    lx.expect("]");
    return p_atom(name, PathVar{v});
  }
};

void validate_path(const PathFormulaPtr& psi, std::set<std::string> bound,
                   const std::set<std::string>& agents);

void validate_state(const StateFormulaPtr& phi, std::set<std::string> bound,
                    const std::set<std::string>& agents) {
  if (phi->is_leaf) {
    validate_path(phi->path, bound, agents);
    return;
  }
  std::set<std::string> in_a;
  for (const auto& a : phi->coalition) {
    if (!agents.count(a.name))
      throw ValidationError("unknown agent '" + a.name + "' in coalition");
    in_a.insert(a.name);
  }
  for (const auto& pr : phi->sharing.pairs) {
    if (!agents.count(pr.first) || !agents.count(pr.second))
      throw ValidationError("unknown agent in sharing constraint");
    bool a1 = in_a.count(pr.first), a2 = in_a.count(pr.second);
    if (a1 != a2)
      throw ValidationError("sharing pair (" + pr.first + "," + pr.second +
                            ") crosses the coalition boundary");
  }
  if (bound.count(phi->var.name))
    throw ValidationError("path variable '" + phi->var.name +
                          "' is already bound on this quantifier chain");
  bound.insert(phi->var.name);
  validate_state(phi->body, std::move(bound), agents);
}

void validate_path(const PathFormulaPtr& psi, std::set<std::string> bound,
                   const std::set<std::string>& agents) {
  switch (psi->kind) {
    case PathFormula::Kind::True:
    case PathFormula::Kind::False:
      return;
    case PathFormula::Kind::Atom:
      if (!bound.count(psi->var.name))
        throw ValidationError("unbound path variable '" + psi->var.name + "'");
      if (!psi->ap.empty() && psi->ap[0] == '#')
        throw ValidationError("proposition names starting with '#' are reserved");
      return;
    case PathFormula::Kind::NestedState:
      if (!bound.count(psi->var.name))
        throw ValidationError("unbound path variable '" + psi->var.name + "'");
      // nested state formulas are closed: fresh chain, fresh scope
      validate_state(psi->nested, {}, agents);
      return;
    default:
      if (psi->lhs) validate_path(psi->lhs, bound, agents);
      if (psi->rhs) validate_path(psi->rhs, bound, agents);
      return;
  }
}

}  // namespace

StateFormulaPtr parse_state_formula(const std::string& text,
                                    const std::set<std::string>& agents) {
  if (agents.empty()) throw ValidationError("agent set must be nonempty");
  FormulaParser p(text, agents);
  auto phi = p.parse();
  validate_state(phi, {}, agents);
  return phi;
}

void validate_state_formula(const StateFormulaPtr& phi,
                            const std::set<std::string>& agents) {
  validate_state(phi, {}, agents);
}

// --- printer ---------------------------------------------------------------------

namespace {

int prec(PathFormula::Kind k) {
  using K = PathFormula::Kind;
  switch (k) {
    case K::Iff: return 1;
    case K::Implies: return 2;
    case K::Or: return 3;
    case K::And: return 4;
    case K::Until:
    case K::Release: return 5;
    case K::Not:
    case K::Next: return 6;
    default: return 7;
  }
}

void print_path(std::ostringstream& out, const PathFormulaPtr& f, int parent_prec);

void print_state(std::ostringstream& out, const StateFormulaPtr& phi) {
  if (phi->is_leaf) {
    print_path(out, phi->path, 0);
    return;
  }
  out << (phi->quant == StateFormula::QuantKind::Exists ? "<<" : "[[");
  for (std::size_t i = 0; i < phi->coalition.size(); ++i) {
    if (i) out << ",";
    out << phi->coalition[i].name;
  }
  out << (phi->quant == StateFormula::QuantKind::Exists ? ">>" : "]]");
  if (!phi->sharing.empty()) {
    out << " share {";
    bool first = true;
    for (const auto& pr : phi->sharing.pairs) {
      if (!first) out << ",";
      first = false;
      out << pr.first << "=" << pr.second;
    }
    out << "}";
  }
  out << " " << phi->var.name << " . ";
  print_state(out, phi->body);
}

void print_path(std::ostringstream& out, const PathFormulaPtr& f, int parent_prec) {
  using K = PathFormula::Kind;
  int p = prec(f->kind);
  bool paren = p < parent_prec;
  if (paren) out << "(";
  switch (f->kind) {
    case K::True: out << "true"; break;
    case K::False: out << "false"; break;
    case K::Atom: out << f->ap << "[" << f->var.name << "]"; break;
    case K::NestedState:
      out << "{ ";
      print_state(out, f->nested);
      out << " }[" << f->var.name << "]";
      break;
    case K::Not:
      out << "!";
      print_path(out, f->lhs, prec(K::Not) + 1);
      break;
    case K::Next:
      out << "X ";
      print_path(out, f->lhs, prec(K::Next) + 1);
      break;
    case K::And:
      print_path(out, f->lhs, p);
      out << " & ";
      print_path(out, f->rhs, p + 1);
      break;
    case K::Or:
      print_path(out, f->lhs, p);
      out << " | ";
      print_path(out, f->rhs, p + 1);
      break;
    case K::Implies:
      print_path(out, f->lhs, p + 1);
      out << " -> ";
      print_path(out, f->rhs, p);
      break;
    case K::Iff:
      print_path(out, f->lhs, p);
      out << " <-> ";
      print_path(out, f->rhs, p + 1);
      break;
    case K::Until:
      print_path(out, f->lhs, p + 1);
      out << " U ";
      print_path(out, f->rhs, p);
      break;
    case K::Release:
      print_path(out, f->lhs, p + 1);
      out << " R ";
      print_path(out, f->rhs, p);
      break;
  }
  if (paren) out << ")";
}

}  // namespace

std::string pretty_print(const StateFormulaPtr& phi) {
  std::ostringstream out;
  print_state(out, phi);
  return out.str();
}

std::string pretty_print(const PathFormulaPtr& psi) {
  std::ostringstream out;
  print_path(out, psi, 0);
  return out.str();
}

// --- NNF ----------------------------------------------------------------------

namespace {

PathFormulaPtr nnf(const PathFormulaPtr& f, bool neg) {
  using K = PathFormula::Kind;
  switch (f->kind) {
    case K::True: return neg ? p_false() : p_true();
    case K::False: return neg ? p_true() : p_false();
    case K::Atom: return neg ? p_not(f) : f;
    case K::NestedState:
      throw ValidationError("nested state formula in NNF input");
    case K::Not: return nnf(f->lhs, !neg);
    case K::And:
      return neg ? p_or(nnf(f->lhs, true), nnf(f->rhs, true))
                 : p_and(nnf(f->lhs, false), nnf(f->rhs, false));
    case K::Or:
      return neg ? p_and(nnf(f->lhs, true), nnf(f->rhs, true))
                 : p_or(nnf(f->lhs, false), nnf(f->rhs, false));
    case K::Implies:
      return neg ? p_and(nnf(f->lhs, false), nnf(f->rhs, true))
                 : p_or(nnf(f->lhs, true), nnf(f->rhs, false));
    case K::Iff: {
      // (a <-> b) = (a&b) | (!a&!b); negated = (a&!b) | (!a&b)
      auto a = f->lhs, b = f->rhs;
      if (!neg)
        return p_or(p_and(nnf(a, false), nnf(b, false)),
                    p_and(nnf(a, true), nnf(b, true)));
      return p_or(p_and(nnf(a, false), nnf(b, true)),
                  p_and(nnf(a, true), nnf(b, false)));
    }
    case K::Next: return p_next(nnf(f->lhs, neg));
    case K::Until:
      return neg ? p_release(nnf(f->lhs, true), nnf(f->rhs, true))
                 : p_until(nnf(f->lhs, false), nnf(f->rhs, false));
    case K::Release:
      return neg ? p_until(nnf(f->lhs, true), nnf(f->rhs, true))
                 : p_release(nnf(f->lhs, false), nnf(f->rhs, false));
  }
  throw Error("unreachable");
}

}  // namespace

PathFormulaPtr to_nnf(const PathFormulaPtr& psi) { return nnf(psi, false); }

PathFormulaPtr negate_path(const PathFormulaPtr& psi) { return nnf(psi, true); }

// --- rank ------------------------------------------------------------------------

int rank(const PathFormulaPtr& psi) {
  using K = PathFormula::Kind;
  switch (psi->kind) {
    case K::True:
    case K::False:
    case K::Atom:
      return 0;
    case K::NestedState:
      return rank(psi->nested);
    default: {
      int r = 0;
      if (psi->lhs) r = std::max(r, rank(psi->lhs));
      if (psi->rhs) r = std::max(r, rank(psi->rhs));
      return r;
    }
  }
}

int rank(const StateFormulaPtr& phi) {
  if (phi->is_leaf) return rank(phi->path);
  return rank(phi->body) + 1;
}

// --- nested state formulas ----------------------------------------------------

namespace {

void collect_nested(const PathFormulaPtr& psi, std::vector<StateFormulaPtr>& out);

void collect_nested_state(const StateFormulaPtr& phi,
                          std::vector<StateFormulaPtr>& out) {
  if (phi->is_leaf)
    collect_nested(phi->path, out);
  else
    collect_nested_state(phi->body, out);
}

void collect_nested(const PathFormulaPtr& psi, std::vector<StateFormulaPtr>& out) {
  switch (psi->kind) {
    case PathFormula::Kind::NestedState:
      // innermost first: recurse into the nested formula before emitting it
      collect_nested_state(psi->nested, out);
      for (const auto& s : out)
        if (s->equals(*psi->nested)) return;
      out.push_back(psi->nested);
      return;
    default:
      if (psi->lhs) collect_nested(psi->lhs, out);
      if (psi->rhs) collect_nested(psi->rhs, out);
      return;
  }
}

}  // namespace

std::vector<StateFormulaPtr> extract_nested_state_formulas(const PathFormulaPtr& psi) {
  std::vector<StateFormulaPtr> out;
  collect_nested(psi, out);
  return out;
}

PathFormulaPtr substitute_nested(const PathFormulaPtr& psi,
                                 const StateFormulaPtr& target,
                                 const std::string& fresh) {
  using K = PathFormula::Kind;
  switch (psi->kind) {
    case K::True:
    case K::False:
    case K::Atom:
      return psi;
    case K::NestedState: {
      if (psi->nested->equals(*target)) return p_atom(fresh, psi->var);
      // substitution also applies inside deeper nested formulas
      StateFormulaPtr cur = psi->nested;
      std::function<StateFormulaPtr(const StateFormulaPtr&)> subst_state =
          [&](const StateFormulaPtr& s) -> StateFormulaPtr {
        if (s->is_leaf) return s_leaf(substitute_nested(s->path, target, fresh));
        return s_quant(s->quant, s->coalition, s->sharing, s->var,
                       subst_state(s->body));
      };
      auto replaced = subst_state(cur);
      if (replaced->equals(*cur)) return psi;
      return p_nested(replaced, psi->var);
    }
    default: {
      auto n = std::make_shared<PathFormula>(*psi);
      if (psi->lhs) n->lhs = substitute_nested(psi->lhs, target, fresh);
      if (psi->rhs) n->rhs = substitute_nested(psi->rhs, target, fresh);
      return n;
    }
  }
}

namespace {

void free_vars_rec(const PathFormulaPtr& psi, std::set<std::string>& out) {
  switch (psi->kind) {
    case PathFormula::Kind::Atom:
    case PathFormula::Kind::NestedState:
      out.insert(psi->var.name);
      return;
    default:
      if (psi->lhs) free_vars_rec(psi->lhs, out);
      if (psi->rhs) free_vars_rec(psi->rhs, out);
  }
}

}  // namespace

std::set<std::string> free_path_vars(const PathFormulaPtr& psi) {
  std::set<std::string> out;
  free_vars_rec(psi, out);
  return out;
}

bool contains_nested(const PathFormulaPtr& psi) {
  if (psi->kind == PathFormula::Kind::NestedState) return true;
  if (psi->lhs && contains_nested(psi->lhs)) return true;
  if (psi->rhs && contains_nested(psi->rhs)) return true;
  return false;
}

// --- strategic fragment embedding ------------------------------------------------

namespace {

AtlFormulaPtr a_mk(AtlFormula::Kind k, AtlFormulaPtr a = nullptr,
                   AtlFormulaPtr b = nullptr) {
  auto n = std::make_shared<AtlFormula>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

}  // namespace

AtlFormulaPtr a_true() { return a_mk(AtlFormula::Kind::True); }
AtlFormulaPtr a_atom(std::string ap) {
  auto n = std::make_shared<AtlFormula>();
  n->kind = AtlFormula::Kind::Atom;
  n->ap = std::move(ap);
  return n;
}
AtlFormulaPtr a_not(AtlFormulaPtr a) { return a_mk(AtlFormula::Kind::Not, std::move(a)); }
AtlFormulaPtr a_and(AtlFormulaPtr a, AtlFormulaPtr b) {
  return a_mk(AtlFormula::Kind::And, std::move(a), std::move(b));
}
AtlFormulaPtr a_or(AtlFormulaPtr a, AtlFormulaPtr b) {
  return a_mk(AtlFormula::Kind::Or, std::move(a), std::move(b));
}
AtlFormulaPtr a_next(AtlFormulaPtr a) { return a_mk(AtlFormula::Kind::Next, std::move(a)); }
AtlFormulaPtr a_until(AtlFormulaPtr a, AtlFormulaPtr b) {
  return a_mk(AtlFormula::Kind::Until, std::move(a), std::move(b));
}
AtlFormulaPtr a_quant(bool exists, std::vector<AgentId> coalition, AtlFormulaPtr body) {
  auto n = std::make_shared<AtlFormula>();
  n->kind = exists ? AtlFormula::Kind::Exists : AtlFormula::Kind::Forall;
  n->coalition = std::move(coalition);
  n->lhs = std::move(body);
  return n;
}

namespace {

const PathVar kFixedVar{"v0"};

PathFormulaPtr embed_path(const AtlFormulaPtr& f);

StateFormulaPtr embed_state(const AtlFormulaPtr& f) {
  bool exists = f->kind == AtlFormula::Kind::Exists;
  return s_quant(exists ? StateFormula::QuantKind::Exists
                        : StateFormula::QuantKind::Forall,
                 f->coalition, SharingConstraint{}, kFixedVar,
                 s_leaf(embed_path(f->lhs)));
}

PathFormulaPtr embed_path(const AtlFormulaPtr& f) {
  using K = AtlFormula::Kind;
  switch (f->kind) {
    case K::True: return p_true();
    case K::False: return p_false();
    case K::Atom: return p_atom(f->ap, kFixedVar);
    case K::Not: return p_not(embed_path(f->lhs));
    case K::And: return p_and(embed_path(f->lhs), embed_path(f->rhs));
    case K::Or: return p_or(embed_path(f->lhs), embed_path(f->rhs));
    case K::Implies: return p_implies(embed_path(f->lhs), embed_path(f->rhs));
    case K::Iff: return p_iff(embed_path(f->lhs), embed_path(f->rhs));
    case K::Next: return p_next(embed_path(f->lhs));
    case K::Until: return p_until(embed_path(f->lhs), embed_path(f->rhs));
    case K::Release: return p_release(embed_path(f->lhs), embed_path(f->rhs));
    case K::Exists:
    case K::Forall:
      return p_nested(embed_state(f), kFixedVar);
  }
  throw Error("unreachable");
}

}  // namespace

StateFormulaPtr atl_to_hyper(const AtlFormulaPtr& phi) {
  if (phi->kind != AtlFormula::Kind::Exists && phi->kind != AtlFormula::Kind::Forall)
    throw ValidationError("embedding requires a quantifier at the root");
  return embed_state(phi);
}

}  // namespace hymas
