#include "hymas/posbool.hpp"

#include <algorithm>
#include <sstream>

namespace hymas {

namespace {

using Models = std::vector<std::vector<StateId>>;

bool subset_of(const std::vector<StateId>& a, const std::vector<StateId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void insert_minimal(Models& ms, std::vector<StateId> m) {
  for (const auto& e : ms)
    if (subset_of(e, m)) return;  // dominated
  ms.erase(std::remove_if(ms.begin(), ms.end(),
                          [&](const std::vector<StateId>& e) {
                            return subset_of(m, e);
                          }),
           ms.end());
  ms.push_back(std::move(m));
}

}  // namespace

std::vector<std::vector<StateId>> PosBoolPool::minimal_models(PosBool id) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Kind::False: return {};
    case Kind::True: return {{}};
    case Kind::State: return {{n.state}};
    case Kind::Or: {
      Models l = minimal_models(n.lhs);
      Models r = minimal_models(n.rhs);
      Models out;
      for (auto& m : l) insert_minimal(out, std::move(m));
      for (auto& m : r) insert_minimal(out, std::move(m));
      return out;
    }
    case Kind::And: {
      Models l = minimal_models(n.lhs);
      Models r = minimal_models(n.rhs);
      Models out;
      for (const auto& a : l)
        for (const auto& b : r) {
          std::vector<StateId> u;
          std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                         std::back_inserter(u));
          insert_minimal(out, std::move(u));
        }
      return out;
    }
  }
  return {};
}

std::string PosBoolPool::to_string(PosBool id) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Kind::False: return "f";
    case Kind::True: return "t";
    case Kind::State: return "q" + std::to_string(n.state);
    case Kind::And:
    case Kind::Or: {
      const char* op = n.kind == Kind::And ? "and" : "or";
      // flatten nested nodes of the same kind
      std::vector<PosBool> parts;
      std::vector<PosBool> stack{id};
      while (!stack.empty()) {
        PosBool cur = stack.back();
        stack.pop_back();
        const Node& cn = nodes_[cur];
        if (cn.kind == n.kind) {
          stack.push_back(cn.rhs);
          stack.push_back(cn.lhs);
        } else {
          parts.push_back(cur);
        }
      }
      std::ostringstream out;
      out << "(" << op;
      for (PosBool p : parts) out << " " << to_string(p);
      out << ")";
      return out.str();
    }
  }
  return "?";
}

PosBool PosBoolPool::import(const PosBoolPool& src, PosBool id,
                            const std::vector<PosBool>& state_subst) {
  const Node& n = src.node(id);
  switch (n.kind) {
    case Kind::False: return ff();
    case Kind::True: return tt();
    case Kind::State: return state_subst[n.state];
    case Kind::And:
      return conj(import(src, n.lhs, state_subst), import(src, n.rhs, state_subst));
    case Kind::Or:
      return disj(import(src, n.lhs, state_subst), import(src, n.rhs, state_subst));
  }
  return ff();
}

}  // namespace hymas
