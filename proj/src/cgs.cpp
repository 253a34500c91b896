#include "hymas/cgs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hymas {

int Cgs::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i].name == name) return static_cast<int>(i);
  return -1;
}

int Cgs::agent_index(const std::string& name) const {
  for (std::size_t i = 0; i < agents.size(); ++i)
    if (agents[i] == name) return static_cast<int>(i);
  return -1;
}

int Cgs::action_index(int agent, const std::string& name) const {
  const auto& acts = actions[agent];
  for (std::size_t i = 0; i < acts.size(); ++i)
    if (acts[i] == name) return static_cast<int>(i);
  return -1;
}

std::size_t Cgs::vector_index(const std::vector<int>& acts) const {
  std::size_t idx = 0;
  for (std::size_t i = acts.size(); i-- > 0;)
    idx = idx * actions[i].size() + static_cast<std::size_t>(acts[i]);
  return idx;
}

std::vector<int> Cgs::vector_actions(std::size_t idx) const {
  std::vector<int> acts(num_agents());
  for (std::size_t i = 0; i < num_agents(); ++i) {
    acts[i] = static_cast<int>(idx % actions[i].size());
    idx /= actions[i].size();
  }
  return acts;
}

StateId Cgs::successor(StateId s, const std::vector<int>& acts) const {
  if (acts.size() != num_agents())
    throw ValidationError("partial action vector passed to successor");
  return successor_by_index(s, vector_index(acts));
}

void Cgs::finalize(const std::vector<std::map<std::size_t, StateId>>& rows_by_state,
                   const std::map<std::pair<StateId, int>, std::set<int>>& protocol) {
  vector_count_ = 1;
  for (const auto& a : actions) {
    if (a.empty()) throw ValidationError("agent with empty action set");
    vector_count_ *= a.size();
  }
  std::size_t table = states.size() * vector_count_;
  kappa_.assign(table, 0);
  reroute_.assign(table, 0);
  std::vector<char> defined(table, 0);

  // Rerouting: a protocol-disallowed action maps to the lexicographically
  // smallest allowed action (by action name).
  for (StateId s = 0; s < states.size(); ++s) {
    std::vector<std::vector<int>> redirect(num_agents());
    for (std::size_t ag = 0; ag < num_agents(); ++ag) {
      redirect[ag].resize(actions[ag].size());
      std::iota(redirect[ag].begin(), redirect[ag].end(), 0);
      auto it = protocol.find({s, static_cast<int>(ag)});
      if (it == protocol.end()) continue;
      const std::set<int>& allowed = it->second;
      int smallest = -1;
      std::string smallest_name;
      for (int a : allowed) {
        if (smallest < 0 || actions[ag][a] < smallest_name) {
          smallest = a;
          smallest_name = actions[ag][a];
        }
      }
      for (std::size_t a = 0; a < actions[ag].size(); ++a)
        if (!allowed.count(static_cast<int>(a)))
          redirect[ag][a] = smallest;
    }
    for (std::size_t v = 0; v < vector_count_; ++v) {
      std::vector<int> acts = vector_actions(v);
      for (std::size_t ag = 0; ag < num_agents(); ++ag)
        acts[ag] = redirect[ag][acts[ag]];
      reroute_[s * vector_count_ + v] = vector_index(acts);
    }
  }

  for (StateId s = 0; s < states.size(); ++s) {
    for (const auto& [v, target] : rows_by_state[s]) {
      std::size_t cell = s * vector_count_ + v;
      if (defined[cell] && kappa_[cell] != target)
        throw ValidationError("transition conflict at state " + states[s].name);
      defined[cell] = 1;
      kappa_[cell] = target;
    }
  }

  // Totality: every rerouted vector must be mapped.
  for (StateId s = 0; s < states.size(); ++s)
    for (std::size_t v = 0; v < vector_count_; ++v) {
      std::size_t cell = s * vector_count_ + reroute_[s * vector_count_ + v];
      if (!defined[cell]) {
        std::vector<int> acts = vector_actions(reroute_[s * vector_count_ + v]);
        std::string vs;
        for (std::size_t ag = 0; ag < num_agents(); ++ag) {
          if (ag) vs += ",";
          vs += actions[ag][acts[ag]];
        }
        throw ValidationError("transition function not total: state " +
                              states[s].name + " has no row for (" + vs + ")");
      }
    }
}

// --- model file parser -------------------------------------------------------

namespace {

struct ModelLine {
  std::string text;
  int number;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Cgs parse_cgs(const std::string& text) {
  Cgs g;
  std::vector<ModelLine> lines;
  {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines.push_back({line, n});
    }
  }

  auto fail = [](const std::string& msg, int line) -> void {
    throw ParseError(msg, line, 1);
  };

  bool have_init = false;
  std::string init_name;
  int init_line = 0;
  std::map<std::pair<StateId, int>, std::set<int>> protocol;
  // raw transition rows, before wildcard expansion: (state, pattern, target)
  struct Row {
    std::string state;
    std::vector<std::string> pattern;
    std::string target;
    int line;
  };
  std::vector<Row> rows;
  bool in_transitions = false;

  for (const auto& ml : lines) {
    const std::string& l = ml.text;
    auto colon = l.find(':');
    std::string head = colon == std::string::npos ? "" : l.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());

    if (!in_transitions && head == "agents") {
      for (const auto& w : split_ws(l.substr(colon + 1))) {
        if (g.agent_index(w) >= 0) fail("duplicate agent '" + w + "'", ml.number);
        g.agents.push_back(w);
      }
      g.actions.resize(g.agents.size());
      continue;
    }
    if (!in_transitions && head == "actions") {
      auto ws = split_ws(l.substr(colon + 1));
      if (ws.size() < 3 || ws[1] != "=")
        fail("expected 'actions: <agent> = <a1> <a2> ...'", ml.number);
      int ag = g.agent_index(ws[0]);
      if (ag < 0) fail("unknown agent '" + ws[0] + "'", ml.number);
      for (std::size_t i = 2; i < ws.size(); ++i) {
        if (g.action_index(ag, ws[i]) >= 0)
          fail("duplicate action '" + ws[i] + "'", ml.number);
        g.actions[ag].push_back(ws[i]);
      }
      continue;
    }
    if (!in_transitions && head == "states") {
      for (const auto& w : split_ws(l.substr(colon + 1))) {
        if (g.state_index(w) >= 0) fail("duplicate state '" + w + "'", ml.number);
        g.states.push_back({w, {}});
      }
      continue;
    }
    if (!in_transitions && head == "init") {
      auto ws = split_ws(l.substr(colon + 1));
      if (ws.size() != 1) fail("expected a single initial state", ml.number);
      have_init = true;
      init_name = ws[0];
      init_line = ml.number;
      continue;
    }
    if (!in_transitions && head == "labels") {
      auto ws = split_ws(l.substr(colon + 1));
      if (ws.size() < 2 || ws[1] != "=")
        fail("expected 'labels: <state> = <p1> ...'", ml.number);
      int s = g.state_index(ws[0]);
      if (s < 0) fail("unknown state '" + ws[0] + "'", ml.number);
      for (std::size_t i = 2; i < ws.size(); ++i) {
        g.states[s].labels.insert(ws[i]);
        g.ap.insert(ws[i]);
      }
      continue;
    }
    if (!in_transitions && head == "protocol") {
      auto ws = split_ws(l.substr(colon + 1));
      if (ws.size() < 4 || ws[2] != "=")
        fail("expected 'protocol: <state> <agent> = <a1> ...'", ml.number);
      int s = g.state_index(ws[0]);
      if (s < 0) fail("unknown state '" + ws[0] + "'", ml.number);
      int ag = g.agent_index(ws[1]);
      if (ag < 0) fail("unknown agent '" + ws[1] + "'", ml.number);
      for (std::size_t i = 3; i < ws.size(); ++i) {
        int a = g.action_index(ag, ws[i]);
        if (a < 0) fail("unknown action '" + ws[i] + "'", ml.number);
        protocol[{static_cast<StateId>(s), ag}].insert(a);
      }
      continue;
    }
    if (head == "transitions") {
      in_transitions = true;
      continue;
    }
    if (!in_transitions) fail("unknown section '" + head + "'", ml.number);

    // transition row:  s0 (a,b,c) -> s1
    std::string row = l;
    auto lp = row.find('('), rp = row.find(')');
    auto arrow = row.find("->");
    if (lp == std::string::npos || rp == std::string::npos ||
        arrow == std::string::npos || arrow < rp)
      fail("expected '<state> (<a1>,...,<ak>) -> <state>'", ml.number);
    Row r;
    r.line = ml.number;
    {
      auto ws = split_ws(row.substr(0, lp));
      if (ws.size() != 1) fail("expected one source state", ml.number);
      r.state = ws[0];
    }
    {
      std::string inner = row.substr(lp + 1, rp - lp - 1);
      std::string acc;
      for (char c : inner) {
        if (c == ',') {
          r.pattern.push_back(acc);
          acc.clear();
        } else if (!::isspace(static_cast<unsigned char>(c))) {
          acc.push_back(c);
        }
      }
      r.pattern.push_back(acc);
    }
    {
      auto ws = split_ws(row.substr(arrow + 2));
      if (ws.size() != 1) fail("expected one target state", ml.number);
      r.target = ws[0];
    }
    rows.push_back(std::move(r));
  }

  if (g.agents.empty()) throw ValidationError("model declares no agents");
  if (g.states.empty()) throw ValidationError("model declares no states");
  for (std::size_t ag = 0; ag < g.num_agents(); ++ag)
    if (g.actions[ag].empty())
      throw ValidationError("agent '" + g.agents[ag] + "' has no actions");
  if (!have_init) throw ValidationError("model declares no initial state");
  {
    int s = g.state_index(init_name);
    if (s < 0)
      throw ParseError("unknown initial state '" + init_name + "'", init_line, 1);
    g.init = static_cast<StateId>(s);
  }

  // Expand wildcard rows into explicit vector cells; overlaps are an error.
  std::size_t vc = 1;
  for (const auto& a : g.actions) vc *= a.size();
  std::vector<std::map<std::size_t, StateId>> cells(g.num_states());
  std::vector<std::vector<char>> covered(g.num_states(),
                                         std::vector<char>(vc, 0));
  for (const auto& r : rows) {
    int s = g.state_index(r.state);
    if (s < 0) throw ParseError("unknown state '" + r.state + "'", r.line, 1);
    int t = g.state_index(r.target);
    if (t < 0) throw ParseError("unknown state '" + r.target + "'", r.line, 1);
    if (r.pattern.size() != g.num_agents())
      throw ParseError("action tuple arity mismatch", r.line, 1);
    std::vector<std::vector<int>> choices(g.num_agents());
    for (std::size_t ag = 0; ag < g.num_agents(); ++ag) {
      if (r.pattern[ag] == "*" || r.pattern[ag] == "_") {
        choices[ag].resize(g.actions[ag].size());
        std::iota(choices[ag].begin(), choices[ag].end(), 0);
      } else {
        int a = g.action_index(static_cast<int>(ag), r.pattern[ag]);
        if (a < 0)
          throw ParseError("unknown action '" + r.pattern[ag] + "' for agent '" +
                               g.agents[ag] + "'",
                           r.line, 1);
        choices[ag].push_back(a);
      }
    }
    std::vector<std::size_t> pick(g.num_agents(), 0);
    for (;;) {
      std::vector<int> acts(g.num_agents());
      for (std::size_t ag = 0; ag < g.num_agents(); ++ag)
        acts[ag] = choices[ag][pick[ag]];
      std::size_t v = g.vector_index(acts);
      if (covered[s][v]) {
        std::string vs;
        for (std::size_t ag = 0; ag < g.num_agents(); ++ag) {
          if (ag) vs += ",";
          vs += g.actions[ag][acts[ag]];
        }
        throw ParseError("row overlaps an earlier row on (" + vs + ")", r.line, 1);
      }
      covered[s][v] = 1;
      cells[s][v] = static_cast<StateId>(t);
      std::size_t ag = 0;
      while (ag < g.num_agents() && ++pick[ag] == choices[ag].size()) {
        pick[ag] = 0;
        ++ag;
      }
      if (ag == g.num_agents()) break;
    }
  }

  g.finalize(cells, protocol);
  return g;
}

// --- sharing-respecting vector enumeration --------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ActionVector> enumerate_vectors(const Cgs& g,
                                            const std::vector<int>& coalition,
                                            const SharingConstraint& xi) {
  if (coalition.empty()) return {ActionVector{}};

  std::vector<int> sorted = coalition;
  std::sort(sorted.begin(), sorted.end());

  // position of each agent within the sorted coalition
  std::map<int, int> posn;
  for (std::size_t i = 0; i < sorted.size(); ++i) posn[sorted[i]] = static_cast<int>(i);

  UnionFind uf(sorted.size());
  for (const auto& pr : xi.pairs) {
    int a = g.agent_index(pr.first), b = g.agent_index(pr.second);
    if (a < 0 || b < 0) throw ValidationError("unknown agent in sharing constraint");
    auto ia = posn.find(a), ib = posn.find(b);
    if (ia == posn.end() || ib == posn.end()) continue;  // pair on the other side
    uf.unite(ia->second, ib->second);
  }

  // Per class: the common action alphabet, as action names shared by all
  // members, indexed per member agent.
  std::map<int, std::vector<int>> class_members;  // root -> positions
  for (std::size_t i = 0; i < sorted.size(); ++i)
    class_members[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  struct ClassInfo {
    std::vector<int> positions;
    std::vector<std::vector<int>> choice_actions;  // [choice][member] action idx
  };
  std::vector<ClassInfo> classes;
  for (auto& [root, members] : class_members) {
    ClassInfo ci;
    ci.positions = members;
    int first_agent = sorted[members[0]];
    for (std::size_t a = 0; a < g.actions[first_agent].size(); ++a) {
      const std::string& name = g.actions[first_agent][a];
      std::vector<int> per_member;
      per_member.push_back(static_cast<int>(a));
      bool ok = true;
      for (std::size_t m = 1; m < members.size(); ++m) {
        int idx = g.action_index(sorted[members[m]], name);
        if (idx < 0) {
          ok = false;
          break;
        }
        per_member.push_back(idx);
      }
      if (ok) ci.choice_actions.push_back(std::move(per_member));
    }
    if (ci.choice_actions.empty())
      throw ValidationError(
          "shared agents have no common action alphabet in sharing class of '" +
          g.agents[first_agent] + "'");
    classes.push_back(std::move(ci));
  }

  // Odometer over class choices; order classes by smallest member position so
  // the output is lexicographic by agent order then action order.
  std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
    return a.positions[0] < b.positions[0];
  });

  std::vector<ActionVector> out;
  std::vector<std::size_t> pick(classes.size(), 0);
  for (;;) {
    ActionVector v;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& ci = classes[c];
      const auto& acts = ci.choice_actions[pick[c]];
      for (std::size_t m = 0; m < ci.positions.size(); ++m)
        v.emplace_back(sorted[ci.positions[m]], acts[m]);
    }
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
    std::size_t c = classes.size();
    while (c-- > 0) {
      if (++pick[c] < classes[c].choice_actions.size()) break;
      pick[c] = 0;
      if (c == 0) return out;
    }
  }
}

ActionVector merge_vectors(const ActionVector& a, const ActionVector& b) {
  ActionVector r = a;
  r.insert(r.end(), b.begin(), b.end());
  std::sort(r.begin(), r.end());
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i].first == r[i - 1].first)
      throw ValidationError("overlapping action vectors");
  return r;
}

}  // namespace hymas
