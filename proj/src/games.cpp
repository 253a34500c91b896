#include "hymas/games.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hymas {

std::string ParityGame::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const auto& p = positions[i];
    out << i << " " << (p.owner == Owner::Even ? "E" : "O") << " " << p.color;
    for (int s : p.succs) out << " " << s;
    out << "\n";
  }
  return out.str();
}

namespace {

using Owner = ParityGame::Owner;

/// Attractor of `target` for `player` within `alive`; records attracting
/// moves for player-owned positions newly pulled in.
std::vector<char> attractor(const ParityGame& g, const std::vector<char>& alive,
                            const std::vector<char>& target, Owner player,
                            std::vector<int>& strategy) {
  std::size_t n = g.positions.size();
  std::vector<char> in(n, 0);
  std::vector<int> out_deg(n, 0);
  std::vector<std::vector<int>> preds(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int s : g.positions[v].succs)
      if (alive[s]) {
        ++out_deg[v];
        preds[s].push_back(static_cast<int>(v));
      }
  }
  std::vector<int> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && target[v]) {
      in[v] = 1;
      queue.push_back(static_cast<int>(v));
    }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int u : preds[v]) {
      if (in[u]) continue;
      if (g.positions[u].owner == player) {
        in[u] = 1;
        strategy[u] = v;
        queue.push_back(u);
      } else if (--out_deg[u] == 0) {
        in[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return in;
}

/// Zielonka recursion on the total game (every alive position has an alive
/// successor; solve() guarantees this by adding losing self-loops at dead
/// ends).  Fills regions and positional strategies.
void zielonka(const ParityGame& g, std::vector<char> alive,
              std::vector<char>& even_wins, std::vector<int>& es,
              std::vector<int>& os) {
  std::size_t n = g.positions.size();
  int m = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && (m < 0 || g.positions[v].color < m)) m = g.positions[v].color;
  if (m < 0) return;  // empty

  Owner player = (m % 2 == 0) ? Owner::Even : Owner::Odd;
  Owner opponent = (player == Owner::Even) ? Owner::Odd : Owner::Even;
  std::vector<int>& pstrat = player == Owner::Even ? es : os;
  std::vector<int>& ostrat = player == Owner::Even ? os : es;

  std::vector<char> min_set(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && g.positions[v].color == m) min_set[v] = 1;

  std::vector<int> astrat(n, -1);
  std::vector<char> A = attractor(g, alive, min_set, player, astrat);

  std::vector<char> rest = alive;
  for (std::size_t v = 0; v < n; ++v)
    if (A[v]) rest[v] = 0;

  std::vector<char> sub_even(n, 0);
  std::vector<int> ses(n, -1), sos(n, -1);
  zielonka(g, rest, sub_even, ses, sos);

  std::vector<char> opp_region(n, 0);
  bool opp_nonempty = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!rest[v]) continue;
    bool opp_won = (opponent == Owner::Even) ? sub_even[v] != 0 : sub_even[v] == 0;
    if (opp_won) {
      opp_region[v] = 1;
      opp_nonempty = true;
    }
  }

  if (!opp_nonempty) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      even_wins[v] = player == Owner::Even ? 1 : 0;
      if (g.positions[v].owner == player) {
        if (rest[v]) {
          pstrat[v] = player == Owner::Even ? ses[v] : sos[v];
        } else if (min_set[v]) {
          for (int s : g.positions[v].succs)
            if (alive[s]) {
              pstrat[v] = s;
              break;
            }
        } else {
          pstrat[v] = astrat[v];
        }
      }
    }
    return;
  }

  std::vector<int> bstrat(n, -1);
  std::vector<char> B = attractor(g, alive, opp_region, opponent, bstrat);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v] || !B[v]) continue;
    even_wins[v] = opponent == Owner::Even ? 1 : 0;
    if (g.positions[v].owner == opponent)
      ostrat[v] = opp_region[v] ? (opponent == Owner::Even ? ses[v] : sos[v])
                                : bstrat[v];
    alive[v] = 0;
  }
  zielonka(g, alive, even_wins, es, os);
}

}  // namespace

WinningRegions solve(const ParityGame& g) {
  // Make the game total: a dead end becomes a self-loop whose color makes its
  // owner lose.  Dead ends lie on no real cycle, so the color change is
  // harmless.
  ParityGame gt = g;
  std::vector<char> was_dead(g.positions.size(), 0);
  for (std::size_t v = 0; v < gt.positions.size(); ++v) {
    if (gt.positions[v].succs.empty()) {
      was_dead[v] = 1;
      gt.positions[v].succs.push_back(static_cast<int>(v));
      gt.positions[v].color = gt.positions[v].owner == Owner::Even ? 1 : 0;
    }
  }

  WinningRegions r;
  std::size_t n = g.positions.size();
  r.even_wins.assign(n, 0);
  r.even_strategy.assign(n, -1);
  r.odd_strategy.assign(n, -1);
  std::vector<char> alive(n, 1);
  zielonka(gt, std::move(alive), r.even_wins, r.even_strategy, r.odd_strategy);

  for (std::size_t v = 0; v < n; ++v)
    if (was_dead[v]) {
      r.even_strategy[v] = -1;
      r.odd_strategy[v] = -1;
    }
  return r;
}

bool verify_strategy(const ParityGame& g, const WinningRegions& r) {
  std::size_t n = g.positions.size();
  if (r.even_wins.size() != n || r.even_strategy.size() != n ||
      r.odd_strategy.size() != n)
    return false;

  auto region_ok = [&](bool even_region) -> bool {
    Owner owner = even_region ? Owner::Even : Owner::Odd;
    const std::vector<int>& strat = even_region ? r.even_strategy : r.odd_strategy;
    std::vector<std::vector<int>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
      if ((r.even_wins[v] != 0) != even_region) continue;
      const auto& p = g.positions[v];
      if (p.owner == owner) {
        if (p.succs.empty()) return false;  // dead end owned by the winner
        int s = strat[v];
        if (s < 0) return false;
        if (std::find(p.succs.begin(), p.succs.end(), s) == p.succs.end())
          return false;
        if ((r.even_wins[s] != 0) != even_region) return false;  // leaves region
        adj[v].push_back(s);
      } else {
        for (int s : p.succs) {
          if ((r.even_wins[s] != 0) != even_region) return false;  // escape edge
          adj[v].push_back(s);
        }
      }
    }

    // Bad cycle: for some color c of the losing parity, a cycle through a
    // c-colored position within the colors->=c subgraph.
    int maxc = g.max_color();
    for (int c = 0; c <= maxc; ++c) {
      bool losing_parity = even_region ? (c % 2 == 1) : (c % 2 == 0);
      if (!losing_parity) continue;
      std::vector<int> comp(n, -1);
      int ncomp = 0;
      std::vector<int> index(n, -1), low(n, 0);
      std::vector<char> on_stack(n, 0);
      std::vector<int> stack;
      int next_index = 0;
      struct Frame {
        int v;
        std::size_t child;
      };
      auto in_sub = [&](std::size_t v) {
        return (r.even_wins[v] != 0) == even_region && g.positions[v].color >= c;
      };
      for (std::size_t root = 0; root < n; ++root) {
        if (!in_sub(root) || index[root] >= 0) continue;
        std::vector<Frame> frames{{static_cast<int>(root), 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(static_cast<int>(root));
        on_stack[root] = 1;
        while (!frames.empty()) {
          Frame& f = frames.back();
          bool descended = false;
          while (f.child < adj[f.v].size()) {
            int w = adj[f.v][f.child++];
            if (!in_sub(w)) continue;
            if (index[w] < 0) {
              index[w] = low[w] = next_index++;
              stack.push_back(w);
              on_stack[w] = 1;
              frames.push_back({w, 0});
              descended = true;
              break;
            } else if (on_stack[w]) {
              low[f.v] = std::min(low[f.v], index[w]);
            }
          }
          if (descended) continue;
          if (low[f.v] == index[f.v]) {
            for (;;) {
              int w = stack.back();
              stack.pop_back();
              on_stack[w] = 0;
              comp[w] = ncomp;
              if (w == f.v) break;
            }
            ++ncomp;
          }
          int v = f.v;
          frames.pop_back();
          if (!frames.empty())
            low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
      std::vector<int> comp_size(static_cast<std::size_t>(ncomp) + 1, 0);
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] >= 0) ++comp_size[comp[v]];
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] < 0 || g.positions[v].color != c) continue;
        bool in_cycle = false;
        for (int s : adj[v]) {
          if (s == static_cast<int>(v)) in_cycle = true;
          if (in_sub(s) && comp[s] == comp[v] && comp_size[comp[v]] > 1)
            in_cycle = true;
        }
        if (in_cycle) return false;
      }
    }
    return true;
  };

  return region_ok(true) && region_ok(false);
}

ParityGame apa_word_game(const Apa& a, const LassoWord& w) {
  std::size_t len = w.length();
  (void)len;
  int neutral = a.max_color();  // never determines the min-inf-often color

  ParityGame g;
  std::map<std::pair<std::size_t, std::uint64_t>, int> term_pos;
  std::map<std::pair<std::size_t, StateId>, int> state_pos;

  struct Item {
    bool is_state;
    std::size_t i;
    StateId q;
    PosBool theta;
  };
  std::vector<Item> todo;

  auto get_state_pos = [&](std::size_t i, StateId q) -> int {
    auto it = state_pos.find({i, q});
    if (it != state_pos.end()) return it->second;
    int id = static_cast<int>(g.positions.size());
    g.positions.push_back({ParityGame::Owner::Even, a.color[q], {}});
    state_pos[{i, q}] = id;
    todo.push_back({true, i, q, 0});
    return id;
  };

  auto get_term_pos = [&](std::size_t i, PosBool theta) -> int {
    auto key = std::make_pair(i, static_cast<std::uint64_t>(theta));
    auto it = term_pos.find(key);
    if (it != term_pos.end()) return it->second;
    const auto& n = a.pool.node(theta);
    ParityGame::Owner owner = ParityGame::Owner::Even;
    switch (n.kind) {
      case PosBoolPool::Kind::And: owner = ParityGame::Owner::Odd; break;
      case PosBoolPool::Kind::True: owner = ParityGame::Owner::Odd; break;
      case PosBoolPool::Kind::False: owner = ParityGame::Owner::Even; break;
      default: break;
    }
    int id = static_cast<int>(g.positions.size());
    g.positions.push_back({owner, neutral, {}});
    term_pos[key] = id;
    todo.push_back({false, i, 0, theta});
    return id;
  };

  g.initial = get_state_pos(0, a.init);

  while (!todo.empty()) {
    Item item = todo.back();
    todo.pop_back();
    if (item.is_state) {
      int self = state_pos[{item.i, item.q}];
      int t = get_term_pos(item.i, a.d(item.q, w.at(item.i)));
      g.positions[self].succs.push_back(t);
      continue;
    }
    int self = term_pos[{item.i, static_cast<std::uint64_t>(item.theta)}];
    const auto& n = a.pool.node(item.theta);
    switch (n.kind) {
      case PosBoolPool::Kind::True:
      case PosBoolPool::Kind::False:
        break;  // dead end, loses for its owner
      case PosBoolPool::Kind::State:
        g.positions[self].succs.push_back(
            get_state_pos(w.next_pos(item.i), n.state));
        break;
      case PosBoolPool::Kind::And:
      case PosBoolPool::Kind::Or:
        g.positions[self].succs.push_back(get_term_pos(item.i, n.lhs));
        g.positions[self].succs.push_back(get_term_pos(item.i, n.rhs));
        break;
    }
  }
  return g;
}

}  // namespace hymas
