#include "fwords/fim.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace fwords {

FimElement FimElement::from_word(const Word& w, int n_gens) {
  FimElement e;
  e.tree_ = munn_tree(w, n_gens);
  e.rep_ = w;
  e.key_ = canonical_key(e.tree_);
  return e;
}

FimElement FimElement::from_rooted_tree(const InvAutomaton& tree) {
  FimElement e;
  e.tree_ = canonicalize(tree);
  e.rep_ = tree_tour_word(e.tree_);
  e.key_ = canonical_key(e.tree_);
  return e;
}

FimElement FimElement::extended(Letter l, int n_gens) const {
  Word w = rep_;
  w.push_back(l);
  return from_word(w, n_gens);
}

Word tree_tour_word(const InvAutomaton& tree) {
  // iterative DFS from the initial state, emitting the descent letter on
  // the way down and its inverse on the way up
  std::vector<std::vector<std::pair<uint32_t, State>>> adj(tree.n_states);
  for (const PosEdge& e : tree.edges) {
    adj[e.from].emplace_back(Letter::positive(e.gen).code(), e.to);
    adj[e.to].emplace_back(Letter::negative(e.gen).code(), e.from);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
  }
  Word out;
  std::vector<char> visited(tree.n_states, false);
  struct Frame {
    State state;
    size_t next = 0;
    Letter entered = Letter::positive(0);
    bool root = true;
  };
  std::vector<Frame> stack;
  stack.push_back({tree.initial, 0, Letter::positive(0), true});
  visited[tree.initial] = true;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < adj[f.state].size()) {
      auto [code, t] = adj[f.state][f.next++];
      if (!visited[t]) {
        visited[t] = true;
        out.push_back(Letter::from_code(code));
        stack.push_back({t, 0, Letter::from_code(code), false});
      }
    } else {
      if (!f.root) {
        out.push_back(f.entered.inverse());
      }
      stack.pop_back();
    }
  }
  return out;
}

bool fim_equal(const Word& u, const Word& v, int n_gens) {
  return isomorphic(munn_tree(u, n_gens), munn_tree(v, n_gens));
}

bool is_idempotent(const Word& w) { return is_dyck(w); }

bool is_factor(const Word& v, const Word& u, int n_gens) {
  InvAutomaton t = munn_tree(u, n_gens);
  StepTable st(t);
  return labels_some_path(st, t.n_states, v);
}

std::vector<FimElement> factors(const Word& u, int n_gens) {
  InvAutomaton t = munn_tree(u, n_gens);
  StepTable st(t);
  const uint32_t codes = 2u * n_gens;

  std::vector<std::set<std::string>> bucket(t.n_states);
  std::map<std::string, FimElement> accum;

  FimElement one = FimElement::from_word({}, n_gens);
  accum.emplace(one.key(), one);
  std::vector<std::pair<State, FimElement>> frontier;
  for (State q = 0; q < t.n_states; ++q) {
    bucket[q].insert(one.key());
    frontier.emplace_back(q, one);
  }

  while (!frontier.empty()) {
    std::vector<std::pair<State, FimElement>> next;
    for (const auto& [q, e] : frontier) {
      for (uint32_t code = 0; code < codes; ++code) {
        Letter l = Letter::from_code(code);
        State r = st.step(q, l);
        if (r == kNoState) {
          continue;
        }
        FimElement e2 = e.extended(l, n_gens);
        if (bucket[r].insert(e2.key()).second) {
          accum.emplace(e2.key(), e2);
          next.emplace_back(r, std::move(e2));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<FimElement> out;
  out.reserve(accum.size());
  for (auto& [key, e] : accum) {
    out.push_back(std::move(e));
  }
  return out;
}

bool FactorAutomaton::accepts(const Word& w) const {
  const size_t codes = static_cast<size_t>(2) * nfa.n_gens;
  State cur = nfa.initials.at(0);
  for (Letter l : w) {
    cur = step_table[cur * codes + l.code()];
    if (cur == kNoState) {
      return false;
    }
  }
  return nfa.is_terminal(cur);
}

FactorAutomaton factor_automaton(const Word& u, int n_gens) {
  std::vector<FimElement> elems = factors(u, n_gens);
  std::unordered_map<std::string, State> id;
  for (size_t i = 0; i < elems.size(); ++i) {
    id.emplace(elems[i].key(), static_cast<State>(i));
  }

  FactorAutomaton fa;
  fa.nfa.n_gens = n_gens;
  fa.nfa.n_states = elems.size();
  fa.nfa.initials = {id.at(FimElement::from_word({}, n_gens).key())};
  fa.nfa.terminals = {id.at(FimElement::from_word(u, n_gens).key())};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (uint32_t code = 0; code < 2u * n_gens; ++code) {
      FimElement e2 = elems[i].extended(Letter::from_code(code), n_gens);
      auto it = id.find(e2.key());
      if (it != id.end()) {
        fa.nfa.edges.push_back({static_cast<State>(i), code, it->second});
      }
    }
  }
  std::sort(fa.nfa.edges.begin(), fa.nfa.edges.end());
  const size_t codes = static_cast<size_t>(2) * n_gens;
  fa.step_table.assign(fa.nfa.n_states * codes, kNoState);
  for (const auto& e : fa.nfa.edges) {
    fa.step_table[e.from * codes + e.code] = e.to;
  }
  fa.elements = std::move(elems);
  return fa;
}

bool rational_membership(const Word& u, const Nfa& language, int n_gens) {
  FactorAutomaton c = factor_automaton(u, n_gens);
  return intersection_nonempty(language, c.nfa);
}

std::vector<FimElement> covering_idempotents(const Word& e, int n_gens) {
  if (!is_idempotent(e)) {
    throw NotIdempotentError("covering_idempotents: word is not idempotent");
  }
  InvAutomaton t = munn_tree(e, n_gens);
  // undirected degree per state
  std::vector<int> degree(t.n_states, 0);
  for (const PosEdge& edge : t.edges) {
    ++degree[edge.from];
    ++degree[edge.to];
  }
  std::map<std::string, FimElement> out;
  for (State leaf = 0; leaf < t.n_states; ++leaf) {
    if (leaf == t.initial || degree[leaf] != 1) {
      continue;
    }
    InvAutomaton sub;
    sub.n_gens = t.n_gens;
    std::vector<State> id(t.n_states, kNoState);
    State count = 0;
    for (State s = 0; s < t.n_states; ++s) {
      if (s != leaf) {
        id[s] = count++;
      }
    }
    sub.n_states = count;
    sub.initial = id[t.initial];
    sub.terminals = {id[t.initial]};
    for (const PosEdge& edge : t.edges) {
      if (edge.from == leaf || edge.to == leaf) {
        continue;
      }
      sub.edges.push_back({id[edge.from], edge.gen, id[edge.to]});
    }
    std::sort(sub.edges.begin(), sub.edges.end());
    FimElement cover = FimElement::from_rooted_tree(sub);
    out.emplace(cover.key(), std::move(cover));
  }
  std::vector<FimElement> res;
  res.reserve(out.size());
  for (auto& [key, el] : out) {
    res.push_back(std::move(el));
  }
  return res;
}

}  // namespace fwords
