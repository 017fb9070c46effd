#include "fwords/nfa.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace fwords {

bool Nfa::is_terminal(State s) const {
  return std::find(terminals.begin(), terminals.end(), s) != terminals.end();
}

bool nfa_accepts(const Nfa& a, const Word& w) {
  std::vector<std::vector<std::pair<uint32_t, State>>> adj(a.n_states);
  for (const auto& e : a.edges) {
    adj[e.from].emplace_back(e.code, e.to);
  }
  std::set<State> cur(a.initials.begin(), a.initials.end());
  for (Letter l : w) {
    std::set<State> next;
    for (State s : cur) {
      for (auto [code, t] : adj[s]) {
        if (code == l.code()) {
          next.insert(t);
        }
      }
    }
    if (next.empty()) {
      return false;
    }
    cur = std::move(next);
  }
  for (State s : cur) {
    if (a.is_terminal(s)) {
      return true;
    }
  }
  return false;
}

bool intersection_nonempty(const Nfa& a, const Nfa& b) {
  std::vector<std::vector<std::pair<uint32_t, State>>> adj_a(a.n_states),
      adj_b(b.n_states);
  for (const auto& e : a.edges) {
    adj_a[e.from].emplace_back(e.code, e.to);
  }
  for (const auto& e : b.edges) {
    adj_b[e.from].emplace_back(e.code, e.to);
  }
  std::unordered_set<uint64_t> seen;
  std::deque<std::pair<State, State>> bfs;
  auto push = [&](State x, State y) {
    uint64_t key = (static_cast<uint64_t>(x) << 32) | y;
    if (seen.insert(key).second) {
      bfs.push_back({x, y});
    }
  };
  for (State x : a.initials) {
    for (State y : b.initials) {
      push(x, y);
    }
  }
  while (!bfs.empty()) {
    auto [x, y] = bfs.front();
    bfs.pop_front();
    if (a.is_terminal(x) && b.is_terminal(y)) {
      return true;
    }
    for (auto [code, tx] : adj_a[x]) {
      for (auto [code2, ty] : adj_b[y]) {
        if (code == code2) {
          push(tx, ty);
        }
      }
    }
  }
  return false;
}

Nfa nfa_from_json_str(const std::string& text, const Alphabet& alphabet) {
  auto j = nlohmann::json::parse(text);
  Nfa a;
  a.n_gens = alphabet.size();
  a.n_states = j.at("states").get<size_t>();
  a.initials = j.at("initial").get<std::vector<State>>();
  a.terminals = j.at("terminals").get<std::vector<State>>();
  for (const auto& je : j.at("edges")) {
    State from = je.at("from").get<State>();
    State to = je.at("to").get<State>();
    Word label = parse_word(je.at("label").get<std::string>(), alphabet);
    if (label.size() != 1) {
      throw ParseError("nfa: edge label must be a single letter");
    }
    if (from >= a.n_states || to >= a.n_states) {
      throw ParseError("nfa: edge endpoint out of range");
    }
    a.edges.push_back({from, label[0].code(), to});
  }
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  return a;
}

std::string nfa_to_json_str(const Nfa& a, const Alphabet& alphabet) {
  nlohmann::ordered_json j;
  j["states"] = a.n_states;
  j["initial"] = a.initials;
  j["terminals"] = a.terminals;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : a.edges) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["label"] = format_word({Letter::from_code(e.code)}, alphabet);
    je["to"] = e.to;
    edges.push_back(je);
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace fwords
