#ifndef FWORDS_NFA_HPP_
#define FWORDS_NFA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fwords/inv_automaton.hpp"
#include "fwords/words.hpp"

namespace fwords {

// Plain nondeterministic automaton over the doubled alphabet, with no
// implicit inverse edges (labels are signed letters, nothing more).
struct Nfa {
  int n_gens = 0;
  size_t n_states = 0;
  std::vector<State> initials;
  std::vector<State> terminals;
  struct Edge {
    State from;
    uint32_t code;
    State to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;

  bool is_terminal(State s) const;
};

bool nfa_accepts(const Nfa& a, const Word& w);

// Emptiness of the intersection, by reachability over the pair graph.
bool intersection_nonempty(const Nfa& a, const Nfa& b);

Nfa nfa_from_json_str(const std::string& text, const Alphabet& alphabet);
std::string nfa_to_json_str(const Nfa& a, const Alphabet& alphabet);

}  // namespace fwords

#endif  // FWORDS_NFA_HPP_
