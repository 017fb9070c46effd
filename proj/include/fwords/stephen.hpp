#ifndef FWORDS_STEPHEN_HPP_
#define FWORDS_STEPHEN_HPP_

#include <vector>

#include "fwords/inv_automaton.hpp"
#include "fwords/presentation.hpp"
#include "fwords/words.hpp"

namespace fwords {

enum class Answer { yes, no, unknown };

struct Budget {
  int max_iterations = 1000;
  size_t max_states = 100000;
};

// The iterative closure does not terminate in general (the bicyclic
// presentation makes it grow forever), so budget exhaustion is data, not
// an error.
struct ClosureResult {
  bool converged = false;
  InvAutomaton automaton;  // converged automaton, or the last iterate
  int iterations = 0;      // expansion sweeps performed
  std::vector<size_t> state_history;  // state counts, starting automaton first
};

// One simultaneous sweep: wherever one side of a relation labels a path,
// the opposite side's path is adjoined over fresh interior states; the
// result is folded. Identity on folded automata when R is empty.
InvAutomaton expand_once(const InvAutomaton& a, const Presentation& p);

// Iterates expand_once from the given folded automaton until two
// successive iterates are isomorphic (inverse automata are minimal, so
// this is language equality).
ClosureResult closure_from(InvAutomaton start, const Presentation& p,
                           Budget budget = {});

// Closure of the word's path automaton; when it converges this is the
// word's canonical automaton with respect to the presentation.
ClosureResult closure(const Word& w, const Presentation& p,
                      Budget budget = {});

Answer word_problem(const Word& u, const Word& v, const Presentation& p,
                    Budget budget = {});

// Tests v >= u in the natural partial order.
Answer natural_order(const Word& u, const Word& v, const Presentation& p,
                     Budget budget = {});

}  // namespace fwords

#endif  // FWORDS_STEPHEN_HPP_
