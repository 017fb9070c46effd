#ifndef FWORDS_INV_AUTOMATON_HPP_
#define FWORDS_INV_AUTOMATON_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwords/words.hpp"

namespace fwords {

using State = uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

struct NondeterministicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PathNotPresentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyLanguageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge labelled by a positive generator. The opposite edge
// (to, gen^-1, from) exists implicitly, which makes the involutive-closure
// invariant true by construction.
struct PosEdge {
  State from;
  int gen;
  State to;
  friend auto operator<=>(const PosEdge&, const PosEdge&) = default;
};

// Finite involutive automaton over a doubled alphabet with one initial
// state and a terminal-state set. Values are immutable once built; every
// operation returns a fresh automaton.
struct InvAutomaton {
  int n_gens = 0;
  size_t n_states = 0;
  State initial = 0;
  std::vector<State> terminals;  // sorted, unique
  std::vector<PosEdge> edges;    // sorted, unique

  bool is_terminal(State s) const;
};

// Merge provenance produced by fold/contract. `to_folded` is the quotient
// map; the records plus the proof forest expand the identification of any
// two equivalent states into a connector path in the original automaton
// (a_i^{+-1} letters for contractions, x ... x^-1 detours for folds).
struct FoldLog {
  struct Record {
    bool contraction;
    uint32_t code;  // signed letter code of the witness edge(s)
    State e1_from, e1_to;
    State e2_from, e2_to;  // fold records only
  };
  std::vector<Record> records;
  // proof forest over original states: (neighbour, record index)
  std::vector<std::vector<std::pair<State, uint32_t>>> forest;
  std::vector<State> to_folded;

  // Label of a path p -> q in the original automaton, valid whenever
  // to_folded[p] == to_folded[q]. For a fold log the label is a Dyck word;
  // for a contraction at gen i its image under deleting i is Dyck.
  Word connector(State p, State q) const;
};

struct FoldResult {
  InvAutomaton automaton;
  FoldLog log;
};

// Path automaton of w: states are the prefixes, initial 1, terminal w.
InvAutomaton linear_automaton(const Word& w, int n_gens);

// Confluent edge folding (disjoint-set over states with a conflict
// worklist). The result is deterministic and BFS-renumbered from the
// initial state, so equal automata get byte-equal representations.
InvAutomaton fold(const InvAutomaton& a);
FoldResult fold_logged(const InvAutomaton& a);
// Test hook: processes the worklist in a randomized order.
InvAutomaton fold_shuffled(const InvAutomaton& a, std::mt19937& rng);
// Folds after first identifying the given state pairs (used for relation
// sides of length zero).
InvAutomaton fold_with_merges(
    const InvAutomaton& a,
    const std::vector<std::pair<State, State>>& merges);

InvAutomaton munn_tree(const Word& w, int n_gens);

// Deterministic transition view; construction throws NondeterministicError
// if any state has two distinct moves with the same signed letter.
class StepTable {
 public:
  explicit StepTable(const InvAutomaton& a);
  State step(State s, Letter l) const {
    return table_[s * stride_ + l.code()];
  }
  // Runs w from `from`; nullopt when a transition is missing.
  std::optional<State> run(State from, const Word& w) const;

 private:
  size_t stride_;
  std::vector<State> table_;
};

bool is_deterministic(const InvAutomaton& a);
bool accepts(const InvAutomaton& a, const Word& w);

// True iff w labels a path from `from` to `to`; safe on nondeterministic
// automata (searches over (state, position) pairs).
bool labels_path(const InvAutomaton& a, const Word& w, State from, State to);
// True iff w labels a path anywhere in a deterministic automaton.
bool labels_some_path(const StepTable& st, size_t n_states, const Word& w);

// Basepoint-anchored isomorphism of deterministic trim automata, by
// synchronized traversal from the initial states.
bool isomorphic(const InvAutomaton& a, const InvAutomaton& b);

// In an involutive automaton reachability is undirected, so trim keeps the
// connected component of the initial state provided it meets a terminal.
std::optional<InvAutomaton> maybe_trim(const InvAutomaton& a);
InvAutomaton trim(const InvAutomaton& a);  // EmptyLanguageError otherwise
bool is_trim(const InvAutomaton& a);

bool is_tree(const InvAutomaton& a);

// Synchronized product over the reachable tuple states; accepts w iff
// every factor accepts w.
InvAutomaton product(const std::vector<const InvAutomaton*>& factors);

// Adds a gen-loop (both signs, implicitly) at every state. The automaton
// must not already use `gen`.
InvAutomaton hat(const InvAutomaton& a, int gen);

// a_i-contraction: identifies the endpoints of every gen-edge, erases all
// gen-edges (including loops created by the identification) and folds.
// Initial/terminals of the result are the images of a's.
InvAutomaton contract(const InvAutomaton& a, int gen);
FoldResult contract_logged(const InvAutomaton& a, int gen);

// Lifts a path labelled w between the images of from_orig/to_orig in the
// folded automaton back to the original, inserting connector blocks.
Word lift_path(const InvAutomaton& original, const FoldLog& log,
               const Word& w, State from_orig, State to_orig);

// BFS renumbering from the initial state (canonical for deterministic
// automata).
InvAutomaton canonicalize(const InvAutomaton& a);

// Serialization of a canonically numbered automaton, usable as a hash key.
std::string canonical_key(const InvAutomaton& a);

std::string to_dot(const InvAutomaton& a, const Alphabet& alphabet);
std::string to_json_str(const InvAutomaton& a, const Alphabet& alphabet);

}  // namespace fwords

#endif  // FWORDS_INV_AUTOMATON_HPP_
