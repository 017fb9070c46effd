#ifndef FWORDS_FIM_HPP_
#define FWORDS_FIM_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "fwords/inv_automaton.hpp"
#include "fwords/nfa.hpp"
#include "fwords/words.hpp"

namespace fwords {

struct NotIdempotentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value object for a free-inverse-monoid element: the canonical tree
// automaton of a representative word, with its distinguished terminal.
// Equality of elements is equality of the canonical keys.
class FimElement {
 public:
  static FimElement from_word(const Word& w, int n_gens);
  // Tree with initial == terminal == root; the representative is the
  // depth-first tour of the tree.
  static FimElement from_rooted_tree(const InvAutomaton& tree);

  const InvAutomaton& tree() const { return tree_; }
  const Word& rep() const { return rep_; }
  const std::string& key() const { return key_; }

  // Element obtained by right-multiplying with a letter.
  FimElement extended(Letter l, int n_gens) const;

  bool operator==(const FimElement& o) const { return key_ == o.key_; }
  bool operator<(const FimElement& o) const { return key_ < o.key_; }

 private:
  InvAutomaton tree_;
  Word rep_;
  std::string key_;
};

bool fim_equal(const Word& u, const Word& v, int n_gens);

// Idempotents are exactly the words that reduce to the identity in the
// free group.
bool is_idempotent(const Word& w);

// True iff v labels a path (any endpoints) in the tree of u.
bool is_factor(const Word& v, const Word& u, int n_gens);

// All factors of u, by extending path labels bucketed per end vertex until
// no bucket gains a new element. Always terminates.
std::vector<FimElement> factors(const Word& u, int n_gens);

// Deterministic automaton over the doubled alphabet whose states are the
// factors of u and which accepts exactly the words equal to u.
struct FactorAutomaton {
  Nfa nfa;
  std::vector<FimElement> elements;  // aligned with state ids
  std::vector<State> step_table;     // dense (state, code) -> state
  bool accepts(const Word& w) const;
};

FactorAutomaton factor_automaton(const Word& u, int n_gens);

// Is the element of u in the image of the rational language L?
bool rational_membership(const Word& u, const Nfa& language, int n_gens);

// Minimal idempotents strictly above e in the natural order: one per
// distinct leaf-deleted subtree of e's tree.
std::vector<FimElement> covering_idempotents(const Word& e, int n_gens);

// Depth-first tour of a rooted tree automaton, descending each positive
// direction in code order.
Word tree_tour_word(const InvAutomaton& tree);

}  // namespace fwords

#endif  // FWORDS_FIM_HPP_
