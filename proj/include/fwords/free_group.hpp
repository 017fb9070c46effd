#ifndef FWORDS_FREE_GROUP_HPP_
#define FWORDS_FREE_GROUP_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "fwords/words.hpp"

namespace fwords {

struct NotInImageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One reduced word per deleted generator; component i never uses
// generator i.
struct EraserTuple {
  std::vector<Word> components;

  int rank() const { return static_cast<int>(components.size()); }
};

// Validates component shapes and free-reduces them.
EraserTuple make_eraser_tuple(std::vector<Word> components);

// Tuple of the free-reduced single-letter deletions of w.
EraserTuple eraser_image(const Word& w, int n_gens);

// Nontrivial after reduction and killed by every single-generator
// deletion.
bool is_fragile(const Word& w, int n_gens);

// Pairwise deletion compatibility: component i with j deleted equals
// component j with i deleted, for all i != j.
bool in_image(const EraserTuple& t);

// Constructive preimage (no length minimization; reduction only at the
// end). Throws NotInImageError when in_image(t) fails.
Word preimage(const EraserTuple& t);

// Left-nested commutator [[..[a1,a2],a3..],an]; returned unreduced and
// checked fragile before returning.
Word nested_commutator(int n_gens);

// Oracle-grade bounded search for a preimage of t among reduced words of
// length <= max_len. Prunes only on sound bounds (per-component free-group
// distances and exponent-sum feasibility), so it finds a witness iff one
// exists within the bound.
std::optional<Word> bounded_preimage_search(const EraserTuple& t,
                                            int max_len);

}  // namespace fwords

#endif  // FWORDS_FREE_GROUP_HPP_
