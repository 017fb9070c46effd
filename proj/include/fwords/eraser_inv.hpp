#ifndef FWORDS_ERASER_INV_HPP_
#define FWORDS_ERASER_INV_HPP_

#include <stdexcept>
#include <vector>

#include "fwords/presentation.hpp"
#include "fwords/stephen.hpp"
#include "fwords/words.hpp"

namespace fwords {

struct MalformedTupleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LiftFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One word per deleted generator; component i is a representative of an
// element of the i-th erased monoid, so it is kept unreduced.
struct InvEraserTuple {
  std::vector<Word> components;
  int rank() const { return static_cast<int>(components.size()); }
};

// The base presentation with generator `index` deleted from every
// relation side. The alphabet object is kept whole; the deleted generator
// never occurs in the derived relations.
struct ErasedPresentation {
  Presentation base;
  int index = 0;
  Presentation derived;
};

ErasedPresentation erase_presentation(const Presentation& p, int index);

// Componentwise letter deletion of w.
InvEraserTuple eraser_image_inv(const Word& w, int n_gens);

// Free-inverse-monoid image membership: builds the tree automaton of each
// component, saturates it with loops of the deleted letter, forms the
// synchronized product and checks that each single-letter contraction of
// the product collapses back onto the component tree.
bool image_membership_fim(const InvEraserTuple& t, int n_gens);

// Presented variant. Component automata come from the iterated closure
// (budget-bounded: unknown on exhaustion); equality of the contracted
// product with the component automaton is decided through the idempotent
// part, excluding covering idempotents when the erased presentation is
// free and falling back to budget-bounded closure comparison otherwise.
Answer image_membership_presented(const InvEraserTuple& t,
                                  const Presentation& p, Budget budget = {});

// Preimage word for an accepted tuple, assembled from lifted accepting
// paths of the contracted products; the result is re-checked componentwise
// before returning.
Word witness(const InvEraserTuple& t, int n_gens);

// Membership of w in the kernel-of-congruence part: every component of
// its image is idempotent, i.e. w is trivial or fragile in the free
// group.
bool in_kernel_K(const Word& w, int n_gens);

}  // namespace fwords

#endif  // FWORDS_ERASER_INV_HPP_
