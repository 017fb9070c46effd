#ifndef FWORDS_SWEEPS_HPP_
#define FWORDS_SWEEPS_HPP_

#include <cstdint>
#include <vector>

#include "fwords/eraser_inv.hpp"
#include "fwords/words.hpp"

namespace fwords {

// Exhaustive verification kernels. Every kernel exists in an OpenMP
// flavour and a plain serial reference, sharing the per-item check;
// tests assert the two agree and bench_sweeps compares their wall time.
struct SweepResult {
  uint64_t checked = 0;
  uint64_t mismatches = 0;
  int64_t first_mismatch = -1;  // smallest failing item index

  bool clean() const { return mismatches == 0; }
};

// ---- enumeration helpers ------------------------------------------------

int64_t count_words_upto(int n_codes, int max_len);
Word unrank_word_upto(int64_t index, const std::vector<uint32_t>& codes,
                      int max_len);

int64_t count_reduced_upto(int n_codes, int max_len);
Word unrank_reduced_upto(int64_t index, const std::vector<uint32_t>& codes,
                         int max_len);

std::vector<uint32_t> all_codes(int n_gens);
// codes of the doubled alphabet avoiding one generator
std::vector<uint32_t> codes_without(int n_gens, int skipped_gen);

// ---- plain-search oracles ----------------------------------------------

// Exact free-inverse-monoid preimage existence for a tuple, by
// reachability over (grown subtree, position) configurations inside the
// component trees. Independent of the product/contraction machinery.
bool fim_image_reachable(const InvEraserTuple& t, int n_gens);

// ---- kernels -------------------------------------------------------------

// fragility == (nontrivial and all exponent sums vanish), reduced words
// over two generators up to max_len
SweepResult fr2_commutator_sweep(int max_len);
SweepResult fr2_commutator_sweep_serial(int max_len);

// free-group image membership vs bounded preimage search, all tuples over
// three generators with component length <= comp_max
SweepResult kn_image_oracle_sweep(int comp_max);
SweepResult kn_image_oracle_sweep_serial(int comp_max);

// tree isomorphism vs mutual acceptance, all word pairs up to max_len
// over two generators
SweepResult munn_word_problem_sweep(int max_len);
SweepResult munn_word_problem_sweep_serial(int max_len);

// factor-automaton acceptance vs element equality, |u| <= u_max,
// |w| <= w_max over two generators
SweepResult factor_automaton_sweep(int u_max, int w_max);
SweepResult factor_automaton_sweep_serial(int u_max, int w_max);

// stabilized factor enumeration vs bounded brute-force path labels,
// |u| <= u_max over two generators
SweepResult factors_oracle_sweep(int u_max);
SweepResult factors_oracle_sweep_serial(int u_max);

// every eraser image is accepted as a member, |w| <= w_max over three
// generators
SweepResult eraser_soundness_sweep(int w_max);
SweepResult eraser_soundness_sweep_serial(int w_max);

// product/contraction membership vs reachability oracle, component words
// up to comp_max over three generators
SweepResult eraser_completeness_sweep(int comp_max);
SweepResult eraser_completeness_sweep_serial(int comp_max);

// kernel predicate vs componentwise idempotency vs trivial-or-fragile,
// |w| <= w_max over two generators
SweepResult kernel_sweep(int w_max);
SweepResult kernel_sweep_serial(int w_max);

// budget-free word problem vs tree equality, all word pairs up to max_len
// over two generators
SweepResult free_word_problem_sweep(int max_len);
SweepResult free_word_problem_sweep_serial(int max_len);

}  // namespace fwords

#endif  // FWORDS_SWEEPS_HPP_
