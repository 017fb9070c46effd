#ifndef FWORDS_TRANSDUCER_HPP_
#define FWORDS_TRANSDUCER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "fwords/words.hpp"

namespace fwords {

struct NotInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Letter-to-letter transducer with state set Q and input alphabet A.
// Invertible when every per-state output map is a permutation of A; only
// then do the formal inverse states act.
class Transducer {
 public:
  Transducer(std::vector<std::string> state_names,
             std::vector<std::string> letter_names,
             std::vector<std::vector<int>> next_state,
             std::vector<std::vector<int>> output);

  int n_states() const { return static_cast<int>(state_names_.size()); }
  int n_letters() const { return static_cast<int>(letter_names_.size()); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::string>& letter_names() const {
    return letter_names_;
  }
  bool invertible() const { return invertible_; }

  // single step of a signed state on a letter: (output letter, next state)
  std::pair<int, Letter> step(Letter state, int letter) const;

 private:
  std::vector<std::string> state_names_;
  std::vector<std::string> letter_names_;
  std::vector<std::vector<int>> next_;     // [state][letter] -> state
  std::vector<std::vector<int>> out_;      // [state][letter] -> letter
  std::vector<std::vector<int>> out_inv_;  // inverse permutations
  bool invertible_;
};

// Action of a signed state word on an input word (rightmost state acts
// first).
std::vector<int> act(const Transducer& t, const Word& states,
                     const std::vector<int>& input);

// Restriction (section) of the state word at the input word.
Word restrict_word(const Transducer& t, const Word& states,
                   const std::vector<int>& input);

// Adds a fresh sink state and one new input letter per state plus one for
// the sink. Each state fixes all new letters; reading its own name leads
// to the sink, reading any other new letter restricts to the state itself.
Transducer extend_with_sink(const Transducer& t);

// Semi-decision: does the state word act as the identity on every input
// of length <= depth?
bool is_relation_bounded(const Transducer& t, const Word& states, int depth);

// Requires is_relation_bounded(t, states, depth); checks fragility of the
// word over its support alphabet.
bool fragile_relation_check(const Transducer& t, const Word& states,
                            int depth);

Transducer transducer_from_json_str(const std::string& text);
std::string transducer_to_json_str(const Transducer& t);
Transducer load_transducer(const std::string& path);

}  // namespace fwords

#endif  // FWORDS_TRANSDUCER_HPP_
