#ifndef FWORDS_PRESENTATION_HPP_
#define FWORDS_PRESENTATION_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fwords/words.hpp"

namespace fwords {

// Inverse monoid presentation: an alphabet plus a finite relation set.
// An empty relation set presents the free inverse monoid.
struct Presentation {
  Alphabet alphabet;
  std::vector<std::pair<Word, Word>> relations;
};

inline Presentation free_presentation(const Alphabet& alphabet) {
  return Presentation{alphabet, {}};
}

// File format: first non-comment line "alphabet: a b", then one relation
// per line "u = v" in word syntax; '#' starts a comment.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& p);

}  // namespace fwords

#endif  // FWORDS_PRESENTATION_HPP_
