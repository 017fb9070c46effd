#ifndef FWORDS_WORDS_HPP_
#define FWORDS_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fwords {

// A generator symbol with a sign. Packed as 2*gen (positive) or
// 2*gen+1 (inverse), so that the involution is `code ^ 1`.
class Letter {
 public:
  constexpr Letter(int gen, int sign)
      : code_(static_cast<uint32_t>(gen) * 2 + (sign < 0 ? 1 : 0)) {}

  static constexpr Letter from_code(uint32_t code) { return Letter(code); }
  static constexpr Letter positive(int gen) { return Letter(gen, +1); }
  static constexpr Letter negative(int gen) { return Letter(gen, -1); }

  constexpr int gen() const { return static_cast<int>(code_ >> 1); }
  constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
  constexpr bool is_inverse() const { return (code_ & 1) != 0; }
  constexpr Letter inverse() const { return Letter(code_ ^ 1); }
  constexpr uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

 private:
  explicit constexpr Letter(uint32_t code) : code_(code) {}
  uint32_t code_;
};

// A word over the doubled alphabet; the empty word is the identity.
using Word = std::vector<Letter>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered list of distinct generator names; the enumeration order is fixed
// and shared by every operation.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // a, b, c, ... (n <= 26)
  static Alphabet lowercase(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  std::optional<int> index(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

// Free-group normal form: removes cancelling adjacent pairs (one stack scan).
Word free_reduce(const Word& w);
bool is_reduced(const Word& w);

// Deletes every occurrence of generator `gen` (both signs). Monoid
// homomorphism; commutes with inversion and with other deletions.
Word delete_letter(const Word& w, int gen, int n_gens);

// True iff w reduces to the identity in the free group.
bool is_dyck(const Word& w);

long exponent_sum(const Word& w, int gen);

// Word syntax. Compact form "abAB" (uppercase = inverse) when every
// generator name is a single lowercase letter; token form
// "a b a^-1 b^-1" otherwise. The empty word is spelled "1".
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

// Accepts "alphabet: a b c", "a b c" or "abc".
Alphabet parse_alphabet(std::string_view decl);
std::string format_alphabet(const Alphabet& alphabet);

}  // namespace fwords

#endif  // FWORDS_WORDS_HPP_
