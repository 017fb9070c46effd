#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fwords/free_group.hpp"
#include "fwords/sweeps.hpp"
#include "fwords/words.hpp"

using namespace fwords;

namespace {

const Alphabet kAb = Alphabet::lowercase(2);
const Alphabet kAbc = Alphabet::lowercase(3);

Word rand_word(std::mt19937& rng, int n_gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<uint32_t> code(0, 2 * n_gens - 1);
  Word w;
  int k = len(rng);
  for (int i = 0; i < k; ++i) {
    w.push_back(Letter::from_code(code(rng)));
  }
  return w;
}

}  // namespace

TEST_CASE("eraser image examples") {
  EraserTuple t = eraser_image(parse_word("a", kAbc), 3);
  CHECK(t.components[0].empty());
  CHECK(t.components[1] == parse_word("a", kAbc));
  CHECK(t.components[2] == parse_word("a", kAbc));

  t = eraser_image(parse_word("abAB", kAb), 2);
  CHECK(t.components[0].empty());
  CHECK(t.components[1].empty());

  t = eraser_image(parse_word("abcABC", kAbc), 3);
  CHECK(t.components[0] == parse_word("bcBC", kAbc));
  CHECK(t.components[1] == parse_word("acAC", kAbc));
  CHECK(t.components[2] == parse_word("abAB", kAbc));

  CHECK_THROWS_AS(eraser_image(parse_word("a", kAbc), 1),
                  std::invalid_argument);
}

TEST_CASE("eraser image is a homomorphism componentwise") {
  std::mt19937 rng(61);
  for (int i = 0; i < 200; ++i) {
    Word u = rand_word(rng, 3, 8);
    Word v = rand_word(rng, 3, 8);
    EraserTuple tu = eraser_image(u, 3);
    EraserTuple tv = eraser_image(v, 3);
    EraserTuple tuv = eraser_image(concat(u, v), 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(tuv.components[k] ==
            free_reduce(concat(tu.components[k], tv.components[k])));
    }
  }
}

TEST_CASE("fragility classics") {
  CHECK(is_fragile(parse_word("abAB", kAb), 2));
  CHECK(!is_fragile(parse_word("abcABC", kAbc), 3));
  CHECK(!is_fragile(Word{}, 2));
  CHECK(!is_fragile(parse_word("aA", kAb), 2));  // trivial after reduction
  // the commutator-subgroup witness has zero exponent sums anyway
  Word w = parse_word("abcABC", kAbc);
  for (int g = 0; g < 3; ++g) {
    CHECK(exponent_sum(w, g) == 0);
  }
}

TEST_CASE("in_image worked example") {
  EraserTuple t = make_eraser_tuple({parse_word("bcbcc", kAbc),
                                     parse_word("accac", kAbc),
                                     parse_word("aabb", kAbc)});
  CHECK(in_image(t));

  EraserTuple id3 = make_eraser_tuple(
      {Word{}, Word{}, Word{}});
  CHECK(in_image(id3));

  EraserTuple bad = make_eraser_tuple(
      {parse_word("b", kAbc), parse_word("A", kAbc), Word{}});
  CHECK(!in_image(bad));
}

TEST_CASE("preimage of the worked example") {
  EraserTuple t = make_eraser_tuple({parse_word("bcbcc", kAbc),
                                     parse_word("accac", kAbc),
                                     parse_word("aabb", kAbc)});
  Word w = preimage(t);
  CHECK(w == free_reduce(parse_word("bcbCaccac AABB aabb", kAbc)));
  EraserTuple img = eraser_image(w, 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(img.components[k] == t.components[k]);
  }
}

TEST_CASE("preimage round trips") {
  std::mt19937 rng(67);
  for (int i = 0; i < 200; ++i) {
    Word w = rand_word(rng, 3, 10);
    EraserTuple t = eraser_image(w, 3);
    Word back = preimage(t);
    EraserTuple img = eraser_image(back, 3);
    int total = 0;
    for (int k = 0; k < 3; ++k) {
      CHECK(img.components[k] == t.components[k]);
      total += static_cast<int>(t.components[k].size());
    }
    CHECK(static_cast<int>(back.size()) <= 4 * total + 6);
  }

  EraserTuple bad = make_eraser_tuple(
      {parse_word("b", kAbc), parse_word("A", kAbc), Word{}});
  CHECK_THROWS_AS(preimage(bad), NotInImageError);

  // identity tuple: the induction collapses to the empty word
  CHECK(preimage(make_eraser_tuple({Word{}, Word{}, Word{}})).empty());
}

TEST_CASE("tuple validation") {
  CHECK_THROWS_AS(make_eraser_tuple({parse_word("a", kAb), Word{}}),
                  std::invalid_argument);
}

TEST_CASE("nested commutators") {
  CHECK(nested_commutator(2) == parse_word("abAB", kAb));
  for (int n = 2; n <= 6; ++n) {
    Word c = nested_commutator(n);
    CHECK(is_fragile(c, n));
  }
  CHECK(nested_commutator(4).size() == 22);
  CHECK_THROWS_AS(nested_commutator(1), std::invalid_argument);
}

TEST_CASE("fragility equals kernel membership of the image") {
  std::mt19937 rng(71);
  for (int i = 0; i < 300; ++i) {
    Word w = rand_word(rng, 2, 8);
    EraserTuple t = eraser_image(w, 2);
    bool kernel = t.components[0].empty() && t.components[1].empty() &&
                  !free_reduce(w).empty();
    CHECK(is_fragile(w, 2) == kernel);
  }
}

TEST_CASE("two-generator fragility is the commutator subgroup (sampled)") {
  std::mt19937 rng(73);
  for (int i = 0; i < 400; ++i) {
    Word w = rand_word(rng, 2, 8);
    bool commutator = !free_reduce(w).empty() && exponent_sum(w, 0) == 0 &&
                      exponent_sum(w, 1) == 0;
    CHECK(is_fragile(w, 2) == commutator);
  }
}

TEST_CASE("image membership soundness, exhaustive small words") {
  for (int n : {2, 3}) {
    auto codes = all_codes(n);
    int64_t count = count_words_upto(2 * n, 6);
    int64_t bad = 0;
    for (int64_t i = 0; i < count; ++i) {
      Word w = unrank_word_upto(i, codes, 6);
      if (!in_image(eraser_image(w, n))) {
        ++bad;
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("bounded preimage search agrees with in_image on tiny tuples") {
  // small slice of the acceptance sweep
  std::vector<Word> comp0, comp1, comp2;
  auto c0 = codes_without(3, 0);
  auto c1 = codes_without(3, 1);
  auto c2 = codes_without(3, 2);
  for (int64_t k = 0; k < count_reduced_upto(4, 1); ++k) {
    comp0.push_back(unrank_reduced_upto(k, c0, 1));
    comp1.push_back(unrank_reduced_upto(k, c1, 1));
    comp2.push_back(unrank_reduced_upto(k, c2, 1));
  }
  for (const Word& a : comp0) {
    for (const Word& b : comp1) {
      for (const Word& c : comp2) {
        EraserTuple t = make_eraser_tuple({a, b, c});
        int total = static_cast<int>(a.size() + b.size() + c.size());
        auto found = bounded_preimage_search(t, 3 * total + 6);
        CHECK(found.has_value() == in_image(t));
        if (found) {
          EraserTuple img = eraser_image(*found, 3);
          for (int k = 0; k < 3; ++k) {
            CHECK(img.components[k] == t.components[k]);
          }
        }
      }
    }
  }
}
