#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fwords/fim.hpp"
#include "fwords/presentation.hpp"
#include "fwords/stephen.hpp"
#include "fwords/sweeps.hpp"

using namespace fwords;

namespace {

const Alphabet kAb = Alphabet::lowercase(2);

Presentation pres(const std::string& text) { return parse_presentation(text); }

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

TEST_CASE("presentation files parse") {
  Presentation p = pres("# a comment\nalphabet: a b\naA = b\n");
  CHECK(p.alphabet.size() == 2);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].first == parse_word("aA", p.alphabet));
  CHECK(p.relations[0].second == parse_word("b", p.alphabet));

  Presentation bicyclic = pres("alphabet: a\naA = 1\n");
  CHECK(bicyclic.relations[0].second.empty());

  CHECK_THROWS_AS(pres("aA = b\n"), ParseError);
  CHECK_THROWS_AS(pres("alphabet: a\naA\n"), ParseError);

  std::string round = format_presentation(p);
  Presentation p2 = pres(round);
  CHECK(p2.relations == p.relations);
}

TEST_CASE("expand_once on the free presentation is the identity") {
  Presentation p = free_presentation(kAb);
  InvAutomaton m = munn_tree(parse_word("abA", kAb), 2);
  InvAutomaton e = expand_once(m, p);
  CHECK(isomorphic(e, m));
}

TEST_CASE("expand_once adjoins the opposite relation side") {
  Presentation p = pres("alphabet: a b\naA = b\n");
  InvAutomaton m = munn_tree(parse_word("aA", kAb), 2);
  InvAutomaton e = expand_once(m, p);
  // the b-edge closing the relation appears
  CHECK(accepts(e, parse_word("b", kAb)));
}

TEST_CASE("expansion is monotone on sampled words") {
  Presentation p = pres("alphabet: a b\naA = b\n");
  std::mt19937 rng(83);
  InvAutomaton cur = munn_tree(parse_word("abAB", kAb), 2);
  for (int step = 0; step < 3; ++step) {
    InvAutomaton next = expand_once(cur, p);
    for (int i = 0; i < 80; ++i) {
      Word probe = rand_word(rng, 2, 6);
      if (accepts(cur, probe)) {
        CHECK(accepts(next, probe));
      }
    }
    cur = next;
  }
}

TEST_CASE("free closure is the tree in one iteration") {
  Presentation p = free_presentation(kAb);
  ClosureResult res = closure(parse_word("abA", kAb), p);
  CHECK(res.converged);
  CHECK(res.iterations == 1);
  CHECK(isomorphic(res.automaton, munn_tree(parse_word("abA", kAb), 2)));

  // exhaustive on short words, sampled up to the stated length
  auto codes = all_codes(2);
  for (int64_t i = 0; i < count_words_upto(4, 6); ++i) {
    Word w = unrank_word_upto(i, codes, 6);
    ClosureResult r = closure(w, p);
    CHECK(r.converged);
    CHECK(isomorphic(r.automaton, munn_tree(w, 2)));
  }
  std::mt19937 rng(89);
  for (int i = 0; i < 200; ++i) {
    Word w = rand_word(rng, 2, 10);
    ClosureResult r = closure(w, p);
    CHECK(r.converged);
    CHECK(isomorphic(r.automaton, munn_tree(w, 2)));
  }
}

TEST_CASE("the aA=b presentation proves b equals aA") {
  Presentation p = pres("alphabet: a b\naA = b\n");
  ClosureResult cb = closure(parse_word("b", kAb), p);
  ClosureResult caa = closure(parse_word("aA", kAb), p);
  REQUIRE(cb.converged);
  REQUIRE(caa.converged);
  CHECK(cb.iterations <= 5);
  CHECK(caa.iterations <= 5);
  CHECK(isomorphic(cb.automaton, caa.automaton));
  CHECK(word_problem(parse_word("b", kAb), parse_word("aA", kAb), p) ==
        Answer::yes);
}

TEST_CASE("bicyclic closure exhausts any budget and keeps growing") {
  Presentation p = pres("alphabet: a\naA = 1\n");
  Budget small{12, 100000};
  ClosureResult res = closure(parse_word("a", p.alphabet), p, small);
  CHECK(!res.converged);
  CHECK(res.iterations == 12);
  REQUIRE(res.state_history.size() >= 3);
  for (size_t i = 1; i < res.state_history.size(); ++i) {
    CHECK(res.state_history[i] > res.state_history[i - 1]);
  }
  CHECK(word_problem(parse_word("a", p.alphabet), parse_word("aa", p.alphabet),
                     p, small) == Answer::unknown);
}

TEST_CASE("state budget also stops the closure") {
  Presentation p = pres("alphabet: a\naA = 1\n");
  Budget tiny{1000, 8};
  ClosureResult res = closure(parse_word("a", p.alphabet), p, tiny);
  CHECK(!res.converged);
  CHECK(res.automaton.n_states > 8);
}

TEST_CASE("convergence detection is sound") {
  Presentation p = pres("alphabet: a b\naA = b\n");
  ClosureResult res = closure(parse_word("abA", kAb), p);
  REQUIRE(res.converged);
  InvAutomaton extra = expand_once(res.automaton, p);
  CHECK(isomorphic(extra, res.automaton));
}

TEST_CASE("word problem on the free presentation") {
  Presentation p = free_presentation(kAb);
  CHECK(word_problem(parse_word("aAa", kAb), parse_word("a", kAb), p) ==
        Answer::yes);
  CHECK(word_problem(parse_word("ab", kAb), parse_word("ba", kAb), p) ==
        Answer::no);

  SweepResult sweep = free_word_problem_sweep(4);
  CHECK(sweep.clean());
}

TEST_CASE("natural order examples") {
  Presentation p = free_presentation(kAb);
  CHECK(natural_order(parse_word("aA", kAb), Word{}, p) == Answer::yes);
  CHECK(natural_order(parse_word("a", kAb), parse_word("aAa", kAb), p) ==
        Answer::yes);
  CHECK(natural_order(parse_word("a", kAb), parse_word("b", kAb), p) ==
        Answer::no);
}

TEST_CASE("closure rejects a zero budget") {
  Presentation p = free_presentation(kAb);
  CHECK_THROWS_AS(closure(parse_word("a", kAb), p, Budget{0, 10}),
                  std::invalid_argument);
}
