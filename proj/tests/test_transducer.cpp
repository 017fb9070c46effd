#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fwords/transducer.hpp"
#include "fwords/words.hpp"

using namespace fwords;

namespace {

// binary odometer: state t adds one with carry, e is the identity sink
Transducer odometer() {
  return Transducer({"t", "e"}, {"0", "1"},
                    {{1, 0},    // t: on 0 go to e, on 1 keep carrying
                     {1, 1}},   // e: sink
                    {{1, 0},    // t: 0 -> 1, 1 -> 0
                     {0, 1}});  // e: identity
}

// invertible two-state machine with a swap output
Transducer swapper() {
  return Transducer({"p", "q"}, {"0", "1"},
                    {{1, 0},  // p
                     {0, 1}},  // q
                    {{0, 1},    // p outputs identity
                     {1, 0}});  // q swaps
}

std::vector<int> bits(std::initializer_list<int> v) { return {v}; }

std::vector<int> unrank_bits(int64_t idx, int len) {
  std::vector<int> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx & 1);
    idx >>= 1;
  }
  return out;
}

Word state_word(std::initializer_list<int> signed_states) {
  Word w;
  for (int s : signed_states) {
    w.push_back(s >= 0 ? Letter::positive(s) : Letter::negative(-s - 1));
  }
  return w;
}

}  // namespace

TEST_CASE("construction checks invertibility") {
  CHECK(odometer().invertible());
  CHECK(swapper().invertible());
  Transducer broken({"s"}, {"0", "1"}, {{0, 0}}, {{0, 0}});
  CHECK(!broken.invertible());
  CHECK_THROWS_AS(act(broken, state_word({-1}), bits({0})),
                  NotInvertibleError);
  // positive states still act
  CHECK(act(broken, state_word({0}), bits({0, 1})) == bits({0, 0}));
}

TEST_CASE("odometer adds one in binary (LSB first)") {
  Transducer t = odometer();
  CHECK(act(t, state_word({0}), bits({0, 0, 0})) == bits({1, 0, 0}));
  CHECK(act(t, state_word({0}), bits({1, 0, 0})) == bits({0, 1, 0}));
  CHECK(act(t, state_word({0}), bits({1, 1, 0})) == bits({0, 0, 1}));
  // sink does nothing
  CHECK(act(t, state_word({1}), bits({1, 0, 1})) == bits({1, 0, 1}));
}

TEST_CASE("empty state word acts as the identity") {
  Transducer t = swapper();
  for (int64_t i = 0; i < 16; ++i) {
    auto u = unrank_bits(i, 4);
    CHECK(act(t, Word{}, u) == u);
  }
}

TEST_CASE("inverse coherence") {
  for (Transducer t : {odometer(), swapper()}) {
    for (int s = 0; s < t.n_states(); ++s) {
      for (int len = 0; len <= 5; ++len) {
        for (int64_t i = 0; i < (int64_t{1} << len); ++i) {
          auto u = unrank_bits(i, len);
          Word fw = {Letter::positive(s)};
          Word bw = {Letter::negative(s)};
          CHECK(act(t, bw, act(t, fw, u)) == u);
          CHECK(act(t, concat(fw, bw), u) == u);
        }
      }
    }
  }
}

TEST_CASE("composition law on single letters") {
  for (Transducer t : {odometer(), swapper()}) {
    for (int p = 0; p < t.n_states(); ++p) {
      for (int q = 0; q < t.n_states(); ++q) {
        for (int a = 0; a < t.n_letters(); ++a) {
          Word pq = state_word({p, q});
          std::vector<int> single{a};
          auto once = act(t, pq, single);
          auto inner = act(t, state_word({q}), single);
          auto outer = act(t, state_word({p}), inner);
          CHECK(once == outer);
        }
      }
    }
  }
}

TEST_CASE("prefix compatibility") {
  Transducer t = odometer();
  std::mt19937 rng(15);
  for (int i = 0; i < 100; ++i) {
    int len = 1 + static_cast<int>(rng() % 5);
    auto u = unrank_bits(static_cast<int64_t>(rng() % (1u << len)), len);
    auto v = unrank_bits(static_cast<int64_t>(rng() % 8), 3);
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word w = state_word({0, 0});
    auto out_uv = act(t, w, uv);
    auto out_u = act(t, w, u);
    CHECK(std::equal(out_u.begin(), out_u.end(), out_uv.begin()));
  }
}

TEST_CASE("restriction basics") {
  Transducer t = odometer();
  // single step: restriction of t at 0 is the sink, at 1 is t again
  CHECK(restrict_word(t, state_word({0}), bits({0})) == state_word({1}));
  CHECK(restrict_word(t, state_word({0}), bits({1})) == state_word({0}));
  // empty state word restricts to itself
  CHECK(restrict_word(t, Word{}, bits({0, 1})).empty());
}

TEST_CASE("restriction of a relation is a relation") {
  Transducer t = odometer();
  Word rel = state_word({1});  // the sink acts trivially
  REQUIRE(is_relation_bounded(t, rel, 6));
  for (int a = 0; a < 2; ++a) {
    Word r = restrict_word(t, rel, {a});
    CHECK(is_relation_bounded(t, r, 6));
  }
  // commutator of t with the sink
  Word comm = state_word({0, 1, -1, -2});
  REQUIRE(is_relation_bounded(t, comm, 6));
  for (int a = 0; a < 2; ++a) {
    CHECK(is_relation_bounded(t, restrict_word(t, comm, {a}), 6));
  }
}

TEST_CASE("extend_with_sink satisfies the defining formulas") {
  Transducer t = swapper();
  Transducer ext = extend_with_sink(t);
  const int q = t.n_states();
  const int sink = q;
  const int base = t.n_letters();
  // letters: 0..base-1 original, base+s names state s, last names the sink
  for (int s = 0; s < q; ++s) {
    for (int l = base; l < ext.n_letters(); ++l) {
      auto [out, next] = ext.step(Letter::positive(s), l);
      CHECK(out == l);  // new letters are fixed
      if (l == base + s) {
        CHECK(next.gen() == sink);
      } else {
        CHECK(next.gen() == s);
      }
    }
    // original action preserved
    for (int l = 0; l < base; ++l) {
      auto [out_e, next_e] = ext.step(Letter::positive(s), l);
      auto [out_o, next_o] = t.step(Letter::positive(s), l);
      CHECK(out_e == out_o);
      CHECK(next_e.gen() == next_o.gen());
    }
  }
  for (int l = 0; l < ext.n_letters(); ++l) {
    auto [out, next] = ext.step(Letter::positive(sink), l);
    CHECK(out == l);
    CHECK(next.gen() == sink);
  }
  CHECK(ext.invertible());
}

TEST_CASE("sink reachability on the extended machine") {
  Transducer ext = extend_with_sink(swapper());
  const int sink = ext.n_states() - 1;
  for (int s = 0; s < ext.n_states(); ++s) {
    // reading the state's own name restricts to the sink
    Word r = restrict_word(ext, {Letter::positive(s)},
                           {ext.n_letters() - (ext.n_states() - s)});
    CHECK(r == Word{Letter::positive(sink)});
  }
}

TEST_CASE("relations on the extended machine shorten under erasure") {
  Transducer t = swapper();
  Transducer ext = extend_with_sink(t);
  const int sink = ext.n_states() - 1;
  const int base = t.n_letters();
  // sampled relations over the original states
  std::vector<Word> relations = {
      concat(state_word({0}), inverse(state_word({0}))),
      concat(state_word({0, 1}), inverse(state_word({0, 1}))),
      concat(state_word({1, 0}), inverse(state_word({1, 0}))),
  };
  for (const Word& rel : relations) {
    if (!is_relation_bounded(ext, rel, 5)) {
      continue;
    }
    for (int s = 0; s < ext.n_states() - 1; ++s) {
      // restricting at the letter naming state s sends s to the sink and
      // fixes the rest; erasing the sink letters yields the deletion
      Word restricted = restrict_word(ext, rel, {base + s});
      Word erased;
      for (Letter l : restricted) {
        if (l.gen() != sink) {
          erased.push_back(l);
        }
      }
      CHECK(erased == delete_letter(rel, s, ext.n_states()));
      CHECK(is_relation_bounded(ext, erased, 5));
    }
  }
}

TEST_CASE("fragile relation check") {
  Transducer t = odometer();
  Word comm = state_word({0, 1, -1, -2});  // [t, e]
  REQUIRE(is_relation_bounded(t, comm, 5));
  CHECK(fragile_relation_check(t, comm, 5));

  // e alone is a relation and fragile over its one-letter support
  Word e = state_word({1});
  CHECK(fragile_relation_check(t, e, 5));

  // tt^-1 reduces to the identity: not fragile
  Word trivial = concat(state_word({0}), inverse(state_word({0})));
  CHECK(!fragile_relation_check(t, trivial, 5));

  // a non-relation violates the precondition
  CHECK_THROWS_AS(fragile_relation_check(t, state_word({0}), 3),
                  std::invalid_argument);
}

TEST_CASE("shortest bounded relations are fragile over their support") {
  Transducer t = odometer();
  // exhaustive search over state words up to length 4
  std::vector<Word> shortest;
  for (int len = 1; len <= 4 && shortest.empty(); ++len) {
    int64_t total = 1;
    for (int i = 0; i < len; ++i) {
      total *= 4;
    }
    for (int64_t idx = 0; idx < total; ++idx) {
      int64_t x = idx;
      Word w;
      for (int i = 0; i < len; ++i) {
        w.push_back(Letter::from_code(static_cast<uint32_t>(x % 4)));
        x /= 4;
      }
      if (free_reduce(w).empty()) {
        continue;
      }
      if (is_relation_bounded(t, w, 6)) {
        shortest.push_back(w);
      }
    }
  }
  REQUIRE(!shortest.empty());
  for (const Word& w : shortest) {
    CHECK(fragile_relation_check(t, w, 6));
  }
}

TEST_CASE("json round trip") {
  Transducer t = odometer();
  std::string s = transducer_to_json_str(t);
  Transducer back = transducer_from_json_str(s);
  CHECK(back.state_names() == t.state_names());
  CHECK(back.letter_names() == t.letter_names());
  for (int st = 0; st < t.n_states(); ++st) {
    for (int l = 0; l < t.n_letters(); ++l) {
      CHECK(back.step(Letter::positive(st), l) ==
            t.step(Letter::positive(st), l));
    }
  }
  CHECK(transducer_to_json_str(back) == s);
}
