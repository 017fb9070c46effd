// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fwords/cli.hpp"
#include "fwords/eraser_inv.hpp"
#include "fwords/fim.hpp"
#include "fwords/free_group.hpp"
#include "fwords/presentation.hpp"
#include "fwords/stephen.hpp"
#include "fwords/sweeps.hpp"
#include "fwords/transducer.hpp"

using namespace fwords;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

const Alphabet kAb = Alphabet::lowercase(2);
const Alphabet kAbc = Alphabet::lowercase(3);

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool c1_worked_example(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  EraserTuple t = make_eraser_tuple({parse_word("bcbcc", kAbc),
                                     parse_word("accac", kAbc),
                                     parse_word("aabb", kAbc)});
  bool member = in_image(t);
  Word w = preimage(t);
  EraserTuple img = eraser_image(w, 3);
  bool exact = true;
  for (int k = 0; k < 3; ++k) {
    exact = exact && img.components[k] == t.components[k];
  }
  double ms = ms_since(t0);
  std::ostringstream os;
  os << "answer=" << (member ? "yes" : "no") << " preimage-exact="
     << (exact ? "yes" : "no") << " " << ms << " ms (limit 10)";
  detail = os.str();

  // the same question through the command line answers yes
  std::ostringstream out, err;
  int code = run_cli({"fragile", "in-image", "bcbcc", "accac", "aabb"}, out,
                     err);
  return member && exact && ms < 10.0 && code == 0;
}

bool c2_fragility_classics(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = is_fragile(parse_word("abAB", kAb), 2);
  Word w3 = parse_word("abcABC", kAbc);
  ok = ok && !is_fragile(w3, 3);
  for (int g = 0; g < 3; ++g) {
    ok = ok && exponent_sum(w3, g) == 0;
  }
  for (int n = 2; n <= 6; ++n) {
    ok = ok && is_fragile(nested_commutator(n), n);
  }
  double ms = ms_since(t0);
  std::ostringstream os;
  os << ms << " ms (limit 100)";
  detail = os.str();
  return ok && ms < 100.0;
}

bool c3_fr2_exhaustive(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res = fr2_commutator_sweep(8);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << res.checked << " words, " << res.mismatches << " mismatches, " << ms
     << " ms (limit 30000)";
  detail = os.str();
  return res.clean() && ms < 30000.0;
}

bool c4_kn_oracle(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res = kn_image_oracle_sweep(2);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << res.checked << " tuples, " << res.mismatches << " mismatches, " << ms
     << " ms (limit 60000)";
  detail = os.str();
  return res.clean() && ms < 60000.0;
}

bool c5_munn_word_problem(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res = munn_word_problem_sweep(5);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << res.checked << " pairs, " << res.mismatches << " mismatches, " << ms
     << " ms (limit 60000)";
  detail = os.str();
  return res.clean() && ms < 60000.0;
}

bool c6_stephen_closure(std::string& detail) {
  Presentation fja = parse_presentation("alphabet: a b\naA = b\n");
  ClosureResult cb = closure(parse_word("b", kAb), fja);
  ClosureResult ca = closure(parse_word("aA", kAb), fja);
  bool ok = cb.converged && ca.converged && cb.iterations <= 5 &&
            ca.iterations <= 5 && isomorphic(cb.automaton, ca.automaton) &&
            word_problem(parse_word("b", kAb), parse_word("aA", kAb), fja) ==
                Answer::yes;

  Presentation bicyclic = parse_presentation("alphabet: a\naA = 1\n");
  ClosureResult div =
      closure(parse_word("a", bicyclic.alphabet), bicyclic, Budget{50, 100000});
  bool growing = !div.converged && div.state_history.size() >= 3;
  for (size_t i = 1; i < div.state_history.size() && growing; ++i) {
    growing = div.state_history[i] > div.state_history[i - 1];
  }
  std::ostringstream os;
  os << "closure iterations " << cb.iterations << "/" << ca.iterations
     << ", divergent states " << div.automaton.n_states;
  detail = os.str();
  return ok && growing;
}

bool c7_factors(std::string& detail) {
  const Alphabet one = Alphabet::lowercase(1);
  auto fs = factors(parse_word("aA", one), 1);
  bool ok = fs.size() == 5;
  SweepResult res = factors_oracle_sweep(4);
  std::ostringstream os;
  os << "factors(aA)=" << fs.size() << ", oracle " << res.checked
     << " words, " << res.mismatches << " mismatches";
  detail = os.str();
  return ok && res.clean();
}

bool c8_factor_automaton(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res = factor_automaton_sweep(3, 6);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << res.checked << " pairs, " << res.mismatches << " mismatches, " << ms
     << " ms (limit 120000)";
  detail = os.str();
  return res.clean() && ms < 120000.0;
}

bool c9_inverse_eraser(std::string& detail) {
  InvEraserTuple fgn{{parse_word("bc", kAbc), parse_word("ca", kAbc),
                      parse_word("ab", kAbc)}};
  bool rejected = !image_membership_fim(fgn, 3);

  SweepResult sound = eraser_soundness_sweep(4);

  bool round_trips = true;
  auto codes = all_codes(2);
  for (int64_t i = 0; i < count_words_upto(4, 4) && round_trips; ++i) {
    Word w = unrank_word_upto(i, codes, 4);
    InvEraserTuple t = eraser_image_inv(w, 2);
    round_trips = image_membership_fim(t, 2);
    if (!round_trips) {
      break;
    }
    Word back = witness(t, 2);  // throws LiftFailure if unverified
    for (int k = 0; k < 2; ++k) {
      round_trips =
          round_trips && fim_equal(delete_letter(back, k, 2),
                                   t.components[k], 2);
    }
  }
  std::ostringstream os;
  os << "cyclic-tuple rejected=" << (rejected ? "yes" : "no")
     << ", soundness " << sound.checked << " words/" << sound.mismatches
     << " mismatches, witness round-trips="
     << (round_trips ? "yes" : "no");
  detail = os.str();
  return rejected && sound.clean() && round_trips;
}

bool c10_kernel(std::string& detail) {
  SweepResult res = kernel_sweep(6);
  std::ostringstream os;
  os << res.checked << " words, " << res.mismatches << " mismatches";
  detail = os.str();
  return res.clean();
}

bool c11_transducers(std::string& detail) {
  Transducer t({"p", "q"}, {"0", "1"},
               {{1, 0}, {0, 1}},
               {{0, 1}, {1, 0}});
  bool ok = t.invertible();

  // composition law on single letters
  for (int p = 0; p < 2 && ok; ++p) {
    for (int q = 0; q < 2 && ok; ++q) {
      for (int a = 0; a < 2 && ok; ++a) {
        Word pq = {Letter::positive(p), Letter::positive(q)};
        std::vector<int> in{a};
        ok = act(t, pq, in) ==
             act(t, {Letter::positive(p)}, act(t, {Letter::positive(q)}, in));
      }
    }
  }
  // inverse coherence at depth <= 5
  for (int s = 0; s < 2 && ok; ++s) {
    for (int len = 0; len <= 5 && ok; ++len) {
      for (int64_t i = 0; i < (int64_t{1} << len) && ok; ++i) {
        std::vector<int> u(len);
        int64_t x = i;
        for (int k = len - 1; k >= 0; --k) {
          u[k] = static_cast<int>(x & 1);
          x >>= 1;
        }
        Word fw = {Letter::positive(s)};
        Word bw = {Letter::negative(s)};
        ok = act(t, bw, act(t, fw, u)) == u;
      }
    }
  }

  // sink identity and the extension formulas, pointwise
  Transducer ext = extend_with_sink(t);
  const int sink = ext.n_states() - 1;
  const int base = t.n_letters();
  for (int l = 0; l < ext.n_letters() && ok; ++l) {
    auto [out, next] = ext.step(Letter::positive(sink), l);
    ok = out == l && next.gen() == sink;
  }
  for (int s = 0; s < 2 && ok; ++s) {
    for (int l = base; l < ext.n_letters() && ok; ++l) {
      auto [out, next] = ext.step(Letter::positive(s), l);
      ok = out == l && next.gen() == (l == base + s ? sink : s);
    }
  }
  std::vector<int> probe{0, 1, 1, 0};
  ok = ok && act(ext, {Letter::positive(sink)}, probe) == probe;

  detail = ok ? "all pointwise identities hold" : "identity violated";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "image-preimage-worked-example", c1_worked_example},
      {2, "fragility-classics", c2_fragility_classics},
      {3, "fr2-commutator-exhaustive", c3_fr2_exhaustive},
      {4, "image-membership-search-oracle", c4_kn_oracle},
      {5, "tree-word-problem-exhaustive", c5_munn_word_problem},
      {6, "iterated-closure-and-divergence", c6_stephen_closure},
      {7, "factor-computation", c7_factors},
      {8, "factor-automaton-language", c8_factor_automaton},
      {9, "inverse-eraser-image", c9_inverse_eraser},
      {10, "kernel-characterization", c10_kernel},
      {11, "transducer-laws", c11_transducers},
  };
  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) {
      ++failures;
    }
    std::printf("%s %2d %-36s %s\n", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d criteria FAILED\n", failures);
  }
  return failures;
}
