#include "fwords/sweeps.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "fwords/fim.hpp"
#include "fwords/free_group.hpp"
#include "fwords/presentation.hpp"
#include "fwords/stephen.hpp"

namespace fwords {

namespace {

template <class Fn>
SweepResult drive_serial(int64_t count, Fn&& item) {
  SweepResult res;
  res.checked = static_cast<uint64_t>(count);
  for (int64_t i = 0; i < count; ++i) {
    if (!item(i)) {
      ++res.mismatches;
      if (res.first_mismatch < 0) {
        res.first_mismatch = i;
      }
    }
  }
  return res;
}

template <class Fn>
SweepResult drive_parallel(int64_t count, Fn&& item) {
  SweepResult res;
  res.checked = static_cast<uint64_t>(count);
  uint64_t mismatches = 0;
  int64_t first = -1;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : mismatches)
  for (int64_t i = 0; i < count; ++i) {
    if (!item(i)) {
      ++mismatches;
#pragma omp critical(fwords_sweep_first)
      {
        if (first < 0 || i < first) {
          first = i;
        }
      }
    }
  }
  res.mismatches = mismatches;
  res.first_mismatch = first;
  return res;
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
  }
  return r;
}

}  // namespace

int64_t count_words_upto(int n_codes, int max_len) {
  int64_t total = 0;
  for (int k = 0; k <= max_len; ++k) {
    total += ipow(n_codes, k);
  }
  return total;
}

Word unrank_word_upto(int64_t index, const std::vector<uint32_t>& codes,
                      int max_len) {
  const int64_t n = static_cast<int64_t>(codes.size());
  for (int k = 0; k <= max_len; ++k) {
    int64_t block = ipow(n, k);
    if (index < block) {
      Word w(k, Letter::from_code(0));
      for (int pos = k - 1; pos >= 0; --pos) {
        w[pos] = Letter::from_code(codes[index % n]);
        index /= n;
      }
      return w;
    }
    index -= block;
  }
  throw std::out_of_range("unrank_word_upto: index too large");
}

int64_t count_reduced_upto(int n_codes, int max_len) {
  int64_t total = 1;  // empty word
  for (int k = 1; k <= max_len; ++k) {
    total += n_codes * ipow(n_codes - 1, k - 1);
  }
  return total;
}

Word unrank_reduced_upto(int64_t index, const std::vector<uint32_t>& codes,
                         int max_len) {
  const int64_t n = static_cast<int64_t>(codes.size());
  if (index == 0) {
    return {};
  }
  index -= 1;
  for (int k = 1; k <= max_len; ++k) {
    int64_t block = n * ipow(n - 1, k - 1);
    if (index >= block) {
      index -= block;
      continue;
    }
    // digits: first in [0, n), later in [0, n-1) skipping the inverse of
    // the previous letter
    std::vector<int64_t> digits(k);
    for (int pos = k - 1; pos >= 1; --pos) {
      digits[pos] = index % (n - 1);
      index /= (n - 1);
    }
    digits[0] = index;
    Word w;
    w.reserve(k);
    w.push_back(Letter::from_code(codes[digits[0]]));
    for (int pos = 1; pos < k; ++pos) {
      uint32_t banned = w.back().inverse().code();
      int64_t d = digits[pos];
      for (uint32_t c : codes) {
        if (c == banned) {
          continue;
        }
        if (d == 0) {
          w.push_back(Letter::from_code(c));
          break;
        }
        --d;
      }
    }
    return w;
  }
  throw std::out_of_range("unrank_reduced_upto: index too large");
}

std::vector<uint32_t> all_codes(int n_gens) {
  std::vector<uint32_t> codes(2 * n_gens);
  for (uint32_t c = 0; c < codes.size(); ++c) {
    codes[c] = c;
  }
  return codes;
}

std::vector<uint32_t> codes_without(int n_gens, int skipped_gen) {
  std::vector<uint32_t> codes;
  for (int g = 0; g < n_gens; ++g) {
    if (g == skipped_gen) {
      continue;
    }
    codes.push_back(Letter::positive(g).code());
    codes.push_back(Letter::negative(g).code());
  }
  return codes;
}

bool fim_image_reachable(const InvEraserTuple& t, int n_gens) {
  struct Comp {
    InvAutomaton tree;
    StepTable table;
    size_t configs;  // (subtree mask, position)
    explicit Comp(InvAutomaton tr)
        : tree(std::move(tr)), table(tree),
          configs((size_t{1} << tree.n_states) * tree.n_states) {}
  };
  std::vector<Comp> comps;
  comps.reserve(n_gens);
  size_t total = 1;
  for (int i = 0; i < n_gens; ++i) {
    comps.emplace_back(munn_tree(t.components[i], n_gens));
    if (comps.back().tree.n_states > 20) {
      throw std::invalid_argument("fim_image_reachable: component too large");
    }
    total *= comps.back().configs;
  }

  auto encode = [&](const std::vector<std::pair<uint32_t, State>>& cfg) {
    size_t key = 0;
    for (int i = 0; i < n_gens; ++i) {
      size_t local = cfg[i].first * comps[i].tree.n_states + cfg[i].second;
      key = key * comps[i].configs + local;
    }
    return key;
  };

  std::vector<std::pair<uint32_t, State>> start(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    start[i] = {1u << comps[i].tree.initial, comps[i].tree.initial};
  }
  auto is_goal = [&](const std::vector<std::pair<uint32_t, State>>& cfg) {
    for (int i = 0; i < n_gens; ++i) {
      uint32_t full = (1u << comps[i].tree.n_states) - 1;
      if (cfg[i].first != full ||
          cfg[i].second != comps[i].tree.terminals.at(0)) {
        return false;
      }
    }
    return true;
  };

  std::vector<char> seen(total, false);
  std::deque<std::vector<std::pair<uint32_t, State>>> bfs;
  seen[encode(start)] = true;
  bfs.push_back(start);
  while (!bfs.empty()) {
    auto cfg = bfs.front();
    bfs.pop_front();
    if (is_goal(cfg)) {
      return true;
    }
    for (uint32_t code = 0; code < 2u * n_gens; ++code) {
      Letter l = Letter::from_code(code);
      auto next = cfg;
      bool dead = false;
      for (int i = 0; i < n_gens; ++i) {
        if (i == l.gen()) {
          continue;  // the letter is erased in this component
        }
        State to = comps[i].table.step(cfg[i].second, l);
        if (to == kNoState) {
          dead = true;  // the prefix tree would leave the target tree
          break;
        }
        next[i] = {cfg[i].first | (1u << to), to};
      }
      if (dead) {
        continue;
      }
      size_t key = encode(next);
      if (!seen[key]) {
        seen[key] = true;
        bfs.push_back(std::move(next));
      }
    }
  }
  return false;
}

// ---- kernel bodies -------------------------------------------------------

namespace {

bool fr2_item(int64_t i, const std::vector<uint32_t>& codes, int max_len) {
  Word w = unrank_reduced_upto(i, codes, max_len);
  bool fragile = is_fragile(w, 2);
  bool commutator =
      !w.empty() && exponent_sum(w, 0) == 0 && exponent_sum(w, 1) == 0;
  return fragile == commutator;
}

struct KnSetup {
  std::vector<std::vector<Word>> component_words;  // per deleted generator
  int64_t count;

  explicit KnSetup(int comp_max) {
    component_words.resize(3);
    count = 1;
    for (int i = 0; i < 3; ++i) {
      auto codes = codes_without(3, i);
      int64_t c = count_reduced_upto(static_cast<int>(codes.size()), comp_max);
      for (int64_t k = 0; k < c; ++k) {
        component_words[i].push_back(unrank_reduced_upto(k, codes, comp_max));
      }
      count *= c;
    }
  }

  EraserTuple tuple(int64_t index) const {
    std::vector<Word> comps(3);
    for (int i = 2; i >= 0; --i) {
      int64_t c = static_cast<int64_t>(component_words[i].size());
      comps[i] = component_words[i][index % c];
      index /= c;
    }
    return make_eraser_tuple(std::move(comps));
  }
};

bool kn_item(const KnSetup& setup, int64_t i) {
  EraserTuple t = setup.tuple(i);
  int total = 0;
  for (const Word& c : t.components) {
    total += static_cast<int>(c.size());
  }
  const int bound = 3 * total + 6;
  bool claimed = in_image(t);
  auto found = bounded_preimage_search(t, bound);
  if (found) {
    EraserTuple img = eraser_image(*found, 3);
    for (int k = 0; k < 3; ++k) {
      if (img.components[k] != t.components[k]) {
        return false;  // search returned a non-witness
      }
    }
  }
  return claimed == found.has_value();
}

struct MunnSetup {
  std::vector<Word> words;
  std::vector<InvAutomaton> trees;
  int64_t pair_count;

  explicit MunnSetup(int max_len) {
    auto codes = all_codes(2);
    int64_t c = count_words_upto(4, max_len);
    words.reserve(c);
    trees.reserve(c);
    for (int64_t k = 0; k < c; ++k) {
      words.push_back(unrank_word_upto(k, codes, max_len));
      trees.push_back(munn_tree(words.back(), 2));
    }
    pair_count = c * c;
  }
};

bool munn_item(const MunnSetup& setup, int64_t i) {
  int64_t n = static_cast<int64_t>(setup.words.size());
  const InvAutomaton& a = setup.trees[i / n];
  const InvAutomaton& b = setup.trees[i % n];
  bool iso = isomorphic(a, b);
  bool mutual = accepts(a, setup.words[i % n]) && accepts(b, setup.words[i / n]);
  return iso == mutual;
}

struct CuSetup {
  std::vector<Word> us;
  std::vector<FactorAutomaton> fas;
  std::vector<std::string> u_keys;
  std::vector<Word> ws;
  std::vector<std::string> w_keys;
  int64_t pair_count;

  CuSetup(int u_max, int w_max) {
    auto codes = all_codes(2);
    int64_t uc = count_words_upto(4, u_max);
    for (int64_t k = 0; k < uc; ++k) {
      us.push_back(unrank_word_upto(k, codes, u_max));
      fas.push_back(factor_automaton(us.back(), 2));
      u_keys.push_back(FimElement::from_word(us.back(), 2).key());
    }
    int64_t wc = count_words_upto(4, w_max);
    for (int64_t k = 0; k < wc; ++k) {
      ws.push_back(unrank_word_upto(k, codes, w_max));
      w_keys.push_back(FimElement::from_word(ws.back(), 2).key());
    }
    pair_count = uc * wc;
  }
};

bool cu_item(const CuSetup& setup, int64_t i) {
  int64_t wc = static_cast<int64_t>(setup.ws.size());
  int64_t ui = i / wc, wi = i % wc;
  bool accepted = setup.fas[ui].accepts(setup.ws[wi]);
  bool equal = setup.u_keys[ui] == setup.w_keys[wi];
  return accepted == equal;
}

bool factors_item(int64_t i, const std::vector<uint32_t>& codes, int u_max) {
  Word u = unrank_word_upto(i, codes, u_max);
  std::set<std::string> computed;
  for (const FimElement& e : factors(u, 2)) {
    computed.insert(e.key());
  }

  // brute force: depth-first over path labels of the tree, dedup by
  // element, cut at twice the state count
  InvAutomaton t = munn_tree(u, 2);
  StepTable st(t);
  const int bound = 2 * static_cast<int>(t.n_states);
  std::set<std::string> brute;
  struct Frame {
    Word label;
    std::vector<State> ends;  // surviving endpoints, one per live start
  };
  std::vector<State> starts(t.n_states);
  for (State s = 0; s < t.n_states; ++s) {
    starts[s] = s;
  }
  std::deque<Frame> stack;
  stack.push_back({{}, starts});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    brute.insert(FimElement::from_word(f.label, 2).key());
    if (static_cast<int>(f.label.size()) >= bound) {
      continue;
    }
    for (uint32_t code = 0; code < 4; ++code) {
      Letter l = Letter::from_code(code);
      std::vector<State> next;
      for (State e : f.ends) {
        State to = st.step(e, l);
        if (to != kNoState) {
          next.push_back(to);
        }
      }
      if (next.empty()) {
        continue;
      }
      Word label = f.label;
      label.push_back(l);
      stack.push_back({std::move(label), std::move(next)});
    }
  }
  return computed == brute;
}

bool eraser_sound_item(int64_t i, const std::vector<uint32_t>& codes,
                       int w_max) {
  Word w = unrank_word_upto(i, codes, w_max);
  return image_membership_fim(eraser_image_inv(w, 3), 3);
}

struct CompletenessSetup {
  std::vector<std::vector<Word>> component_words;
  int64_t count;

  explicit CompletenessSetup(int comp_max) {
    component_words.resize(3);
    count = 1;
    for (int i = 0; i < 3; ++i) {
      auto codes = codes_without(3, i);
      int64_t c = count_words_upto(static_cast<int>(codes.size()), comp_max);
      for (int64_t k = 0; k < c; ++k) {
        component_words[i].push_back(unrank_word_upto(k, codes, comp_max));
      }
      count *= c;
    }
  }

  InvEraserTuple tuple(int64_t index) const {
    InvEraserTuple t;
    t.components.resize(3);
    for (int i = 2; i >= 0; --i) {
      int64_t c = static_cast<int64_t>(component_words[i].size());
      t.components[i] = component_words[i][index % c];
      index /= c;
    }
    return t;
  }
};

bool completeness_item(const CompletenessSetup& setup, int64_t i) {
  InvEraserTuple t = setup.tuple(i);
  return image_membership_fim(t, 3) == fim_image_reachable(t, 3);
}

bool kernel_item(int64_t i, const std::vector<uint32_t>& codes, int w_max) {
  Word w = unrank_word_upto(i, codes, w_max);
  bool in_k = in_kernel_K(w, 2);
  bool idempotent_components = true;
  for (int g = 0; g < 2; ++g) {
    if (!is_idempotent(delete_letter(w, g, 2))) {
      idempotent_components = false;
      break;
    }
  }
  bool trivial_or_fragile = free_reduce(w).empty() || is_fragile(w, 2);
  return in_k == idempotent_components && in_k == trivial_or_fragile;
}

struct FreeWpSetup {
  std::vector<Word> words;
  Presentation pres;
  int64_t pair_count;

  explicit FreeWpSetup(int max_len)
      : pres(free_presentation(Alphabet::lowercase(2))) {
    auto codes = all_codes(2);
    int64_t c = count_words_upto(4, max_len);
    for (int64_t k = 0; k < c; ++k) {
      words.push_back(unrank_word_upto(k, codes, max_len));
    }
    pair_count = c * c;
  }
};

bool free_wp_item(const FreeWpSetup& setup, int64_t i) {
  int64_t n = static_cast<int64_t>(setup.words.size());
  const Word& u = setup.words[i / n];
  const Word& v = setup.words[i % n];
  Answer wp = word_problem(u, v, setup.pres);
  return (wp == Answer::yes) == fim_equal(u, v, 2);
}

}  // namespace

SweepResult fr2_commutator_sweep(int max_len) {
  auto codes = all_codes(2);
  return drive_parallel(count_reduced_upto(4, max_len), [&](int64_t i) {
    return fr2_item(i, codes, max_len);
  });
}
SweepResult fr2_commutator_sweep_serial(int max_len) {
  auto codes = all_codes(2);
  return drive_serial(count_reduced_upto(4, max_len), [&](int64_t i) {
    return fr2_item(i, codes, max_len);
  });
}

SweepResult kn_image_oracle_sweep(int comp_max) {
  KnSetup setup(comp_max);
  return drive_parallel(setup.count,
                        [&](int64_t i) { return kn_item(setup, i); });
}
SweepResult kn_image_oracle_sweep_serial(int comp_max) {
  KnSetup setup(comp_max);
  return drive_serial(setup.count,
                      [&](int64_t i) { return kn_item(setup, i); });
}

SweepResult munn_word_problem_sweep(int max_len) {
  MunnSetup setup(max_len);
  return drive_parallel(setup.pair_count,
                        [&](int64_t i) { return munn_item(setup, i); });
}
SweepResult munn_word_problem_sweep_serial(int max_len) {
  MunnSetup setup(max_len);
  return drive_serial(setup.pair_count,
                      [&](int64_t i) { return munn_item(setup, i); });
}

SweepResult factor_automaton_sweep(int u_max, int w_max) {
  CuSetup setup(u_max, w_max);
  return drive_parallel(setup.pair_count,
                        [&](int64_t i) { return cu_item(setup, i); });
}
SweepResult factor_automaton_sweep_serial(int u_max, int w_max) {
  CuSetup setup(u_max, w_max);
  return drive_serial(setup.pair_count,
                      [&](int64_t i) { return cu_item(setup, i); });
}

SweepResult factors_oracle_sweep(int u_max) {
  auto codes = all_codes(2);
  return drive_parallel(count_words_upto(4, u_max), [&](int64_t i) {
    return factors_item(i, codes, u_max);
  });
}
SweepResult factors_oracle_sweep_serial(int u_max) {
  auto codes = all_codes(2);
  return drive_serial(count_words_upto(4, u_max), [&](int64_t i) {
    return factors_item(i, codes, u_max);
  });
}

SweepResult eraser_soundness_sweep(int w_max) {
  auto codes = all_codes(3);
  return drive_parallel(count_words_upto(6, w_max), [&](int64_t i) {
    return eraser_sound_item(i, codes, w_max);
  });
}
SweepResult eraser_soundness_sweep_serial(int w_max) {
  auto codes = all_codes(3);
  return drive_serial(count_words_upto(6, w_max), [&](int64_t i) {
    return eraser_sound_item(i, codes, w_max);
  });
}

SweepResult eraser_completeness_sweep(int comp_max) {
  CompletenessSetup setup(comp_max);
  return drive_parallel(setup.count,
                        [&](int64_t i) { return completeness_item(setup, i); });
}
SweepResult eraser_completeness_sweep_serial(int comp_max) {
  CompletenessSetup setup(comp_max);
  return drive_serial(setup.count,
                      [&](int64_t i) { return completeness_item(setup, i); });
}

SweepResult kernel_sweep(int w_max) {
  auto codes = all_codes(2);
  return drive_parallel(count_words_upto(4, w_max), [&](int64_t i) {
    return kernel_item(i, codes, w_max);
  });
}
SweepResult kernel_sweep_serial(int w_max) {
  auto codes = all_codes(2);
  return drive_serial(count_words_upto(4, w_max), [&](int64_t i) {
    return kernel_item(i, codes, w_max);
  });
}

SweepResult free_word_problem_sweep(int max_len) {
  FreeWpSetup setup(max_len);
  return drive_parallel(setup.pair_count,
                        [&](int64_t i) { return free_wp_item(setup, i); });
}
SweepResult free_word_problem_sweep_serial(int max_len) {
  FreeWpSetup setup(max_len);
  return drive_serial(setup.pair_count,
                      [&](int64_t i) { return free_wp_item(setup, i); });
}

}  // namespace fwords
