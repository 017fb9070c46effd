#include "fwords/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace fwords {

EraserTuple make_eraser_tuple(std::vector<Word> components) {
  const int n = static_cast<int>(components.size());
  EraserTuple t;
  t.components.reserve(components.size());
  for (int i = 0; i < n; ++i) {
    Word red = free_reduce(components[i]);
    for (Letter l : red) {
      if (l.gen() == i) {
        throw std::invalid_argument("eraser tuple: component " +
                                    std::to_string(i + 1) +
                                    " uses its own deleted generator");
      }
      if (l.gen() >= n) {
        throw std::invalid_argument(
            "eraser tuple: component uses a generator outside the alphabet");
      }
    }
    t.components.push_back(std::move(red));
  }
  return t;
}

EraserTuple eraser_image(const Word& w, int n_gens) {
  if (n_gens < 2) {
    throw std::invalid_argument("eraser_image: alphabet too small");
  }
  EraserTuple t;
  t.components.reserve(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    t.components.push_back(free_reduce(delete_letter(w, i, n_gens)));
  }
  return t;
}

bool is_fragile(const Word& w, int n_gens) {
  Word red = free_reduce(w);
  if (red.empty()) {
    return false;
  }
  for (int i = 0; i < n_gens; ++i) {
    if (!is_dyck(delete_letter(red, i, n_gens))) {
      return false;
    }
  }
  return true;
}

bool in_image(const EraserTuple& t) {
  const int n = t.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Word lhs = free_reduce(delete_letter(t.components[i], j, n));
      Word rhs = free_reduce(delete_letter(t.components[j], i, n));
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

Word preimage(const EraserTuple& t) {
  if (!in_image(t)) {
    throw NotInImageError("preimage: tuple fails the pairwise condition");
  }
  const int n = t.rank();
  if (n == 0) {
    return {};
  }
  Word x = t.components[0];
  for (int k = 1; k < n; ++k) {
    Word correction = inverse(delete_letter(x, k, n));
    x = concat(concat(x, correction), t.components[k]);
  }
  return free_reduce(x);
}

Word nested_commutator(int n_gens) {
  if (n_gens < 2) {
    throw std::invalid_argument("nested_commutator: alphabet too small");
  }
  Word c = {Letter::positive(0), Letter::positive(1), Letter::negative(0),
            Letter::negative(1)};
  for (int k = 2; k < n_gens; ++k) {
    Word next = c;
    next.push_back(Letter::positive(k));
    Word ci = inverse(c);
    next.insert(next.end(), ci.begin(), ci.end());
    next.push_back(Letter::negative(k));
    c = std::move(next);
  }
  if (!is_fragile(c, n_gens)) {
    throw std::logic_error("nested_commutator: result not fragile");
  }
  return c;
}

namespace {

// reduced right-multiplication
void push_reduced(Word& w, Letter l) {
  if (!w.empty() && w.back() == l.inverse()) {
    w.pop_back();
  } else {
    w.push_back(l);
  }
}

struct SearchCtx {
  int n;
  const EraserTuple* target;
  std::vector<Word> cur;  // current component images, reduced
  Word path;
  int max_len;

  // distance of component i to its target in the free group
  int dist(int i) const {
    const Word& c = cur[i];
    const Word& t = target->components[i];
    // |reduce(c^-1 t)| without building the product: strip the longest
    // common prefix (both words are reduced).
    size_t common = 0;
    while (common < c.size() && common < t.size() && c[common] == t[common]) {
      ++common;
    }
    return static_cast<int>((c.size() - common) + (t.size() - common));
  }

  // Lower bound on the number of letters still needed, or -1 when no
  // continuation can reach the target (exponent bookkeeping mismatch).
  int heuristic() const {
    long long sum_d = 0;
    int max_d = 0;
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = dist(i);
      sum_d += d[i];
      max_d = std::max(max_d, d[i]);
    }
    // remaining exponent sums of generator j, equal across components
    long long exp_total = 0;
    std::vector<long long> need(n, 0);
    for (int j = 0; j < n; ++j) {
      bool have = false;
      long long val = 0;
      for (int i = 0; i < n; ++i) {
        if (i == j) {
          continue;
        }
        long long e = exponent_sum(target->components[i], j) -
                      exponent_sum(cur[i], j);
        if (!have) {
          have = true;
          val = e;
        } else if (e != val) {
          return -1;
        }
      }
      need[j] = val;
      exp_total += std::llabs(val);
    }
    long long h = std::max<long long>(max_d, exp_total);
    if (n > 1) {
      h = std::max<long long>(h, (sum_d + n - 2) / (n - 1));
    }
    for (int i = 0; i < n; ++i) {
      h = std::max<long long>(h, d[i] + std::llabs(need[i]));
    }
    return static_cast<int>(h);
  }

  bool done() const {
    for (int i = 0; i < n; ++i) {
      if (cur[i] != target->components[i]) {
        return false;
      }
    }
    return true;
  }

  // returns true when found; `threshold_next` collects the smallest f
  // value that exceeded the current threshold
  bool dfs(int depth, int threshold, int& threshold_next) {
    if (done()) {
      return true;
    }
    int h = heuristic();
    if (h < 0) {
      return false;
    }
    int f = depth + h;
    if (f > threshold) {
      threshold_next = std::min(threshold_next, f);
      return false;
    }
    if (depth >= max_len) {
      return false;
    }
    for (uint32_t code = 0; code < 2u * n; ++code) {
      Letter l = Letter::from_code(code);
      if (!path.empty() && path.back() == l.inverse()) {
        continue;  // reduced words only
      }
      path.push_back(l);
      std::vector<size_t> before(n);
      for (int i = 0; i < n; ++i) {
        before[i] = cur[i].size();
        if (i != l.gen()) {
          push_reduced(cur[i], l);
        }
      }
      if (dfs(depth + 1, threshold, threshold_next)) {
        return true;
      }
      for (int i = 0; i < n; ++i) {
        if (i == l.gen()) {
          continue;
        }
        if (cur[i].size() > before[i]) {
          cur[i].pop_back();  // the letter was appended
        } else {
          cur[i].push_back(l.inverse());  // the letter cancelled
        }
      }
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Word> bounded_preimage_search(const EraserTuple& t,
                                            int max_len) {
  EraserTuple target = make_eraser_tuple(t.components);
  const int n = target.rank();
  SearchCtx ctx;
  ctx.n = n;
  ctx.target = &target;
  ctx.cur.assign(n, {});
  ctx.max_len = max_len;

  int h0 = ctx.heuristic();
  if (h0 < 0) {
    return std::nullopt;
  }
  for (int threshold = h0; threshold <= max_len;) {
    int next = std::numeric_limits<int>::max();
    ctx.path.clear();
    ctx.cur.assign(n, {});
    if (ctx.dfs(0, threshold, next)) {
      return ctx.path;
    }
    if (next == std::numeric_limits<int>::max()) {
      return std::nullopt;  // search space exhausted below max_len
    }
    threshold = next;
  }
  return std::nullopt;
}

}  // namespace fwords
