#include "fwords/stephen.hpp"

#include <algorithm>
#include <utility>

namespace fwords {

namespace {

struct PathInstance {
  State from;
  State to;
  const Word* side;  // the side to adjoin
};

void collect_instances(const InvAutomaton& a, const StepTable& st,
                       const Word& match, const Word& adjoin,
                       std::vector<PathInstance>& paths,
                       std::vector<std::pair<State, State>>& merges) {
  for (State p = 0; p < a.n_states; ++p) {
    std::optional<State> q =
        match.empty() ? std::optional<State>(p) : st.run(p, match);
    if (!q) {
      continue;
    }
    if (adjoin.empty()) {
      if (p != *q) {
        merges.emplace_back(p, *q);
      }
      continue;
    }
    // skip instances whose path is already present
    auto existing = st.run(p, adjoin);
    if (existing && *existing == *q) {
      continue;
    }
    paths.push_back({p, *q, &adjoin});
  }
}

}  // namespace

InvAutomaton expand_once(const InvAutomaton& a, const Presentation& p) {
  StepTable st(a);
  std::vector<PathInstance> paths;
  std::vector<std::pair<State, State>> merges;
  for (const auto& [lhs, rhs] : p.relations) {
    collect_instances(a, st, lhs, rhs, paths, merges);
    if (!(lhs == rhs)) {
      collect_instances(a, st, rhs, lhs, paths, merges);
    }
  }
  if (paths.empty() && merges.empty()) {
    return a;
  }
  InvAutomaton expanded = a;
  for (const PathInstance& inst : paths) {
    const Word& u = *inst.side;
    State prev = inst.from;
    for (size_t i = 0; i < u.size(); ++i) {
      State next;
      if (i + 1 == u.size()) {
        next = inst.to;
      } else {
        next = static_cast<State>(expanded.n_states++);
      }
      if (u[i].is_inverse()) {
        expanded.edges.push_back({next, u[i].gen(), prev});
      } else {
        expanded.edges.push_back({prev, u[i].gen(), next});
      }
      prev = next;
    }
  }
  std::sort(expanded.edges.begin(), expanded.edges.end());
  expanded.edges.erase(
      std::unique(expanded.edges.begin(), expanded.edges.end()),
      expanded.edges.end());
  return fold_with_merges(expanded, merges);
}

ClosureResult closure_from(InvAutomaton start, const Presentation& p,
                           Budget budget) {
  if (budget.max_iterations <= 0) {
    throw std::invalid_argument("closure: budget must be positive");
  }
  ClosureResult res;
  res.automaton = std::move(start);
  res.state_history.push_back(res.automaton.n_states);
  for (int it = 1; it <= budget.max_iterations; ++it) {
    InvAutomaton next = expand_once(res.automaton, p);
    res.iterations = it;
    res.state_history.push_back(next.n_states);
    if (isomorphic(next, res.automaton)) {
      res.automaton = std::move(next);
      res.converged = true;
      return res;
    }
    res.automaton = std::move(next);
    if (res.automaton.n_states > budget.max_states) {
      return res;
    }
  }
  return res;
}

ClosureResult closure(const Word& w, const Presentation& p, Budget budget) {
  return closure_from(munn_tree(w, p.alphabet.size()), p, budget);
}

Answer word_problem(const Word& u, const Word& v, const Presentation& p,
                    Budget budget) {
  ClosureResult cu = closure(u, p, budget);
  if (!cu.converged) {
    return Answer::unknown;
  }
  ClosureResult cv = closure(v, p, budget);
  if (!cv.converged) {
    return Answer::unknown;
  }
  return accepts(cu.automaton, v) && accepts(cv.automaton, u) ? Answer::yes
                                                              : Answer::no;
}

Answer natural_order(const Word& u, const Word& v, const Presentation& p,
                     Budget budget) {
  ClosureResult cu = closure(u, p, budget);
  if (!cu.converged) {
    return Answer::unknown;
  }
  return accepts(cu.automaton, v) ? Answer::yes : Answer::no;
}

}  // namespace fwords
