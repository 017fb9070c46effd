#include "fwords/eraser_inv.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "fwords/fim.hpp"
#include "fwords/free_group.hpp"

namespace fwords {

namespace {

void validate_tuple(const InvEraserTuple& t, int n_gens) {
  if (t.rank() != n_gens) {
    throw MalformedTupleError("tuple rank does not match alphabet size");
  }
  for (int i = 0; i < n_gens; ++i) {
    for (Letter l : t.components[i]) {
      if (l.gen() == i) {
        throw MalformedTupleError("component " + std::to_string(i + 1) +
                                  " uses its own deleted generator");
      }
      if (l.gen() >= n_gens) {
        throw MalformedTupleError("component uses an unknown generator");
      }
    }
  }
}

struct FimMembershipParts {
  InvAutomaton prod;
  std::vector<InvAutomaton> trees;
  bool member = false;
};

FimMembershipParts fim_membership_parts(const InvEraserTuple& t, int n_gens) {
  validate_tuple(t, n_gens);
  FimMembershipParts parts;
  std::vector<InvAutomaton> hats;
  hats.reserve(n_gens);
  parts.trees.reserve(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    parts.trees.push_back(munn_tree(t.components[i], n_gens));
    hats.push_back(hat(parts.trees.back(), i));
  }
  std::vector<const InvAutomaton*> ptrs;
  for (const auto& h : hats) {
    ptrs.push_back(&h);
  }
  parts.prod = product(ptrs);
  if (parts.prod.terminals.empty()) {
    return parts;
  }
  for (int i = 0; i < n_gens; ++i) {
    auto trimmed = maybe_trim(contract(parts.prod, i));
    if (!trimmed || !isomorphic(*trimmed, parts.trees[i])) {
      return parts;
    }
  }
  parts.member = true;
  return parts;
}

// L(sub) subset of L(sup)? sup must be deterministic; sub is explored as
// given (pairing its states with sup states or a dead marker).
bool language_subset(const InvAutomaton& sub, const InvAutomaton& sup) {
  StepTable sup_table(sup);
  StepTable sub_table(sub);
  const uint32_t codes = 2u * sub.n_gens;
  std::unordered_set<uint64_t> seen;
  std::deque<std::pair<State, State>> bfs;  // (sub state, sup state or dead)
  const State kDead = kNoState - 1;
  auto push = [&](State x, State y) {
    uint64_t key = (static_cast<uint64_t>(x) << 32) | y;
    if (seen.insert(key).second) {
      bfs.push_back({x, y});
    }
  };
  push(sub.initial, sup.initial);
  while (!bfs.empty()) {
    auto [x, y] = bfs.front();
    bfs.pop_front();
    if (sub.is_terminal(x) && (y == kDead || !sup.is_terminal(y))) {
      return false;
    }
    for (uint32_t code = 0; code < codes; ++code) {
      Letter l = Letter::from_code(code);
      State tx = sub_table.step(x, l);
      if (tx == kNoState) {
        continue;
      }
      State ty = (y == kDead) ? kDead : sup_table.step(y, l);
      push(tx, ty == kNoState ? kDead : ty);
    }
  }
  return true;
}

// Is every word labelling a path from sub.initial also the label of a
// path from the initial state of one of the (deterministic) covers?
bool paths_covered(const InvAutomaton& sub,
                   const std::vector<InvAutomaton>& covers) {
  StepTable sub_table(sub);
  std::vector<StepTable> cover_tables;
  cover_tables.reserve(covers.size());
  for (const auto& c : covers) {
    cover_tables.emplace_back(c);
  }
  const uint32_t codes = 2u * sub.n_gens;
  const State kDead = kNoState - 1;

  struct Config {
    State x;
    std::vector<State> ys;
  };
  std::set<std::vector<State>> seen;
  std::deque<Config> bfs;
  auto push = [&](State x, std::vector<State> ys) {
    std::vector<State> key = ys;
    key.push_back(x);
    if (seen.insert(std::move(key)).second) {
      bfs.push_back({x, std::move(ys)});
    }
  };
  std::vector<State> init;
  for (const auto& c : covers) {
    init.push_back(c.initial);
  }
  push(sub.initial, init);
  while (!bfs.empty()) {
    Config cfg = bfs.front();
    bfs.pop_front();
    bool all_dead = true;
    for (State y : cfg.ys) {
      if (y != kDead) {
        all_dead = false;
        break;
      }
    }
    if (all_dead && !covers.empty()) {
      return false;  // this path label escapes every cover
    }
    if (covers.empty()) {
      return false;
    }
    for (uint32_t code = 0; code < codes; ++code) {
      Letter l = Letter::from_code(code);
      State tx = sub_table.step(cfg.x, l);
      if (tx == kNoState) {
        continue;
      }
      std::vector<State> tys(cfg.ys.size());
      for (size_t j = 0; j < cfg.ys.size(); ++j) {
        tys[j] = (cfg.ys[j] == kDead) ? kDead
                                      : cover_tables[j].step(cfg.ys[j], l);
        if (tys[j] == kNoState) {
          tys[j] = kDead;
        }
      }
      push(tx, std::move(tys));
    }
  }
  return true;
}

}  // namespace

ErasedPresentation erase_presentation(const Presentation& p, int index) {
  const int n = p.alphabet.size();
  if (index < 0 || index >= n) {
    throw std::out_of_range("erase_presentation: index out of range");
  }
  ErasedPresentation ep;
  ep.base = p;
  ep.index = index;
  ep.derived.alphabet = p.alphabet;
  for (const auto& [u, v] : p.relations) {
    ep.derived.relations.emplace_back(delete_letter(u, index, n),
                                      delete_letter(v, index, n));
  }
  return ep;
}

InvEraserTuple eraser_image_inv(const Word& w, int n_gens) {
  InvEraserTuple t;
  t.components.reserve(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    t.components.push_back(delete_letter(w, i, n_gens));
  }
  return t;
}

bool image_membership_fim(const InvEraserTuple& t, int n_gens) {
  return fim_membership_parts(t, n_gens).member;
}

Word witness(const InvEraserTuple& t, int n_gens) {
  FimMembershipParts parts = fim_membership_parts(t, n_gens);
  if (!parts.member) {
    throw NotInImageError("witness: tuple is not in the image");
  }
  const State term = parts.prod.terminals.at(0);
  std::vector<Word> lifted(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    FoldResult chi = contract_logged(parts.prod, i);
    lifted[i] =
        lift_path(parts.prod, chi.log, t.components[i], parts.prod.initial,
                  term);
  }
  Word w;
  for (int i = 0; i < n_gens; ++i) {
    Word back = inverse(lifted[i]);
    w.insert(w.end(), lifted[i].begin(), lifted[i].end());
    w.insert(w.end(), back.begin(), back.end());
  }
  w.insert(w.end(), lifted[0].begin(), lifted[0].end());

  for (int i = 0; i < n_gens; ++i) {
    if (!fim_equal(delete_letter(w, i, n_gens), t.components[i], n_gens)) {
      throw LiftFailureError("witness: verification failed");
    }
  }
  return w;
}

Answer image_membership_presented(const InvEraserTuple& t,
                                  const Presentation& p, Budget budget) {
  const int n = p.alphabet.size();
  validate_tuple(t, n);
  bool all_empty = true;
  for (const Word& c : t.components) {
    if (!c.empty()) {
      all_empty = false;
      break;
    }
  }
  if (all_empty) {
    return Answer::yes;  // image of the identity
  }

  std::vector<ErasedPresentation> erased;
  std::vector<InvAutomaton> comp;  // component automata, one per index
  erased.reserve(n);
  comp.reserve(n);
  for (int i = 0; i < n; ++i) {
    erased.push_back(erase_presentation(p, i));
    ClosureResult cr = closure(t.components[i], erased[i].derived, budget);
    if (!cr.converged) {
      return Answer::unknown;
    }
    comp.push_back(std::move(cr.automaton));
  }

  std::vector<InvAutomaton> hats;
  hats.reserve(n);
  for (int i = 0; i < n; ++i) {
    hats.push_back(hat(comp[i], i));
  }
  std::vector<const InvAutomaton*> ptrs;
  for (const auto& h : hats) {
    ptrs.push_back(&h);
  }
  InvAutomaton prod = product(ptrs);
  if (prod.terminals.empty()) {
    return Answer::no;
  }

  for (int i = 0; i < n; ++i) {
    InvAutomaton chi = contract(prod, i);

    // idempotent pointing: terminal moved to the initial state
    InvAutomaton chi_idem = chi;
    chi_idem.terminals = {chi.initial};
    InvAutomaton comp_idem = comp[i];
    comp_idem.terminals = {comp[i].initial};

    if (!language_subset(chi_idem, comp_idem)) {
      return Answer::no;
    }

    if (p.relations.empty()) {
      // free components: exclude the covering idempotents
      Word uu = concat(t.components[i], inverse(t.components[i]));
      std::vector<FimElement> covers = covering_idempotents(uu, n);
      std::vector<InvAutomaton> cover_autos;
      cover_autos.reserve(covers.size());
      for (const auto& c : covers) {
        cover_autos.push_back(c.tree());
      }
      if (paths_covered(chi_idem, cover_autos)) {
        return Answer::no;  // the contracted language sits strictly above
      }
    } else {
      ClosureResult cl_idem =
          closure_from(trim(chi_idem), erased[i].derived, budget);
      if (!cl_idem.converged) {
        return Answer::unknown;
      }
      if (!isomorphic(cl_idem.automaton, comp_idem)) {
        return Answer::no;
      }
    }

    // finally the element itself must be read by the closure of chi
    auto chi_trim = maybe_trim(chi);
    if (!chi_trim) {
      return Answer::no;
    }
    ClosureResult cl = closure_from(*chi_trim, erased[i].derived, budget);
    if (!cl.converged) {
      return Answer::unknown;
    }
    if (!accepts(cl.automaton, t.components[i])) {
      return Answer::no;
    }
  }
  return Answer::yes;
}

bool in_kernel_K(const Word& w, int n_gens) {
  return free_reduce(w).empty() || is_fragile(w, n_gens);
}

}  // namespace fwords
