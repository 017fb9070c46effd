#include "fwords/inv_automaton.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace fwords {

namespace {

constexpr uint32_t kNoRecord = std::numeric_limits<uint32_t>::max();

struct Dsu {
  std::vector<State> parent;
  explicit Dsu(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), State{0});
  }
  State find(State x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

// One directed incidence of a positive edge: self --code--> nbr.
struct ClassItem {
  uint32_t code;
  State nbr;
  State self;
};

class FoldCore {
 public:
  FoldCore(const InvAutomaton& a, bool want_log, std::mt19937* rng,
           int erase_gen)
      : a_(a), want_log_(want_log), rng_(rng), erase_gen_(erase_gen),
        dsu_(a.n_states), items_(a.n_states), in_queue_(a.n_states, false) {
    if (want_log_) {
      log_.forest.resize(a.n_states);
    }
  }

  void add_pre_merge(State p, State q) { pre_merges_.push_back({p, q}); }

  FoldResult run() {
    for (const PosEdge& e : a_.edges) {
      if (e.gen == erase_gen_) {
        continue;  // erased below via a merge; the edge itself is dropped
      }
      items_[e.from].push_back({Letter::positive(e.gen).code(), e.to, e.from});
      items_[e.to].push_back({Letter::negative(e.gen).code(), e.from, e.to});
    }
    if (erase_gen_ >= 0) {
      for (const PosEdge& e : a_.edges) {
        if (e.gen != erase_gen_) {
          continue;
        }
        State rp = dsu_.find(e.from), rq = dsu_.find(e.to);
        if (rp == rq) {
          continue;
        }
        uint32_t rec = kNoRecord;
        if (want_log_) {
          log_.records.push_back({true, Letter::positive(e.gen).code(),
                                  e.from, e.to, kNoState, kNoState});
          rec = static_cast<uint32_t>(log_.records.size() - 1);
        }
        unite(rp, rq, e.from, e.to, rec);
      }
    }
    for (auto [p, q] : pre_merges_) {
      State rp = dsu_.find(p), rq = dsu_.find(q);
      if (rp != rq) {
        unite(rp, rq, p, q, kNoRecord);
      }
    }
    for (State s = 0; s < a_.n_states; ++s) {
      enqueue(dsu_.find(s));
    }
    while (!queue_.empty()) {
      State c = pop();
      in_queue_[c] = false;
      process(dsu_.find(c));
    }
    return finish();
  }

 private:
  void enqueue(State c) {
    if (!in_queue_[c]) {
      in_queue_[c] = true;
      queue_.push_back(c);
    }
  }

  State pop() {
    size_t idx = queue_.size() - 1;
    if (rng_ != nullptr && queue_.size() > 1) {
      idx = std::uniform_int_distribution<size_t>(0, queue_.size() - 1)(*rng_);
      std::swap(queue_[idx], queue_.back());
    }
    State c = queue_.back();
    queue_.pop_back();
    return c;
  }

  // Merges the classes of reps ra != rb; wa/wb are witness states inside
  // them, used as proof-forest endpoints.
  State unite(State ra, State rb, State wa, State wb, uint32_t rec) {
    if (items_[ra].size() < items_[rb].size()) {
      std::swap(ra, rb);
    }
    dsu_.parent[rb] = ra;
    auto& big = items_[ra];
    auto& small = items_[rb];
    big.insert(big.end(), small.begin(), small.end());
    small.clear();
    small.shrink_to_fit();
    if (want_log_ && rec != kNoRecord) {
      log_.forest[wa].push_back({wb, rec});
      log_.forest[wb].push_back({wa, rec});
    } else if (want_log_) {
      // pre-merge without a record: connector support is not provided
      // for caller-requested identifications.
      log_.forest[wa].push_back({wb, kNoRecord});
      log_.forest[wb].push_back({wa, kNoRecord});
    }
    enqueue(ra);
    return ra;
  }

  void process(State c) {
    bool rescan = true;
    while (rescan) {
      rescan = false;
      auto& list = items_[c];
      std::unordered_map<uint32_t, ClassItem> first;
      first.reserve(list.size());
      for (size_t i = 0; i < list.size(); ++i) {
        ClassItem it = list[i];
        auto [mit, inserted] = first.try_emplace(it.code, it);
        if (inserted) {
          continue;
        }
        State r0 = dsu_.find(mit->second.nbr);
        State r1 = dsu_.find(it.nbr);
        if (r0 == r1) {
          continue;
        }
        uint32_t rec = kNoRecord;
        if (want_log_) {
          log_.records.push_back({false, it.code, mit->second.self,
                                  mit->second.nbr, it.self, it.nbr});
          rec = static_cast<uint32_t>(log_.records.size() - 1);
        }
        unite(r0, r1, mit->second.nbr, it.nbr, rec);
        State nc = dsu_.find(c);
        if (nc != c || r0 == c || r1 == c) {
          // our own class was touched; rescan the merged list
          c = nc;
          rescan = true;
          break;
        }
      }
    }
  }

  FoldResult finish() {
    const size_t n = a_.n_states;
    std::vector<State> class_id(n, kNoState);
    std::vector<State> order;
    order.reserve(n);
    if (n > 0) {
      std::vector<State> bfs;
      State init = dsu_.find(a_.initial);
      class_id[init] = 0;
      order.push_back(init);
      bfs.push_back(init);
      size_t head = 0;
      std::vector<std::pair<uint32_t, State>> adj;
      while (head < bfs.size()) {
        State c = bfs[head++];
        adj.clear();
        for (const ClassItem& it : items_[c]) {
          adj.emplace_back(it.code, dsu_.find(it.nbr));
        }
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        for (auto [code, r] : adj) {
          if (class_id[r] == kNoState) {
            class_id[r] = static_cast<State>(order.size());
            order.push_back(r);
            bfs.push_back(r);
          }
        }
      }
      for (State s = 0; s < n; ++s) {
        State r = dsu_.find(s);
        if (class_id[r] == kNoState) {
          class_id[r] = static_cast<State>(order.size());
          order.push_back(r);
        }
      }
    }

    InvAutomaton out;
    out.n_gens = a_.n_gens;
    out.n_states = order.size();
    out.initial = n > 0 ? class_id[dsu_.find(a_.initial)] : 0;
    for (State t : a_.terminals) {
      out.terminals.push_back(class_id[dsu_.find(t)]);
    }
    std::sort(out.terminals.begin(), out.terminals.end());
    out.terminals.erase(
        std::unique(out.terminals.begin(), out.terminals.end()),
        out.terminals.end());
    for (const PosEdge& e : a_.edges) {
      if (e.gen == erase_gen_) {
        continue;
      }
      out.edges.push_back(
          {class_id[dsu_.find(e.from)], e.gen, class_id[dsu_.find(e.to)]});
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                    out.edges.end());

    FoldResult res;
    res.automaton = std::move(out);
    if (want_log_) {
      log_.to_folded.resize(n);
      for (State s = 0; s < n; ++s) {
        log_.to_folded[s] = class_id[dsu_.find(s)];
      }
      res.log = std::move(log_);
    }
    return res;
  }

  const InvAutomaton& a_;
  bool want_log_;
  std::mt19937* rng_;
  int erase_gen_;
  Dsu dsu_;
  std::vector<std::vector<ClassItem>> items_;
  std::vector<char> in_queue_;
  std::vector<State> queue_;
  std::vector<std::pair<State, State>> pre_merges_;
  FoldLog log_;
};

std::vector<std::vector<std::pair<uint32_t, State>>> directed_adjacency(
    const InvAutomaton& a) {
  std::vector<std::vector<std::pair<uint32_t, State>>> adj(a.n_states);
  for (const PosEdge& e : a.edges) {
    adj[e.from].emplace_back(Letter::positive(e.gen).code(), e.to);
    adj[e.to].emplace_back(Letter::negative(e.gen).code(), e.from);
  }
  return adj;
}

}  // namespace

bool InvAutomaton::is_terminal(State s) const {
  return std::binary_search(terminals.begin(), terminals.end(), s);
}

Word FoldLog::connector(State p, State q) const {
  if (p == q) {
    return {};
  }
  // unique path in the proof forest
  std::vector<State> prev(forest.size(), kNoState);
  std::vector<uint32_t> prev_rec(forest.size(), kNoRecord);
  std::deque<State> bfs{p};
  std::vector<char> seen(forest.size(), false);
  seen[p] = true;
  while (!bfs.empty()) {
    State x = bfs.front();
    bfs.pop_front();
    if (x == q) {
      break;
    }
    for (auto [y, rec] : forest[x]) {
      if (!seen[y]) {
        seen[y] = true;
        prev[y] = x;
        prev_rec[y] = rec;
        bfs.push_back(y);
      }
    }
  }
  if (!seen[q]) {
    throw PathNotPresentError("connector: states not identified by this log");
  }
  std::vector<std::pair<State, uint32_t>> steps;  // (next, record)
  for (State x = q; x != p; x = prev[x]) {
    steps.emplace_back(x, prev_rec[x]);
  }
  std::reverse(steps.begin(), steps.end());

  Word out;
  State cur = p;
  for (auto [next, ri] : steps) {
    if (ri == kNoRecord) {
      throw PathNotPresentError(
          "connector: identification has no witness record");
    }
    const Record& r = records[ri];
    Letter l = Letter::from_code(r.code);
    if (r.contraction) {
      out.push_back(cur == r.e1_from ? l : l.inverse());
    } else {
      out.push_back(l.inverse());
      Word mid = (cur == r.e1_to) ? connector(r.e1_from, r.e2_from)
                                  : connector(r.e2_from, r.e1_from);
      out.insert(out.end(), mid.begin(), mid.end());
      out.push_back(l);
    }
    cur = next;
  }
  return out;
}

InvAutomaton linear_automaton(const Word& w, int n_gens) {
  InvAutomaton a;
  a.n_gens = n_gens;
  a.n_states = w.size() + 1;
  a.initial = 0;
  a.terminals = {static_cast<State>(w.size())};
  for (size_t i = 0; i < w.size(); ++i) {
    State p = static_cast<State>(i), q = static_cast<State>(i + 1);
    if (w[i].is_inverse()) {
      a.edges.push_back({q, w[i].gen(), p});
    } else {
      a.edges.push_back({p, w[i].gen(), q});
    }
  }
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  return a;
}

InvAutomaton fold(const InvAutomaton& a) {
  return FoldCore(a, false, nullptr, -1).run().automaton;
}

FoldResult fold_logged(const InvAutomaton& a) {
  return FoldCore(a, true, nullptr, -1).run();
}

InvAutomaton fold_shuffled(const InvAutomaton& a, std::mt19937& rng) {
  return FoldCore(a, false, &rng, -1).run().automaton;
}

InvAutomaton fold_with_merges(
    const InvAutomaton& a,
    const std::vector<std::pair<State, State>>& merges) {
  FoldCore core(a, false, nullptr, -1);
  for (auto [p, q] : merges) {
    core.add_pre_merge(p, q);
  }
  return core.run().automaton;
}

InvAutomaton munn_tree(const Word& w, int n_gens) {
  return fold(linear_automaton(w, n_gens));
}

StepTable::StepTable(const InvAutomaton& a)
    : stride_(static_cast<size_t>(2) * a.n_gens),
      table_(a.n_states * stride_, kNoState) {
  auto set = [&](State s, uint32_t code, State t) {
    State& slot = table_[s * stride_ + code];
    if (slot != kNoState && slot != t) {
      throw NondeterministicError("automaton is not deterministic");
    }
    slot = t;
  };
  for (const PosEdge& e : a.edges) {
    set(e.from, Letter::positive(e.gen).code(), e.to);
    set(e.to, Letter::negative(e.gen).code(), e.from);
  }
}

std::optional<State> StepTable::run(State from, const Word& w) const {
  State cur = from;
  for (Letter l : w) {
    cur = step(cur, l);
    if (cur == kNoState) {
      return std::nullopt;
    }
  }
  return cur;
}

bool is_deterministic(const InvAutomaton& a) {
  try {
    StepTable st(a);
  } catch (const NondeterministicError&) {
    return false;
  }
  return true;
}

bool accepts(const InvAutomaton& a, const Word& w) {
  StepTable st(a);
  auto end = st.run(a.initial, w);
  return end && a.is_terminal(*end);
}

bool labels_path(const InvAutomaton& a, const Word& w, State from, State to) {
  auto adj = directed_adjacency(a);
  std::vector<char> seen(a.n_states * (w.size() + 1), false);
  std::deque<std::pair<State, size_t>> bfs;
  bfs.push_back({from, 0});
  seen[from * (w.size() + 1)] = true;
  while (!bfs.empty()) {
    auto [s, pos] = bfs.front();
    bfs.pop_front();
    if (pos == w.size()) {
      if (s == to) {
        return true;
      }
      continue;
    }
    for (auto [code, t] : adj[s]) {
      if (code == w[pos].code()) {
        size_t key = t * (w.size() + 1) + pos + 1;
        if (!seen[key]) {
          seen[key] = true;
          bfs.push_back({t, pos + 1});
        }
      }
    }
  }
  return false;
}

bool labels_some_path(const StepTable& st, size_t n_states, const Word& w) {
  for (State s = 0; s < n_states; ++s) {
    if (st.run(s, w)) {
      return true;
    }
  }
  return false;
}

bool is_trim(const InvAutomaton& a) {
  if (a.n_states == 0 || a.terminals.empty()) {
    return false;
  }
  auto adj = directed_adjacency(a);
  std::vector<char> seen(a.n_states, false);
  std::deque<State> bfs{a.initial};
  seen[a.initial] = true;
  size_t count = 1;
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop_front();
    for (auto [code, t] : adj[s]) {
      if (!seen[t]) {
        seen[t] = true;
        ++count;
        bfs.push_back(t);
      }
    }
  }
  return count == a.n_states;
}

std::optional<InvAutomaton> maybe_trim(const InvAutomaton& a) {
  if (a.n_states == 0) {
    return std::nullopt;
  }
  auto adj = directed_adjacency(a);
  std::vector<State> id(a.n_states, kNoState);
  std::vector<State> order;
  std::deque<State> bfs{a.initial};
  id[a.initial] = 0;
  order.push_back(a.initial);
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop_front();
    auto nbrs = adj[s];
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [code, t] : nbrs) {
      if (id[t] == kNoState) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
        bfs.push_back(t);
      }
    }
  }
  InvAutomaton out;
  out.n_gens = a.n_gens;
  out.n_states = order.size();
  out.initial = 0;
  for (State t : a.terminals) {
    if (id[t] != kNoState) {
      out.terminals.push_back(id[t]);
    }
  }
  if (out.terminals.empty()) {
    return std::nullopt;
  }
  std::sort(out.terminals.begin(), out.terminals.end());
  out.terminals.erase(
      std::unique(out.terminals.begin(), out.terminals.end()),
      out.terminals.end());
  for (const PosEdge& e : a.edges) {
    if (id[e.from] != kNoState && id[e.to] != kNoState) {
      out.edges.push_back({id[e.from], e.gen, id[e.to]});
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

InvAutomaton trim(const InvAutomaton& a) {
  auto t = maybe_trim(a);
  if (!t) {
    throw EmptyLanguageError("trim: initial state reaches no terminal");
  }
  return *std::move(t);
}

bool is_tree(const InvAutomaton& a) {
  if (a.n_states == 0) {
    return false;
  }
  if (a.edges.size() != a.n_states - 1) {
    return false;
  }
  auto adj = directed_adjacency(a);
  std::vector<char> seen(a.n_states, false);
  std::deque<State> bfs{0};
  seen[0] = true;
  size_t count = 1;
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop_front();
    for (auto [code, t] : adj[s]) {
      if (!seen[t]) {
        seen[t] = true;
        ++count;
        bfs.push_back(t);
      }
    }
  }
  return count == a.n_states;
}

bool isomorphic(const InvAutomaton& a, const InvAutomaton& b) {
  if (!is_trim(a) || !is_trim(b)) {
    throw std::invalid_argument("isomorphic: automata must be trim");
  }
  StepTable sa(a), sb(b);  // throws on nondeterminism
  if (a.n_states != b.n_states || a.n_gens != b.n_gens ||
      a.terminals.size() != b.terminals.size()) {
    return false;
  }
  std::vector<State> map(a.n_states, kNoState);
  map[a.initial] = b.initial;
  std::deque<State> bfs{a.initial};
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop_front();
    for (uint32_t code = 0; code < 2u * a.n_gens; ++code) {
      Letter l = Letter::from_code(code);
      State ta = sa.step(s, l);
      State tb = sb.step(map[s], l);
      if ((ta == kNoState) != (tb == kNoState)) {
        return false;
      }
      if (ta == kNoState) {
        continue;
      }
      if (map[ta] == kNoState) {
        map[ta] = tb;
        bfs.push_back(ta);
      } else if (map[ta] != tb) {
        return false;
      }
    }
  }
  for (State t : a.terminals) {
    if (map[t] == kNoState || !b.is_terminal(map[t])) {
      return false;
    }
  }
  return true;
}

InvAutomaton product(const std::vector<const InvAutomaton*>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product: no factors");
  }
  const int n_gens = factors[0]->n_gens;
  for (const auto* f : factors) {
    if (f->n_gens != n_gens) {
      throw std::invalid_argument("product: alphabet mismatch");
    }
    if (f->n_states == 0) {
      throw std::invalid_argument("product: empty factor");
    }
  }
  const size_t m = factors.size();
  const size_t codes = static_cast<size_t>(2) * n_gens;

  // per factor, per state, per code: target list
  std::vector<std::vector<std::vector<State>>> adj(m);
  for (size_t f = 0; f < m; ++f) {
    adj[f].assign(factors[f]->n_states * codes, {});
    for (const PosEdge& e : factors[f]->edges) {
      adj[f][e.from * codes + Letter::positive(e.gen).code()].push_back(e.to);
      adj[f][e.to * codes + Letter::negative(e.gen).code()].push_back(e.from);
    }
  }

  struct VecHash {
    size_t operator()(const std::vector<State>& v) const {
      size_t h = 1469598103934665603ull;
      for (State s : v) {
        h = (h ^ s) * 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<std::vector<State>, State, VecHash> ids;
  std::vector<std::vector<State>> tuples;
  auto intern = [&](const std::vector<State>& t) {
    auto it = ids.find(t);
    if (it != ids.end()) {
      return std::make_pair(it->second, false);
    }
    State id = static_cast<State>(tuples.size());
    ids.emplace(t, id);
    tuples.push_back(t);
    return std::make_pair(id, true);
  };

  std::vector<State> init(m);
  for (size_t f = 0; f < m; ++f) {
    init[f] = factors[f]->initial;
  }
  intern(init);

  InvAutomaton out;
  out.n_gens = n_gens;
  out.initial = 0;

  std::vector<std::vector<State>> targets(m);
  for (State cur = 0; cur < tuples.size(); ++cur) {
    const auto tuple = tuples[cur];
    for (uint32_t code = 0; code < codes; ++code) {
      bool possible = true;
      for (size_t f = 0; f < m; ++f) {
        targets[f] = adj[f][tuple[f] * codes + code];
        if (targets[f].empty()) {
          possible = false;
          break;
        }
      }
      if (!possible) {
        continue;
      }
      // cartesian combination over per-factor targets (singletons for
      // deterministic factors)
      std::vector<size_t> pick(m, 0);
      while (true) {
        std::vector<State> next(m);
        for (size_t f = 0; f < m; ++f) {
          next[f] = targets[f][pick[f]];
        }
        State nid = intern(next).first;
        Letter l = Letter::from_code(code);
        if (l.is_inverse()) {
          out.edges.push_back({nid, l.gen(), cur});
        } else {
          out.edges.push_back({cur, l.gen(), nid});
        }
        size_t f = 0;
        while (f < m && ++pick[f] == targets[f].size()) {
          pick[f] = 0;
          ++f;
        }
        if (f == m) {
          break;
        }
      }
    }
  }

  out.n_states = tuples.size();
  for (State id = 0; id < tuples.size(); ++id) {
    bool all_terminal = true;
    for (size_t f = 0; f < m; ++f) {
      if (!factors[f]->is_terminal(tuples[id][f])) {
        all_terminal = false;
        break;
      }
    }
    if (all_terminal) {
      out.terminals.push_back(id);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

InvAutomaton hat(const InvAutomaton& a, int gen) {
  if (gen < 0 || gen >= a.n_gens) {
    throw std::out_of_range("hat: generator index out of range");
  }
  for (const PosEdge& e : a.edges) {
    if (e.gen == gen) {
      throw std::invalid_argument("hat: automaton already uses this letter");
    }
  }
  InvAutomaton out = a;
  for (State s = 0; s < a.n_states; ++s) {
    out.edges.push_back({s, gen, s});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

InvAutomaton contract(const InvAutomaton& a, int gen) {
  if (gen < 0 || gen >= a.n_gens) {
    throw std::out_of_range("contract: generator index out of range");
  }
  return FoldCore(a, false, nullptr, gen).run().automaton;
}

FoldResult contract_logged(const InvAutomaton& a, int gen) {
  if (gen < 0 || gen >= a.n_gens) {
    throw std::out_of_range("contract: generator index out of range");
  }
  return FoldCore(a, true, nullptr, gen).run();
}

Word lift_path(const InvAutomaton& original, const FoldLog& log,
               const Word& w, State from_orig, State to_orig) {
  const auto& pi = log.to_folded;
  if (from_orig >= original.n_states || to_orig >= original.n_states) {
    throw PathNotPresentError("lift_path: state out of range");
  }
  // (folded class, signed code) -> directed original edges
  struct Key {
    State cls;
    uint32_t code;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return std::hash<uint64_t>()((static_cast<uint64_t>(k.cls) << 32) |
                                   k.code);
    }
  };
  std::unordered_map<Key, std::vector<std::pair<State, State>>, KeyHash> index;
  for (const PosEdge& e : original.edges) {
    index[{pi[e.from], Letter::positive(e.gen).code()}].emplace_back(e.from,
                                                                     e.to);
    index[{pi[e.to], Letter::negative(e.gen).code()}].emplace_back(e.to,
                                                                   e.from);
  }
  Word out;
  State cur = from_orig;
  for (Letter l : w) {
    auto it = index.find({pi[cur], l.code()});
    if (it == index.end()) {
      throw PathNotPresentError("lift_path: word does not label a path");
    }
    auto [self, nbr] = it->second.front();
    Word conn = log.connector(cur, self);
    out.insert(out.end(), conn.begin(), conn.end());
    out.push_back(l);
    cur = nbr;
  }
  if (pi[cur] != pi[to_orig]) {
    throw PathNotPresentError("lift_path: path does not end at target");
  }
  Word conn = log.connector(cur, to_orig);
  out.insert(out.end(), conn.begin(), conn.end());
  return out;
}

InvAutomaton canonicalize(const InvAutomaton& a) {
  if (a.n_states == 0) {
    return a;
  }
  auto adj = directed_adjacency(a);
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
  }
  std::vector<State> id(a.n_states, kNoState);
  std::vector<State> order;
  std::deque<State> bfs{a.initial};
  id[a.initial] = 0;
  order.push_back(a.initial);
  while (!bfs.empty()) {
    State s = bfs.front();
    bfs.pop_front();
    for (auto [code, t] : adj[s]) {
      if (id[t] == kNoState) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
        bfs.push_back(t);
      }
    }
  }
  for (State s = 0; s < a.n_states; ++s) {
    if (id[s] == kNoState) {
      id[s] = static_cast<State>(order.size());
      order.push_back(s);
    }
  }
  InvAutomaton out;
  out.n_gens = a.n_gens;
  out.n_states = a.n_states;
  out.initial = id[a.initial];
  for (State t : a.terminals) {
    out.terminals.push_back(id[t]);
  }
  std::sort(out.terminals.begin(), out.terminals.end());
  out.terminals.erase(
      std::unique(out.terminals.begin(), out.terminals.end()),
      out.terminals.end());
  for (const PosEdge& e : a.edges) {
    out.edges.push_back({id[e.from], e.gen, id[e.to]});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

std::string canonical_key(const InvAutomaton& a) {
  std::ostringstream out;
  out << a.n_states << ';' << a.initial << ';';
  for (State t : a.terminals) {
    out << t << ',';
  }
  out << ';';
  for (const PosEdge& e : a.edges) {
    out << e.from << '-' << e.gen << '-' << e.to << ';';
  }
  return out.str();
}

std::string to_dot(const InvAutomaton& a, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "digraph fwords {\n  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (State s = 0; s < a.n_states; ++s) {
    out << "  s" << s << " [shape="
        << (a.is_terminal(s) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> s" << a.initial << ";\n";
  for (const PosEdge& e : a.edges) {
    out << "  s" << e.from << " -> s" << e.to << " [label=\""
        << alphabet.name(e.gen) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json_str(const InvAutomaton& a, const Alphabet& alphabet) {
  nlohmann::ordered_json j;
  j["states"] = a.n_states;
  j["initial"] = a.initial;
  j["terminals"] = a.terminals;
  auto edges = nlohmann::ordered_json::array();
  for (const PosEdge& e : a.edges) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["label"] = alphabet.name(e.gen);
    je["to"] = e.to;
    edges.push_back(je);
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace fwords
