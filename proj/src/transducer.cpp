#include "fwords/transducer.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fwords {

Transducer::Transducer(std::vector<std::string> state_names,
                       std::vector<std::string> letter_names,
                       std::vector<std::vector<int>> next_state,
                       std::vector<std::vector<int>> output)
    : state_names_(std::move(state_names)),
      letter_names_(std::move(letter_names)),
      next_(std::move(next_state)),
      out_(std::move(output)) {
  const int q = n_states();
  const int a = n_letters();
  if (static_cast<int>(next_.size()) != q ||
      static_cast<int>(out_.size()) != q) {
    throw std::invalid_argument("transducer: table size mismatch");
  }
  invertible_ = true;
  out_inv_.assign(q, std::vector<int>(a, -1));
  for (int s = 0; s < q; ++s) {
    if (static_cast<int>(next_[s].size()) != a ||
        static_cast<int>(out_[s].size()) != a) {
      throw std::invalid_argument("transducer: table size mismatch");
    }
    for (int l = 0; l < a; ++l) {
      if (next_[s][l] < 0 || next_[s][l] >= q || out_[s][l] < 0 ||
          out_[s][l] >= a) {
        throw std::invalid_argument("transducer: entry out of range");
      }
      if (out_inv_[s][out_[s][l]] != -1) {
        invertible_ = false;  // output map not a permutation
      }
      out_inv_[s][out_[s][l]] = l;
    }
  }
}

std::pair<int, Letter> Transducer::step(Letter state, int letter) const {
  int q = state.gen();
  if (q < 0 || q >= n_states() || letter < 0 || letter >= n_letters()) {
    throw std::out_of_range("transducer: state or letter out of range");
  }
  if (!state.is_inverse()) {
    return {out_[q][letter], Letter::positive(next_[q][letter])};
  }
  if (!invertible_) {
    throw NotInvertibleError(
        "transducer: inverse states need an invertible machine");
  }
  int pre = out_inv_[q][letter];
  return {pre, Letter::negative(next_[q][pre])};
}

namespace {

// one input letter through the whole state word; returns the output
// letter and replaces `states` by its restriction
int act_letter(const Transducer& t, Word& states, int letter) {
  int cur = letter;
  for (size_t j = states.size(); j-- > 0;) {
    auto [out, next] = t.step(states[j], cur);
    states[j] = next;
    cur = out;
  }
  return cur;
}

}  // namespace

std::vector<int> act(const Transducer& t, const Word& states,
                     const std::vector<int>& input) {
  Word w = states;
  std::vector<int> out;
  out.reserve(input.size());
  for (int a : input) {
    out.push_back(act_letter(t, w, a));
  }
  return out;
}

Word restrict_word(const Transducer& t, const Word& states,
                   const std::vector<int>& input) {
  Word w = states;
  for (int a : input) {
    act_letter(t, w, a);
  }
  return w;
}

Transducer extend_with_sink(const Transducer& t) {
  if (!t.invertible()) {
    throw NotInvertibleError("extend_with_sink: machine must be invertible");
  }
  const int q = t.n_states();
  const int a = t.n_letters();
  std::set<std::string> taken(t.letter_names().begin(),
                              t.letter_names().end());
  auto fresh = [&taken](std::string base) {
    while (taken.count(base)) {
      base += "'";
    }
    taken.insert(base);
    return base;
  };

  std::vector<std::string> states = t.state_names();
  std::string sink_name = "e";
  for (const auto& s : states) {
    if (s == sink_name) {
      sink_name = "e'";
    }
  }
  states.push_back(sink_name);
  const int sink = q;

  // new letters: one per original state, then one for the sink
  std::vector<std::string> letters = t.letter_names();
  std::vector<int> state_letter(q + 1);
  for (int s = 0; s < q; ++s) {
    state_letter[s] = static_cast<int>(letters.size());
    letters.push_back(fresh(t.state_names()[s]));
  }
  state_letter[sink] = static_cast<int>(letters.size());
  letters.push_back(fresh(sink_name));

  const int total_letters = static_cast<int>(letters.size());
  std::vector<std::vector<int>> next(q + 1,
                                     std::vector<int>(total_letters, 0));
  std::vector<std::vector<int>> out(q + 1,
                                    std::vector<int>(total_letters, 0));
  for (int s = 0; s < q; ++s) {
    for (int l = 0; l < total_letters; ++l) {
      if (l < a) {
        // original behaviour on the original alphabet
        auto [o, nx] = t.step(Letter::positive(s), l);
        out[s][l] = o;
        next[s][l] = nx.gen();
      } else {
        out[s][l] = l;  // new letters are fixed pointwise
        next[s][l] = (l == state_letter[s]) ? sink : s;
      }
    }
  }
  for (int l = 0; l < total_letters; ++l) {
    out[sink][l] = l;
    next[sink][l] = sink;
  }
  return Transducer(std::move(states), std::move(letters), std::move(next),
                    std::move(out));
}

namespace {

bool relation_rec(const Transducer& t, const Word& states, int depth) {
  if (depth == 0) {
    return true;
  }
  for (int a = 0; a < t.n_letters(); ++a) {
    Word w = states;
    if (act_letter(t, w, a) != a) {
      return false;
    }
    if (!relation_rec(t, w, depth - 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_relation_bounded(const Transducer& t, const Word& states, int depth) {
  if (depth < 0) {
    throw std::invalid_argument("is_relation_bounded: negative depth");
  }
  return relation_rec(t, states, depth);
}

bool fragile_relation_check(const Transducer& t, const Word& states,
                            int depth) {
  if (!is_relation_bounded(t, states, depth)) {
    throw std::invalid_argument(
        "fragile_relation_check: word is not a bounded-verified relation");
  }
  Word red = free_reduce(states);
  if (red.empty()) {
    return false;
  }
  std::set<int> support;
  for (Letter l : red) {
    support.insert(l.gen());
  }
  for (int g : support) {
    if (!is_dyck(delete_letter(red, g, t.n_states()))) {
      return false;
    }
  }
  return true;
}

Transducer transducer_from_json_str(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::string> states =
      j.at("states").get<std::vector<std::string>>();
  std::vector<std::string> letters =
      j.at("alphabet").get<std::vector<std::string>>();
  auto state_index = [&](const std::string& name) {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) {
      throw ParseError("transducer: unknown state '" + name + "'");
    }
    return static_cast<int>(it - states.begin());
  };
  auto letter_index = [&](const std::string& name) {
    auto it = std::find(letters.begin(), letters.end(), name);
    if (it == letters.end()) {
      throw ParseError("transducer: unknown letter '" + name + "'");
    }
    return static_cast<int>(it - letters.begin());
  };
  std::vector<std::vector<int>> next(states.size(),
                                     std::vector<int>(letters.size(), -1));
  std::vector<std::vector<int>> out(states.size(),
                                    std::vector<int>(letters.size(), -1));
  for (const auto& [sname, row] : j.at("transitions").items()) {
    int s = state_index(sname);
    for (const auto& [lname, pair] : row.items()) {
      int l = letter_index(lname);
      next[s][l] = state_index(pair.at(0).get<std::string>());
      out[s][l] = letter_index(pair.at(1).get<std::string>());
    }
  }
  for (size_t s = 0; s < states.size(); ++s) {
    for (size_t l = 0; l < letters.size(); ++l) {
      if (next[s][l] < 0) {
        throw ParseError("transducer: missing transition for state '" +
                         states[s] + "', letter '" + letters[l] + "'");
      }
    }
  }
  return Transducer(std::move(states), std::move(letters), std::move(next),
                    std::move(out));
}

std::string transducer_to_json_str(const Transducer& t) {
  nlohmann::ordered_json j;
  j["states"] = t.state_names();
  j["alphabet"] = t.letter_names();
  nlohmann::ordered_json trans;
  for (int s = 0; s < t.n_states(); ++s) {
    nlohmann::ordered_json row;
    for (int l = 0; l < t.n_letters(); ++l) {
      auto [o, nx] = t.step(Letter::positive(s), l);
      row[t.letter_names()[l]] = {t.state_names()[nx.gen()],
                                  t.letter_names()[o]};
    }
    trans[t.state_names()[s]] = std::move(row);
  }
  j["transitions"] = std::move(trans);
  return j.dump();
}

Transducer load_transducer(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open transducer file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return transducer_from_json_str(buf.str());
}

}  // namespace fwords
