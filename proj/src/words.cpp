#include "fwords/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace fwords {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw ParseError("alphabet: empty generator name");
    }
    if (!seen.insert(n).second) {
      throw ParseError("alphabet: duplicate generator '" + n + "'");
    }
  }
}

Alphabet Alphabet::lowercase(int n) {
  if (n < 0 || n > 26) {
    throw std::invalid_argument("lowercase alphabet supports 0..26 symbols");
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1].inverse()) {
      return false;
    }
  }
  return true;
}

Word delete_letter(const Word& w, int gen, int n_gens) {
  if (gen < 0 || gen >= n_gens) {
    throw std::out_of_range("delete_letter: generator index out of range");
  }
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l.gen() != gen) {
      out.push_back(l);
    }
  }
  return out;
}

bool is_dyck(const Word& w) { return free_reduce(w).empty(); }

long exponent_sum(const Word& w, int gen) {
  long sum = 0;
  for (Letter l : w) {
    if (l.gen() == gen) {
      sum += l.sign();
    }
  }
  return sum;
}

namespace {

bool compact_printable(const Alphabet& alphabet) {
  for (const auto& n : alphabet.names()) {
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0]))) {
      return false;
    }
  }
  return true;
}

Word parse_compact(std::string_view text, const Alphabet& alphabet) {
  Word out;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    char base = upper ? static_cast<char>(std::tolower(c)) : c;
    auto idx = alphabet.index(std::string_view(&base, 1));
    if (!idx) {
      throw ParseError("unknown letter '" + std::string(1, c) +
                       "' at position " + std::to_string(i));
    }
    out.push_back(Letter(*idx, upper ? -1 : +1));
  }
  return out;
}

Word parse_tokens(std::string_view text, const Alphabet& alphabet) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  size_t pos = 0;
  while (in >> tok) {
    ++pos;
    if (tok == "1" && !alphabet.index("1")) {
      continue;  // identity factor
    }
    std::string_view name = tok;
    int sign = +1;
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      sign = -1;
      name = name.substr(0, name.size() - 3);
    }
    auto idx = alphabet.index(name);
    if (idx) {
      out.push_back(Letter(*idx, sign));
      continue;
    }
    // allow compact syllables inside token form, e.g. "abA B"
    if (sign == +1) {
      Word piece = parse_compact(name, alphabet);
      out.insert(out.end(), piece.begin(), piece.end());
      continue;
    }
    throw ParseError("unknown token '" + tok + "' at token " +
                     std::to_string(pos));
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text == "1" && !alphabet.index("1")) {
    return {};
  }
  if (text.find_first_of(" \t") != std::string_view::npos) {
    return parse_tokens(text, alphabet);
  }
  if (auto idx = alphabet.index(text)) {
    return {Letter::positive(*idx)};  // single multi-character name
  }
  return parse_compact(text, alphabet);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  if (compact_printable(alphabet)) {
    for (Letter l : w) {
      char c = alphabet.name(l.gen())[0];
      out.push_back(l.is_inverse() ? static_cast<char>(std::toupper(c)) : c);
    }
    return out;
  }
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) {
      out.push_back(' ');
    }
    out += alphabet.name(w[i].gen());
    if (w[i].is_inverse()) {
      out += "^-1";
    }
  }
  return out;
}

Alphabet parse_alphabet(std::string_view decl) {
  std::string text(decl);
  const std::string prefix = "alphabet:";
  if (text.rfind(prefix, 0) == 0) {
    text = text.substr(prefix.size());
  }
  std::vector<std::string> names;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    names.push_back(tok);
  }
  if (names.size() == 1 && names[0].size() > 1) {
    // compact declaration "abc"
    bool all_single = true;
    for (char c : names[0]) {
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        all_single = false;
        break;
      }
    }
    if (all_single) {
      std::vector<std::string> split;
      for (char c : names[0]) {
        split.push_back(std::string(1, c));
      }
      names = std::move(split);
    }
  }
  return Alphabet(std::move(names));
}

std::string format_alphabet(const Alphabet& alphabet) {
  std::string out = "alphabet:";
  for (const auto& n : alphabet.names()) {
    out.push_back(' ');
    out += n;
  }
  return out;
}

}  // namespace fwords
