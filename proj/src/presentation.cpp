#include "fwords/presentation.hpp"

#include <fstream>
#include <sstream>

namespace fwords {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) {
    s = s.substr(0, hash);
  }
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_alphabet = false;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) {
      continue;
    }
    if (!have_alphabet) {
      if (s.rfind("alphabet:", 0) != 0) {
        throw ParseError("presentation: expected 'alphabet: ...' first");
      }
      p.alphabet = parse_alphabet(s);
      have_alphabet = true;
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ParseError("presentation line " + std::to_string(lineno) +
                       ": expected 'u = v'");
    }
    std::string lhs = strip(s.substr(0, eq));
    std::string rhs = strip(s.substr(eq + 1));
    if (lhs.empty() || rhs.empty()) {
      throw ParseError("presentation line " + std::to_string(lineno) +
                       ": empty relation side (use '1' for the identity)");
    }
    p.relations.emplace_back(parse_word(lhs, p.alphabet),
                             parse_word(rhs, p.alphabet));
  }
  if (!have_alphabet) {
    throw ParseError("presentation: missing alphabet declaration");
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open presentation file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << format_alphabet(p.alphabet) << '\n';
  for (const auto& [u, v] : p.relations) {
    out << format_word(u, p.alphabet) << " = " << format_word(v, p.alphabet)
        << '\n';
  }
  return out.str();
}

}  // namespace fwords
