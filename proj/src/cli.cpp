#include "fwords/cli.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwords/eraser_inv.hpp"
#include "fwords/fim.hpp"
#include "fwords/free_group.hpp"
#include "fwords/inv_automaton.hpp"
#include "fwords/nfa.hpp"
#include "fwords/presentation.hpp"
#include "fwords/stephen.hpp"
#include "fwords/transducer.hpp"
#include "fwords/words.hpp"

namespace fwords {

namespace {

using nlohmann::ordered_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 3;

// Letter names occurring in a word spelled in either syntax.
void collect_names(const std::string& text, std::set<std::string>& names) {
  if (text == "1") {
    return;
  }
  if (text.find_first_of(" \t") == std::string::npos) {
    for (char c : text) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        names.insert(std::string(
            1, static_cast<char>(std::tolower(static_cast<unsigned char>(c)))));
      }
    }
    return;
  }
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      continue;
    }
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      tok = tok.substr(0, tok.size() - 3);
    }
    names.insert(tok);
  }
}

// Alphabet for free-standing word commands: explicit flag, else the
// word's support in sorted order.
Alphabet word_alphabet(const std::string& flag,
                       const std::vector<std::string>& texts) {
  if (!flag.empty()) {
    return parse_alphabet(flag);
  }
  std::set<std::string> names;
  for (const auto& t : texts) {
    collect_names(t, names);
  }
  return Alphabet(std::vector<std::string>(names.begin(), names.end()));
}

// Alphabet for tuple commands: explicit flag (must match the rank), else
// the first n lowercase letters.
Alphabet tuple_alphabet(const std::string& flag, size_t rank) {
  Alphabet a = flag.empty() ? Alphabet::lowercase(static_cast<int>(rank))
                            : parse_alphabet(flag);
  if (a.size() != static_cast<int>(rank)) {
    throw ParseError("alphabet size " + std::to_string(a.size()) +
                     " does not match tuple rank " + std::to_string(rank));
  }
  return a;
}

std::vector<Word> parse_words(const std::vector<std::string>& texts,
                              const Alphabet& alphabet) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(parse_word(t, alphabet));
  }
  return out;
}

void emit(std::ostream& out, bool json, const ordered_json& j,
          const std::string& plain) {
  if (json) {
    out << j.dump() << '\n';
  } else {
    out << plain << '\n';
  }
}

const char* answer_name(Answer a) {
  switch (a) {
    case Answer::yes:
      return "yes";
    case Answer::no:
      return "no";
    default:
      return "unknown";
  }
}

int answer_code(Answer a) {
  switch (a) {
    case Answer::yes:
      return kYes;
    case Answer::no:
      return kNo;
    default:
      return kUnknown;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << text;
}

struct Options {
  bool json = false;
  std::string alphabet;
  int budget_iterations = 1000;
};

int dispatch(CLI::App& app, const Options& opt, std::ostream& out) {
  const bool json = opt.json;
  Budget budget;
  budget.max_iterations = opt.budget_iterations;

  // ---- fragile ----
  if (auto* g = app.get_subcommand("fragile"); g->parsed()) {
    if (auto* c = g->get_subcommand("check"); c->parsed()) {
      std::string text = c->get_option("word")->as<std::string>();
      Alphabet a = word_alphabet(opt.alphabet, {text});
      bool ans = is_fragile(parse_word(text, a), a.size());
      emit(out, json, {{"answer", ans}}, ans ? "fragile" : "not fragile");
      return ans ? kYes : kNo;
    }
    if (auto* c = g->get_subcommand("image"); c->parsed()) {
      std::string text = c->get_option("word")->as<std::string>();
      Alphabet a = word_alphabet(opt.alphabet, {text});
      if (a.size() < 2) {
        throw ParseError("eraser image needs at least two generators");
      }
      EraserTuple t = eraser_image(parse_word(text, a), a.size());
      ordered_json comps = ordered_json::array();
      std::string plain;
      for (int i = 0; i < t.rank(); ++i) {
        std::string s = format_word(t.components[i], a);
        comps.push_back(s);
        if (i) {
          plain += ' ';
        }
        plain += s;
      }
      emit(out, json, {{"answer", true}, {"components", comps}}, plain);
      return kYes;
    }
    if (auto* c = g->get_subcommand("in-image"); c->parsed()) {
      auto texts = c->get_option("components")->as<std::vector<std::string>>();
      Alphabet a = tuple_alphabet(opt.alphabet, texts.size());
      EraserTuple t = make_eraser_tuple(parse_words(texts, a));
      bool ans = in_image(t);
      emit(out, json, {{"answer", ans}}, ans ? "yes" : "no");
      return ans ? kYes : kNo;
    }
    if (auto* c = g->get_subcommand("preimage"); c->parsed()) {
      auto texts = c->get_option("components")->as<std::vector<std::string>>();
      Alphabet a = tuple_alphabet(opt.alphabet, texts.size());
      EraserTuple t = make_eraser_tuple(parse_words(texts, a));
      if (!in_image(t)) {
        emit(out, json, {{"answer", false}}, "no");
        return kNo;
      }
      Word w = preimage(t);
      std::string s = format_word(w, a);
      emit(out, json, {{"answer", true}, {"witness", s}}, s);
      return kYes;
    }
    if (auto* c = g->get_subcommand("commutator"); c->parsed()) {
      int n = c->get_option("-n")->as<int>();
      Alphabet a = opt.alphabet.empty() ? Alphabet::lowercase(n)
                                        : parse_alphabet(opt.alphabet);
      Word w = nested_commutator(a.size());
      std::string s = format_word(w, a);
      emit(out, json, {{"answer", true}, {"witness", s}}, s);
      return kYes;
    }
  }

  // ---- fim ----
  if (auto* g = app.get_subcommand("fim"); g->parsed()) {
    if (auto* c = g->get_subcommand("equal"); c->parsed()) {
      std::string ut = c->get_option("u")->as<std::string>();
      std::string vt = c->get_option("v")->as<std::string>();
      Alphabet a = word_alphabet(opt.alphabet, {ut, vt});
      bool ans = fim_equal(parse_word(ut, a), parse_word(vt, a), a.size());
      emit(out, json, {{"answer", ans}}, ans ? "yes" : "no");
      return ans ? kYes : kNo;
    }
    if (auto* c = g->get_subcommand("factors"); c->parsed()) {
      std::string ut = c->get_option("u")->as<std::string>();
      Alphabet a = word_alphabet(opt.alphabet, {ut});
      auto fs = factors(parse_word(ut, a), a.size());
      ordered_json arr = ordered_json::array();
      std::string plain = std::to_string(fs.size());
      for (const auto& e : fs) {
        std::string s = format_word(e.rep(), a);
        arr.push_back(s);
        plain += '\n' + s;
      }
      emit(out, json,
           {{"answer", true}, {"count", fs.size()}, {"factors", arr}}, plain);
      return kYes;
    }
    if (auto* c = g->get_subcommand("member"); c->parsed()) {
      std::string ut = c->get_option("-u")->as<std::string>();
      std::string lpath = c->get_option("-L")->as<std::string>();
      std::ifstream in(lpath);
      if (!in) {
        throw ParseError("cannot open nfa file: " + lpath);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      // infer the alphabet from the word and the automaton labels
      std::set<std::string> names;
      collect_names(ut, names);
      auto j = nlohmann::json::parse(buf.str());
      for (const auto& je : j.at("edges")) {
        collect_names(je.at("label").get<std::string>(), names);
      }
      Alphabet a =
          opt.alphabet.empty()
              ? Alphabet(std::vector<std::string>(names.begin(), names.end()))
              : parse_alphabet(opt.alphabet);
      Nfa language = nfa_from_json_str(buf.str(), a);
      bool ans = rational_membership(parse_word(ut, a), language, a.size());
      emit(out, json, {{"answer", ans}}, ans ? "yes" : "no");
      return ans ? kYes : kNo;
    }
    if (auto* c = g->get_subcommand("covers"); c->parsed()) {
      std::string et = c->get_option("e")->as<std::string>();
      Alphabet a = word_alphabet(opt.alphabet, {et});
      auto covers = covering_idempotents(parse_word(et, a), a.size());
      ordered_json arr = ordered_json::array();
      std::string plain = std::to_string(covers.size());
      for (const auto& e : covers) {
        std::string s = format_word(e.rep(), a);
        arr.push_back(s);
        plain += '\n' + s;
      }
      emit(out, json,
           {{"answer", true}, {"count", covers.size()}, {"covers", arr}},
           plain);
      return kYes;
    }
  }

  // ---- stephen ----
  if (auto* g = app.get_subcommand("stephen"); g->parsed()) {
    if (auto* c = g->get_subcommand("closure"); c->parsed()) {
      Presentation p =
          load_presentation(c->get_option("-p")->as<std::string>());
      Word w = parse_word(c->get_option("-w")->as<std::string>(), p.alphabet);
      ClosureResult res = closure(w, p, budget);
      std::string dot_path = c->get_option("--dot")->as<std::string>();
      if (!dot_path.empty()) {
        write_file(dot_path, to_dot(res.automaton, p.alphabet));
      }
      ordered_json j{{"answer", res.converged ? "converged" : "budget-exhausted"},
                     {"iterations", res.iterations},
                     {"states", res.automaton.n_states},
                     {"history", res.state_history},
                     {"automaton", ordered_json::parse(
                                       to_json_str(res.automaton, p.alphabet))}};
      std::string plain = (res.converged ? "converged in " : "budget exhausted after ") +
                          std::to_string(res.iterations) + " iterations, " +
                          std::to_string(res.automaton.n_states) + " states";
      emit(out, json, j, plain);
      return res.converged ? kYes : kUnknown;
    }
    if (auto* c = g->get_subcommand("wp"); c->parsed()) {
      Presentation p =
          load_presentation(c->get_option("-p")->as<std::string>());
      Word u = parse_word(c->get_option("u")->as<std::string>(), p.alphabet);
      Word v = parse_word(c->get_option("v")->as<std::string>(), p.alphabet);
      Answer ans = word_problem(u, v, p, budget);
      emit(out, json, {{"answer", answer_name(ans)}}, answer_name(ans));
      return answer_code(ans);
    }
    if (auto* c = g->get_subcommand("order"); c->parsed()) {
      Presentation p =
          load_presentation(c->get_option("-p")->as<std::string>());
      Word u = parse_word(c->get_option("u")->as<std::string>(), p.alphabet);
      Word v = parse_word(c->get_option("v")->as<std::string>(), p.alphabet);
      Answer ans = natural_order(u, v, p, budget);
      emit(out, json, {{"answer", answer_name(ans)}}, answer_name(ans));
      return answer_code(ans);
    }
  }

  // ---- eraser ----
  if (auto* g = app.get_subcommand("eraser"); g->parsed()) {
    if (auto* c = g->get_subcommand("image"); c->parsed()) {
      std::string ppath = c->get_option("-p")->as<std::string>();
      std::string wt = c->get_option("-w")->as<std::string>();
      Alphabet a = ppath.empty() ? word_alphabet(opt.alphabet, {wt})
                                 : load_presentation(ppath).alphabet;
      InvEraserTuple t = eraser_image_inv(parse_word(wt, a), a.size());
      ordered_json comps = ordered_json::array();
      std::string plain;
      for (int i = 0; i < t.rank(); ++i) {
        std::string s = format_word(t.components[i], a);
        comps.push_back(s);
        if (i) {
          plain += ' ';
        }
        plain += s;
      }
      emit(out, json, {{"answer", true}, {"components", comps}}, plain);
      return kYes;
    }
    if (auto* c = g->get_subcommand("member"); c->parsed()) {
      auto texts = c->get_option("components")->as<std::vector<std::string>>();
      std::string ppath = c->get_option("-p")->as<std::string>();
      if (ppath.empty()) {
        Alphabet a = tuple_alphabet(opt.alphabet, texts.size());
        InvEraserTuple t{parse_words(texts, a)};
        bool ans = image_membership_fim(t, a.size());
        emit(out, json, {{"answer", ans}}, ans ? "yes" : "no");
        return ans ? kYes : kNo;
      }
      Presentation p = load_presentation(ppath);
      if (static_cast<size_t>(p.alphabet.size()) != texts.size()) {
        throw ParseError("tuple rank does not match presentation alphabet");
      }
      InvEraserTuple t{parse_words(texts, p.alphabet)};
      Answer ans = image_membership_presented(t, p, budget);
      emit(out, json, {{"answer", answer_name(ans)}}, answer_name(ans));
      return answer_code(ans);
    }
    if (auto* c = g->get_subcommand("witness"); c->parsed()) {
      auto texts = c->get_option("components")->as<std::vector<std::string>>();
      Alphabet a = tuple_alphabet(opt.alphabet, texts.size());
      InvEraserTuple t{parse_words(texts, a)};
      if (!image_membership_fim(t, a.size())) {
        emit(out, json, {{"answer", false}}, "no");
        return kNo;
      }
      Word w = witness(t, a.size());
      std::string s = format_word(w, a);
      emit(out, json, {{"answer", true}, {"witness", s}}, s);
      return kYes;
    }
    if (auto* c = g->get_subcommand("kernel"); c->parsed()) {
      std::string wt = c->get_option("-w")->as<std::string>();
      Alphabet a = word_alphabet(opt.alphabet, {wt});
      bool ans = in_kernel_K(parse_word(wt, a), a.size());
      emit(out, json, {{"answer", ans}}, ans ? "yes" : "no");
      return ans ? kYes : kNo;
    }
  }

  // ---- td ----
  if (auto* g = app.get_subcommand("td"); g->parsed()) {
    if (auto* c = g->get_subcommand("act"); c->parsed()) {
      Transducer t = load_transducer(c->get_option("-t")->as<std::string>());
      Alphabet states(t.state_names());
      Alphabet letters(t.letter_names());
      Word sw = parse_word(c->get_option("-w")->as<std::string>(), states);
      Word iw = parse_word(c->get_option("-u")->as<std::string>(), letters);
      std::vector<int> input;
      for (Letter l : iw) {
        if (l.is_inverse()) {
          throw ParseError("input word must not use inverse letters");
        }
        input.push_back(l.gen());
      }
      std::vector<int> output = act(t, sw, input);
      Word ow;
      for (int l : output) {
        ow.push_back(Letter::positive(l));
      }
      std::string s = format_word(ow, letters);
      emit(out, json, {{"answer", true}, {"output", s}}, s);
      return kYes;
    }
    if (auto* c = g->get_subcommand("extend"); c->parsed()) {
      Transducer t = load_transducer(c->get_option("-t")->as<std::string>());
      Transducer ext = extend_with_sink(t);
      std::string text = transducer_to_json_str(ext);
      std::string out_path = c->get_option("-o")->as<std::string>();
      if (!out_path.empty()) {
        write_file(out_path, text + "\n");
        emit(out, json,
             {{"answer", true},
              {"states", ext.n_states()},
              {"letters", ext.n_letters()}},
             "wrote " + out_path);
      } else {
        out << text << '\n';
      }
      return kYes;
    }
    if (auto* c = g->get_subcommand("relation"); c->parsed()) {
      Transducer t = load_transducer(c->get_option("-t")->as<std::string>());
      Alphabet states(t.state_names());
      Word sw = parse_word(c->get_option("-w")->as<std::string>(), states);
      int depth = c->get_option("-d")->as<int>();
      bool ans = is_relation_bounded(t, sw, depth);
      emit(out, json, {{"answer", ans}, {"depth", depth}},
           ans ? "yes" : "no");
      return ans ? kYes : kNo;
    }
  }

  throw CLI::CallForHelp();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision procedures for fragile words, eraser images and "
               "inverse-monoid automata"};
  app.name("fwords");
  app.require_subcommand(0, 1);

  Options opt;
  app.add_flag("--json", opt.json, "emit one JSON object per command");
  app.add_option("--alphabet", opt.alphabet,
                 "alphabet override, e.g. \"a b c\" or \"abc\"");
  app.add_option("--budget", opt.budget_iterations,
                 "iteration budget for closures");

  auto* fragile = app.add_subcommand("fragile", "free-group fragility");
  fragile->fallthrough();
  fragile->require_subcommand(1);
  auto* fr_check = fragile->add_subcommand("check", "is the word fragile?");
  fr_check->fallthrough();
  fr_check->add_option("word", "word")->required();
  auto* fr_image = fragile->add_subcommand("image", "eraser image of a word");
  fr_image->fallthrough();
  fr_image->add_option("word", "word")->required();
  auto* fr_in = fragile->add_subcommand("in-image",
                                        "is the tuple an eraser image?");
  fr_in->fallthrough();
  fr_in->add_option("components", "one word per deleted generator")
      ->required()
      ->expected(2, -1)
      ->allow_extra_args();
  auto* fr_pre = fragile->add_subcommand("preimage", "construct a preimage");
  fr_pre->fallthrough();
  fr_pre->add_option("components", "one word per deleted generator")
      ->required()
      ->expected(2, -1)
      ->allow_extra_args();
  auto* fr_comm =
      fragile->add_subcommand("commutator", "nested-commutator fragile word");
  fr_comm->fallthrough();
  fr_comm->add_option("-n", "number of generators")->required();

  auto* fim = app.add_subcommand("fim", "free inverse monoid");
  fim->fallthrough();
  fim->require_subcommand(1);
  auto* fim_eq = fim->add_subcommand("equal", "word problem");
  fim_eq->fallthrough();
  fim_eq->add_option("u", "first word")->required();
  fim_eq->add_option("v", "second word")->required();
  auto* fim_fact = fim->add_subcommand("factors", "factor set of a word");
  fim_fact->fallthrough();
  fim_fact->add_option("u", "word")->required();
  auto* fim_mem =
      fim->add_subcommand("member", "rational-subset membership");
  fim_mem->fallthrough();
  fim_mem->add_option("-u", "element word")->required();
  fim_mem->add_option("-L", "automaton JSON file")->required();
  auto* fim_cov = fim->add_subcommand("covers", "covering idempotents");
  fim_cov->fallthrough();
  fim_cov->add_option("e", "idempotent word")->required();

  auto* stephen = app.add_subcommand("stephen", "iterated closures");
  stephen->fallthrough();
  stephen->require_subcommand(1);
  auto* st_cl = stephen->add_subcommand("closure", "closure of a word");
  st_cl->fallthrough();
  st_cl->add_option("-p", "presentation file")->required();
  st_cl->add_option("-w", "word")->required();
  st_cl->add_option("--dot", "write the automaton as DOT");
  auto* st_wp = stephen->add_subcommand("wp", "word problem");
  st_wp->fallthrough();
  st_wp->add_option("-p", "presentation file")->required();
  st_wp->add_option("u", "first word")->required();
  st_wp->add_option("v", "second word")->required();
  auto* st_ord = stephen->add_subcommand("order", "natural partial order");
  st_ord->fallthrough();
  st_ord->add_option("-p", "presentation file")->required();
  st_ord->add_option("u", "lower word")->required();
  st_ord->add_option("v", "upper word")->required();

  auto* eraser = app.add_subcommand("eraser", "eraser morphism");
  eraser->fallthrough();
  eraser->require_subcommand(1);
  auto* er_img = eraser->add_subcommand("image", "componentwise image");
  er_img->fallthrough();
  er_img->add_option("-p", "presentation file");
  er_img->add_option("-w", "word")->required();
  auto* er_mem = eraser->add_subcommand("member", "image membership");
  er_mem->fallthrough();
  er_mem->add_option("-p", "presentation file");
  er_mem->add_option("components", "one word per deleted generator")
      ->required()
      ->expected(2, -1)
      ->allow_extra_args();
  auto* er_wit = eraser->add_subcommand("witness", "preimage word");
  er_wit->fallthrough();
  er_wit->add_option("components", "one word per deleted generator")
      ->required()
      ->expected(2, -1)
      ->allow_extra_args();
  auto* er_ker = eraser->add_subcommand("kernel", "kernel-part membership");
  er_ker->fallthrough();
  er_ker->add_option("-w", "word")->required();

  auto* td = app.add_subcommand("td", "invertible transducers");
  td->fallthrough();
  td->require_subcommand(1);
  auto* td_act = td->add_subcommand("act", "act on an input word");
  td_act->fallthrough();
  td_act->add_option("-t", "transducer JSON file")->required();
  td_act->add_option("-w", "state word")->required();
  td_act->add_option("-u", "input word")->required();
  auto* td_ext = td->add_subcommand("extend", "extend with a sink");
  td_ext->fallthrough();
  td_ext->add_option("-t", "transducer JSON file")->required();
  td_ext->add_option("-o", "output JSON file");
  auto* td_rel = td->add_subcommand("relation", "bounded relation check");
  td_rel->fallthrough();
  td_rel->add_option("-t", "transducer JSON file")->required();
  td_rel->add_option("-w", "state word")->required();
  td_rel->add_option("-d", "depth")->required();

  std::vector<const char*> argv;
  argv.push_back("fwords");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return dispatch(app, opt, out);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fwords
