// cli.cpp - flag handling, per-sentence output, batch mode
#include "focuslog/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "focuslog/chart.hpp"
#include "focuslog/entailment.hpp"
#include "focuslog/errors.hpp"
#include "focuslog/printer.hpp"

namespace focuslog::cli {

namespace {

using logic::Format;

struct Options {
  Format format = Format::Plain;
  bool entail = false;
  bool show_store = false;
  bool show_chart = false;
  bool first = false;
  bool batch = false;
  std::string lexicon_path;
  std::string sentence;
};

// returns false when the sentence fails (unknown word, no parse)
bool process_sentence(const std::string& sentence, const Options& opt,
                      const grammar::Lexicon& lexicon, std::ostream& out, std::ostream& err) {
  // deterministic variable names per sentence
  logic::reset_fresh_names();
  try {
    auto toks = parsing::tokenize(sentence);
    auto result = parsing::parse_full(toks.tokens, toks.focus_index, lexicon);

    if (opt.show_chart)
      for (const auto& line : result.chart_trace) out << "chart: " << line << "\n";

    std::size_t shown = 0;
    for (const auto& a : result.analyses) {
      ++shown;
      if (opt.show_store)
        for (const auto& s : a.store_trace) out << "store " << shown << ": " << s << "\n";
      out << "analysis " << shown << ": " << logic::pretty(a.formula, opt.format) << "\n";
      if (a.focus_residue)
        out << "focus " << shown << ": " << a.focus_residue->item->phon << " ~ "
            << logic::pretty(a.focus_residue->item->sem, opt.format) << "\n";
      if (opt.entail) {
        auto d = entail::derive(a);
        if (d.consequences.empty()) {
          out << "entail " << shown << ": none";
          if (!d.note.empty()) out << " (" << d.note << ")";
          out << "\n";
        } else {
          for (const auto& c : d.consequences)
            out << "entail " << shown << "." << c.label << ": "
                << logic::pretty(c.term, opt.format) << "\n";
        }
      }
      if (opt.first) break;
    }
    return true;
  } catch (const Error& e) {
    switch (e.code()) {
      case Err::UnknownWord:
      case Err::NoParse:
      case Err::NotFocusable:
      case Err::FootClash:
        err << "error: " << e.what() << "\n";
        return false;
      default:
        throw;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"parse a fragment of English into logical forms and derive operator consequences"};
  app.name("focuslog");
  std::string format = "plain";
  app.add_option("--format", format, "output format: plain, latex or sexpr")
      ->check(CLI::IsMember({"plain", "latex", "sexpr"}));
  app.add_flag("--entail", opt.entail, "print operator consequences per analysis");
  app.add_flag("--show-store", opt.show_store, "print the quantifier store per analysis");
  app.add_flag("--show-chart", opt.show_chart, "print every chart edge");
  app.add_flag("--first", opt.first, "print only the first analysis");
  app.add_flag("--batch", opt.batch, "read sentences from standard input, one per line");
  app.add_option("--lexicon", opt.lexicon_path, "lexicon file (defaults to the bundled fragment)");
  app.add_option("sentence", opt.sentence, "sentence to parse; mark focus as *word*");

  std::vector<std::string> argv(args.begin(), args.end());
  try {
    std::reverse(argv.begin(), argv.end());
    if (!argv.empty()) argv.pop_back();  // program name
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  opt.format = logic::format_from_string(format);

  if (opt.batch == !opt.sentence.empty()) {
    err << "usage error: give exactly one of a sentence or --batch\n";
    return 2;
  }

  const grammar::Lexicon* lexicon = nullptr;
  grammar::Lexicon loaded;
  try {
    if (opt.lexicon_path.empty()) {
      lexicon = &grammar::fragment_lexicon();
    } else {
      std::ifstream f(opt.lexicon_path);
      if (!f) {
        err << "error: cannot open lexicon '" << opt.lexicon_path << "'\n";
        return 2;
      }
      std::ostringstream buf;
      buf << f.rdbuf();
      loaded = grammar::load_lexicon(buf.str());
      lexicon = &loaded;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  bool all_ok = true;
  try {
    if (opt.batch) {
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++lineno;
        out << "## " << lineno << ": " << line << "\n";
        if (!process_sentence(line, opt, *lexicon, out, err)) all_ok = false;
      }
    } else {
      if (!process_sentence(opt.sentence, opt, *lexicon, out, err)) all_ok = false;
    }
  } catch (const Error& e) {
    if (e.code() == Err::Usage) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return all_ok ? 0 : 1;
}

}  // namespace focuslog::cli
