// chart.hpp - bi-directional head-driven chart parsing
#ifndef FOCUSLOG_CHART_HPP
#define FOCUSLOG_CHART_HPP

#include <optional>
#include <string>
#include <vector>

#include "focuslog/analysis.hpp"
#include "focuslog/lexicon.hpp"
#include "focuslog/sign.hpp"

namespace focuslog::parsing {

using analysis::Analysis;
using grammar::Lexicon;
using grammar::Sign;

// whitespace tokens, case-insensitive; *word* marks focus (at most one);
// clitics like didn't stay single tokens
struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::optional<std::size_t> focus_index;
};

TokenizedSentence tokenize(const std::string& text);

struct Edge {
  int start = 0;
  int end = 0;
  Sign sign;
  std::string tree;
  bool complete() const { return sign.pending.empty(); }
};

struct ParseResult {
  std::vector<Analysis> analyses;
  std::vector<std::string> chart_trace;
  std::size_t edge_count = 0;
};

// seeds one edge per lexical entry per token (focus-marked positions seed
// the focus-marked variant), runs the agenda to a fixpoint, and assembles
// analyses from complete finite S edges spanning the input.
// Throws Err::UnknownWord and Err::NoParse.
ParseResult parse_full(const std::vector<std::string>& tokens,
                       std::optional<std::size_t> focus_index, const Lexicon& lexicon);

std::vector<Analysis> parse(const std::vector<std::string>& tokens,
                            std::optional<std::size_t> focus_index, const Lexicon& lexicon);

// exhaustive enumeration over all binary bracketings and lexical choices;
// test oracle for parse, limited to short inputs
std::vector<Analysis> parse_oracle(const std::vector<std::string>& tokens,
                                   std::optional<std::size_t> focus_index,
                                   const Lexicon& lexicon);

}  // namespace focuslog::parsing

#endif
