// analysis.hpp - completed parses: discharge, operator binding, focus residue
#ifndef FOCUSLOG_ANALYSIS_HPP
#define FOCUSLOG_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "focuslog/sign.hpp"

namespace focuslog::analysis {

using grammar::FocusValue;
using grammar::OpKind;
using grammar::Sign;
using logic::Term;

struct Analysis {
  // closed formula, or an abstraction when an unconsumed focus remains
  Term formula;
  std::optional<FocusValue> focus_residue;
  std::string parse_tree;                // derivation trace, for debugging
  std::vector<std::string> store_trace;  // entries discharged over the matrix
};

// applies a focus-consuming operator to the focussed item's semantics and
// the discharged abstraction: pred(op, item, λX body). The scoped term must
// be the abstraction produced by the focus hole's maximal-scope entry.
// Throws Err::NoFocus when the sign carries no focus.
Term bind_operator(OpKind op, const Sign& sign, const Term& scoped);

// wraps an uneaten focus into an Analysis: abstraction plus the focussed
// item's description
Analysis residual_focus(const Sign& sign, const Term& scoped);

// full assembly for a saturated sentence sign: enumerate scopings, place the
// pending operator or residue, drop alpha-duplicates
std::vector<Analysis> analyses_of(const Sign& sign, const std::string& parse_tree);

// stable identity for comparing analysis sets
std::string analysis_key(const Analysis& a);

}  // namespace focuslog::analysis

#endif
