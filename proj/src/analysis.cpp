// analysis.cpp - scoping discharge and operator placement for sentence signs
#include "focuslog/analysis.hpp"

#include <set>

#include "focuslog/errors.hpp"

namespace focuslog::analysis {

using logic::Kind;

namespace {

const char* op_pred_name(OpKind op) {
  switch (op) {
    case OpKind::Only: return "only";
    case OpKind::Not: return "not";
    default: throw Error(Err::Internal, "operator has no predicate name");
  }
}

bool is_focus_abstraction(const Sign& sign, const Term& scoped) {
  return sign.focus && scoped.kind() == Kind::Lam &&
         scoped.name() == sign.focus->abstraction_var;
}

}  // namespace

Term bind_operator(OpKind op, const Sign& sign, const Term& scoped) {
  if (!sign.focus)
    throw Error(Err::NoFocus, std::string("'") + op_pred_name(op) + "' needs a focussed item");
  if (!is_focus_abstraction(sign, scoped))
    throw Error(Err::Internal, "scoped term is not the focus abstraction");
  return Term::pred(op_pred_name(op), {sign.focus->item->sem, scoped});
}

Analysis residual_focus(const Sign& sign, const Term& scoped) {
  if (!sign.focus) throw Error(Err::Internal, "residual_focus on a sign without focus");
  if (!is_focus_abstraction(sign, scoped))
    throw Error(Err::Internal, "scoped term is not the focus abstraction");
  Analysis a;
  a.formula = scoped;
  a.focus_residue = sign.focus;
  return a;
}

std::vector<Analysis> analyses_of(const Sign& sign, const std::string& parse_tree) {
  std::vector<std::string> store_trace;
  for (const auto& e : sign.store) store_trace.push_back(scoping::store_entry_to_string(e));

  std::vector<Analysis> out;
  std::set<std::string> seen;
  for (const auto& scoped : scoping::enumerate_scopings(sign.store, sign.sem)) {
    Analysis a;
    switch (sign.op) {
      case OpKind::Only:
      case OpKind::Not:
        a.formula = bind_operator(sign.op, sign, scoped);
        break;
      case OpKind::NegWide:
        // wide-scope negation applies after ordinary discharge but inside a
        // leftover focus abstraction
        if (is_focus_abstraction(sign, scoped)) {
          a = residual_focus(sign, scoped);
          a.formula = Term::lam(scoped.name(), Term::neg(scoped.child(0)));
        } else {
          a.formula = Term::neg(scoped);
        }
        break;
      case OpKind::None:
        if (sign.focus)
          a = residual_focus(sign, scoped);
        else
          a.formula = scoped;
        break;
    }
    a.parse_tree = parse_tree;
    a.store_trace = store_trace;
    if (seen.insert(analysis_key(a)).second) out.push_back(std::move(a));
  }
  return out;
}

std::string analysis_key(const Analysis& a) {
  std::string key = logic::canonical(a.formula);
  if (a.focus_residue)
    key += "|residue:" + a.focus_residue->item->phon + ":" +
           logic::canonical(a.focus_residue->item->sem);
  return key;
}

}  // namespace focuslog::analysis
