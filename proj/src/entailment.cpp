// entailment.cpp - meaning-postulate instantiation for only and focussed not
#include "focuslog/entailment.hpp"

#include "focuslog/errors.hpp"

namespace focuslog::entail {

using logic::Kind;

namespace {

void require_abstraction(const Term& q) {
  if (q.kind() != Kind::Lam)
    throw Error(Err::Internal, "operator consequence needs an abstraction argument");
}

}  // namespace

OnlyConsequences consequences_only(const Term& property, const Term& abstraction) {
  require_abstraction(abstraction);
  OnlyConsequences out;
  out.positive = logic::beta_reduce(Term::app(abstraction, property));
  std::string alt = logic::fresh_name("P");
  out.exclusive = Term::forall(
      alt, Term::implies(logic::beta_reduce(Term::app(abstraction, Term::var(alt))),
                         Term::eq(Term::var(alt), property)));
  return out;
}

NotConsequences consequences_not(const Term& property, const Term& abstraction) {
  require_abstraction(abstraction);
  NotConsequences out;
  out.negative = Term::neg(logic::beta_reduce(Term::app(abstraction, property)));
  std::string alt = logic::fresh_name("P");
  out.existential =
      Term::exists(alt, logic::beta_reduce(Term::app(abstraction, Term::var(alt))));
  return out;
}

Derivation derive(const Analysis& analysis) {
  Derivation d;
  const Term& f = analysis.formula;
  if (f.kind() == Kind::Pred && f.children().size() == 2) {
    if (f.name() == "only") {
      auto c = consequences_only(f.child(0), f.child(1));
      d.consequences.push_back({"positive", c.positive});
      d.consequences.push_back({"exclusive", c.exclusive});
      return d;
    }
    if (f.name() == "not") {
      auto c = consequences_not(f.child(0), f.child(1));
      d.consequences.push_back({"negative", c.negative});
      d.consequences.push_back({"existential", c.existential});
      return d;
    }
  }
  if (f.kind() == Kind::Neg) d.note = "no postulate applies to plain negation";
  return d;
}

}  // namespace focuslog::entail
