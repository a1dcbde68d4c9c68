// entailment.hpp - consequences of the focus-consuming operators
#ifndef FOCUSLOG_ENTAILMENT_HPP
#define FOCUSLOG_ENTAILMENT_HPP

#include <string>
#include <vector>

#include "focuslog/analysis.hpp"
#include "focuslog/term.hpp"

namespace focuslog::entail {

using analysis::Analysis;
using logic::Term;

// only(P, Q): Q holds of P and of nothing else
struct OnlyConsequences {
  Term positive;   // Q.P, reduced
  Term exclusive;  // ∀P' (Q.P' → P' = P)
};

// not(P, Q): Q fails of P but holds of something
struct NotConsequences {
  Term negative;     // ¬(Q.P), reduced
  Term existential;  // ∃P' (Q.P')
};

OnlyConsequences consequences_only(const Term& property, const Term& abstraction);
NotConsequences consequences_not(const Term& property, const Term& abstraction);

struct Labelled {
  std::string label;
  Term term;
};

struct Derivation {
  std::vector<Labelled> consequences;
  std::string note;  // set when no postulate applies by design (plain negation)
};

Derivation derive(const Analysis& analysis);

}  // namespace focuslog::entail

#endif
