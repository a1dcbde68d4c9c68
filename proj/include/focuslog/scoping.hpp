// scoping.hpp - quantifier storage and discharge
//
// Store entries collected during composition are discharged over the matrix
// formula once the sentence is complete. Admissible application orders are
// the linear extensions of the priority order (strictly higher priority =
// wider scope, ties explored both ways); orders whose result leaks a free
// variable are rejected, which is what forces an entry whose restriction
// depends on another entry's variable to scope inside it.
#ifndef FOCUSLOG_SCOPING_HPP
#define FOCUSLOG_SCOPING_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "focuslog/term.hpp"

namespace focuslog::scoping {

using logic::Term;

enum class StoreKind { Existential, Universal, Iota, Abstraction };

// abstraction entries are pinned to maximal priority: discharged last, so
// the bound variable ends up outermost
constexpr int kAbstractionPriority = std::numeric_limits<int>::max();

struct StoreEntry {
  StoreKind kind;
  std::string var;
  std::optional<Term> restriction;  // required for iota, optional otherwise
  int priority = 0;
};

const char* store_kind_name(StoreKind k);

// one result per admissible application order (duplicates possible on ties)
std::vector<Term> discharge(const std::vector<StoreEntry>& store, const Term& matrix);

// discharge with duplicates removed up to alpha equivalence
std::vector<Term> enumerate_scopings(const std::vector<StoreEntry>& store, const Term& matrix);

std::string store_entry_to_string(const StoreEntry& e);

}  // namespace focuslog::scoping

#endif
