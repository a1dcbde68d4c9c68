// scoping.cpp - discharge of stored operators over the matrix formula
#include "focuslog/scoping.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "focuslog/errors.hpp"
#include "focuslog/printer.hpp"

namespace focuslog::scoping {

using logic::free_vars;
using logic::Kind;

const char* store_kind_name(StoreKind k) {
  switch (k) {
    case StoreKind::Existential: return "existential";
    case StoreKind::Universal: return "universal";
    case StoreKind::Iota: return "iota";
    case StoreKind::Abstraction: return "abstraction";
  }
  return "?";
}

namespace {

Term wrap(const StoreEntry& e, const Term& w) {
  switch (e.kind) {
    case StoreKind::Existential:
      return e.restriction ? Term::exists(e.var, Term::conj(*e.restriction, w))
                           : Term::exists(e.var, w);
    case StoreKind::Universal:
      return e.restriction ? Term::forall(e.var, Term::implies(*e.restriction, w))
                           : Term::forall(e.var, w);
    case StoreKind::Iota:
      if (!e.restriction)
        throw Error(Err::Internal, "iota store entry without restriction");
      return Term::iota(e.var, *e.restriction, w);
    case StoreKind::Abstraction:
      return Term::lam(e.var, w);
  }
  throw Error(Err::Internal, "wrap: unhandled store kind");
}

bool closed_up_to_now(const Term& t) {
  for (const auto& v : free_vars(t))
    if (v != "now") return false;
  return true;
}

// all application sequences (innermost first) with nondecreasing priority
std::vector<std::vector<std::size_t>> admissible_orders(const std::vector<StoreEntry>& store) {
  std::vector<std::size_t> idx(store.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<std::size_t>> orders;
  do {
    bool ok = true;
    for (std::size_t i = 1; ok && i < idx.size(); ++i)
      ok = store[idx[i - 1]].priority <= store[idx[i]].priority;
    if (ok) orders.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return orders;
}

}  // namespace

std::vector<Term> discharge(const std::vector<StoreEntry>& store, const Term& matrix) {
  if (store.empty()) return {matrix};
  std::vector<Term> results;
  bool any_orphan = false, any_leak = false;
  for (const auto& order : admissible_orders(store)) {
    Term w = matrix;
    bool orphan = false;
    for (std::size_t i : order) {
      if (!free_vars(w).count(store[i].var)) {
        orphan = true;
        break;
      }
      w = wrap(store[i], w);
    }
    if (orphan) {
      any_orphan = true;
      continue;
    }
    if (!closed_up_to_now(w)) {
      any_leak = true;
      continue;
    }
    results.push_back(w);
  }
  if (results.empty()) {
    if (any_leak && !any_orphan)
      throw Error(Err::FreeVarLeak, "every scoping order leaves a free variable");
    throw Error(Err::OrphanEntry, "store entry variable never occurs in its scope");
  }
  return results;
}

std::vector<Term> enumerate_scopings(const std::vector<StoreEntry>& store, const Term& matrix) {
  std::vector<Term> all = discharge(store, matrix);
  std::vector<Term> out;
  std::set<std::string> seen;
  for (const auto& t : all)
    if (seen.insert(logic::canonical(t)).second) out.push_back(t);
  return out;
}

std::string store_entry_to_string(const StoreEntry& e) {
  std::ostringstream out;
  out << store_kind_name(e.kind) << " " << e.var;
  if (e.priority == kAbstractionPriority)
    out << " prio max";
  else
    out << " prio " << e.priority;
  if (e.restriction) out << " :: " << logic::pretty(*e.restriction, logic::Format::Plain);
  return out.str();
}

}  // namespace focuslog::scoping
