// test_scoping.cpp - storage discharge orders, dedup, dependency constraints
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "focuslog/errors.hpp"
#include "focuslog/scoping.hpp"
#include "focuslog/sexpr.hpp"
#include "support/goldens.hpp"
#include "support/term_gen.hpp"

using namespace focuslog;
using logic::alpha_equal;
using logic::parse_term;
using logic::Term;
using scoping::discharge;
using scoping::enumerate_scopings;
using scoping::kAbstractionPriority;
using scoping::StoreEntry;
using scoping::StoreKind;

namespace {

StoreEntry entry(StoreKind kind, const std::string& var, int priority,
                 const std::string& restriction = "") {
  StoreEntry e;
  e.kind = kind;
  e.var = var;
  e.priority = kind == StoreKind::Abstraction ? kAbstractionPriority : priority;
  if (!restriction.empty()) e.restriction = parse_term(restriction);
  return e;
}

// every innermost-first application sequence, priorities and leaks checked
// after the fact: the reference for enumerate_scopings
std::vector<Term> brute_force(const std::vector<StoreEntry>& store, const Term& matrix) {
  std::vector<std::size_t> idx(store.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Term> out;
  std::set<std::string> seen;
  do {
    bool ok = true;
    for (std::size_t i = 1; ok && i < idx.size(); ++i)
      ok = store[idx[i - 1]].priority <= store[idx[i]].priority;
    if (!ok) continue;
    Term w = matrix;
    for (std::size_t i : idx) {
      if (!logic::free_vars(w).count(store[i].var)) {
        ok = false;
        break;
      }
      switch (store[i].kind) {
        case StoreKind::Existential:
          w = store[i].restriction ? Term::exists(store[i].var, Term::conj(*store[i].restriction, w))
                                   : Term::exists(store[i].var, w);
          break;
        case StoreKind::Universal:
          w = store[i].restriction
                  ? Term::forall(store[i].var, Term::implies(*store[i].restriction, w))
                  : Term::forall(store[i].var, w);
          break;
        case StoreKind::Iota:
          w = Term::iota(store[i].var, *store[i].restriction, w);
          break;
        case StoreKind::Abstraction:
          w = Term::lam(store[i].var, w);
          break;
      }
    }
    if (!ok) continue;
    for (const auto& v : logic::free_vars(w))
      if (v != "now") ok = false;
    if (!ok) continue;
    if (seen.insert(logic::canonical(w)).second) out.push_back(w);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

bool same_set(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::multiset<std::string> ka, kb;
  for (const auto& t : a) ka.insert(logic::canonical(t));
  for (const auto& t : b) kb.insert(logic::canonical(t));
  return ka == kb;
}

}  // namespace

TEST_CASE("sentence-shaped store reproduces the displayed formula") {
  // tense, definite subject, indefinite object over a simple matrix
  std::vector<StoreEntry> store = {
      entry(StoreKind::Existential, "A", 5, "(lt (var A) (const now))"),
      entry(StoreKind::Iota, "B", 4,
            "(and (forall C (implies (pred member (var C) (var B)) (pred woman (var C)))) (card (var B) 1))"),
      entry(StoreKind::Existential, "D", 3,
            "(and (forall E (implies (pred member (var E) (var D)) (pred bike (var E)))) (card (var D) 1))"),
  };
  Term matrix = parse_term(
      "(pred simple (var A) (lam F (and (pred event (var F)) (and (pred type (var F) (const steal)) "
      "(and (pred agent (var F) (var B)) (pred object (var F) (var D)))))))");
  auto results = discharge(store, matrix);
  REQUIRE(results.size() == 1);
  CHECK(alpha_equal(results[0], parse_term(goldens::woman_stole_bike)));
}

TEST_CASE("empty store returns the matrix") {
  Term m = parse_term("(pred p (const a))");
  auto results = discharge({}, m);
  REQUIRE(results.size() == 1);
  CHECK(results[0].identical(m));
}

TEST_CASE("abstraction entries end up outermost") {
  std::vector<StoreEntry> store = {
      entry(StoreKind::Abstraction, "X", 0),
      entry(StoreKind::Existential, "D", 1, "(pred p (var D))"),
  };
  Term matrix = parse_term("(pred q (var D) (var X))");
  auto results = discharge(store, matrix);
  REQUIRE(results.size() == 1);
  CHECK(results[0].kind() == logic::Kind::Lam);
  CHECK(results[0].name() == "X");
  CHECK(alpha_equal(results[0],
                    parse_term("(lam X (exists D (and (pred p (var D)) (pred q (var D) (var X)))))")));
}

TEST_CASE("tied existentials explore both orders, deduped against brute force") {
  std::vector<StoreEntry> store = {
      entry(StoreKind::Existential, "X", 1, "(pred p (var X))"),
      entry(StoreKind::Existential, "Y", 1, "(pred p (var Y))"),
  };
  Term matrix = parse_term("(and (pred q (var X)) (pred q (var Y)))");
  CHECK(discharge(store, matrix).size() == 2);
  auto deduped = enumerate_scopings(store, matrix);
  // the two orders are logically interchangeable but structurally distinct
  // (the matrix conjunct order is fixed), so both survive
  CHECK(deduped.size() == 2);
  CHECK(same_set(deduped, brute_force(store, matrix)));

  SUBCASE("a genuinely symmetric case collapses") {
    // one variable used twice: the orders wrap identically
    std::vector<StoreEntry> tied = {
        entry(StoreKind::Existential, "X", 1, "(pred p (var X))"),
        entry(StoreKind::Universal, "Y", 1, "(pred p (var Y))"),
    };
    Term m = parse_term("(and (pred q (var X)) (pred q (var Y)))");
    CHECK(same_set(enumerate_scopings(tied, m), brute_force(tied, m)));
  }
}

TEST_CASE("a dependent restriction forces narrow scope") {
  // iota whose restriction mentions the universal's variable: the wide-iota
  // order leaks that variable and is rejected
  std::vector<StoreEntry> store = {
      entry(StoreKind::Universal, "M", 2, "(pred man (var M))"),
      entry(StoreKind::Iota, "T", 2, "(pred loves (var M) (var T))"),
  };
  Term matrix = parse_term("(pred kills (var M) (var T))");
  auto results = enumerate_scopings(store, matrix);
  REQUIRE(results.size() == 1);
  CHECK(alpha_equal(results[0],
                    parse_term("(forall M (implies (pred man (var M)) (iota T (pred loves (var M) "
                               "(var T)) (pred kills (var M) (var T)))))")));
}

TEST_CASE("single entry gives exactly one result") {
  std::vector<StoreEntry> store = {entry(StoreKind::Existential, "X", 1)};
  auto results = enumerate_scopings(store, parse_term("(pred p (var X))"));
  REQUIRE(results.size() == 1);
  CHECK(alpha_equal(results[0], parse_term("(exists X (pred p (var X)))")));
}

TEST_CASE("error cases") {
  SUBCASE("orphaned entry") {
    std::vector<StoreEntry> store = {entry(StoreKind::Existential, "X", 1)};
    CHECK_THROWS_AS(discharge(store, parse_term("(pred p (const a))")), Error);
    try {
      discharge(store, parse_term("(pred p (const a))"));
    } catch (const Error& e) {
      CHECK(e.code() == Err::OrphanEntry);
    }
  }
  SUBCASE("free variable leak") {
    std::vector<StoreEntry> store = {entry(StoreKind::Existential, "X", 1)};
    try {
      discharge(store, parse_term("(and (pred p (var X)) (pred p (var Stray)))"));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Err::FreeVarLeak);
    }
  }
}

TEST_CASE("random stores match the brute-force reference") {
  term_gen::Gen gen(77);
  for (int round = 0; round < 200; ++round) {
    int n = gen.dist(1, 4);
    std::vector<StoreEntry> store;
    std::vector<Term> matrix_parts;
    bool used_abstraction = false;
    for (int i = 0; i < n; ++i) {
      std::string var = "V" + std::to_string(i);
      int kind_pick = gen.dist(0, used_abstraction ? 2 : 3);
      StoreKind kind = kind_pick == 0   ? StoreKind::Existential
                       : kind_pick == 1 ? StoreKind::Universal
                       : kind_pick == 2 ? StoreKind::Iota
                                        : StoreKind::Abstraction;
      if (kind == StoreKind::Abstraction) used_abstraction = true;
      std::string restriction;
      if (kind != StoreKind::Abstraction) {
        restriction = "(pred p (var " + var + "))";
        // sometimes depend on another entry's variable
        if (i > 0 && gen.dist(0, 2) == 0)
          restriction = "(and " + restriction + " (pred r (var V" + std::to_string(gen.dist(0, i - 1)) + ")))";
        if (kind != StoreKind::Iota && gen.dist(0, 3) == 0) restriction = "";
      }
      store.push_back(entry(kind, var, gen.dist(1, 3), restriction));
      matrix_parts.push_back(Term::pred("m", {Term::var(var)}));
    }
    Term matrix = matrix_parts.back();
    for (int i = static_cast<int>(matrix_parts.size()) - 2; i >= 0; --i)
      matrix = Term::conj(matrix_parts[i], matrix);

    std::vector<Term> got, expected = brute_force(store, matrix);
    try {
      got = enumerate_scopings(store, matrix);
    } catch (const Error&) {
      REQUIRE(expected.empty());
      continue;
    }
    REQUIRE(!expected.empty());
    REQUIRE(same_set(got, expected));

    // duplicate-freeness
    std::set<std::string> keys;
    for (const auto& t : got) REQUIRE(keys.insert(logic::canonical(t)).second);

    // abstraction outermost; other results closed up to `now`
    for (const auto& t : got) {
      if (used_abstraction) {
        REQUIRE(t.kind() == logic::Kind::Lam);
      } else {
        for (const auto& v : logic::free_vars(t)) REQUIRE(v == "now");
      }
    }
  }
}
