// test_grammar.cpp - lexicon loading, combination, focus marking
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "focuslog/combine.hpp"
#include "focuslog/errors.hpp"
#include "focuslog/lexicon.hpp"
#include "focuslog/sexpr.hpp"
#include "support/goldens.hpp"

using namespace focuslog;
using grammar::Category;
using grammar::combine;
using grammar::Dir;
using grammar::focus_mark;
using grammar::instantiate;
using grammar::LexEntry;
using grammar::Lexicon;
using grammar::load_lexicon;
using grammar::Sign;
using logic::alpha_equal;
using logic::parse_term;
using logic::Term;

namespace {

const LexEntry& entry(const std::string& word, std::size_t i = 0) {
  const auto* es = grammar::fragment_lexicon().lookup(word);
  REQUIRE(es != nullptr);
  REQUIRE(es->size() > i);
  return (*es)[i];
}

Sign noun_phrase(const std::string& det, const std::string& noun) {
  Sign n = instantiate(entry(noun));
  Sign d = instantiate(entry(det));
  auto np = combine(n, d, Dir::Left);
  REQUIRE(np.has_value());
  return *np;
}

}  // namespace

TEST_CASE("bundled lexicon") {
  const Lexicon& lex = grammar::fragment_lexicon();
  for (const char* w : {"i", "you", "it", "your", "a", "the", "man", "woman", "car",
                        "bike", "peach", "borrowed", "stole", "ate", "steal", "didn't",
                        "not", "only"})
    CHECK(lex.lookup(w) != nullptr);

  SUBCASE("lookup is case-insensitive") { CHECK(lex.lookup("The") != nullptr); }

  SUBCASE("car is a focusable noun property") {
    const LexEntry& car = entry("car");
    CHECK(car.cat == Category::N);
    CHECK(car.focusable);
    Sign s = instantiate(car);
    CHECK(alpha_equal(s.sem, parse_term("(lam Z (pred car (var Z)))")));
  }
  SUBCASE("the seeds a contextual-uniqueness entry") {
    Sign s = instantiate(entry("the"));
    REQUIRE(s.store.size() == 1);
    CHECK(s.store[0].kind == scoping::StoreKind::Iota);
    CHECK(s.store[0].restriction.has_value());
  }
  SUBCASE("the negated auxiliary has one entry per focus polarity") {
    const auto* es = lex.lookup("didn't");
    REQUIRE(es->size() == 2);
    CHECK((*es)[0].op != (*es)[1].op);
  }
}

TEST_CASE("lexicon loading errors") {
  CHECK(load_lexicon("").empty());
  CHECK(load_lexicon("# just a comment\n\n").empty());

  SUBCASE("column count, with line number") {
    try {
      load_lexicon("\n\nfoo | N | - | no | (var X)\n");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Err::LexiconError);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("dangling variable in sem") {
    CHECK_THROWS_AS(load_lexicon("foo | N | - | no | (var X) | -"), Error);
  }
  SUBCASE("dangling variable in a restriction") {
    CHECK_THROWS_AS(
        load_lexicon("foo | NP | - | no | (var X) | (store iota X 1 (pred p (var Y)))"), Error);
  }
  SUBCASE("focusable entry needs a focus form") {
    CHECK_THROWS_AS(load_lexicon("foo | N | - | yes | (const a) | -"), Error);
  }
  SUBCASE("iota seed needs a restriction") {
    CHECK_THROWS_AS(load_lexicon("foo | NP | - | no | (var X) | (store iota X 1)"), Error);
  }
  SUBCASE("malformed sem") {
    CHECK_THROWS_AS(load_lexicon("foo | N | - | no | (lam X | -"), Error);
  }
  SUBCASE("well-formed entry loads") {
    Lexicon lex = load_lexicon(
        "dog | N | num=sg, subcat=left:Det[raise]=>NP | yes | (focus (lam Z (pred dog (var Z)))) | -");
    CHECK(lex.lookup("dog") != nullptr);
  }
}

TEST_CASE("combination") {
  SUBCASE("verb plus object gives a verb phrase with the object's store") {
    Sign np = noun_phrase("a", "car");
    CHECK(np.cat == Category::NP);
    CHECK(np.saturated());
    Sign v = instantiate(entry("borrowed"));
    auto vp = combine(v, np, Dir::Right);
    REQUIRE(vp.has_value());
    CHECK(vp->cat == Category::VP);
    REQUIRE(vp->pending.size() == 1);  // subject still wanted
    bool has_existential = false;
    for (const auto& e : vp->store)
      if (e.kind == scoping::StoreKind::Existential && e.restriction &&
          logic::canonical(*e.restriction).find("car") != std::string::npos)
        has_existential = true;
    CHECK(has_existential);
    CHECK(logic::is_beta_normal(vp->sem));

    SUBCASE("subject saturates the sentence") {
      Sign subj = instantiate(entry("i"));
      auto s = combine(*vp, subj, Dir::Left);
      REQUIRE(s.has_value());
      CHECK(s->cat == Category::S);
      CHECK(s->saturated());
      CHECK(s->store.size() == 3);  // tense, car, speaker
      // the matrix is the hand-composed application of the three parts
      Term expected = parse_term(
          "(pred simple (var T) (lam C (and (pred event (var C)) (and (pred type (var C) "
          "(const borrow)) (and (pred agent (var C) (var S)) (pred object (var C) (var O)))))))");
      // compare shapes by replacing the instantiated store variables
      Term got = s->sem;
      got = logic::substitute(got, s->store[0].var, Term::var("T"));
      for (const auto& e : s->store) {
        if (e.kind != scoping::StoreKind::Iota) continue;
        got = logic::substitute(got, e.var, Term::var("S"));
      }
      for (const auto& e : s->store) {
        if (e.kind != scoping::StoreKind::Existential || e.var == s->store[0].var) continue;
        got = logic::substitute(got, e.var, Term::var("O"));
      }
      CHECK(alpha_equal(got, expected));
    }
  }

  SUBCASE("store passes through combination untouched") {
    Sign np = noun_phrase("the", "woman");
    Sign v = instantiate(entry("stole"));
    Sign obj = noun_phrase("a", "bike");
    auto vp = combine(v, obj, Dir::Right);
    REQUIRE(vp.has_value());
    auto s = combine(*vp, np, Dir::Left);
    REQUIRE(s.has_value());
    std::multiset<std::pair<scoping::StoreKind, std::string>> leaves, root;
    for (const Sign* part : {&np, &v, &obj})
      for (const auto& e : part->store) leaves.insert({e.kind, e.var});
    // obj's store already flowed into vp; collect the original seeds instead
    leaves.clear();
    for (const auto& e : np.store) leaves.insert({e.kind, e.var});
    for (const auto& e : v.store) leaves.insert({e.kind, e.var});
    for (const auto& e : obj.store) leaves.insert({e.kind, e.var});
    for (const auto& e : s->store) root.insert({e.kind, e.var});
    CHECK(leaves == root);
  }

  SUBCASE("slot mismatch is inapplicable, not an error") {
    Sign n = instantiate(entry("woman"));
    Sign the = instantiate(entry("the"));
    CHECK_FALSE(combine(n, the, Dir::Right).has_value());  // determiner sits left
    Sign v = instantiate(entry("stole"));
    CHECK_FALSE(combine(v, the, Dir::Right).has_value());  // wants an NP
  }

  SUBCASE("focus propagates from a single daughter") {
    Sign n = instantiate(focus_mark(entry("bike")));
    REQUIRE(n.focus.has_value());
    Sign det = instantiate(entry("a"));
    auto np = combine(n, det, Dir::Left);
    REQUIRE(np.has_value());
    REQUIRE(np->focus.has_value());
    CHECK(np->focus->abstraction_var == n.focus->abstraction_var);

    Sign v = instantiate(entry("stole"));
    auto vp = combine(v, *np, Dir::Right);
    REQUIRE(vp.has_value());
    REQUIRE(vp->focus.has_value());
    CHECK(vp->focus->abstraction_var == n.focus->abstraction_var);
    CHECK(alpha_equal(vp->focus->item->sem, parse_term("(lam Z (pred bike (var Z)))")));
  }

  SUBCASE("two focussed daughters clash") {
    Sign v = instantiate(focus_mark(entry("stole")));
    Sign n = instantiate(focus_mark(entry("bike")));
    Sign det = instantiate(entry("a"));
    auto np = combine(n, det, Dir::Left);
    REQUIRE(np.has_value());
    CHECK_THROWS_AS(combine(v, *np, Dir::Right), Error);
    try {
      combine(v, *np, Dir::Right);
    } catch (const Error& e) {
      CHECK(e.code() == Err::FootClash);
    }
  }
}

TEST_CASE("focus marking") {
  SUBCASE("noun: the property moves out and a hole stays behind") {
    LexEntry marked = focus_mark(entry("car"));
    REQUIRE(marked.focus_item_sem.has_value());
    CHECK(alpha_equal(*marked.focus_item_sem, parse_term("(lam Z (pred car (var Z)))")));
    Sign s = instantiate(marked);
    REQUIRE(s.focus.has_value());
    CHECK(s.sem.identical(Term::var(s.focus->abstraction_var)));
    bool has_abstraction = false;
    for (const auto& e : s.store)
      if (e.kind == scoping::StoreKind::Abstraction &&
          e.priority == scoping::kAbstractionPriority && e.var == s.focus->abstraction_var)
        has_abstraction = true;
    CHECK(has_abstraction);
  }
  SUBCASE("verb: the focussed item is the event-type description") {
    LexEntry marked = focus_mark(entry("borrowed"));
    REQUIRE(marked.focus_item_sem.has_value());
    CHECK(alpha_equal(*marked.focus_item_sem, parse_term(goldens::event_type("borrow"))));
  }
  SUBCASE("determiners are not focusable") {
    CHECK_THROWS_AS(focus_mark(entry("the")), Error);
    try {
      focus_mark(entry("the"));
    } catch (const Error& e) {
      CHECK(e.code() == Err::NotFocusable);
    }
  }
}

TEST_CASE("instantiation renames store variables apart") {
  Sign a = instantiate(entry("a"));
  Sign b = instantiate(entry("a"));
  REQUIRE(a.store.size() == 1);
  REQUIRE(b.store.size() == 1);
  CHECK(a.store[0].var != b.store[0].var);
  CHECK(free_vars(a.sem) == std::set<std::string>{a.store[0].var});
}
