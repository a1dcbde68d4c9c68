// fragment_lexicon.cpp - the bundled grammar for the covered fragment
#include "focuslog/lexicon.hpp"

namespace focuslog::grammar {

// Verbs pair an event-type description (the focusable part) with argument
// selectors, so the same entry yields the in-place event predicate when
// unfocussed and the selector-applied hole when focussed. Noun phrases
// denote singleton sets: the determiner stores the quantifier over the set
// variable and the noun supplies the restriction property.
//
// Store priorities (wider scope = higher): tense 5, definite 4, indefinite 3,
// "it" 2, speaker/hearer pronouns 1. Abstractions are pinned to the maximum.
const std::string& fragment_lexicon_source() {
  static const std::string src = R"LEX(
# pronouns: complete noun phrases constrained by a contextual-uniqueness entry
i      | NP  | -      | no | (var J) | (store iota J 1 (and (forall K (implies (pred member (var K) (var J)) (pred speaker (var K)))) (card (var J) 1)))
you    | NP  | -      | no | (var J) | (store iota J 1 (and (forall K (implies (pred member (var K) (var J)) (pred hearer (var K)))) (card (var J) 1)))
it     | NP  | -      | no | (var H) | (store iota H 2 (and (forall I (implies (pred member (var I) (var H)) (pred neuter (var I)))) (card (var H) 1)))

# determiners: semantic functors picked up by the noun's raised slot
a      | Det | num=sg | no | (lam P (var D)) | (store existential D 3 (and (forall E (implies (pred member (var E) (var D)) (app (var P) (var E)))) (card (var D) 1)))
the    | Det | num=sg | no | (lam P (var D)) | (store iota D 4 (and (forall E (implies (pred member (var E) (var D)) (app (var P) (var E)))) (card (var D) 1)))
your   | Det | num=sg | no | (lam P (var D)) | (store iota D 4 (and (forall E (implies (pred member (var E) (var D)) (and (app (var P) (var E)) (pred poss (const hearer) (var E))))) (card (var D) 1)))

# common nouns
man    | N | num=sg, subcat=left:Det[raise num=sg]=>NP | yes | (focus (lam Z (pred man (var Z)))) | -
woman  | N | num=sg, subcat=left:Det[raise num=sg]=>NP | yes | (focus (lam Z (pred woman (var Z)))) | -
car    | N | num=sg, subcat=left:Det[raise num=sg]=>NP | yes | (focus (lam Z (pred car (var Z)))) | -
bike   | N | num=sg, subcat=left:Det[raise num=sg]=>NP | yes | (focus (lam Z (pred bike (var Z)))) | -
peach  | N | num=sg, subcat=left:Det[raise num=sg]=>NP | yes | (focus (lam Z (pred peach (var Z)))) | -

# finite past transitive verbs: object first, then subject
stole    | V | vform=fin, subcat=right:NP=>VP;left:NP=>S | yes | (lam O (lam S (pred simple (var T) (app (app (focus (lam A (lam B (lam C (and (pred event (var C)) (and (pred type (var C) (const steal)) (and (app (var B) (lam D (pred agent (var C) (var D)))) (app (var A) (lam E (pred object (var C) (var E))))))))))) (lam L (app (var L) (var O)))) (lam M (app (var M) (var S))))))) | (store existential T 5 (lt (var T) (const now)))
borrowed | V | vform=fin, subcat=right:NP=>VP;left:NP=>S | yes | (lam O (lam S (pred simple (var T) (app (app (focus (lam A (lam B (lam C (and (pred event (var C)) (and (pred type (var C) (const borrow)) (and (app (var B) (lam D (pred agent (var C) (var D)))) (app (var A) (lam E (pred object (var C) (var E))))))))))) (lam L (app (var L) (var O)))) (lam M (app (var M) (var S))))))) | (store existential T 5 (lt (var T) (const now)))
ate      | V | vform=fin, subcat=right:NP=>VP;left:NP=>S | yes | (lam O (lam S (pred simple (var T) (app (app (focus (lam A (lam B (lam C (and (pred event (var C)) (and (pred type (var C) (const eat)) (and (app (var B) (lam D (pred agent (var C) (var D)))) (app (var A) (lam E (pred object (var C) (var E))))))))))) (lam L (app (var L) (var O)))) (lam M (app (var M) (var S))))))) | (store existential T 5 (lt (var T) (const now)))

# base-form transitive verb, selected by the negated auxiliary
steal    | V | vform=base, subcat=right:NP=>VP;left:NP=>S | yes | (lam O (lam S (app (app (focus (lam A (lam B (lam C (and (pred event (var C)) (and (pred type (var C) (const steal)) (and (app (var B) (lam D (pred agent (var C) (var D)))) (app (var A) (lam E (pred object (var C) (var E))))))))))) (lam L (app (var L) (var O)))) (lam M (app (var M) (var S)))))) | -

# negated auxiliary: two entries, chosen by the presence of a focussed item
didn't | V | vform=fin, op=neg, subcat=right:VP[nofoc base inherit]=>VP | no | (lam V (lam S (pred simple (var T) (app (var V) (var S))))) | (store existential T 5 (lt (var T) (const now)))
didn't | V | vform=fin, op=not, subcat=right:VP[foc base inherit]=>VP | no | (lam V (lam S (pred simple (var T) (app (var V) (var S))))) | (store existential T 5 (lt (var T) (const now)))

# bare negation over base verb phrases
not    | Neg | vform=base, op=neg, subcat=right:VP[nofoc base inherit]=>VP | no | (lam V (var V)) | -

# focus-consuming adverb
only   | Adv | op=only, subcat=right:VP[foc inherit transparent]=>VP | no | (lam V (var V)) | -
)LEX";
  return src;
}

}  // namespace focuslog::grammar
