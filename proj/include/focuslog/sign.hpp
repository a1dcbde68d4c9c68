// sign.hpp - feature-structured descriptions of linguistic items
#ifndef FOCUSLOG_SIGN_HPP
#define FOCUSLOG_SIGN_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "focuslog/scoping.hpp"
#include "focuslog/term.hpp"

namespace focuslog::grammar {

using logic::Term;

enum class Category { S, NP, VP, V, Det, N, Pron, Adv, Neg };

Category category_from_string(const std::string& s);
const char* category_name(Category c);

enum class Dir { Left, Right };

enum class FocusReq { Either, Required, Absent };

// sentence-level operator pending until the store is discharged
enum class OpKind { None, Only, Not, NegWide };

// one subcategorisation requirement. Slots are consumed front-first; a slot
// may require or forbid a focus-bearing dependent, may take the dependent as
// the semantic functor (raise), may adopt the dependent's remaining slots
// (inherit), and may pass the dependent's head features through (transparent).
struct SlotSpec {
  Dir dir = Dir::Right;
  Category cat = Category::NP;
  Category result = Category::S;
  std::map<std::string, std::string> req;  // feature requirements on the dependent
  FocusReq focus = FocusReq::Either;
  bool raise = false;
  bool inherit = false;
  bool transparent = false;
};

std::string slot_to_string(const SlotSpec& s);

struct Sign;

// the focussed item itself, carried up the tree as a foot feature
struct FocusValue {
  std::shared_ptr<const Sign> item;  // the focussed word's description
  std::string abstraction_var;       // the hole it vacated
};

struct Sign {
  Category cat = Category::S;
  std::map<std::string, std::string> features;  // vform, num, ...
  std::vector<SlotSpec> pending;                // remaining subcat slots, in order
  std::optional<FocusValue> focus;
  std::shared_ptr<const Sign> slash;            // extraction plumbing only
  Term sem;
  std::vector<scoping::StoreEntry> store;
  OpKind op = OpKind::None;
  std::string phon;  // covered token span

  bool saturated() const { return pending.empty(); }
};

// identity key up to alpha equivalence of the semantics; derivation history
// is deliberately excluded
std::string sign_key(const Sign& s);

}  // namespace focuslog::grammar

#endif
