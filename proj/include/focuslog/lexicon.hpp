// lexicon.hpp - lexical entries, the lexicon file format, focus marking
//
// File format, one record per line, '#' starts a comment:
//
//   word | category | features | focusable | sem-sexpr | store-seeds
//
// features: comma-separated key=value pairs plus the special keys
//   subcat=dir:Cat[flags]=>Result;...   (flags: foc nofoc raise inherit
//                                        transparent base fin key=value)
//   op=only|not|neg
// sem-sexpr: a term s-expression; focusable entries wrap the extractable
//   property in a single (focus ...) form
// store-seeds: '-' or forms (store kind var priority restriction?), with
//   kind one of existential, universal, iota, abstraction
#ifndef FOCUSLOG_LEXICON_HPP
#define FOCUSLOG_LEXICON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focuslog/sexpr.hpp"
#include "focuslog/sign.hpp"

namespace focuslog::grammar {

struct LexEntry {
  std::string word;
  Category cat = Category::N;
  std::map<std::string, std::string> features;
  std::vector<SlotSpec> slots;
  OpKind op = OpKind::None;
  bool focusable = false;
  logic::SNode sem_raw;  // may contain one (focus ...) form
  std::vector<scoping::StoreEntry> seeds;
  std::size_t line = 0;

  // set by focus_mark
  std::optional<Term> focus_item_sem;
  std::string focus_hole;
};

class Lexicon {
 public:
  void add(LexEntry entry);
  const std::vector<LexEntry>* lookup(const std::string& word) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const;
  std::vector<std::string> words() const;

 private:
  std::map<std::string, std::vector<LexEntry>> entries_;
};

Lexicon load_lexicon(const std::string& source);

// replaces the marked property with a fresh hole variable, seeds the
// maximal-scope abstraction for it and records the focussed item
LexEntry focus_mark(const LexEntry& entry);

// builds a Sign from a template: store variables (and the focus hole) are
// renamed apart so several uses of one entry never share variables
Sign instantiate(const LexEntry& entry);

// the grammar for the covered fragment, embedded in the binary
const std::string& fragment_lexicon_source();
const Lexicon& fragment_lexicon();

}  // namespace focuslog::grammar

#endif
