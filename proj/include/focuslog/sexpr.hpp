// sexpr.hpp - s-expression reader and the term <-> sexpr mapping
//
// Grammar: (lam X B) (app F A) (and L R) (or L R) (implies L R) (neg B)
//          (eq L R) (lt L R) (exists X B) (forall X B) (iota X R B)
//          (card S n) (pred name A1 ... Ak) (var X) (const c)
#ifndef FOCUSLOG_SEXPR_HPP
#define FOCUSLOG_SEXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "focuslog/term.hpp"

namespace focuslog::logic {

struct SNode {
  bool is_atom = false;
  std::string text;          // atom text
  std::vector<SNode> kids;   // list elements
  std::size_t line = 0;      // 1-based source line, for error messages

  const std::string& head() const;
};

// reads exactly one form; trailing input is an error
SNode parse_sexpr(std::string_view src, std::size_t line_base = 1);

// reads zero or more forms
std::vector<SNode> parse_sexpr_list(std::string_view src, std::size_t line_base = 1);

Term term_from_sexpr(const SNode& node);
Term parse_term(std::string_view src);

std::string term_to_sexpr(const Term& t);

}  // namespace focuslog::logic

#endif
