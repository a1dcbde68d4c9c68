// sexpr.cpp - s-expression reading and term conversion
#include "focuslog/sexpr.hpp"

#include <cctype>
#include <sstream>

#include "focuslog/errors.hpp"

namespace focuslog::logic {

namespace {

struct Reader {
  std::string_view src;
  std::size_t pos = 0;
  std::size_t line;

  explicit Reader(std::string_view s, std::size_t line_base) : src(s), line(line_base) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Err::SexprError, "line " + std::to_string(line) + ": " + msg);
  }

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '\n') ++line;
      if (!std::isspace(static_cast<unsigned char>(c))) break;
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  static bool atom_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')';
  }

  SNode read_form() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    SNode node;
    node.line = line;
    if (src[pos] == '(') {
      ++pos;
      for (;;) {
        skip_ws();
        if (pos >= src.size()) fail("missing ')'");
        if (src[pos] == ')') {
          ++pos;
          return node;
        }
        node.kids.push_back(read_form());
      }
    }
    if (src[pos] == ')') fail("unexpected ')'");
    std::size_t start = pos;
    while (pos < src.size() && atom_char(src[pos])) ++pos;
    node.is_atom = true;
    node.text = std::string(src.substr(start, pos - start));
    return node;
  }
};

[[noreturn]] void bad(const SNode& n, const std::string& msg) {
  throw Error(Err::SexprError, "line " + std::to_string(n.line) + ": " + msg);
}

const SNode& nth(const SNode& n, std::size_t i) { return n.kids[i]; }

std::string atom(const SNode& n, const char* what) {
  if (!n.is_atom) bad(n, std::string("expected ") + what);
  return n.text;
}

void expect_arity(const SNode& n, std::size_t arity) {
  if (n.kids.size() != arity + 1)
    bad(n, "'" + n.head() + "' takes " + std::to_string(arity) + " argument(s)");
}

}  // namespace

const std::string& SNode::head() const {
  static const std::string empty;
  if (is_atom || kids.empty() || !kids[0].is_atom) return empty;
  return kids[0].text;
}

SNode parse_sexpr(std::string_view src, std::size_t line_base) {
  Reader r(src, line_base);
  SNode node = r.read_form();
  if (!r.at_end()) r.fail("trailing input after form");
  return node;
}

std::vector<SNode> parse_sexpr_list(std::string_view src, std::size_t line_base) {
  Reader r(src, line_base);
  std::vector<SNode> out;
  while (!r.at_end()) out.push_back(r.read_form());
  return out;
}

Term term_from_sexpr(const SNode& n) {
  if (n.is_atom) bad(n, "expected a term form, got atom '" + n.text + "'");
  if (n.kids.empty() || !n.kids[0].is_atom) bad(n, "expected a tagged form");
  const std::string& tag = n.kids[0].text;

  if (tag == "var") {
    expect_arity(n, 1);
    return Term::var(atom(nth(n, 1), "variable name"));
  }
  if (tag == "const") {
    expect_arity(n, 1);
    return Term::cst(atom(nth(n, 1), "constant name"));
  }
  if (tag == "lam") {
    expect_arity(n, 2);
    return Term::lam(atom(nth(n, 1), "binder"), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "app") {
    expect_arity(n, 2);
    return Term::app(term_from_sexpr(nth(n, 1)), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "and") {
    expect_arity(n, 2);
    return Term::conj(term_from_sexpr(nth(n, 1)), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "or") {
    expect_arity(n, 2);
    return Term::disj(term_from_sexpr(nth(n, 1)), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "implies") {
    expect_arity(n, 2);
    return Term::implies(term_from_sexpr(nth(n, 1)), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "neg") {
    expect_arity(n, 1);
    return Term::neg(term_from_sexpr(nth(n, 1)));
  }
  if (tag == "eq") {
    expect_arity(n, 2);
    return Term::eq(term_from_sexpr(nth(n, 1)), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "lt") {
    expect_arity(n, 2);
    return Term::less(term_from_sexpr(nth(n, 1)), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "exists") {
    expect_arity(n, 2);
    return Term::exists(atom(nth(n, 1), "binder"), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "forall") {
    expect_arity(n, 2);
    return Term::forall(atom(nth(n, 1), "binder"), term_from_sexpr(nth(n, 2)));
  }
  if (tag == "iota") {
    expect_arity(n, 3);
    return Term::iota(atom(nth(n, 1), "binder"), term_from_sexpr(nth(n, 2)),
                      term_from_sexpr(nth(n, 3)));
  }
  if (tag == "card") {
    expect_arity(n, 2);
    const std::string count = atom(nth(n, 2), "cardinality");
    for (char c : count)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(nth(n, 2), "cardinality must be a natural number");
    return Term::card(term_from_sexpr(nth(n, 1)),
                      static_cast<std::uint32_t>(std::stoul(count)));
  }
  if (tag == "pred") {
    if (n.kids.size() < 2) bad(n, "'pred' needs a name");
    std::string name = atom(nth(n, 1), "predicate name");
    std::vector<Term> args;
    for (std::size_t i = 2; i < n.kids.size(); ++i) args.push_back(term_from_sexpr(n.kids[i]));
    return Term::pred(std::move(name), std::move(args));
  }
  bad(n, "unknown term tag '" + tag + "'");
}

Term parse_term(std::string_view src) { return term_from_sexpr(parse_sexpr(src)); }

std::string term_to_sexpr(const Term& t) {
  std::ostringstream out;
  switch (t.kind()) {
    case Kind::Var: out << "(var " << t.name() << ")"; break;
    case Kind::Const: out << "(const " << t.name() << ")"; break;
    case Kind::Lam: out << "(lam " << t.name() << " " << term_to_sexpr(t.child(0)) << ")"; break;
    case Kind::App: out << "(app " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")"; break;
    case Kind::And: out << "(and " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")"; break;
    case Kind::Or: out << "(or " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")"; break;
    case Kind::Implies: out << "(implies " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")"; break;
    case Kind::Neg: out << "(neg " << term_to_sexpr(t.child(0)) << ")"; break;
    case Kind::Eq: out << "(eq " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")"; break;
    case Kind::Less: out << "(lt " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")"; break;
    case Kind::Exists: out << "(exists " << t.name() << " " << term_to_sexpr(t.child(0)) << ")"; break;
    case Kind::Forall: out << "(forall " << t.name() << " " << term_to_sexpr(t.child(0)) << ")"; break;
    case Kind::Iota:
      out << "(iota " << t.name() << " " << term_to_sexpr(t.child(0)) << " " << term_to_sexpr(t.child(1)) << ")";
      break;
    case Kind::Card: out << "(card " << term_to_sexpr(t.child(0)) << " " << t.card_n() << ")"; break;
    case Kind::Pred: {
      out << "(pred " << t.name();
      for (const auto& a : t.children()) out << " " << term_to_sexpr(a);
      out << ")";
      break;
    }
  }
  return out.str();
}

}  // namespace focuslog::logic
