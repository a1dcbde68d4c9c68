// printer.cpp - plain, LaTeX and sexpr renderings
#include "focuslog/printer.hpp"

#include <cctype>
#include <sstream>

#include "focuslog/errors.hpp"
#include "focuslog/sexpr.hpp"

namespace focuslog::logic {

namespace {

// precedence: implies < or < and < neg < app; binders take the longest
// possible body and are parenthesised whenever they appear as operands
constexpr int kPrecBinder = 0;
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecNeg = 4;
constexpr int kPrecApp = 5;
constexpr int kPrecAtom = 6;

struct Symbols {
  const char* lam;
  const char* exists;
  const char* forall;
  const char* iota;
  const char* conj;
  const char* disj;
  const char* implies;
  const char* neg;
  const char* dot;
  const char* binder_sep;  // between binder variable and body
};

const Symbols kPlain{"λ", "∃", "∀", "ι", " ∧ ", " ∨ ", " → ", "¬", ".", " "};
const Symbols kLatex{"\\lambda ", "\\exists ", "\\forall ", "\\iota ",
                     " \\wedge ", " \\vee ", " \\rightarrow ", "\\neg ",
                     " . ", "\\, "};

std::string latex_name(const std::string& name) {
  // render a trailing _<digits> suffix as a subscript
  auto pos = name.rfind('_');
  if (pos != std::string::npos && pos + 1 < name.size()) {
    bool digits = true;
    for (std::size_t i = pos + 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
    if (digits) return name.substr(0, pos) + "_{" + name.substr(pos + 1) + "}";
  }
  std::string out;
  for (char c : name) {
    if (c == '_' || c == '\'') out += '\\';
    out += c;
  }
  return out;
}

struct Printer {
  const Symbols& sym;
  bool latex;

  std::string name(const std::string& n) const { return latex ? latex_name(n) : n; }

  std::string wrap(const std::string& s) const { return "(" + s + ")"; }

  int prec_of(const Term& t) const {
    switch (t.kind()) {
      case Kind::Implies: return kPrecImplies;
      case Kind::Or: return kPrecOr;
      case Kind::And: return kPrecAnd;
      case Kind::Neg: return kPrecNeg;
      case Kind::App: return kPrecApp;
      case Kind::Lam:
      case Kind::Exists:
      case Kind::Forall:
      case Kind::Iota: return kPrecBinder;
      default: return kPrecAtom;
    }
  }

  std::string print(const Term& t, int parent) const {
    std::string s = render(t);
    if (prec_of(t) < parent) return wrap(s);
    return s;
  }

  std::string render(const Term& t) const {
    switch (t.kind()) {
      case Kind::Var:
      case Kind::Const:
        return name(t.name());
      case Kind::Pred: {
        std::string s = name(t.name()) + "(";
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          if (i) s += ", ";
          s += print(t.child(i), kPrecBinder);
        }
        return s + ")";
      }
      case Kind::Card:
        return "|" + print(t.child(0), kPrecBinder) + "|=" + std::to_string(t.card_n());
      case Kind::Eq:
        return print(t.child(0), kPrecAtom) + " = " + print(t.child(1), kPrecAtom);
      case Kind::Less:
        return print(t.child(0), kPrecAtom) + " < " + print(t.child(1), kPrecAtom);
      case Kind::App:
        return print(t.child(0), kPrecAtom) + sym.dot + print(t.child(1), kPrecAtom);
      case Kind::Neg:
        return std::string(sym.neg) + print(t.child(0), kPrecNeg);
      case Kind::And:
        return print(t.child(0), kPrecNeg) + sym.conj + print(t.child(1), kPrecAnd);
      case Kind::Or:
        return print(t.child(0), kPrecAnd) + sym.disj + print(t.child(1), kPrecOr);
      case Kind::Implies:
        return print(t.child(0), kPrecOr) + sym.implies + print(t.child(1), kPrecImplies);
      case Kind::Lam:
        return std::string(sym.lam) + name(t.name()) + sym.binder_sep + print(t.child(0), kPrecBinder);
      case Kind::Exists:
        return std::string(sym.exists) + name(t.name()) + sym.binder_sep + print(t.child(0), kPrecBinder);
      case Kind::Forall:
        return std::string(sym.forall) + name(t.name()) + sym.binder_sep + print(t.child(0), kPrecBinder);
      case Kind::Iota:
        return std::string(sym.iota) + name(t.name()) + (latex ? "{:}" : ":") + "(" +
               print(t.child(0), kPrecBinder) + ")" + sym.binder_sep + print(t.child(1), kPrecBinder);
    }
    throw Error(Err::Internal, "render: unhandled kind");
  }
};

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "plain") return Format::Plain;
  if (s == "latex") return Format::Latex;
  if (s == "sexpr") return Format::Sexpr;
  throw Error(Err::Usage, "unknown format '" + s + "'");
}

std::string pretty(const Term& t, Format format) {
  switch (format) {
    case Format::Sexpr:
      return term_to_sexpr(t);
    case Format::Plain: {
      Printer p{kPlain, false};
      return p.print(t, kPrecBinder);
    }
    case Format::Latex: {
      Printer p{kLatex, true};
      return p.print(t, kPrecBinder);
    }
  }
  throw Error(Err::Internal, "pretty: unhandled format");
}

}  // namespace focuslog::logic
