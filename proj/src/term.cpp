// term.cpp - term construction, substitution, beta reduction, alpha equality
#include "focuslog/term.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "focuslog/errors.hpp"

namespace focuslog::logic {

struct Term::Node {
  Kind kind;
  std::string name;          // binder var / const / var / pred name
  std::uint32_t n = 0;       // card count
  std::vector<Term> kids;    // layout per kind, see factories
};

Term Term::make(Kind k, std::string name, std::vector<Term> kids, std::uint32_t n) {
  auto node = std::make_shared<Node>();
  node->kind = k;
  node->name = std::move(name);
  node->n = n;
  node->kids = std::move(kids);
  return Term(std::move(node));
}

namespace {

std::atomic<std::uint64_t> g_fresh_counter{0};

// base of a generated name: strip one trailing "_<digits>" so renaming a
// renamed variable does not grow unboundedly
std::string name_root(const std::string& name) {
  auto pos = name.rfind('_');
  if (pos == std::string::npos || pos + 1 >= name.size()) return name;
  for (std::size_t i = pos + 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
  return name.substr(0, pos);
}

}  // namespace

Term Term::var(std::string name) { return make(Kind::Var, std::move(name), {}); }
Term Term::cst(std::string name) { return make(Kind::Const, std::move(name), {}); }
Term Term::lam(std::string var, Term body) { return make(Kind::Lam, std::move(var), {std::move(body)}); }
Term Term::app(Term fun, Term arg) { return make(Kind::App, "", {std::move(fun), std::move(arg)}); }
Term Term::conj(Term l, Term r) { return make(Kind::And, "", {std::move(l), std::move(r)}); }
Term Term::disj(Term l, Term r) { return make(Kind::Or, "", {std::move(l), std::move(r)}); }
Term Term::implies(Term l, Term r) { return make(Kind::Implies, "", {std::move(l), std::move(r)}); }
Term Term::neg(Term body) { return make(Kind::Neg, "", {std::move(body)}); }
Term Term::eq(Term l, Term r) { return make(Kind::Eq, "", {std::move(l), std::move(r)}); }
Term Term::less(Term l, Term r) { return make(Kind::Less, "", {std::move(l), std::move(r)}); }
Term Term::exists(std::string var, Term body) { return make(Kind::Exists, std::move(var), {std::move(body)}); }
Term Term::forall(std::string var, Term body) { return make(Kind::Forall, std::move(var), {std::move(body)}); }
Term Term::iota(std::string var, Term restriction, Term body) {
  return make(Kind::Iota, std::move(var), {std::move(restriction), std::move(body)});
}
Term Term::card(Term set, std::uint32_t n) { return make(Kind::Card, "", {std::move(set)}, n); }
Term Term::pred(std::string name, std::vector<Term> args) { return make(Kind::Pred, std::move(name), std::move(args)); }

Kind Term::kind() const {
  if (!node_) throw Error(Err::Internal, "kind() on empty term");
  return node_->kind;
}
const std::string& Term::name() const { return node_->name; }
std::uint32_t Term::card_n() const { return node_->n; }
const std::vector<Term>& Term::children() const { return node_->kids; }

bool Term::identical(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind || node_->name != other.node_->name ||
      node_->n != other.node_->n || node_->kids.size() != other.node_->kids.size())
    return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i)
    if (!node_->kids[i].identical(other.node_->kids[i])) return false;
  return true;
}

std::string fresh_name(const std::string& base) {
  auto id = ++g_fresh_counter;
  return name_root(base) + "_" + std::to_string(id);
}

void reset_fresh_names() { g_fresh_counter = 0; }

namespace {

void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case Kind::Var:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case Kind::Const:
      return;
    case Kind::Lam:
    case Kind::Exists:
    case Kind::Forall:
    case Kind::Iota: {
      bool inserted = bound.insert(t.name()).second;
      for (const auto& k : t.children()) collect_free(k, bound, out);
      if (inserted) bound.erase(t.name());
      return;
    }
    default:
      for (const auto& k : t.children()) collect_free(k, bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

namespace {

Term subst_binder(const Term& t, const std::string& x, const Term& v,
                  const std::set<std::string>& fv_v) {
  const std::string& y = t.name();
  if (y == x) return t;  // x shadowed, nothing to do below
  std::string binder = y;
  std::vector<Term> kids = t.children();
  if (fv_v.count(y)) {
    // substitution would capture y: rename the binder first
    binder = fresh_name(y);
    for (auto& k : kids) k = substitute(k, y, Term::var(binder));
  }
  for (auto& k : kids) k = substitute(k, x, v);
  switch (t.kind()) {
    case Kind::Lam: return Term::lam(binder, kids[0]);
    case Kind::Exists: return Term::exists(binder, kids[0]);
    case Kind::Forall: return Term::forall(binder, kids[0]);
    case Kind::Iota: return Term::iota(binder, kids[0], kids[1]);
    default: throw Error(Err::Internal, "subst_binder on non-binder");
  }
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& v) {
  switch (t.kind()) {
    case Kind::Var:
      return t.name() == x ? v : t;
    case Kind::Const:
      return t;
    case Kind::Lam:
    case Kind::Exists:
    case Kind::Forall:
    case Kind::Iota: {
      auto fv = free_vars(t);
      if (!fv.count(x)) return t;
      return subst_binder(t, x, v, free_vars(v));
    }
    case Kind::App:
      return Term::app(substitute(t.child(0), x, v), substitute(t.child(1), x, v));
    case Kind::And:
      return Term::conj(substitute(t.child(0), x, v), substitute(t.child(1), x, v));
    case Kind::Or:
      return Term::disj(substitute(t.child(0), x, v), substitute(t.child(1), x, v));
    case Kind::Implies:
      return Term::implies(substitute(t.child(0), x, v), substitute(t.child(1), x, v));
    case Kind::Neg:
      return Term::neg(substitute(t.child(0), x, v));
    case Kind::Eq:
      return Term::eq(substitute(t.child(0), x, v), substitute(t.child(1), x, v));
    case Kind::Less:
      return Term::less(substitute(t.child(0), x, v), substitute(t.child(1), x, v));
    case Kind::Card:
      return Term::card(substitute(t.child(0), x, v), t.card_n());
    case Kind::Pred: {
      std::vector<Term> args;
      args.reserve(t.children().size());
      for (const auto& a : t.children()) args.push_back(substitute(a, x, v));
      return Term::pred(t.name(), std::move(args));
    }
  }
  throw Error(Err::Internal, "substitute: unhandled kind");
}

namespace {

struct Budget {
  std::size_t left;
  void spend() {
    if (left == 0)
      throw Error(Err::ReductionDepthExceeded, "beta reduction exceeded its step budget");
    --left;
  }
};

// weak-head steps: expose the outermost redex of an application spine
Term whnf(Term t, Budget& budget) {
  for (;;) {
    if (t.kind() != Kind::App) return t;
    Term fun = whnf(t.child(0), budget);
    const Term& arg = t.child(1);
    if (fun.kind() == Kind::Lam) {
      budget.spend();
      t = substitute(fun.child(0), fun.name(), arg);
      continue;
    }
    if (fun.kind() == Kind::Const) {
      t = Term::pred(fun.name(), {arg});
      continue;
    }
    if (fun.kind() == Kind::Pred) {
      std::vector<Term> args = fun.children();
      args.push_back(arg);
      t = Term::pred(fun.name(), std::move(args));
      continue;
    }
    if (fun.identical(t.child(0))) return t;
    t = Term::app(fun, arg);
    return t;
  }
}

Term normalize(const Term& t, Budget& budget) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Const:
      return t;
    case Kind::App: {
      Term head = whnf(t, budget);
      if (head.kind() != Kind::App) return normalize(head, budget);
      return Term::app(normalize(head.child(0), budget), normalize(head.child(1), budget));
    }
    case Kind::Lam:
      return Term::lam(t.name(), normalize(t.child(0), budget));
    case Kind::Exists:
      return Term::exists(t.name(), normalize(t.child(0), budget));
    case Kind::Forall:
      return Term::forall(t.name(), normalize(t.child(0), budget));
    case Kind::Iota:
      return Term::iota(t.name(), normalize(t.child(0), budget), normalize(t.child(1), budget));
    case Kind::And:
      return Term::conj(normalize(t.child(0), budget), normalize(t.child(1), budget));
    case Kind::Or:
      return Term::disj(normalize(t.child(0), budget), normalize(t.child(1), budget));
    case Kind::Implies:
      return Term::implies(normalize(t.child(0), budget), normalize(t.child(1), budget));
    case Kind::Neg:
      return Term::neg(normalize(t.child(0), budget));
    case Kind::Eq:
      return Term::eq(normalize(t.child(0), budget), normalize(t.child(1), budget));
    case Kind::Less:
      return Term::less(normalize(t.child(0), budget), normalize(t.child(1), budget));
    case Kind::Card:
      return Term::card(normalize(t.child(0), budget), t.card_n());
    case Kind::Pred: {
      std::vector<Term> args;
      args.reserve(t.children().size());
      for (const auto& a : t.children()) args.push_back(normalize(a, budget));
      return Term::pred(t.name(), std::move(args));
    }
  }
  throw Error(Err::Internal, "normalize: unhandled kind");
}

}  // namespace

Term beta_reduce(const Term& t, std::size_t budget) {
  Budget b{budget};
  return normalize(t, b);
}

bool is_beta_normal(const Term& t) {
  if (t.kind() == Kind::App) {
    Kind hk = t.child(0).kind();
    if (hk == Kind::Lam || hk == Kind::Const || hk == Kind::Pred) return false;
  }
  for (const auto& k : t.children())
    if (!is_beta_normal(k)) return false;
  return true;
}

namespace {

using Env = std::map<std::string, int>;

bool alpha_eq(const Term& a, const Term& b, Env& ea, Env& eb, int& depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Var: {
      auto ia = ea.find(a.name());
      auto ib = eb.find(b.name());
      if ((ia == ea.end()) != (ib == eb.end())) return false;
      if (ia == ea.end()) return a.name() == b.name();  // both free
      return ia->second == ib->second;
    }
    case Kind::Const:
      return a.name() == b.name();
    case Kind::Pred:
      if (a.name() != b.name() || a.children().size() != b.children().size()) return false;
      break;
    case Kind::Card:
      if (a.card_n() != b.card_n()) return false;
      break;
    case Kind::Lam:
    case Kind::Exists:
    case Kind::Forall:
    case Kind::Iota: {
      int level = depth++;
      auto sa = ea.find(a.name()) != ea.end() ? std::optional<int>(ea[a.name()]) : std::nullopt;
      auto sb = eb.find(b.name()) != eb.end() ? std::optional<int>(eb[b.name()]) : std::nullopt;
      ea[a.name()] = level;
      eb[b.name()] = level;
      bool ok = true;
      for (std::size_t i = 0; ok && i < a.children().size(); ++i)
        ok = alpha_eq(a.child(i), b.child(i), ea, eb, depth);
      if (sa) ea[a.name()] = *sa; else ea.erase(a.name());
      if (sb) eb[b.name()] = *sb; else eb.erase(b.name());
      return ok;
    }
    default:
      break;
  }
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!alpha_eq(a.child(i), b.child(i), ea, eb, depth)) return false;
  return true;
}

void canon(const Term& t, Env& env, int& depth, std::ostringstream& out) {
  switch (t.kind()) {
    case Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end())
        out << "(var " << t.name() << ")";
      else
        out << "(bnd " << it->second << ")";
      return;
    }
    case Kind::Const:
      out << "(const " << t.name() << ")";
      return;
    case Kind::Lam:
    case Kind::Exists:
    case Kind::Forall:
    case Kind::Iota: {
      const char* tag = t.kind() == Kind::Lam      ? "lam"
                        : t.kind() == Kind::Exists ? "exists"
                        : t.kind() == Kind::Forall ? "forall"
                                                   : "iota";
      int level = depth++;
      auto saved = env.find(t.name()) != env.end() ? std::optional<int>(env[t.name()]) : std::nullopt;
      env[t.name()] = level;
      out << "(" << tag;
      for (const auto& k : t.children()) {
        out << " ";
        canon(k, env, depth, out);
      }
      out << ")";
      if (saved) env[t.name()] = *saved; else env.erase(t.name());
      return;
    }
    case Kind::Card:
      out << "(card ";
      canon(t.child(0), env, depth, out);
      out << " " << t.card_n() << ")";
      return;
    case Kind::Pred: {
      out << "(pred " << t.name();
      for (const auto& a : t.children()) {
        out << " ";
        canon(a, env, depth, out);
      }
      out << ")";
      return;
    }
    default: {
      const char* tag = nullptr;
      switch (t.kind()) {
        case Kind::App: tag = "app"; break;
        case Kind::And: tag = "and"; break;
        case Kind::Or: tag = "or"; break;
        case Kind::Implies: tag = "implies"; break;
        case Kind::Neg: tag = "neg"; break;
        case Kind::Eq: tag = "eq"; break;
        case Kind::Less: tag = "lt"; break;
        default: throw Error(Err::Internal, "canon: unhandled kind");
      }
      out << "(" << tag;
      for (const auto& k : t.children()) {
        out << " ";
        canon(k, env, depth, out);
      }
      out << ")";
      return;
    }
  }
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  Env ea, eb;
  int depth = 0;
  return alpha_eq(a, b, ea, eb, depth);
}

std::string canonical(const Term& t) {
  Env env;
  int depth = 0;
  std::ostringstream out;
  canon(t, env, depth, out);
  return out.str();
}

}  // namespace focuslog::logic
