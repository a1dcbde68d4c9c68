// term.hpp - immutable intensional-logic terms with substitution and reduction
//
// Terms are immutable values with structural sharing; they are safe to copy,
// share and send between threads. The fresh-name counter is the only mutable
// state (atomic); reset_fresh_names() gives deterministic names per run.
#ifndef FOCUSLOG_TERM_HPP
#define FOCUSLOG_TERM_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace focuslog::logic {

enum class Kind {
  Var,
  Const,
  Lam,
  App,
  And,
  Or,
  Implies,
  Neg,
  Eq,
  Less,
  Exists,
  Forall,
  Iota,
  Card,
  Pred,
};

class Term {
 public:
  Term() = default;

  static Term var(std::string name);
  static Term cst(std::string name);
  static Term lam(std::string var, Term body);
  static Term app(Term fun, Term arg);
  static Term conj(Term l, Term r);
  static Term disj(Term l, Term r);
  static Term implies(Term l, Term r);
  static Term neg(Term body);
  static Term eq(Term l, Term r);
  static Term less(Term l, Term r);
  static Term exists(std::string var, Term body);
  static Term forall(std::string var, Term body);
  static Term iota(std::string var, Term restriction, Term body);
  static Term card(Term set, std::uint32_t n);
  static Term pred(std::string name, std::vector<Term> args);

  bool empty() const { return node_ == nullptr; }
  Kind kind() const;
  // binder variable, constant/var/pred name
  const std::string& name() const;
  std::uint32_t card_n() const;
  const std::vector<Term>& children() const;
  const Term& child(std::size_t i) const { return children()[i]; }

  // strict structural identity (names included); use alpha_equal for
  // comparison up to bound-variable renaming
  bool identical(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, std::string name, std::vector<Term> kids, std::uint32_t n = 0);
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Term& t);

// capture-avoiding substitution of v for free occurrences of x
Term substitute(const Term& t, const std::string& x, const Term& v);

// normal-order reduction to beta-normal form; applications of constants and
// predicates collapse into Pred nodes. Throws Err::ReductionDepthExceeded
// once the step budget is spent.
Term beta_reduce(const Term& t, std::size_t budget = 10000);

bool is_beta_normal(const Term& t);

bool alpha_equal(const Term& a, const Term& b);

// alpha-invariant key: bound variables renamed positionally, free variables
// kept by name; alpha_equal(a,b) iff canonical(a)==canonical(b)
std::string canonical(const Term& t);

std::string fresh_name(const std::string& base);
void reset_fresh_names();

}  // namespace focuslog::logic

#endif
