// combine.cpp - slot matching, foot-feature propagation, semantic composition
#include "focuslog/combine.hpp"

#include "focuslog/errors.hpp"

namespace focuslog::grammar {

using logic::Kind;
using logic::Term;

namespace {

bool features_match(const std::map<std::string, std::string>& req,
                    const std::map<std::string, std::string>& have) {
  for (const auto& [k, v] : req) {
    auto it = have.find(k);
    if (it != have.end() && it->second != v) return false;
  }
  return true;
}

// apply the functor's semantics to the argument; the consumed lambda
// variable is substituted into the functor's own store restrictions as well
struct Applied {
  Term sem;
  std::vector<scoping::StoreEntry> functor_store;
};

std::optional<Applied> apply_functor(const Sign& functor, const Term& arg_sem) {
  if (functor.sem.kind() != Kind::Lam) return std::nullopt;
  const std::string& x = functor.sem.name();
  Applied out;
  out.sem = logic::beta_reduce(logic::substitute(functor.sem.child(0), x, arg_sem));
  out.functor_store = functor.store;
  for (auto& e : out.functor_store)
    if (e.restriction)
      e.restriction = logic::beta_reduce(logic::substitute(*e.restriction, x, arg_sem));
  return out;
}

}  // namespace

std::optional<Sign> combine(const Sign& head, const Sign& dep, Dir dir) {
  if (head.pending.empty()) return std::nullopt;
  const SlotSpec& slot = head.pending.front();
  if (slot.dir != dir) return std::nullopt;
  if (slot.cat != dep.cat) return std::nullopt;
  if (!features_match(slot.req, dep.features)) return std::nullopt;
  if (!slot.inherit && !dep.pending.empty()) return std::nullopt;
  if (slot.focus == FocusReq::Required && !dep.focus) return std::nullopt;
  if (slot.focus == FocusReq::Absent && dep.focus) return std::nullopt;

  if (head.focus && dep.focus)
    throw Error(Err::FootClash, "two daughters carry focus");
  if (head.slash && dep.slash)
    throw Error(Err::FootClash, "two daughters carry slash");
  if (head.op != OpKind::None && dep.op != OpKind::None) return std::nullopt;

  const Sign& functor = slot.raise ? dep : head;
  const Sign& argument = slot.raise ? head : dep;
  auto applied = apply_functor(functor, argument.sem);
  if (!applied) return std::nullopt;

  Sign out;
  out.cat = slot.result;
  out.features = head.features;
  if (slot.transparent)
    for (const auto& [k, v] : dep.features) out.features[k] = v;

  out.pending.assign(head.pending.begin() + 1, head.pending.end());
  if (slot.inherit)
    out.pending.insert(out.pending.end(), dep.pending.begin(), dep.pending.end());

  out.sem = applied->sem;
  if (slot.raise) {
    out.store = head.store;
    out.store.insert(out.store.end(), applied->functor_store.begin(), applied->functor_store.end());
  } else {
    out.store = applied->functor_store;
    out.store.insert(out.store.end(), dep.store.begin(), dep.store.end());
  }

  out.focus = head.focus ? head.focus : dep.focus;
  out.slash = head.slash ? head.slash : dep.slash;
  out.op = head.op != OpKind::None ? head.op : dep.op;
  out.phon = dir == Dir::Left ? dep.phon + " " + head.phon : head.phon + " " + dep.phon;
  return out;
}

}  // namespace focuslog::grammar
