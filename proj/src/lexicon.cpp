// lexicon.cpp - lexicon loading, validation, focus marking, instantiation
#include "focuslog/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "focuslog/errors.hpp"

namespace focuslog::grammar {

using logic::SNode;
using logic::Term;
using scoping::StoreEntry;
using scoping::StoreKind;

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Err::LexiconError, "lexicon line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// split on a separator at bracket depth zero
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t count_focus_markers(const SNode& n) {
  if (n.is_atom) return 0;
  std::size_t count = n.head() == "focus" ? 1 : 0;
  for (const auto& k : n.kids) count += count_focus_markers(k);
  return count;
}

// (focus T) nodes removed, keeping T
SNode strip_focus(const SNode& n) {
  if (n.is_atom) return n;
  if (n.head() == "focus") {
    if (n.kids.size() != 2) fail(n.line, "(focus ...) takes one argument");
    return strip_focus(n.kids[1]);
  }
  SNode out = n;
  for (auto& k : out.kids) k = strip_focus(k);
  return out;
}

SNode replace_focus_with_var(const SNode& n, const std::string& hole) {
  if (n.is_atom) return n;
  if (n.head() == "focus") {
    SNode var;
    var.line = n.line;
    SNode tag;
    tag.is_atom = true;
    tag.text = "var";
    tag.line = n.line;
    SNode name;
    name.is_atom = true;
    name.text = hole;
    name.line = n.line;
    var.kids = {tag, name};
    return var;
  }
  SNode out = n;
  for (auto& k : out.kids) k = replace_focus_with_var(k, hole);
  return out;
}

const SNode* find_focus(const SNode& n) {
  if (n.is_atom) return nullptr;
  if (n.head() == "focus") return &n;
  for (const auto& k : n.kids)
    if (const SNode* f = find_focus(k)) return f;
  return nullptr;
}

SlotSpec parse_slot(const std::string& spec, std::size_t line) {
  SlotSpec slot;
  std::string rest = trim(spec);
  auto arrow = rest.find("=>");
  if (arrow == std::string::npos) fail(line, "slot '" + spec + "' is missing '=>'");
  std::string lhs = trim(rest.substr(0, arrow));
  slot.result = category_from_string(trim(rest.substr(arrow + 2)));
  auto colon = lhs.find(':');
  if (colon == std::string::npos) fail(line, "slot '" + spec + "' is missing a direction");
  std::string dir = trim(lhs.substr(0, colon));
  if (dir == "left")
    slot.dir = Dir::Left;
  else if (dir == "right")
    slot.dir = Dir::Right;
  else
    fail(line, "slot direction must be left or right");
  std::string catpart = trim(lhs.substr(colon + 1));
  auto bracket = catpart.find('[');
  std::string flags;
  if (bracket != std::string::npos) {
    auto close = catpart.rfind(']');
    if (close == std::string::npos || close < bracket) fail(line, "unbalanced '[' in slot");
    flags = catpart.substr(bracket + 1, close - bracket - 1);
    catpart = trim(catpart.substr(0, bracket));
  }
  slot.cat = category_from_string(catpart);
  std::istringstream fs(flags);
  std::string flag;
  while (fs >> flag) {
    if (flag == "foc")
      slot.focus = FocusReq::Required;
    else if (flag == "nofoc")
      slot.focus = FocusReq::Absent;
    else if (flag == "raise")
      slot.raise = true;
    else if (flag == "inherit")
      slot.inherit = true;
    else if (flag == "transparent")
      slot.transparent = true;
    else if (flag == "base" || flag == "fin")
      slot.req["vform"] = flag;
    else if (auto eq = flag.find('='); eq != std::string::npos)
      slot.req[flag.substr(0, eq)] = flag.substr(eq + 1);
    else
      fail(line, "unknown slot flag '" + flag + "'");
  }
  return slot;
}

OpKind op_from_string(const std::string& s, std::size_t line) {
  if (s == "only") return OpKind::Only;
  if (s == "not") return OpKind::Not;
  if (s == "neg") return OpKind::NegWide;
  fail(line, "unknown operator '" + s + "'");
}

StoreEntry parse_seed(const SNode& n, std::size_t line) {
  if (n.is_atom || n.head() != "store" || (n.kids.size() != 4 && n.kids.size() != 5))
    fail(line, "store seed must be (store kind var priority restriction?)");
  StoreEntry e;
  const std::string kind = n.kids[1].is_atom ? n.kids[1].text : "";
  if (kind == "existential")
    e.kind = StoreKind::Existential;
  else if (kind == "universal")
    e.kind = StoreKind::Universal;
  else if (kind == "iota")
    e.kind = StoreKind::Iota;
  else if (kind == "abstraction")
    e.kind = StoreKind::Abstraction;
  else
    fail(line, "unknown store kind '" + kind + "'");
  if (!n.kids[2].is_atom) fail(line, "store variable must be an atom");
  e.var = n.kids[2].text;
  if (!n.kids[3].is_atom) fail(line, "store priority must be an integer");
  try {
    e.priority = std::stoi(n.kids[3].text);
  } catch (...) {
    fail(line, "store priority must be an integer");
  }
  if (n.kids.size() == 5) e.restriction = logic::term_from_sexpr(n.kids[4]);
  if (e.kind == StoreKind::Iota && !e.restriction)
    fail(line, "iota store entry needs a restriction");
  if (e.kind == StoreKind::Abstraction) e.priority = scoping::kAbstractionPriority;
  return e;
}

void check_cards(const Term& t, std::size_t line) {
  if (t.kind() == logic::Kind::Card && t.card_n() < 1)
    fail(line, "cardinality must be at least 1");
  for (const auto& k : t.children()) check_cards(k, line);
}

std::vector<std::string> lambda_prefix(const Term& t) {
  std::vector<std::string> vars;
  const Term* cur = &t;
  while (cur->kind() == logic::Kind::Lam) {
    vars.push_back(cur->name());
    cur = &cur->child(0);
  }
  return vars;
}

void validate(const LexEntry& e) {
  std::size_t markers = count_focus_markers(e.sem_raw);
  if (e.focusable && markers != 1)
    fail(e.line, "focusable entry '" + e.word + "' needs exactly one (focus ...) form");
  if (!e.focusable && markers != 0)
    fail(e.line, "entry '" + e.word + "' is not focusable but has a (focus ...) form");

  Term sem = logic::term_from_sexpr(strip_focus(e.sem_raw));
  check_cards(sem, e.line);

  std::set<std::string> seed_vars;
  for (const auto& s : e.seeds) seed_vars.insert(s.var);

  for (const auto& v : logic::free_vars(sem))
    if (!seed_vars.count(v))
      fail(e.line, "entry '" + e.word + "': variable '" + v + "' in sem is not bound by a store seed");

  std::set<std::string> prefix;
  for (const auto& v : lambda_prefix(sem)) prefix.insert(v);
  for (const auto& s : e.seeds) {
    if (!s.restriction) continue;
    check_cards(*s.restriction, e.line);
    for (const auto& v : logic::free_vars(*s.restriction))
      if (!seed_vars.count(v) && !prefix.count(v))
        fail(e.line, "entry '" + e.word + "': variable '" + v + "' in a store restriction is unbound");
  }
}

}  // namespace

void Lexicon::add(LexEntry entry) { entries_[lower(entry.word)].push_back(std::move(entry)); }

const std::vector<LexEntry>* Lexicon::lookup(const std::string& word) const {
  auto it = entries_.find(lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Lexicon::size() const {
  std::size_t n = 0;
  for (const auto& [w, es] : entries_) n += es.size();
  return n;
}

std::vector<std::string> Lexicon::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [w, es] : entries_) out.push_back(w);
  return out;
}

Lexicon load_lexicon(const std::string& source) {
  Lexicon lex;
  std::istringstream in(source);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    auto cols = split_top(line, '|');
    if (cols.size() != 6) fail(lineno, "expected 6 '|'-separated columns, got " + std::to_string(cols.size()));

    LexEntry e;
    e.line = lineno;
    e.word = trim(cols[0]);
    if (e.word.empty()) fail(lineno, "empty word");
    e.cat = category_from_string(trim(cols[1]));

    std::string feats = trim(cols[2]);
    if (feats != "-" && !feats.empty()) {
      for (const auto& item : split_top(feats, ',')) {
        std::string f = trim(item);
        if (f.empty()) continue;
        auto eq = f.find('=');
        if (eq == std::string::npos) fail(lineno, "feature '" + f + "' is not key=value");
        std::string key = trim(f.substr(0, eq));
        std::string val = trim(f.substr(eq + 1));
        if (key == "subcat") {
          for (const auto& spec : split_top(val, ';'))
            e.slots.push_back(parse_slot(spec, lineno));
        } else if (key == "op") {
          e.op = op_from_string(val, lineno);
        } else {
          e.features[key] = val;
        }
      }
    }

    std::string focusable = trim(cols[3]);
    if (focusable == "yes")
      e.focusable = true;
    else if (focusable == "no")
      e.focusable = false;
    else
      fail(lineno, "focusable column must be yes or no");

    try {
      e.sem_raw = logic::parse_sexpr(trim(cols[4]), lineno);
      std::string seeds = trim(cols[5]);
      if (seeds != "-" && !seeds.empty())
        for (const auto& form : logic::parse_sexpr_list(seeds, lineno))
          e.seeds.push_back(parse_seed(form, lineno));
    } catch (const Error& err) {
      if (err.code() == Err::LexiconError) throw;
      fail(lineno, err.what());
    }

    validate(e);
    lex.add(std::move(e));
  }
  return lex;
}

LexEntry focus_mark(const LexEntry& entry) {
  if (!entry.focusable)
    throw Error(Err::NotFocusable, "'" + entry.word + "' cannot carry focus");
  const SNode* marked = find_focus(entry.sem_raw);
  if (!marked) throw Error(Err::Internal, "focusable entry without focus marker");

  LexEntry out = entry;
  out.focus_hole = logic::fresh_name("F");
  out.sem_raw = replace_focus_with_var(entry.sem_raw, out.focus_hole);
  out.focus_item_sem = logic::term_from_sexpr(strip_focus(marked->kids[1]));
  out.seeds.push_back(StoreEntry{StoreKind::Abstraction, out.focus_hole, std::nullopt,
                                 scoping::kAbstractionPriority});
  return out;
}

Sign instantiate(const LexEntry& entry) {
  Sign sign;
  sign.cat = entry.cat;
  sign.features = entry.features;
  sign.pending = entry.slots;
  sign.op = entry.op;
  sign.phon = entry.word;

  std::map<std::string, std::string> renames;
  for (const auto& s : entry.seeds) renames.emplace(s.var, logic::fresh_name(s.var));

  Term sem = logic::term_from_sexpr(strip_focus(entry.sem_raw));
  for (const auto& [from, to] : renames) sem = logic::substitute(sem, from, Term::var(to));
  sign.sem = logic::beta_reduce(sem);

  for (const auto& s : entry.seeds) {
    StoreEntry e = s;
    e.var = renames.at(s.var);
    if (e.restriction) {
      Term r = *e.restriction;
      for (const auto& [from, to] : renames) r = logic::substitute(r, from, Term::var(to));
      e.restriction = r;
    }
    sign.store.push_back(std::move(e));
  }

  if (entry.focus_item_sem) {
    auto item = std::make_shared<Sign>();
    item->cat = entry.cat;
    item->features = entry.features;
    item->sem = *entry.focus_item_sem;
    item->phon = entry.word;
    sign.focus = FocusValue{item, renames.at(entry.focus_hole)};
  }
  return sign;
}

const Lexicon& fragment_lexicon() {
  static const Lexicon lex = load_lexicon(fragment_lexicon_source());
  return lex;
}

}  // namespace focuslog::grammar
