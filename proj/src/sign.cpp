// sign.cpp - category names and sign identity keys
#include "focuslog/sign.hpp"

#include <algorithm>
#include <sstream>

#include "focuslog/errors.hpp"

namespace focuslog::grammar {

Category category_from_string(const std::string& s) {
  if (s == "S") return Category::S;
  if (s == "NP") return Category::NP;
  if (s == "VP") return Category::VP;
  if (s == "V") return Category::V;
  if (s == "Det") return Category::Det;
  if (s == "N") return Category::N;
  if (s == "Pron") return Category::Pron;
  if (s == "Adv") return Category::Adv;
  if (s == "Neg") return Category::Neg;
  throw Error(Err::LexiconError, "unknown category '" + s + "'");
}

const char* category_name(Category c) {
  switch (c) {
    case Category::S: return "S";
    case Category::NP: return "NP";
    case Category::VP: return "VP";
    case Category::V: return "V";
    case Category::Det: return "Det";
    case Category::N: return "N";
    case Category::Pron: return "Pron";
    case Category::Adv: return "Adv";
    case Category::Neg: return "Neg";
  }
  return "?";
}

std::string slot_to_string(const SlotSpec& s) {
  std::ostringstream out;
  out << (s.dir == Dir::Left ? "left:" : "right:") << category_name(s.cat);
  std::vector<std::string> flags;
  if (s.focus == FocusReq::Required) flags.push_back("foc");
  if (s.focus == FocusReq::Absent) flags.push_back("nofoc");
  if (s.raise) flags.push_back("raise");
  if (s.inherit) flags.push_back("inherit");
  if (s.transparent) flags.push_back("transparent");
  for (const auto& [k, v] : s.req) flags.push_back(k + "=" + v);
  if (!flags.empty()) {
    out << "[";
    for (std::size_t i = 0; i < flags.size(); ++i) out << (i ? " " : "") << flags[i];
    out << "]";
  }
  out << "=>" << category_name(s.result);
  return out.str();
}

std::string sign_key(const Sign& s) {
  std::ostringstream key;
  key << category_name(s.cat) << "|";
  for (const auto& [k, v] : s.features) key << k << "=" << v << ",";
  key << "|op" << static_cast<int>(s.op) << "|";
  for (const auto& slot : s.pending) key << slot_to_string(slot) << ";";
  key << "|sem:" << logic::canonical(s.sem) << "|store:";
  std::vector<std::string> entries;
  for (const auto& e : s.store) {
    std::ostringstream es;
    es << scoping::store_kind_name(e.kind) << " " << e.var << " " << e.priority << " "
       << (e.restriction ? logic::canonical(*e.restriction) : "-");
    entries.push_back(es.str());
  }
  std::sort(entries.begin(), entries.end());
  for (const auto& e : entries) key << e << ";";
  key << "|focus:";
  if (s.focus)
    key << s.focus->abstraction_var << ":" << s.focus->item->phon << ":"
        << logic::canonical(s.focus->item->sem);
  key << "|slash:" << (s.slash ? category_name(s.slash->cat) : "-");
  return key.str();
}

}  // namespace focuslog::grammar
