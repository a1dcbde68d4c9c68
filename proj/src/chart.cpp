// chart.cpp - tokenizer, agenda-driven chart, exhaustive oracle
#include "focuslog/chart.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "focuslog/combine.hpp"
#include "focuslog/errors.hpp"
#include "focuslog/printer.hpp"

namespace focuslog::parsing {

using grammar::combine;
using grammar::Dir;
using grammar::LexEntry;

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// lexical edges for one token position; the marked position seeds the
// focus-marked variant of every focusable entry
std::vector<Sign> seed_signs(const std::string& token, bool focussed, const Lexicon& lexicon) {
  const std::vector<LexEntry>* entries = lexicon.lookup(token);
  if (!entries || entries->empty())
    throw Error(Err::UnknownWord, "unknown word \"" + token + "\"");
  std::vector<Sign> out;
  if (!focussed) {
    for (const auto& e : *entries) out.push_back(grammar::instantiate(e));
    return out;
  }
  for (const auto& e : *entries)
    if (e.focusable) out.push_back(grammar::instantiate(grammar::focus_mark(e)));
  if (out.empty())
    throw Error(Err::NotFocusable, "'" + token + "' cannot carry focus");
  return out;
}

std::string leaf_tree(const std::string& token, bool focussed) {
  return focussed ? "*" + token + "*" : token;
}

std::string node_tree(const Sign& result, const std::string& left, const std::string& right) {
  return "(" + std::string(grammar::category_name(result.cat)) + " " + left + " " + right + ")";
}

bool is_sentence(const Sign& s) {
  if (s.cat != grammar::Category::S || !s.pending.empty()) return false;
  auto it = s.features.find("vform");
  return it != s.features.end() && it->second == "fin";
}

std::string edge_key(int start, int end, const Sign& s) {
  return std::to_string(start) + ":" + std::to_string(end) + "|" + grammar::sign_key(s);
}

}  // namespace

TokenizedSentence tokenize(const std::string& text) {
  TokenizedSentence out;
  std::istringstream in(text);
  std::string raw;
  while (in >> raw) {
    bool focussed = false;
    if (raw.find('*') != std::string::npos) {
      if (raw.size() < 3 || raw.front() != '*' || raw.back() != '*' ||
          raw.find('*', 1) != raw.size() - 1)
        throw Error(Err::Usage, "bad focus marker in \"" + raw + "\"");
      raw = raw.substr(1, raw.size() - 2);
      focussed = true;
    }
    if (focussed) {
      if (out.focus_index)
        throw Error(Err::Usage, "at most one focus marker per sentence");
      out.focus_index = out.tokens.size();
    }
    out.tokens.push_back(lower(raw));
  }
  if (out.tokens.empty()) throw Error(Err::Usage, "empty sentence");
  return out;
}

ParseResult parse_full(const std::vector<std::string>& tokens,
                       std::optional<std::size_t> focus_index, const Lexicon& lexicon) {
  if (tokens.empty()) throw Error(Err::Usage, "empty sentence");
  const int n = static_cast<int>(tokens.size());

  std::vector<Edge> edges;
  std::set<std::string> seen;
  std::map<int, std::vector<std::size_t>> by_start, by_end;
  std::deque<std::size_t> agenda;

  auto add_edge = [&](Edge e) {
    std::string key = edge_key(e.start, e.end, e.sign);
    if (!seen.insert(key).second) return;
    std::size_t id = edges.size();
    by_start[e.start].push_back(id);
    by_end[e.end].push_back(id);
    agenda.push_back(id);
    edges.push_back(std::move(e));
  };

  for (int i = 0; i < n; ++i) {
    bool focussed = focus_index && static_cast<int>(*focus_index) == i;
    for (auto& sign : seed_signs(tokens[i], focussed, lexicon))
      add_edge(Edge{i, i + 1, std::move(sign), leaf_tree(tokens[i], focussed)});
  }

  auto try_pair = [&](const Edge& head, const Edge& dep, Dir dir) {
    if (head.sign.pending.empty()) return;
    auto result = combine(head.sign, dep.sign, dir);
    if (!result) return;
    Edge e;
    e.start = dir == Dir::Left ? dep.start : head.start;
    e.end = dir == Dir::Left ? head.end : dep.end;
    e.tree = dir == Dir::Left ? node_tree(*result, dep.tree, head.tree)
                              : node_tree(*result, head.tree, dep.tree);
    e.sign = std::move(*result);
    add_edge(std::move(e));
  };

  while (!agenda.empty()) {
    std::size_t id = agenda.front();
    agenda.pop_front();
    // copy: edges may reallocate while new results are added
    Edge current = edges[id];

    // as head: look for dependents adjacent on the needed side
    if (!current.sign.pending.empty()) {
      Dir dir = current.sign.pending.front().dir;
      const auto& candidates = dir == Dir::Right ? by_start[current.end] : by_end[current.start];
      std::vector<std::size_t> snapshot(candidates.begin(), candidates.end());
      for (std::size_t dep_id : snapshot) try_pair(current, edges[dep_id], dir);
    }
    // as dependent: feed adjacent heads looking this way
    {
      std::vector<std::size_t> left(by_end[current.start].begin(), by_end[current.start].end());
      for (std::size_t head_id : left) try_pair(edges[head_id], current, Dir::Right);
      std::vector<std::size_t> right(by_start[current.end].begin(), by_start[current.end].end());
      for (std::size_t head_id : right) try_pair(edges[head_id], current, Dir::Left);
    }
  }

  ParseResult result;
  result.edge_count = edges.size();
  std::set<std::string> analysis_seen;
  for (const auto& e : edges) {
    std::ostringstream trace;
    trace << "[" << e.start << "," << e.end << ") " << grammar::category_name(e.sign.cat);
    for (const auto& slot : e.sign.pending) trace << " ?" << grammar::slot_to_string(slot);
    trace << " :: " << logic::pretty(e.sign.sem, logic::Format::Plain);
    result.chart_trace.push_back(trace.str());

    if (e.start != 0 || e.end != n || !is_sentence(e.sign)) continue;
    for (auto& a : analysis::analyses_of(e.sign, e.tree))
      if (analysis_seen.insert(analysis::analysis_key(a)).second)
        result.analyses.push_back(std::move(a));
  }
  if (result.analyses.empty())
    throw Error(Err::NoParse, "no parse");
  return result;
}

std::vector<Analysis> parse(const std::vector<std::string>& tokens,
                            std::optional<std::size_t> focus_index, const Lexicon& lexicon) {
  return parse_full(tokens, focus_index, lexicon).analyses;
}

std::vector<Analysis> parse_oracle(const std::vector<std::string>& tokens,
                                   std::optional<std::size_t> focus_index,
                                   const Lexicon& lexicon) {
  if (tokens.empty()) throw Error(Err::Usage, "empty sentence");
  if (tokens.size() > 8) throw Error(Err::Usage, "oracle parsing is limited to 8 tokens");
  const std::size_t n = tokens.size();

  struct Item {
    Sign sign;
    std::string tree;
  };
  // cell(i,j) holds all signs derivable over tokens [i,j)
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Item>> cell;
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> cell_seen;

  auto add = [&](std::size_t i, std::size_t j, Sign sign, std::string tree) {
    std::string key = grammar::sign_key(sign);
    if (!cell_seen[{i, j}].insert(key).second) return;
    cell[{i, j}].push_back(Item{std::move(sign), std::move(tree)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    bool focussed = focus_index && *focus_index == i;
    for (auto& sign : seed_signs(tokens[i], focussed, lexicon))
      add(i, i + 1, std::move(sign), leaf_tree(tokens[i], focussed));
  }

  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t j = i + len;
      for (std::size_t k = i + 1; k < j; ++k) {
        for (const auto& left : cell[{i, k}]) {
          for (const auto& right : cell[{k, j}]) {
            if (auto r = combine(left.sign, right.sign, Dir::Right)) {
              std::string tree = node_tree(*r, left.tree, right.tree);
              add(i, j, std::move(*r), std::move(tree));
            }
            if (auto r = combine(right.sign, left.sign, Dir::Left)) {
              std::string tree = node_tree(*r, left.tree, right.tree);
              add(i, j, std::move(*r), std::move(tree));
            }
          }
        }
      }
    }
  }

  std::vector<Analysis> out;
  std::set<std::string> seen;
  for (const auto& item : cell[{0, n}]) {
    if (!is_sentence(item.sign)) continue;
    for (auto& a : analysis::analyses_of(item.sign, item.tree))
      if (seen.insert(analysis::analysis_key(a)).second) out.push_back(std::move(a));
  }
  if (out.empty()) throw Error(Err::NoParse, "no parse");
  return out;
}

}  // namespace focuslog::parsing
