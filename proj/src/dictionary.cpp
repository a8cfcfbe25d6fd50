#include "gapmatch/dictionary.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

namespace gapmatch {

namespace {

bool parse_header(const std::string& line, int64_t& alpha, int64_t& beta) {
  std::istringstream ss(line);
  std::string rest;
  if (!(ss >> alpha >> beta)) return false;
  if (ss >> rest) return false;  // trailing tokens
  return alpha >= 0 && beta >= 0;
}

}  // namespace

Dictionary parse_dictionary(std::istream& in) {
  Dictionary dict;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::map<std::pair<std::string, std::string>, int32_t> canonical_of;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    if (!have_header) {
      int64_t alpha = 0, beta = 0;
      if (!parse_header(line, alpha, beta))
        throw ParseError(line_no, "malformed header (expected '<alpha> <beta>')");
      if (alpha > beta) throw ParseError(line_no, "alpha > beta");
      dict.bounds.alpha = static_cast<int32_t>(alpha);
      dict.bounds.beta = static_cast<int32_t>(beta);
      have_header = true;
      continue;
    }

    const size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(line_no, "missing TAB between subpatterns");
    std::string p1 = line.substr(0, tab);
    std::string p2 = line.substr(tab + 1);
    if (p1.empty() || p2.empty()) throw ParseError(line_no, "empty subpattern");
    if (p2.find('\t') != std::string::npos)
      throw ParseError(line_no, "subpattern contains TAB");
    const char sep = static_cast<char>(kSeparator);
    if (p1.find(sep) != std::string::npos || p2.find(sep) != std::string::npos)
      throw ParseError(line_no, "subpattern contains reserved separator byte 0x00");

    const int32_t original_id = ++dict.original_count;
    auto key = std::make_pair(p1, p2);
    auto it = canonical_of.find(key);
    if (it == canonical_of.end()) {
      canonical_of.emplace(std::move(key), dict.d());
      dict.patterns.push_back({original_id, std::move(p1), std::move(p2)});
      dict.aliases.push_back({original_id});
    } else {
      dict.aliases[it->second].push_back(original_id);
    }
  }

  if (!have_header) throw ParseError(line_no + 1, "malformed header (expected '<alpha> <beta>')");
  if (dict.patterns.empty()) throw ParseError(line_no + 1, "empty dictionary (no pattern lines)");

  dict.total_len = 0;
  dict.min_p1 = std::numeric_limits<int32_t>::max();
  int64_t max_pair = 0;
  for (const auto& p : dict.patterns) {
    const auto l1 = static_cast<int64_t>(p.p1.size());
    const auto l2 = static_cast<int64_t>(p.p2.size());
    dict.total_len += l1 + l2;
    dict.min_p1 = std::min(dict.min_p1, static_cast<int32_t>(l1));
    max_pair = std::max(max_pair, l1 + l2);
  }
  dict.max_span = max_pair + dict.bounds.beta;
  return dict;
}

Dictionary parse_dictionary(std::string_view data) {
  std::istringstream ss{std::string(data)};
  return parse_dictionary(ss);
}

std::string serialize_dictionary(const Dictionary& dict) {
  std::vector<const GappedPattern*> by_original(static_cast<size_t>(dict.original_count), nullptr);
  for (size_t c = 0; c < dict.patterns.size(); ++c)
    for (int32_t id : dict.aliases[c]) by_original[static_cast<size_t>(id - 1)] = &dict.patterns[c];

  std::string out = std::to_string(dict.bounds.alpha) + " " + std::to_string(dict.bounds.beta) + "\n";
  for (const GappedPattern* p : by_original) {
    out += p->p1;
    out += '\t';
    out += p->p2;
    out += '\n';
  }
  return out;
}

std::string concatenate_side(const Dictionary& dict, Side side) {
  std::string out;
  out.reserve(static_cast<size_t>(dict.total_len) + dict.patterns.size());
  for (size_t i = 0; i < dict.patterns.size(); ++i) {
    if (i > 0) out.push_back(static_cast<char>(kSeparator));
    out += (side == Side::First) ? dict.patterns[i].p1 : dict.patterns[i].p2;
  }
  return out;
}

}  // namespace gapmatch
