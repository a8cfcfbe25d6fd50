#include "gapmatch/suffix_tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gapmatch {

int32_t SuffixTree::Node::child(unsigned char b) const {
  auto it = std::lower_bound(children.begin(), children.end(), b,
                             [](const auto& e, unsigned char key) { return e.first < key; });
  return (it != children.end() && it->first == b) ? it->second : -1;
}

void SuffixTree::Node::set_child(unsigned char b, int32_t node) {
  auto it = std::lower_bound(children.begin(), children.end(), b,
                             [](const auto& e, unsigned char key) { return e.first < key; });
  if (it != children.end() && it->first == b)
    it->second = node;
  else
    children.insert(it, {b, node});
}

std::vector<int32_t> SuffixTree::bfs_order() const {
  std::vector<int32_t> order;
  order.reserve(nodes.size());
  order.push_back(kRoot);
  for (size_t i = 0; i < order.size(); ++i)
    for (const auto& [b, c] : nodes[static_cast<size_t>(order[i])].children) order.push_back(c);
  return order;
}

namespace {

void compute_string_depths(SuffixTree& t) {
  for (int32_t v : t.bfs_order()) {
    auto& nd = t.nodes[static_cast<size_t>(v)];
    nd.string_depth = (v == SuffixTree::kRoot)
                          ? 0
                          : t.nodes[static_cast<size_t>(nd.parent)].string_depth + nd.edge_length();
  }
}

// Descends from `from` spelling text[s, e); the walk must end exactly on an
// explicit node, anything else is a structural bug.
int32_t walk_down(const SuffixTree& t, int32_t from, int32_t s, int32_t e) {
  int32_t v = from;
  while (s < e) {
    const int32_t c = t.nodes[static_cast<size_t>(v)].child(t.byte_at(s));
    if (c < 0) throw std::logic_error("suffix link walk: missing child");
    const int32_t len = t.nodes[static_cast<size_t>(c)].edge_length();
    if (len > e - s) throw std::logic_error("suffix link walk: target is not explicit");
    v = c;
    s += len;
  }
  return v;
}

// Fills suffix links for every non-leaf node that still lacks one (nodes
// created by edge splitting, plus any leftover from construction).
void complete_suffix_links(SuffixTree& t) {
  for (int32_t v : t.bfs_order()) {
    auto& nd = t.nodes[static_cast<size_t>(v)];
    if (v == SuffixTree::kRoot) {
      nd.suffix_link = SuffixTree::kRoot;
      continue;
    }
    if (nd.is_leaf() || nd.suffix_link >= 0) continue;
    const int32_t p = nd.parent;
    if (p == SuffixTree::kRoot)
      nd.suffix_link = walk_down(t, SuffixTree::kRoot, nd.edge_start + 1, nd.edge_end);
    else
      nd.suffix_link = walk_down(t, t.nodes[static_cast<size_t>(p)].suffix_link, nd.edge_start, nd.edge_end);
  }
}

}  // namespace

SuffixTree build_suffix_tree(std::string_view input) {
  SuffixTree t;
  t.text.assign(input.data(), input.size());
  t.text.push_back(static_cast<char>(kSeparator));
  const int32_t n = static_cast<int32_t>(t.text.size());

  auto& nodes = t.nodes;
  nodes.reserve(2 * static_cast<size_t>(n) + 8);
  nodes.emplace_back();  // root
  nodes[0].suffix_link = SuffixTree::kRoot;

  int32_t phase_end = 0;  // leaves implicitly run to here during construction
  auto edge_len = [&](int32_t v) {
    const auto& nd = nodes[static_cast<size_t>(v)];
    return (nd.edge_end < 0 ? phase_end : nd.edge_end) - nd.edge_start;
  };
  auto make_node = [&](int32_t parent, int32_t start, int32_t end) {
    SuffixTree::Node nd;
    nd.parent = parent;
    nd.edge_start = start;
    nd.edge_end = end;
    nodes.push_back(std::move(nd));
    return static_cast<int32_t>(nodes.size() - 1);
  };

  int32_t active_node = SuffixTree::kRoot;
  int32_t active_edge = 0;  // index into text of the active edge's first byte
  int32_t active_len = 0;
  int32_t remainder = 0;

  for (int32_t pos = 0; pos < n; ++pos) {
    phase_end = pos + 1;
    const unsigned char c = t.byte_at(pos);
    ++remainder;
    int32_t pending_link = -1;

    while (remainder > 0) {
      if (active_len == 0) active_edge = pos;
      const int32_t nxt = nodes[static_cast<size_t>(active_node)].child(t.byte_at(active_edge));
      if (nxt < 0) {
        const int32_t leaf = make_node(active_node, pos, -1);
        nodes[static_cast<size_t>(active_node)].set_child(c, leaf);
        if (pending_link >= 0) {
          nodes[static_cast<size_t>(pending_link)].suffix_link = active_node;
          pending_link = -1;
        }
      } else {
        const int32_t el = edge_len(nxt);
        if (active_len >= el) {  // canonicalize: step over the whole edge
          active_edge += el;
          active_len -= el;
          active_node = nxt;
          continue;
        }
        if (t.byte_at(nodes[static_cast<size_t>(nxt)].edge_start + active_len) == c) {
          ++active_len;  // already present: end of phase
          if (pending_link >= 0) {
            nodes[static_cast<size_t>(pending_link)].suffix_link = active_node;
            pending_link = -1;
          }
          break;
        }
        const int32_t split = make_node(active_node, nodes[static_cast<size_t>(nxt)].edge_start,
                                        nodes[static_cast<size_t>(nxt)].edge_start + active_len);
        nodes[static_cast<size_t>(active_node)].set_child(
            t.byte_at(nodes[static_cast<size_t>(split)].edge_start), split);
        nodes[static_cast<size_t>(nxt)].edge_start += active_len;
        nodes[static_cast<size_t>(nxt)].parent = split;
        nodes[static_cast<size_t>(split)].set_child(
            t.byte_at(nodes[static_cast<size_t>(nxt)].edge_start), nxt);
        const int32_t leaf = make_node(split, pos, -1);
        nodes[static_cast<size_t>(split)].set_child(c, leaf);
        if (pending_link >= 0) nodes[static_cast<size_t>(pending_link)].suffix_link = split;
        pending_link = split;
      }
      --remainder;
      if (active_node == SuffixTree::kRoot && active_len > 0) {
        --active_len;
        active_edge = pos - remainder + 1;
      } else if (active_node != SuffixTree::kRoot) {
        const int32_t link = nodes[static_cast<size_t>(active_node)].suffix_link;
        active_node = link >= 0 ? link : SuffixTree::kRoot;
      }
    }
  }

  for (auto& nd : nodes)
    if (nd.edge_end < 0) nd.edge_end = n;
  compute_string_depths(t);
  complete_suffix_links(t);
  return t;
}

void split_separator_edges(SuffixTree& tree) {
  const int32_t n = static_cast<int32_t>(tree.text.size());
  // next_sep[i] = smallest j >= i with text[j] == separator, or n
  std::vector<int32_t> next_sep(static_cast<size_t>(n) + 1);
  next_sep[static_cast<size_t>(n)] = n;
  for (int32_t i = n - 1; i >= 0; --i)
    next_sep[static_cast<size_t>(i)] = (tree.byte_at(i) == kSeparator) ? i : next_sep[static_cast<size_t>(i) + 1];

  // Walk the separator-free paths only: those are the paths scans and
  // subpattern descents can reach. An edge met there whose label hides a
  // separator at offset > 0 gets one explicit node in front of that first
  // separator, which is exactly where a subpattern boundary can sit. Edges
  // hanging below a separator are never entered by queries and stay as-is.
  std::vector<int32_t> stack = {SuffixTree::kRoot};
  while (!stack.empty()) {
    const int32_t v = stack.back();
    stack.pop_back();
    const auto children = tree.nodes[static_cast<size_t>(v)].children;  // snapshot; we relink below
    for (const auto& [b, c] : children) {
      if (b == kSeparator) continue;
      const int32_t st = tree.nodes[static_cast<size_t>(c)].edge_start;
      const int32_t en = tree.nodes[static_cast<size_t>(c)].edge_end;
      const int32_t j = next_sep[static_cast<size_t>(st)];
      if (j >= en) {
        stack.push_back(c);
        continue;
      }
      SuffixTree::Node mid;
      mid.parent = v;
      mid.edge_start = st;
      mid.edge_end = j;
      mid.from_split = true;
      mid.children.push_back({kSeparator, c});
      const int32_t w = static_cast<int32_t>(tree.nodes.size());
      tree.nodes.push_back(std::move(mid));
      tree.nodes[static_cast<size_t>(v)].set_child(b, w);
      tree.nodes[static_cast<size_t>(c)].parent = w;
      tree.nodes[static_cast<size_t>(c)].edge_start = j;
    }
  }
  compute_string_depths(tree);
  complete_suffix_links(tree);
}

std::vector<Locus> matching_statistics(const SuffixTree& t, std::string_view query, MsStats* stats) {
  const int32_t qn = static_cast<int32_t>(query.size());
  std::vector<Locus> out(static_cast<size_t>(qn));
  const auto& nodes = t.nodes;

  int32_t u = SuffixTree::kRoot;  // deepest explicit node with string_depth <= l
  int32_t cur_child = -1;         // edge we are inside when l > depth(u)
  int32_t l = 0;                  // matched length for the current position

  for (int32_t p = 0; p < qn; ++p) {
    if (p > 0 && l > 0) {
      // Drop the first matched symbol: suffix-link hop, then skip/count down
      // the text range that spelled the mid-edge part.
      int32_t rem = l - nodes[static_cast<size_t>(u)].string_depth;
      int32_t es = (rem > 0) ? nodes[static_cast<size_t>(cur_child)].edge_start : 0;
      int32_t w;
      if (u == SuffixTree::kRoot) {
        w = SuffixTree::kRoot;  // whole match sits on a root edge; skip its first byte
        es += 1;
        rem -= 1;
      } else {
        w = nodes[static_cast<size_t>(u)].suffix_link;
        if (stats) ++stats->link_hops;
      }
      --l;
      u = w;
      cur_child = -1;
      while (rem > 0) {
        const int32_t c = nodes[static_cast<size_t>(u)].child(t.byte_at(es));
        assert(c >= 0);
        const int32_t el = nodes[static_cast<size_t>(c)].edge_length();
        if (stats) ++stats->descend_steps;
        if (el <= rem) {
          u = c;
          es += el;
          rem -= el;
        } else {
          cur_child = c;
          break;
        }
      }
    }

    while (p + l < qn) {
      const unsigned char qc = static_cast<unsigned char>(query[static_cast<size_t>(p + l)]);
      const int32_t off = l - nodes[static_cast<size_t>(u)].string_depth;
      if (off == 0) {
        const int32_t c = nodes[static_cast<size_t>(u)].child(qc);
        if (c < 0) break;
        if (stats) ++stats->symbol_comparisons;
        cur_child = c;
        ++l;
        if (nodes[static_cast<size_t>(c)].edge_length() == 1) {
          u = c;
          cur_child = -1;
        }
      } else {
        if (stats) ++stats->symbol_comparisons;
        if (t.byte_at(nodes[static_cast<size_t>(cur_child)].edge_start + off) != qc) break;
        ++l;
        if (off + 1 == nodes[static_cast<size_t>(cur_child)].edge_length()) {
          u = cur_child;
          cur_child = -1;
        }
      }
    }

    out[static_cast<size_t>(p)] = Locus{u, l};
  }
  return out;
}

}  // namespace gapmatch
