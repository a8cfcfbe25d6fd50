#include "gapmatch/marking.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapmatch {

VerticalPathDecomposition decompose_vertical_paths(const SuffixTree& tree) {
  const int32_t n = tree.node_count();
  const std::vector<int32_t> order = tree.bfs_order();

  std::vector<int64_t> subtree(static_cast<size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int32_t p = tree.nodes[static_cast<size_t>(*it)].parent;
    if (p >= 0) subtree[static_cast<size_t>(p)] += subtree[static_cast<size_t>(*it)];
  }

  // Heaviest child continues the path; ties broken by smaller node index.
  std::vector<int32_t> heavy(static_cast<size_t>(n), -1);
  for (int32_t v = 0; v < n; ++v) {
    int32_t best = -1;
    for (const auto& [b, c] : tree.nodes[static_cast<size_t>(v)].children) {
      if (best < 0 || subtree[static_cast<size_t>(c)] > subtree[static_cast<size_t>(best)] ||
          (subtree[static_cast<size_t>(c)] == subtree[static_cast<size_t>(best)] && c < best))
        best = c;
    }
    heavy[static_cast<size_t>(v)] = best;
  }

  VerticalPathDecomposition dec;
  dec.path_of_node.assign(static_cast<size_t>(n), -1);
  dec.pos_in_path.assign(static_cast<size_t>(n), -1);
  for (int32_t v = 0; v < n; ++v) {
    const int32_t p = tree.nodes[static_cast<size_t>(v)].parent;
    const bool is_head = (v == SuffixTree::kRoot) || heavy[static_cast<size_t>(p)] != v;
    if (!is_head) continue;
    const int32_t pid = dec.path_count();
    dec.paths.emplace_back();
    dec.path_parent.push_back(p);
    for (int32_t w = v; w >= 0; w = heavy[static_cast<size_t>(w)]) {
      dec.path_of_node[static_cast<size_t>(w)] = pid;
      dec.pos_in_path[static_cast<size_t>(w)] = static_cast<int32_t>(dec.paths[static_cast<size_t>(pid)].size());
      dec.paths[static_cast<size_t>(pid)].push_back(w);
    }
  }
  return dec;
}

int32_t max_root_path_crossings(const SuffixTree& tree, const VerticalPathDecomposition& dec) {
  std::vector<int32_t> crossings(static_cast<size_t>(tree.node_count()), 0);
  int32_t best = 0;
  for (int32_t v : tree.bfs_order()) {
    const int32_t p = tree.nodes[static_cast<size_t>(v)].parent;
    if (p < 0)
      crossings[static_cast<size_t>(v)] = 1;
    else
      crossings[static_cast<size_t>(v)] =
          crossings[static_cast<size_t>(p)] +
          (dec.path_of_node[static_cast<size_t>(v)] != dec.path_of_node[static_cast<size_t>(p)] ? 1 : 0);
    best = std::max(best, crossings[static_cast<size_t>(v)]);
  }
  return best;
}

MarkAssignment assign_marks(const SuffixTree& tree, const VerticalPathDecomposition& dec,
                            const std::vector<int32_t>& marked_nodes, MarkScheme scheme) {
  const int32_t n = tree.node_count();
  std::vector<char> is_marked(static_cast<size_t>(n), 0);
  for (int32_t v : marked_nodes) is_marked[static_cast<size_t>(v)] = 1;

  MarkAssignment a;
  a.scheme = scheme;
  a.mark_of_node.assign(static_cast<size_t>(n), -1);

  if (scheme == MarkScheme::VerticalPath) {
    a.path_first_mark.assign(dec.paths.size(), -1);
    a.path_marked_pos.assign(dec.paths.size(), {});
    for (size_t pid = 0; pid < dec.paths.size(); ++pid) {
      for (int32_t v : dec.paths[pid]) {
        if (!is_marked[static_cast<size_t>(v)]) continue;
        const int32_t m = a.count++;
        a.node_of_mark.push_back(v);
        a.mark_of_node[static_cast<size_t>(v)] = m;
        if (a.path_first_mark[pid] < 0) a.path_first_mark[pid] = m;
        a.path_marked_pos[pid].push_back(dec.pos_in_path[static_cast<size_t>(v)]);
      }
    }
    return a;
  }

  // Bfs scheme: level order over marked nodes, ties by node index.
  std::vector<int32_t> depth(static_cast<size_t>(n), 0);
  const std::vector<int32_t> order = tree.bfs_order();
  for (int32_t v : order) {
    const int32_t p = tree.nodes[static_cast<size_t>(v)].parent;
    depth[static_cast<size_t>(v)] = p < 0 ? 0 : depth[static_cast<size_t>(p)] + 1;
  }
  std::vector<int32_t> marked;
  for (int32_t v = 0; v < n; ++v)
    if (is_marked[static_cast<size_t>(v)]) marked.push_back(v);
  std::sort(marked.begin(), marked.end(), [&](int32_t x, int32_t y) {
    if (depth[static_cast<size_t>(x)] != depth[static_cast<size_t>(y)])
      return depth[static_cast<size_t>(x)] < depth[static_cast<size_t>(y)];
    return x < y;
  });
  for (int32_t v : marked) {
    const int32_t m = a.count++;
    a.node_of_mark.push_back(v);
    a.mark_of_node[static_cast<size_t>(v)] = m;
  }

  a.nearest_mark_at_or_self.assign(static_cast<size_t>(n), -1);
  for (int32_t v : order) {
    if (a.mark_of_node[static_cast<size_t>(v)] >= 0) {
      a.nearest_mark_at_or_self[static_cast<size_t>(v)] = a.mark_of_node[static_cast<size_t>(v)];
    } else {
      const int32_t p = tree.nodes[static_cast<size_t>(v)].parent;
      if (p >= 0) a.nearest_mark_at_or_self[static_cast<size_t>(v)] = a.nearest_mark_at_or_self[static_cast<size_t>(p)];
    }
  }
  a.prev_mark.assign(static_cast<size_t>(a.count), -1);
  for (int32_t m = 0; m < a.count; ++m) {
    const int32_t p = tree.nodes[static_cast<size_t>(a.node_of_mark[static_cast<size_t>(m)])].parent;
    if (p >= 0) a.prev_mark[static_cast<size_t>(m)] = a.nearest_mark_at_or_self[static_cast<size_t>(p)];
  }
  return a;
}

std::vector<int32_t> locate_subpattern_nodes(const SuffixTree& tree,
                                             const std::vector<std::string>& subpatterns) {
  std::vector<int32_t> out;
  out.reserve(subpatterns.size());
  for (const std::string& w : subpatterns) {
    int32_t v = SuffixTree::kRoot;
    size_t matched = 0;
    while (matched < w.size()) {
      const int32_t c = tree.nodes[static_cast<size_t>(v)].child(static_cast<unsigned char>(w[matched]));
      if (c < 0) throw std::logic_error("subpattern descent failed: missing edge");
      const auto& nd = tree.nodes[static_cast<size_t>(c)];
      const size_t take = static_cast<size_t>(nd.edge_length());
      if (take > w.size() - matched)
        throw std::logic_error("subpattern locus is not explicit");
      for (size_t k = 0; k < take; ++k)
        if (tree.byte_at(nd.edge_start + static_cast<int32_t>(k)) != static_cast<unsigned char>(w[matched + k]))
          throw std::logic_error("subpattern descent failed: label mismatch");
      matched += take;
      v = c;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<MarkInterval> path_mark_intervals(const MarkAssignment& assign,
                                              const VerticalPathDecomposition& dec,
                                              int32_t locus_node) {
  if (assign.scheme != MarkScheme::VerticalPath)
    throw std::logic_error("path_mark_intervals requires the vertical-path scheme");
  std::vector<MarkInterval> out;
  int32_t v = locus_node;
  while (v >= 0) {
    const int32_t pid = dec.path_of_node[static_cast<size_t>(v)];
    const auto& marked = assign.path_marked_pos[static_cast<size_t>(pid)];
    const int32_t pos = dec.pos_in_path[static_cast<size_t>(v)];
    if (!marked.empty() && marked.front() <= pos) {
      const auto it = std::upper_bound(marked.begin(), marked.end(), pos);
      const int32_t k = static_cast<int32_t>(it - marked.begin()) - 1;
      const int32_t first = assign.path_first_mark[static_cast<size_t>(pid)];
      out.push_back({first, first + k});
    }
    v = dec.path_parent[static_cast<size_t>(pid)];
  }
  return out;
}

int32_t deepest_marked_ancestor(const MarkAssignment& assign, int32_t node) {
  if (assign.scheme != MarkScheme::Bfs)
    throw std::logic_error("deepest_marked_ancestor requires the BFS scheme");
  return assign.nearest_mark_at_or_self[static_cast<size_t>(node)];
}

std::pair<PatternLinks, std::vector<GridPoint>> build_pattern_links(
    const std::vector<int32_t>& p1r_nodes, const std::vector<int32_t>& p2_nodes,
    const MarkAssignment& assign_f, const MarkAssignment& assign_s) {
  PatternLinks links;
  links.a_f.assign(static_cast<size_t>(assign_f.count), {});
  links.a_s.assign(static_cast<size_t>(assign_s.count), {});
  std::vector<GridPoint> points;
  points.reserve(p1r_nodes.size());
  for (size_t i = 0; i < p1r_nodes.size(); ++i) {
    const int32_t g = assign_f.mark_of_node[static_cast<size_t>(p1r_nodes[i])];
    const int32_t h = assign_s.mark_of_node[static_cast<size_t>(p2_nodes[i])];
    if (g < 0 || h < 0) throw std::logic_error("pattern locus is unmarked");
    links.a_f[static_cast<size_t>(g)].push_back({static_cast<int32_t>(i), h});
    links.a_s[static_cast<size_t>(h)].push_back({static_cast<int32_t>(i), g});
    points.push_back({g, h, static_cast<int32_t>(i)});
  }
  return {std::move(links), std::move(points)};
}

}  // namespace gapmatch
