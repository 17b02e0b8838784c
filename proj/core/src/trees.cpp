#include "pmaps/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmaps {

PlaneTree::PlaneTree(std::vector<std::int32_t> kids) : kids_(std::move(kids)) {
  if (kids_.empty()) throw std::invalid_argument("plane tree needs at least one vertex");
  long long sum = 0;
  for (std::size_t j = 0; j < kids_.size(); ++j) {
    if (kids_[j] < 0) throw std::invalid_argument("negative child count");
    sum += kids_[j] - 1;
    if (j + 1 < kids_.size() && sum < 0)
      throw std::invalid_argument("invalid Lukasiewicz prefix in child counts");
  }
  if (sum != -1) throw std::invalid_argument("child counts do not close a tree");

  parent_.assign(kids_.size(), -1);
  child_rank_.assign(kids_.size(), 0);
  // stack of (vertex, children already attached)
  std::vector<std::pair<std::int32_t, std::int32_t>> stack;
  stack.reserve(64);
  for (std::size_t v = 0; v < kids_.size(); ++v) {
    if (v > 0) {
      auto& [p, used] = stack.back();
      parent_[v] = p;
      child_rank_[v] = ++used;
      if (used == kids_[p]) stack.pop_back();
    }
    if (kids_[v] > 0) stack.emplace_back(static_cast<std::int32_t>(v), 0);
  }
}

TreeLinks build_links(const PlaneTree& tree) {
  const std::size_t m = tree.size();
  TreeLinks links;
  links.first_child.assign(m, -1);
  links.next_sibling.assign(m, -1);
  links.last_child.assign(m, -1);
  std::vector<std::int32_t> prev_child(m, -1);
  for (std::size_t v = 1; v < m; ++v) {
    const std::int32_t p = tree.parent(v);
    if (tree.child_rank(v) == 1)
      links.first_child[p] = static_cast<std::int32_t>(v);
    else
      links.next_sibling[prev_child[p]] = static_cast<std::int32_t>(v);
    prev_child[p] = static_cast<std::int32_t>(v);
    if (tree.child_rank(v) == tree.kids(p)) links.last_child[p] = static_cast<std::int32_t>(v);
  }
  return links;
}

std::vector<std::int32_t> depths(const PlaneTree& tree) {
  std::vector<std::int32_t> d(tree.size(), 0);
  for (std::size_t v = 1; v < tree.size(); ++v) d[v] = d[tree.parent(v)] + 1;
  return d;
}

long long TwoTypeTree::white_count() const {
  const auto d = depths(tree);
  long long w = 0;
  for (auto x : d) w += (x % 2 == 0);
  return w;
}

DegreeSequence TwoTypeTree::black_degrees() const {
  const auto d = depths(tree);
  std::vector<long long> tally;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (d[v] % 2 == 0) continue;
    const int deg = tree.kids(v) + 1;  // blacks are never the root
    if (static_cast<std::size_t>(deg) >= tally.size()) tally.resize(deg + 1, 0);
    ++tally[deg];
  }
  std::vector<std::pair<int, long long>> counts;
  for (std::size_t i = 1; i < tally.size(); ++i)
    if (tally[i] > 0) counts.emplace_back(static_cast<int>(i), tally[i]);
  return DegreeSequence::from_counts(counts);
}

bool valid_one_type_labels(const PlaneTree& tree, const std::vector<std::int64_t>& labels) {
  if (labels.size() != tree.size()) return false;
  if (labels[0] != 0) return false;
  // Preorder does not keep siblings adjacent, so walk the children lists.
  const TreeLinks links = build_links(tree);
  for (std::size_t u = 0; u < tree.size(); ++u) {
    if (tree.kids(u) == 0) continue;
    std::int64_t prev = labels[u];
    std::int32_t c = links.first_child[u];
    std::int32_t last = -1;
    while (c != -1) {
      if (labels[c] - prev < -1) return false;
      prev = labels[c];
      last = c;
      c = links.next_sibling[c];
    }
    if (labels[last] != labels[u]) return false;
  }
  return true;
}

bool valid_two_type_labels(const PlaneTree& tree, const std::vector<std::int64_t>& labels) {
  if (labels.size() != tree.size()) return false;
  if (labels[0] != 0) return false;
  const auto d = depths(tree);
  const TreeLinks links = build_links(tree);
  for (std::size_t b = 0; b < tree.size(); ++b) {
    if (d[b] % 2 == 0) continue;  // whites constrained through their black neighbours
    const std::int32_t u = tree.parent(b);
    if (labels[b] != labels[u]) return false;  // blacks inherit the white parent's label
    std::int64_t prev = labels[u];
    std::int32_t c = links.first_child[b];
    while (c != -1) {
      if (labels[c] - prev < -1) return false;
      prev = labels[c];
      c = links.next_sibling[c];
    }
    if (labels[u] - prev < -1) return false;  // cyclic closure back to the parent
  }
  return true;
}

std::vector<std::int64_t> lukasiewicz_path(const PlaneTree& tree) {
  std::vector<std::int64_t> w(tree.size() + 1);
  w[0] = 0;
  for (std::size_t j = 0; j < tree.size(); ++j) w[j + 1] = w[j] + tree.kids(j) - 1;
  return w;
}

std::vector<std::int64_t> height_process(const PlaneTree& tree) {
  std::vector<std::int64_t> h(tree.size(), 0);
  for (std::size_t v = 1; v < tree.size(); ++v) h[v] = h[tree.parent(v)] + 1;
  return h;
}

// Both identities below run off the ancestor stack of the Lukasiewicz scan:
// i < j is an ancestor of j iff W(i) <= min W on (i, j].
std::vector<std::int64_t> height_from_lukasiewicz(const std::vector<std::int64_t>& w) {
  const std::size_t n = w.size() - 1;  // vertices
  std::vector<std::int64_t> h(n);
  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < n; ++j) {
    while (!stack.empty() && w[stack.back()] > w[j]) stack.pop_back();
    h[j] = static_cast<std::int64_t>(stack.size());
    stack.push_back(j);
  }
  return h;
}

std::vector<std::int64_t> modified_height_from_lukasiewicz(const std::vector<std::int64_t>& w) {
  const std::size_t n = w.size() - 1;
  std::vector<std::int64_t> ht(n);
  std::vector<std::size_t> stack;
  std::vector<char> strict;  // strict[t]: w[stack[t-1]] < w[stack[t]]
  std::int64_t ascents = 0;
  for (std::size_t j = 0; j < n; ++j) {
    while (!stack.empty() && w[stack.back()] > w[j]) {
      ascents -= strict.back();
      stack.pop_back();
      strict.pop_back();
    }
    ht[j] = ascents + (!stack.empty() && w[stack.back()] < w[j] ? 1 : 0);
    strict.push_back(!stack.empty() && w[stack.back()] < w[j] ? 1 : 0);
    ascents += strict.back();
    stack.push_back(j);
  }
  return ht;
}

std::vector<std::int32_t> contour_sequence(const PlaneTree& tree) {
  const TreeLinks links = build_links(tree);
  std::vector<std::int32_t> seq;
  seq.reserve(2 * tree.size() - 1);
  // Walk: descend to first unvisited child, else climb.
  std::int32_t v = 0;
  std::vector<std::int32_t> next_down(tree.size());
  for (std::size_t u = 0; u < tree.size(); ++u) next_down[u] = links.first_child[u];
  seq.push_back(0);
  while (true) {
    if (next_down[v] != -1) {
      const std::int32_t c = next_down[v];
      next_down[v] = links.next_sibling[c];
      v = c;
    } else if (tree.parent(v) != -1) {
      v = tree.parent(v);
    } else {
      break;
    }
    seq.push_back(v);
  }
  return seq;
}

std::vector<std::int64_t> contour_process(const PlaneTree& tree) {
  const auto seq = contour_sequence(tree);
  const auto d = depths(tree);
  std::vector<std::int64_t> c(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) c[j] = d[seq[j]];
  return c;
}

std::vector<std::int64_t> modified_height(const PlaneTree& tree) {
  // Htilde(v) = Htilde(parent) + [v is not its parent's last child].
  std::vector<std::int64_t> ht(tree.size(), 0);
  for (std::size_t v = 1; v < tree.size(); ++v)
    ht[v] = ht[tree.parent(v)] + (tree.is_last_child(v) ? 0 : 1);
  return ht;
}

std::vector<std::int32_t> white_contour_sequence(const TwoTypeTree& two) {
  const auto seq = contour_sequence(two.tree);
  std::vector<std::int32_t> white;
  white.reserve(seq.size() / 2 + 1);
  for (std::size_t j = 0; j < seq.size(); j += 2) white.push_back(seq[j]);
  return white;
}

std::vector<std::int64_t> white_contour(const TwoTypeTree& two) {
  const auto white = white_contour_sequence(two);
  const auto d = depths(two.tree);
  std::vector<std::int64_t> c(white.size());
  for (std::size_t k = 0; k < white.size(); ++k) c[k] = d[white[k]] / 2;
  return c;
}

std::vector<std::int64_t> white_label_process(const TwoTypeTree& two,
                                              const std::vector<std::int64_t>& labels) {
  const auto white = white_contour_sequence(two);
  std::vector<std::int64_t> l(white.size());
  for (std::size_t k = 0; k < white.size(); ++k) l[k] = labels[white[k]];
  return l;
}

EncodedPaths encode_paths(const PlaneTree& tree, const std::vector<std::int64_t>* labels) {
  EncodedPaths p;
  p.w = lukasiewicz_path(tree);
  p.h = height_process(tree);
  p.c = contour_process(tree);
  p.htilde = modified_height(tree);
  const TwoTypeTree two(tree);
  p.cwhite = white_contour(two);
  if (labels) {
    p.labels = *labels;
    p.labels_white = white_label_process(two, *labels);
  }
  return p;
}

SpineProfile spine_profile(const PlaneTree& tree, std::size_t v) {
  if (v >= tree.size()) throw std::invalid_argument("vertex index out of range");
  SpineProfile sp;
  std::int32_t cur = static_cast<std::int32_t>(v);
  while (tree.parent(cur) != -1) {
    const std::int32_t p = tree.parent(cur);
    sp.content.emplace_back(tree.kids(p), tree.child_rank(cur));
    ++sp.ancestors_by_kids[tree.kids(p)];
    cur = p;
  }
  std::reverse(sp.content.begin(), sp.content.end());
  sp.height = static_cast<long long>(sp.content.size());
  sp.lr = 1;
  for (const auto& [i, a] : sp.ancestors_by_kids) sp.lr += static_cast<long long>(i - 1) * a;
  return sp;
}

std::vector<std::int64_t> prefix_class_counts(const PlaneTree& tree,
                                              const std::set<int>& child_counts) {
  std::vector<std::int64_t> lam(tree.size() + 1);
  lam[0] = 0;
  for (std::size_t j = 0; j < tree.size(); ++j)
    lam[j + 1] = lam[j] + (child_counts.count(tree.kids(j)) ? 1 : 0);
  return lam;
}

}  // namespace pmaps
