#include "pmaps/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmaps {

namespace {

// Serialize a tree given per-vertex ordered child lists and a root, returning
// the preorder kids array and old-id -> preorder-index map. `expected` is the
// number of reachable vertices (id space may be larger than the tree).
std::pair<PlaneTree, std::vector<std::int32_t>> serialize_tree(
    const std::vector<std::vector<std::int32_t>>& children, std::int32_t root,
    std::size_t expected) {
  const std::size_t m = expected;
  std::vector<std::int32_t> kids;
  kids.reserve(m);
  std::vector<std::int32_t> index(children.size(), -1);
  // Explicit stack of (vertex, next child position).
  std::vector<std::pair<std::int32_t, std::size_t>> stack;
  stack.emplace_back(root, 0);
  index[root] = 0;
  kids.push_back(static_cast<std::int32_t>(children[root].size()));
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (pos == children[v].size()) {
      stack.pop_back();
      continue;
    }
    const std::int32_t c = children[v][pos++];
    index[c] = static_cast<std::int32_t>(kids.size());
    kids.push_back(static_cast<std::int32_t>(children[c].size()));
    stack.emplace_back(c, 0);
  }
  if (kids.size() != m) throw std::logic_error("serialize_tree: not a tree");
  return {PlaneTree(std::move(kids)), std::move(index)};
}

}  // namespace

JsForward js_forward(const TwoTypeTree& two) {
  const PlaneTree& t = two.tree;
  const std::size_t m = t.size();
  if (m == 1) return {PlaneTree::singleton(), {0}};

  const auto depth = depths(t);
  const TreeLinks links = build_links(t);

  // img(w): a white vertex itself when it is a leaf, else its first child.
  auto img = [&](std::int32_t w) -> std::int32_t {
    return t.kids(w) == 0 ? w : links.first_child[w];
  };

  std::vector<std::vector<std::int32_t>> children(m);
  for (std::size_t v = 0; v < m; ++v) {
    if (depth[v] % 2 == 0) continue;  // whites become leaves
    auto& ch = children[v];
    ch.reserve(t.kids(v) + 1);
    for (std::int32_t c = links.first_child[v]; c != -1; c = links.next_sibling[c])
      ch.push_back(img(c));
    // The closing child: next sibling, or the white parent after the last one.
    ch.push_back(t.is_last_child(v) ? t.parent(v) : links.next_sibling[v]);
  }
  const std::int32_t new_root = links.first_child[0];
  auto [tree, index] = serialize_tree(children, new_root, m);
  return {std::move(tree), std::move(index)};
}

JsInverse js_inverse(const PlaneTree& one) {
  const std::size_t m = one.size();
  if (m == 1) return {TwoTypeTree(PlaneTree::singleton()), {0}};

  const TreeLinks links = build_links(one);

  // Leaf reached from v by following last children.
  std::vector<std::int32_t> chase(m);
  for (std::size_t r = m; r-- > 0;)
    chase[r] = one.kids(r) == 0 ? static_cast<std::int32_t>(r) : chase[links.last_child[r]];

  std::vector<std::vector<std::int32_t>> children(m);
  // White vertices (leaves of `one`): children = the maximal ancestor chain
  // v_1, ..., v_k above the leaf along last-child edges, shallowest first;
  // the deviating ancestor above the chain is the white vertex's parent.
  for (std::size_t u = 0; u < m; ++u) {
    if (one.kids(u) != 0) continue;
    std::vector<std::int32_t> chain;
    std::int32_t prev = static_cast<std::int32_t>(u);
    std::int32_t a = one.parent(u);
    while (a != -1 && links.last_child[a] == prev) {
      chain.push_back(a);
      prev = a;
      a = one.parent(a);
    }
    if (a != -1) chain.push_back(a);  // u* = the white vertex's parent edge target
    // chain is deep -> shallow; children exclude the parent a and run
    // shallow -> deep. For the new root (a == -1) all entries are children.
    const std::size_t nkids = a == -1 ? chain.size() : chain.size() - 1;
    auto& ch = children[u];
    ch.reserve(nkids);
    for (std::size_t j = 0; j < nkids; ++j) ch.push_back(chain[nkids - 1 - j]);
  }
  // Black vertices (internal in `one`): children = last-child chase of every
  // child but the last (which encodes the sibling/parent link).
  for (std::size_t v = 0; v < m; ++v) {
    const int k = one.kids(v);
    if (k == 0) continue;
    auto& ch = children[v];
    ch.reserve(k - 1);
    std::int32_t c = links.first_child[v];
    for (int j = 1; j < k; ++j, c = links.next_sibling[c]) ch.push_back(chase[c]);
  }

  const std::int32_t new_root = chase[0];  // last leaf of `one`
  auto [tree, index] = serialize_tree(children, new_root, m);
  return {TwoTypeTree(std::move(tree)), std::move(index)};
}

LabelledTree js_forward_labelled(const TwoTypeTree& two, const std::vector<std::int64_t>& labels) {
  if (!valid_two_type_labels(two.tree, labels))
    throw std::invalid_argument("invalid two-type labels");
  JsForward f = js_forward(two);
  std::vector<std::int64_t> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) out[f.index_map[v]] = labels[v];
  return LabelledTree{std::move(f.one), std::move(out)};
}

LabelledTwoType js_inverse_labelled(const LabelledTree& one) {
  if (!valid_one_type_labels(one.tree, one.labels))
    throw std::invalid_argument("invalid one-type labels");
  JsInverse f = js_inverse(one.tree);
  std::vector<std::int64_t> out(one.labels.size());
  for (std::size_t v = 0; v < one.labels.size(); ++v) out[f.index_map[v]] = one.labels[v];
  return LabelledTwoType{std::move(f.two), std::move(out)};
}

BdgMap bdg_build_map(const TwoTypeTree& two, const std::vector<std::int64_t>& labels,
                     Orientation eps) {
  const PlaneTree& t = two.tree;
  if (t.size() < 2) throw std::invalid_argument("bdg_build_map: singleton tree has no corners");
  if (!valid_two_type_labels(t, labels)) throw std::invalid_argument("invalid two-type labels");

  const auto whiteseq = white_contour_sequence(two);  // length N+1, last = root
  const std::size_t n = whiteseq.size() - 1;          // N corners 0..N-1

  // Dense white ids in first-visit order; star gets the last id.
  std::vector<std::int32_t> white_id(t.size(), -1);
  {
    std::int32_t nextid = 0;
    const auto depth = depths(t);
    for (std::size_t v = 0; v < t.size(); ++v)
      if (depth[v] % 2 == 0) white_id[v] = nextid++;
  }

  std::vector<std::int64_t> corner_label(n);
  std::int64_t min_label = labels[whiteseq[0]];
  for (std::size_t i = 0; i < n; ++i) {
    corner_label[i] = labels[whiteseq[i]];
    min_label = std::min(min_label, corner_label[i]);
  }

  // succ(i): next corner (cyclically) with label one less. Stack sweep over
  // the doubled sequence; corners at the minimum label point at the star.
  std::vector<std::int64_t> succ(n, -1);
  {
    std::vector<std::int32_t> stack;
    for (std::size_t pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < n; ++i) {
        while (!stack.empty() && corner_label[stack.back()] == corner_label[i] + 1) {
          if (succ[stack.back()] == -1) succ[stack.back()] = static_cast<std::int64_t>(i);
          stack.pop_back();
        }
        if (pass == 0 && corner_label[i] > min_label)
          stack.push_back(static_cast<std::int32_t>(i));
      }
    }
  }

  const std::int32_t n_white = [&] {
    std::int32_t c = 0;
    for (auto id : white_id)
      if (id >= 0) ++c;
    return c;
  }();
  const std::int32_t star = n_white;

  PlanarMap map;
  map.twin.resize(2 * n);
  map.next.assign(2 * n, -1);
  map.vertex.resize(2 * n);
  map.vertex_count = n_white + 1;
  map.star = star;
  // Arc i owns half-edges 2i (tail, at corner i) and 2i+1 (head).
  for (std::size_t i = 0; i < n; ++i) {
    map.twin[2 * i] = static_cast<std::int32_t>(2 * i + 1);
    map.twin[2 * i + 1] = static_cast<std::int32_t>(2 * i);
    map.vertex[2 * i] = white_id[whiteseq[i]];
    map.vertex[2 * i + 1] =
        corner_label[i] == min_label ? star : white_id[whiteseq[succ[i] % n]];
  }

  // Incoming half-edges per target corner, farthest origin first (incoming
  // arcs nest; the outermost one sits next to the outgoing arc).
  std::vector<std::vector<std::int32_t>> inbox(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (corner_label[i] == min_label) continue;
    inbox[succ[i] % n].push_back(static_cast<std::int32_t>(i));
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto& in = inbox[j];
    std::sort(in.begin(), in.end(), [&](std::int32_t a, std::int32_t b) {
      const std::size_t da = (j + n - a) % n, db = (j + n - b) % n;
      return da > db;
    });
  }

  // Counterclockwise rotation around each white vertex: corners in decreasing
  // contour time, fan [outgoing, incoming by decreasing origin distance].
  std::vector<std::vector<std::int32_t>> corners_of(n_white);
  for (std::size_t i = 0; i < n; ++i)
    corners_of[white_id[whiteseq[i]]].push_back(static_cast<std::int32_t>(i));
  std::vector<std::int32_t> fan;
  for (std::int32_t v = 0; v < n_white; ++v) {
    fan.clear();
    const auto& cs = corners_of[v];
    for (std::size_t idx = cs.size(); idx-- > 0;) {
      const std::int32_t i = cs[idx];
      fan.push_back(2 * i);
      for (auto origin : inbox[i]) fan.push_back(2 * origin + 1);
    }
    for (std::size_t k = 0; k < fan.size(); ++k)
      map.next[fan[k]] = fan[(k + 1) % fan.size()];
  }
  // Around the star: minimum-label corners in increasing contour time.
  fan.clear();
  for (std::size_t i = 0; i < n; ++i)
    if (corner_label[i] == min_label) fan.push_back(static_cast<std::int32_t>(2 * i + 1));
  for (std::size_t k = 0; k < fan.size(); ++k)
    map.next[fan[k]] = fan[(k + 1) % fan.size()];

  map.root = eps == Orientation::plus ? 0 : 1;

  BdgMap out;
  out.map = std::move(map);
  out.corners.corner_label = std::move(corner_label);
  out.corners.corner_vertex.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.corners.corner_vertex[i] = white_id[whiteseq[i]];
  out.white_vertex.assign(n_white, -1);
  for (std::size_t v = 0; v < t.size(); ++v)
    if (white_id[v] >= 0) out.white_vertex[white_id[v]] = static_cast<std::int32_t>(v);
  out.root_white = white_id[whiteseq[0]];
  return out;
}

BdgInverse bdg_inverse(const PlanarMap& map) {
  const auto report = audit(map);
  if (!report.ok()) throw std::invalid_argument("bdg_inverse: " + report.summary());
  if (map.star < 0) throw std::invalid_argument("bdg_inverse: map must be pointed");
  if (map.edge_count() < 1) throw std::invalid_argument("bdg_inverse: empty map");

  const auto dist = bfs_distances(map, map.star);
  const std::size_t h = map.twin.size();

  // Clockwise successor around the tail vertex.
  std::vector<std::int32_t> prev(h);
  for (std::size_t e = 0; e < h; ++e) prev[map.next[e]] = static_cast<std::int32_t>(e);

  // Face structure: orbits of h -> next[twin[h]].
  std::vector<std::int32_t> face_of(h, -1);
  std::int32_t nfaces = 0;
  for (std::size_t e = 0; e < h; ++e) {
    if (face_of[e] != -1) continue;
    std::int32_t x = static_cast<std::int32_t>(e);
    while (face_of[x] == -1) {
      face_of[x] = nfaces;
      x = map.next[map.twin[x]];
    }
    ++nfaces;
  }
  auto next_in_face = [&](std::int32_t e) { return map.next[map.twin[e]]; };
  auto down = [&](std::int32_t e) { return dist[map.vertex[e]] == dist[map.head(e)] + 1; };

  // Every edge joins consecutive distance levels in a bipartite map.
  for (std::size_t e = 0; e < h; ++e)
    if (std::abs(dist[map.vertex[e]] - dist[map.head(e)]) != 1)
      throw std::invalid_argument("bdg_inverse: edge within a distance level");

  const std::int32_t rt = map.root;
  const std::int32_t a = map.vertex[rt], b = map.head(rt);
  const std::int32_t root_white = dist[a] > dist[b] ? a : b;
  const Orientation eps = map.vertex[rt] == root_white ? Orientation::plus : Orientation::minus;
  const std::int32_t h00 = map.vertex[rt] == root_white ? rt : map.twin[rt];

  // Mobile vertex ids: whites = map vertices (star never appears), blacks =
  // vertex_count + face id.
  const std::int32_t nv = map.vertex_count;
  const std::size_t mobile_size = static_cast<std::size_t>(nv - 1) + nfaces;
  std::vector<std::vector<std::int32_t>> children(static_cast<std::size_t>(nv) + nfaces);
  std::vector<char> seen_white(nv, 0), seen_black(nfaces, 0);

  // Alternating expansion from the root white vertex. Around a white vertex
  // the black neighbours sit at its down half-edges, children in clockwise
  // order from the parent attachment (the root arc's own face opens the
  // root's list); around a face the white children sit at the down half-edges
  // met along the face walk after the parent attachment.
  struct Item {
    bool white;
    std::int32_t id;      // map vertex id (white) or face id (black)
    std::int32_t anchor;  // parent attachment half-edge
  };
  std::vector<Item> stack;
  stack.push_back({true, root_white, h00});
  seen_white[root_white] = 1;
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    if (it.white) {
      auto& ch = children[it.id];
      auto attach = [&](std::int32_t e) {
        const std::int32_t f = face_of[e];
        if (seen_black[f]) throw std::invalid_argument("bdg_inverse: not a mobile");
        seen_black[f] = 1;
        ch.push_back(nv + f);
        stack.push_back({false, f, e});
      };
      if (it.id == root_white) attach(it.anchor);  // the root arc's face leads
      std::int32_t e = prev[it.anchor];
      while (e != it.anchor) {
        if (down(e)) attach(e);
        e = prev[e];
      }
    } else {
      auto& ch = children[nv + it.id];
      std::int32_t e = next_in_face(it.anchor);
      while (e != it.anchor) {
        if (down(e)) {
          const std::int32_t w = map.vertex[e];
          if (w == map.star || seen_white[w])
            throw std::invalid_argument("bdg_inverse: not a mobile");
          seen_white[w] = 1;
          ch.push_back(w);
          stack.push_back({true, w, e});
        }
        e = next_in_face(e);
      }
    }
  }

  long long reached = 0;
  for (auto s : seen_white) reached += s;
  for (auto s : seen_black) reached += s;
  if (static_cast<std::size_t>(reached) != mobile_size)
    throw std::invalid_argument("bdg_inverse: mobile does not span the map");

  auto [tree, index] = serialize_tree(children, root_white, mobile_size);
  std::vector<std::int64_t> labels(tree.size(), 0);
  for (std::int32_t v = 0; v < nv; ++v)
    if (seen_white[v]) labels[index[v]] = dist[v] - dist[root_white];
  const auto depth = depths(tree);
  for (std::size_t v = 1; v < tree.size(); ++v)
    if (depth[v] % 2 == 1) labels[v] = labels[tree.parent(v)];  // blacks inherit

  TwoTypeTree two(std::move(tree));
  if (!valid_two_type_labels(two.tree, labels))
    throw std::invalid_argument("bdg_inverse: recovered labels are not a valid labelling");
  return BdgInverse{std::move(two), std::move(labels), eps};
}

}  // namespace pmaps
