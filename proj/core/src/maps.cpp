#include "pmaps/maps.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "pmaps/bijections.hpp"
#include "pmaps/sampling.hpp"

namespace pmaps {

std::string AuditReport::summary() const {
  std::ostringstream os;
  os << "V=" << vertices << " E=" << edges << " F=" << faces
     << " euler=" << (euler_ok ? "ok" : "FAIL") << " bipartite=" << (bipartite_ok ? "ok" : "FAIL")
     << " twin=" << (twin_ok ? "ok" : "FAIL") << " next=" << (next_ok ? "ok" : "FAIL")
     << " connected=" << (connected ? "ok" : "FAIL") << " degrees={";
  bool first = true;
  for (const auto& [deg, cnt] : face_degree_counts) {
    if (!first) os << ",";
    first = false;
    os << deg << ":" << cnt;
  }
  os << "}";
  return os.str();
}

AuditReport audit(const PlanarMap& map) {
  AuditReport r;
  const std::size_t h = map.twin.size();
  r.edges = static_cast<long long>(h) / 2;
  r.vertices = map.vertex_count;

  r.twin_ok = h % 2 == 0 && !map.twin.empty();
  for (std::size_t e = 0; e < h && r.twin_ok; ++e) {
    const std::int32_t t = map.twin[e];
    if (t < 0 || t >= static_cast<std::int32_t>(h) || t == static_cast<std::int32_t>(e) ||
        map.twin[t] != static_cast<std::int32_t>(e))
      r.twin_ok = false;
  }
  // next must be a permutation preserving the tail vertex.
  r.next_ok = true;
  std::vector<char> hit(h, 0);
  for (std::size_t e = 0; e < h && r.next_ok; ++e) {
    const std::int32_t nx = map.next[e];
    if (nx < 0 || nx >= static_cast<std::int32_t>(h) || hit[nx] ||
        map.vertex[nx] != map.vertex[e])
      r.next_ok = false;
    else
      hit[nx] = 1;
  }
  if (!r.twin_ok || !r.next_ok) return r;

  // Faces: orbits of h -> next[twin[h]].
  std::vector<char> seen(h, 0);
  bool all_even = true;
  for (std::size_t e = 0; e < h; ++e) {
    if (seen[e]) continue;
    long long deg = 0;
    std::int32_t x = static_cast<std::int32_t>(e);
    while (!seen[x]) {
      seen[x] = 1;
      ++deg;
      x = map.next[map.twin[x]];
    }
    ++r.faces;
    ++r.face_degree_counts[deg];
    if (deg % 2 != 0) all_even = false;
  }
  r.bipartite_ok = all_even;
  r.euler_ok = r.vertices - r.edges + r.faces == 2;

  // Connectivity over vertices.
  std::vector<std::vector<std::int32_t>> at(map.vertex_count);
  for (std::size_t e = 0; e < h; ++e) at[map.vertex[e]].push_back(static_cast<std::int32_t>(e));
  std::vector<char> vseen(map.vertex_count, 0);
  std::queue<std::int32_t> q;
  if (map.vertex_count > 0) {
    q.push(map.vertex[map.root >= 0 ? map.root : 0]);
    vseen[q.front()] = 1;
  }
  long long nseen = map.vertex_count > 0 ? 1 : 0;
  while (!q.empty()) {
    const std::int32_t v = q.front();
    q.pop();
    for (auto e : at[v]) {
      const std::int32_t w = map.head(e);
      if (!vseen[w]) {
        vseen[w] = 1;
        ++nseen;
        q.push(w);
      }
    }
  }
  r.connected = nseen == map.vertex_count;
  return r;
}

std::vector<std::int32_t> bfs_distances(const PlanarMap& map, std::int32_t source) {
  if (source < 0 || source >= map.vertex_count)
    throw std::invalid_argument("bfs_distances: bad source vertex");
  std::vector<std::vector<std::int32_t>> at(map.vertex_count);
  for (std::size_t e = 0; e < map.twin.size(); ++e)
    at[map.vertex[e]].push_back(static_cast<std::int32_t>(e));
  std::vector<std::int32_t> d(map.vertex_count, -1);
  std::vector<std::int32_t> queue;
  queue.reserve(map.vertex_count);
  d[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t v = queue[head];
    for (auto e : at[v]) {
      const std::int32_t w = map.head(e);
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
    }
  }
  for (auto x : d)
    if (x < 0) throw std::invalid_argument("bfs_distances: disconnected map");
  return d;
}

std::vector<std::int32_t> canonical_form(const PlanarMap& map) {
  const std::size_t h = map.twin.size();
  std::vector<std::int32_t> newid(h, -1);
  std::vector<std::int32_t> order;
  order.reserve(h);
  newid[map.root] = 0;
  order.push_back(map.root);
  // Deterministic BFS over the (next, twin) generators.
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::int32_t e = order[head];
    for (const std::int32_t g : {map.next[e], map.twin[e]}) {
      if (newid[g] < 0) {
        newid[g] = static_cast<std::int32_t>(order.size());
        order.push_back(g);
      }
    }
  }
  std::vector<std::int32_t> out;
  out.reserve(2 * h + 2);
  for (auto e : order) out.push_back(newid[map.next[e]]);
  for (auto e : order) out.push_back(newid[map.twin[e]]);
  // Pointing mark: canonical id of the star's half-edge fan, -1 if unpointed.
  std::int32_t mark = -1;
  if (map.star >= 0) {
    mark = static_cast<std::int32_t>(h);
    for (std::size_t e = 0; e < h; ++e)
      if (map.vertex[e] == map.star) mark = std::min(mark, newid[e]);
  }
  out.push_back(mark);
  return out;
}

bool maps_equal(const PlanarMap& a, const PlanarMap& b) {
  if (a.twin.size() != b.twin.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

long long label_distance_check(const PlanarMap& map, const std::vector<std::int64_t>& labels) {
  if (map.star < 0) throw std::invalid_argument("label_distance_check: map must be pointed");
  if (labels.size() != static_cast<std::size_t>(map.vertex_count))
    throw std::invalid_argument("label_distance_check: label/vertex mismatch");
  const auto d = bfs_distances(map, map.star);
  std::int64_t minl = 0;
  bool any = false;
  for (std::int32_t v = 0; v < map.vertex_count; ++v) {
    if (v == map.star) continue;
    minl = any ? std::min(minl, labels[v]) : labels[v];
    any = true;
  }
  long long worst = 0;
  for (std::int32_t v = 0; v < map.vertex_count; ++v) {
    if (v == map.star) continue;
    worst = std::max(worst, std::llabs(static_cast<long long>(d[v]) -
                                       static_cast<long long>(labels[v] - minl + 1)));
  }
  return worst;
}

long long distance_upper_bound_check(const PlanarMap& map, const CornerData& corners,
                                     long long pair_budget, Rng& rng, long long small_cap) {
  const std::size_t n = corners.corner_label.size();
  if (n == 0) return 0;
  const auto& lab = corners.corner_label;

  // Sparse-table min over the doubled label sequence for cyclic range minima.
  const std::size_t dn = 2 * n;
  std::vector<std::vector<std::int64_t>> table;
  table.emplace_back(dn);
  for (std::size_t i = 0; i < dn; ++i) table[0][i] = lab[i % n];
  for (std::size_t lvl = 1; (1u << lvl) <= dn; ++lvl) {
    const std::size_t len = 1u << lvl;
    table.emplace_back(dn - len + 1);
    for (std::size_t i = 0; i + len <= dn; ++i)
      table[lvl][i] = std::min(table[lvl - 1][i], table[lvl - 1][i + len / 2]);
  }
  auto range_min = [&](std::size_t lo, std::size_t hi) {  // inclusive, on doubled indices
    const std::size_t len = hi - lo + 1;
    std::size_t lvl = 0;
    while ((2u << lvl) <= len) ++lvl;
    return std::min(table[lvl][lo], table[lvl][hi + 1 - (1u << lvl)]);
  };
  auto bound = [&](std::size_t i, std::size_t j) {  // i <= j < n
    const std::int64_t inside = range_min(i, j);
    const std::int64_t outside = range_min(j, n + i);
    return lab[i] + lab[j] - 2 * std::max(inside, outside) + 2;
  };

  long long worst = 0;
  auto check_from = [&](std::size_t i, const std::vector<std::size_t>& targets) {
    const auto d = bfs_distances(map, corners.corner_vertex[i]);
    for (const std::size_t j : targets) {
      const auto [lo, hi] = std::minmax(i, j);
      const long long gap =
          static_cast<long long>(d[corners.corner_vertex[j]]) - bound(lo, hi);
      worst = std::max(worst, gap);
    }
  };

  if (static_cast<long long>(n) <= small_cap) {
    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    for (std::size_t i = 0; i < n; ++i) check_from(i, all);
  } else {
    // Grid of sampled sources x targets, ~pair_budget pairs total.
    std::size_t side = 1;
    while (side * side < static_cast<std::size_t>(pair_budget)) ++side;
    std::vector<std::size_t> targets(side);
    for (auto& t : targets) t = rng.below(n);
    for (std::size_t s = 0; s < side; ++s) check_from(rng.below(n), targets);
  }
  return worst;
}

PlanarMap sample_uniform_map(const DegreeSequence& ds, Rng& rng, bool pointed) {
  if (ds.edges() < 1) throw std::invalid_argument("sample_uniform_map: need at least one edge");
  const PlaneTree tree = sample_tree(ds, rng);
  const LabelledTree lt = label_tree(tree, rng);
  const LabelledTwoType two = js_inverse_labelled(lt);
  const Orientation eps = rng.coin() ? Orientation::plus : Orientation::minus;
  BdgMap built = bdg_build_map(two.two, two.labels, eps);
  if (!pointed) built.map.star = -1;
  return std::move(built.map);
}

}  // namespace pmaps
