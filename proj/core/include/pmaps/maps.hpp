#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pmaps/degree_sequence.hpp"
#include "pmaps/rng.hpp"

namespace pmaps {

// Rooted (optionally pointed) map in half-edge form. Half-edge ids are dense
// 0..2E-1; `twin` is a fixed-point-free involution, `next` the counter-
// clockwise successor around the tail vertex, `vertex` the tail vertex id.
// Faces are orbits of h -> next[twin[h]], never stored.
struct PlanarMap {
  std::vector<std::int32_t> twin;
  std::vector<std::int32_t> next;
  std::vector<std::int32_t> vertex;
  std::int32_t root = -1;
  std::int32_t star = -1;  // vertex id, -1 when unpointed
  std::int32_t vertex_count = 0;

  long long edge_count() const { return static_cast<long long>(twin.size()) / 2; }
  long long half_edge_count() const { return static_cast<long long>(twin.size()); }
  std::int32_t head(std::int32_t h) const { return vertex[twin[h]]; }
};

struct AuditReport {
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  bool twin_ok = false;
  bool next_ok = false;
  bool euler_ok = false;      // V - E + F == 2
  bool bipartite_ok = false;  // all face degrees even
  bool connected = false;
  std::map<long long, long long> face_degree_counts;  // degree -> count
  bool ok() const { return twin_ok && next_ok && euler_ok && bipartite_ok && connected; }
  std::string summary() const;
};

// Structural audit; failed checks are reported, not thrown.
AuditReport audit(const PlanarMap& map);

// Exact graph distances from `source`; throws on disconnected input.
std::vector<std::int32_t> bfs_distances(const PlanarMap& map, std::int32_t source);

// Root-preserving canonical form: breadth-first half-edge renumbering from
// the root; equal vectors == equal rooted (pointed) maps.
std::vector<std::int32_t> canonical_form(const PlanarMap& map);
bool maps_equal(const PlanarMap& a, const PlanarMap& b);

// max over non-star vertices of |d(star,v) - (label(v) - min label + 1)|.
// `labels` is indexed by map vertex id; the star entry is ignored.
long long label_distance_check(const PlanarMap& map, const std::vector<std::int64_t>& labels);

// Max violation of the corner-label distance bound
//   d(c_i, c_j) <= L(i) + L(j) - 2 max{min L[i..j], min L[j..N+i]} + 2
// over checked pairs of white-contour indices. All pairs when N <= small_cap,
// otherwise a grid of `pair_budget` sampled pairs.
struct CornerData {
  std::vector<std::int32_t> corner_vertex;  // contour index -> map vertex
  std::vector<std::int64_t> corner_label;   // white label process (period N)
};
long long distance_upper_bound_check(const PlanarMap& map, const CornerData& corners,
                                     long long pair_budget, Rng& rng,
                                     long long small_cap = 1000);

// sample_tree -> label_tree -> js_inverse -> bdg_build_map with a fair
// orientation coin. Uniform over pointed maps; unpointed drops the star.
PlanarMap sample_uniform_map(const DegreeSequence& ds, Rng& rng, bool pointed = true);

}  // namespace pmaps
