#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "pmaps/bijections.hpp"
#include "pmaps/io.hpp"
#include "pmaps/maps.hpp"
#include "pmaps/sampling.hpp"

using namespace pmaps;

namespace {

BdgMap one_edge_map(Orientation eps = Orientation::plus) {
  return bdg_build_map(TwoTypeTree(PlaneTree({1, 0})), {0, 0}, eps);
}

BdgMap two_cycle_map() {
  return bdg_build_map(TwoTypeTree(PlaneTree({2, 0, 0})), {0, 0, 0}, Orientation::plus);
}

}  // namespace

TEST_CASE("bfs distances") {
  const auto m1 = one_edge_map();
  CHECK(bfs_distances(m1.map, 0) == std::vector<std::int32_t>{0, 1});
  CHECK(bfs_distances(m1.map, 1) == std::vector<std::int32_t>{1, 0});
  const auto m2 = two_cycle_map();
  const auto d = bfs_distances(m2.map, m2.map.star);
  CHECK(d[m2.map.star] == 0);
  for (std::int32_t v = 0; v < m2.map.vertex_count; ++v)
    if (v != m2.map.star) CHECK(d[v] == 1);
  CHECK_THROWS(bfs_distances(m1.map, 9));
  // |d(u) - d(v)| <= 1 across every edge.
  for (std::size_t h = 0; h < m2.map.twin.size(); ++h)
    CHECK(std::abs(d[m2.map.vertex[h]] - d[m2.map.head(h)]) <= 1);
}

TEST_CASE("audit hand examples") {
  const auto r1 = audit(one_edge_map().map);
  CHECK(r1.ok());
  CHECK(r1.vertices == 2);
  CHECK(r1.edges == 1);
  CHECK(r1.faces == 1);
  CHECK(r1.face_degree_counts == std::map<long long, long long>{{2, 1}});

  Rng rng(5150);
  const auto ds = DegreeSequence::from_counts({{2, 2}});  // two degree-4 faces
  for (int rep = 0; rep < 10; ++rep) {
    const PlanarMap m = sample_uniform_map(ds, rng);
    const auto r = audit(m);
    CHECK(r.ok());
    CHECK(r.faces == 2);
    CHECK(r.edges == 4);
    CHECK(r.vertices == 4);  // n_0 = 1 + 4 - 2 = 3, plus the star
    CHECK(r.face_degree_counts == std::map<long long, long long>{{4, 2}});
  }
}

TEST_CASE("audit flags broken structure") {
  auto m = one_edge_map().map;
  m.twin[0] = 0;  // fixed point
  CHECK(!audit(m).ok());
}

TEST_CASE("label-distance identity and negative control") {
  CHECK(label_distance_check(one_edge_map().map, {0, 0}) == 0);
  Rng rng(808);
  const auto ds = DegreeSequence::angulation(2, 100);
  for (int rep = 0; rep < 10; ++rep) {
    const auto lt = label_tree(sample_tree(ds, rng), rng);
    const auto two = js_inverse_labelled(lt);
    const BdgMap built = bdg_build_map(two.two, two.labels, Orientation::plus);
    std::vector<std::int64_t> labels(built.map.vertex_count, 0);
    for (std::size_t i = 0; i < built.corners.corner_vertex.size(); ++i)
      labels[built.corners.corner_vertex[i]] = built.corners.corner_label[i];
    CHECK(label_distance_check(built.map, labels) == 0);
    labels[built.root_white] += 1;  // corrupt one label
    CHECK(label_distance_check(built.map, labels) > 0);
  }
}

TEST_CASE("corner distance bound") {
  Rng rng(99);
  {
    const auto m = one_edge_map();
    CHECK(distance_upper_bound_check(m.map, m.corners, 0, rng) <= 0);
  }
  for (const auto& t : testing::all_trees_up_to(4)) {
    if (t.size() == 1) continue;
    for (const auto& labels : enumerate_labellings(t)) {
      const auto two = js_inverse_labelled(LabelledTree{t, labels});
      const BdgMap built = bdg_build_map(two.two, two.labels, Orientation::plus);
      CHECK(distance_upper_bound_check(built.map, built.corners, 0, rng) <= 0);
    }
  }
  // Sampled pairs on larger instances, up to 10^4 edges.
  for (int rep = 0; rep < 10; ++rep) {
    const auto ds = rep % 2 ? DegreeSequence::angulation(3, 1700)
                            : DegreeSequence::angulation(2, 5000);
    const auto lt = label_tree(sample_tree(ds, rng), rng);
    const auto two = js_inverse_labelled(lt);
    const BdgMap built = bdg_build_map(two.two, two.labels, Orientation::minus);
    std::vector<std::int64_t> labels(built.map.vertex_count, 0);
    for (std::size_t i = 0; i < built.corners.corner_vertex.size(); ++i)
      labels[built.corners.corner_vertex[i]] = built.corners.corner_label[i];
    CHECK(label_distance_check(built.map, labels) == 0);
    CHECK(distance_upper_bound_check(built.map, built.corners, 10000, rng, 1000) <= 0);
  }
}

TEST_CASE("canonical form is relabeling-invariant") {
  Rng rng(4242);
  const auto ds = DegreeSequence::from_counts({{2, 3}, {1, 1}});
  const PlanarMap m = sample_uniform_map(ds, rng);
  // Random half-edge relabeling fixing nothing structural.
  const std::size_t h = m.twin.size();
  std::vector<std::int32_t> perm(h);
  for (std::size_t i = 0; i < h; ++i) perm[i] = static_cast<std::int32_t>(i);
  for (std::size_t i = h; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  PlanarMap pm = m;
  for (std::size_t e = 0; e < h; ++e) {
    pm.twin[perm[e]] = perm[m.twin[e]];
    pm.next[perm[e]] = perm[m.next[e]];
    pm.vertex[perm[e]] = m.vertex[e];
  }
  pm.root = perm[m.root];
  CHECK(maps_equal(m, pm));
  PlanarMap other = m;
  other.root = m.next[m.root] != m.root ? m.next[m.root] : m.twin[m.root];
  if (other.root != m.root) CHECK(!maps_equal(m, other));
}

TEST_CASE("sample_uniform_map determinism and unique-map degree sequences") {
  const auto ds1 = DegreeSequence::from_counts({{1, 1}});
  Rng a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    const PlanarMap m = sample_uniform_map(ds1, a);
    CHECK(audit(m).ok());
    CHECK(m.edge_count() == 1);
    CHECK(maps_equal(m, sample_uniform_map(ds1, b)));
  }
}

TEST_CASE("sample_uniform_map uniformity at ds n_1 = 2 (pointed)") {
  const auto ds = DegreeSequence::from_counts({{1, 2}});
  // Exhaustive pointed list via labelled trees x eps.
  std::set<std::vector<std::int32_t>> forms;
  for (const auto& t : enumerate_trees(ds))
    for (const auto& labels : enumerate_labellings(t))
      for (const auto eps : {Orientation::plus, Orientation::minus}) {
        const auto two = js_inverse_labelled(LabelledTree{t, labels});
        forms.insert(canonical_form(bdg_build_map(two.two, two.labels, eps).map));
      }
  REQUIRE(forms.size() == 2);
  std::map<std::vector<std::int32_t>, double> expected;
  for (const auto& f : forms) expected[f] = 1.0 / static_cast<double>(forms.size());
  std::map<std::vector<std::int32_t>, long long> observed;
  Rng rng(31);
  const long long draws = 40000;
  for (long long i = 0; i < draws; ++i)
    ++observed[canonical_form(sample_uniform_map(ds, rng, true))];
  CHECK(testing::chi_square_fit(observed, expected, draws) > 0.001);
}

TEST_CASE("sample_uniform_map uniformity over rooted quadrangulations, 2 faces") {
  const auto ds = DegreeSequence::angulation(2, 2);
  std::set<std::vector<std::int32_t>> forms;
  for (const auto& t : enumerate_trees(ds))
    for (const auto& labels : enumerate_labellings(t))
      for (const auto eps : {Orientation::plus, Orientation::minus}) {
        const auto two = js_inverse_labelled(LabelledTree{t, labels});
        auto built = bdg_build_map(two.two, two.labels, eps);
        built.map.star = -1;  // forget the point
        forms.insert(canonical_form(built.map));
      }
  CHECK(forms.size() == 9);
  std::map<std::vector<std::int32_t>, double> expected;
  for (const auto& f : forms) expected[f] = 1.0 / 9.0;
  std::map<std::vector<std::int32_t>, long long> observed;
  Rng rng(62);
  const long long draws = 45000;
  for (long long i = 0; i < draws; ++i)
    ++observed[canonical_form(sample_uniform_map(ds, rng, false))];
  CHECK(testing::chi_square_fit(observed, expected, draws) > 0.001);
}

TEST_CASE("map text format round trip") {
  Rng rng(11);
  const auto ds = DegreeSequence::from_counts({{2, 2}, {1, 1}});
  const PlanarMap m = sample_uniform_map(ds, rng);
  std::stringstream ss;
  write_map(ss, m);
  const PlanarMap back = read_map(ss);
  CHECK(maps_equal(m, back));
  CHECK(back.star >= 0);
  CHECK(audit(back).ok());
}
