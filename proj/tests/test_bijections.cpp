#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "pmaps/bijections.hpp"
#include "pmaps/sampling.hpp"
#include "pmaps/verify.hpp"

using namespace pmaps;

TEST_CASE("js_forward examples") {
  CHECK(js_forward(TwoTypeTree(PlaneTree::singleton())).one == PlaneTree::singleton());
  // White root with one black degree-1 child -> single edge.
  CHECK(js_forward(TwoTypeTree(PlaneTree({1, 0}))).one == PlaneTree({1, 0}));
  // White root with two black degree-1 children -> the path.
  CHECK(js_forward(TwoTypeTree(PlaneTree({2, 0, 0}))).one == PlaneTree({1, 1, 0}));
}

TEST_CASE("js_inverse examples") {
  const auto inv = js_inverse(PlaneTree({1, 0}));
  CHECK(inv.two.tree == PlaneTree({1, 0}));
  CHECK(js_inverse(PlaneTree::singleton()).two.tree == PlaneTree::singleton());
  CHECK(js_inverse(PlaneTree({1, 1, 0})).two.tree == PlaneTree({2, 0, 0}));
}

TEST_CASE("js round trips, exhaustive") {
  for (const auto& t : testing::all_trees_up_to(7)) {
    const JsInverse inv = js_inverse(t);
    CHECK(js_forward(inv.two).one == t);
    // Degree transport: whites <-> leaves, black degree i <-> n_i.
    const auto ds = DegreeSequence::of_tree(t);
    CHECK(inv.two.white_count() == ds.leaves());
    CHECK(inv.two.black_degrees() == ds);
  }
  // And the other composition on two-type trees (= all plane trees).
  for (const auto& t : testing::all_trees_up_to(7)) {
    const TwoTypeTree two(t);
    const JsForward fwd = js_forward(two);
    CHECK(js_inverse(fwd.one).two == two);
  }
}

TEST_CASE("label transport, hand examples") {
  {
    const LabelledTree lt{PlaneTree({1, 1, 0}), {0, 0, 0}};
    const auto two = js_inverse_labelled(lt);
    CHECK(white_label_process(two.two, two.labels) == std::vector<std::int64_t>{0, 0, 0});
  }
  {
    const LabelledTree lt{PlaneTree({2, 0, 0}), {0, -1, 0}};
    const auto two = js_inverse_labelled(lt);
    CHECK(white_label_process(two.two, two.labels) == std::vector<std::int64_t>{0, -1, 0});
    // And back.
    const auto back = js_forward_labelled(two.two, two.labels);
    CHECK(back.labels == lt.labels);
    CHECK(back.tree == lt.tree);
  }
  CHECK_THROWS(js_inverse_labelled(LabelledTree{PlaneTree({2, 0, 0}), {0, -2, 0}}));
}

TEST_CASE("lemma: white contour = modified height, white labels = labels") {
  for (const auto& t : testing::all_trees_up_to(6)) {
    const auto ht = modified_height(t);
    const JsInverse inv = js_inverse(t);
    CHECK(white_contour(inv.two) == ht);
    for (const auto& labels : enumerate_labellings(t)) {
      const auto two = js_inverse_labelled(LabelledTree{t, labels});
      CHECK(white_label_process(two.two, two.labels) == labels);
    }
  }
}

TEST_CASE("bdg on the one-edge mobile") {
  // ds n_1 = 1: a single labelled mobile, two orientations, two pointed maps.
  const TwoTypeTree two(PlaneTree({1, 0}));
  const std::vector<std::int64_t> labels{0, 0};
  std::set<std::vector<std::int32_t>> forms;
  for (const auto eps : {Orientation::plus, Orientation::minus}) {
    const BdgMap built = bdg_build_map(two, labels, eps);
    const auto rep = audit(built.map);
    CHECK(rep.ok());
    CHECK(rep.vertices == 2);
    CHECK(rep.edges == 1);
    CHECK(rep.faces == 1);
    CHECK(rep.face_degree_counts == std::map<long long, long long>{{2, 1}});
    forms.insert(canonical_form(built.map));
    const BdgInverse back = bdg_inverse(built.map);
    CHECK(back.two == two);
    CHECK(back.labels == labels);
    CHECK(back.eps == eps);
  }
  CHECK(forms.size() == 2);
  CHECK_THROWS(bdg_build_map(TwoTypeTree(PlaneTree::singleton()), {0}, Orientation::plus));
}

TEST_CASE("bdg pointed map count at ds n_1 = 2") {
  // T(n_1=2) = {path}, one labelling; 2 pointed rooted maps with two
  // degree-2 faces (= 2 * count_labellings).
  const auto ds = DegreeSequence::from_counts({{1, 2}});
  const auto trees = enumerate_trees(ds);
  REQUIRE(trees.size() == 1);
  std::set<std::vector<std::int32_t>> forms;
  long long labelled = 0;
  for (const auto& t : trees) {
    for (const auto& labels : enumerate_labellings(t)) {
      ++labelled;
      const auto two = js_inverse_labelled(LabelledTree{t, labels});
      for (const auto eps : {Orientation::plus, Orientation::minus}) {
        const BdgMap built = bdg_build_map(two.two, two.labels, eps);
        const auto rep = audit(built.map);
        CHECK(rep.ok());
        CHECK(rep.face_degree_counts == std::map<long long, long long>{{2, 2}});
        forms.insert(canonical_form(built.map));
      }
    }
  }
  CHECK(labelled == 1);
  CHECK(forms.size() == 2);
}

TEST_CASE("bdg face degrees follow black degrees on sampled instances") {
  Rng rng(2718);
  const auto ds = DegreeSequence::from_counts({{3, 3}, {2, 2}, {1, 4}});
  for (int rep = 0; rep < 20; ++rep) {
    const auto lt = label_tree(sample_tree(ds, rng), rng);
    const auto two = js_inverse_labelled(lt);
    const BdgMap built =
        bdg_build_map(two.two, two.labels, rng.coin() ? Orientation::plus : Orientation::minus);
    const auto report = audit(built.map);
    CHECK(report.ok());
    CHECK(report.face_degree_counts ==
          std::map<long long, long long>{{2, 4}, {4, 2}, {6, 3}});
  }
}

TEST_CASE("bdg round trip on a large sampled instance") {
  Rng rng(60902);
  const auto ds = DegreeSequence::angulation(2, 500);  // 10^3 edges
  const auto lt = label_tree(sample_tree(ds, rng), rng);
  const auto two = js_inverse_labelled(lt);
  const Orientation eps = Orientation::minus;
  const BdgMap built = bdg_build_map(two.two, two.labels, eps);
  const BdgInverse back = bdg_inverse(built.map);
  CHECK(back.two == two.two);
  CHECK(back.labels == two.labels);
  CHECK(back.eps == eps);
  const BdgMap rebuilt = bdg_build_map(back.two, back.labels, back.eps);
  CHECK(maps_equal(rebuilt.map, built.map));
}

TEST_CASE("exhaustive bijection verification, small") {
  const auto res = verify_bijections(4);
  INFO(res.detail);
  CHECK(res.ok);
  CHECK(res.trees_checked > 0);
  CHECK(res.maps_checked > 0);
}
