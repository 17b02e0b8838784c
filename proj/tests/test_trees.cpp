#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/sampling.hpp"
#include "pmaps/trees.hpp"

using namespace pmaps;

namespace {
const PlaneTree cherry({2, 0, 0});
const PlaneTree path({1, 1, 0});
const PlaneTree tree4({3, 0, 1, 0, 0});
using I64 = std::vector<std::int64_t>;
}  // namespace

TEST_CASE("plane tree validation") {
  CHECK_THROWS(PlaneTree({2, 0}));        // does not close
  CHECK_THROWS(PlaneTree({0, 0}));        // negative prefix
  CHECK_THROWS(PlaneTree({-1}));          // negative count
  CHECK_THROWS(PlaneTree({}));            // empty
  CHECK(PlaneTree::singleton().size() == 1);
  CHECK(tree4.parent(3) == 2);
  CHECK(tree4.child_rank(2) == 2);
  CHECK(tree4.is_last_child(4));
  CHECK(!tree4.is_last_child(2));
}

TEST_CASE("degree sequence bookkeeping") {
  const auto ds = DegreeSequence::of_tree(tree4);
  CHECK(ds.count(3) == 1);
  CHECK(ds.count(1) == 1);
  CHECK(ds.count(0) == 3);
  CHECK(ds.edges() == 4);
  CHECK(ds.leaves() == 3);
  CHECK(ds.delta() == 3);
  // sum_{i>=0} (i-1) n_i = -1 and sum n_i = N+1, by construction.
  long long sum = -ds.leaves();
  for (int i = 1; i <= ds.delta(); ++i) sum += (i - 1) * ds.count(i);
  CHECK(sum == -1);
}

TEST_CASE("lukasiewicz path") {
  CHECK(lukasiewicz_path(cherry) == I64{0, 1, 0, -1});
  CHECK(lukasiewicz_path(path) == I64{0, 0, 0, -1});
  CHECK(lukasiewicz_path(PlaneTree::singleton()) == I64{0, -1});
}

TEST_CASE("height process, two routes") {
  CHECK(height_process(cherry) == I64{0, 1, 1});
  CHECK(height_process(path) == I64{0, 1, 2});
  CHECK(height_process(PlaneTree::singleton()) == I64{0});
  for (const auto& t : testing::all_trees_up_to(8))
    CHECK(height_process(t) == height_from_lukasiewicz(lukasiewicz_path(t)));
}

TEST_CASE("height routes agree on large sampled trees") {
  Rng rng(20240811);
  const auto ds = DegreeSequence::angulation(2, 5000);  // 10^4 edges
  for (int rep = 0; rep < 100; ++rep) {
    Rng r = rng.child(rep);
    const PlaneTree t = sample_tree(ds, r);
    const auto w = lukasiewicz_path(t);
    CHECK(height_process(t) == height_from_lukasiewicz(w));
    CHECK(modified_height(t) == modified_height_from_lukasiewicz(w));
  }
}

TEST_CASE("contour process") {
  CHECK(contour_process(cherry) == I64{0, 1, 0, 1, 0});
  CHECK(contour_process(path) == I64{0, 1, 2, 1, 0});
  CHECK(contour_process(PlaneTree::singleton()) == I64{0});
  for (const auto& t : testing::all_trees_up_to(7)) {
    const auto c = contour_process(t);
    CHECK(c.size() == 2 * t.size() - 1);
    CHECK(c.front() == 0);
    CHECK(c.back() == 0);
    for (std::size_t j = 1; j < c.size(); ++j) CHECK(std::abs(c[j] - c[j - 1]) == 1);
  }
}

TEST_CASE("modified height, two routes") {
  CHECK(modified_height(cherry) == I64{0, 1, 0});
  CHECK(modified_height(path) == I64{0, 0, 0});
  CHECK(modified_height(tree4) == I64{0, 1, 1, 1, 0});
  for (const auto& t : testing::all_trees_up_to(8))
    CHECK(modified_height(t) == modified_height_from_lukasiewicz(lukasiewicz_path(t)));
}

TEST_CASE("white contour") {
  CHECK(white_contour(TwoTypeTree(cherry)) == I64{0, 0, 0});
  CHECK(white_contour(TwoTypeTree(path)) == I64{0, 1, 0});
  CHECK(white_contour(TwoTypeTree(PlaneTree::singleton())) == I64{0});
  // C(2k) = 2 C°(k) at every k, and C is odd at odd times.
  for (const auto& t : testing::all_trees_up_to(7)) {
    const TwoTypeTree two(t);
    const auto c = contour_process(t);
    const auto cw = white_contour(two);
    REQUIRE(cw.size() == t.size());
    for (std::size_t k = 0; k < cw.size(); ++k) CHECK(c[2 * k] == 2 * cw[k]);
    for (std::size_t j = 1; j < c.size(); j += 2) CHECK(c[j] % 2 == 1);
  }
}

TEST_CASE("two-type views") {
  const TwoTypeTree two(path);
  CHECK(two.white_count() == 2);
  const auto bd = two.black_degrees();
  CHECK(bd.count(2) == 1);
  CHECK(bd.edges() == 2);
}

TEST_CASE("spine profile") {
  const auto sp = spine_profile(tree4, 3);  // vertex '21'
  CHECK(sp.ancestors_by_kids == std::map<int, long long>{{1, 1}, {3, 1}});
  CHECK(sp.lr == 3);
  CHECK(sp.content ==
        std::vector<std::pair<std::int32_t, std::int32_t>>{{3, 2}, {1, 1}});
  const auto root = spine_profile(tree4, 0);
  CHECK(root.ancestors_by_kids.empty());
  CHECK(root.lr == 1);
  CHECK(root.content.empty());
  const auto deep = spine_profile(path, 2);
  CHECK(deep.ancestors_by_kids == std::map<int, long long>{{1, 2}});
  CHECK(deep.lr == 1);
  CHECK_THROWS(spine_profile(path, 17));
}

TEST_CASE("spine profile identities on sampled trees") {
  Rng rng(7);
  const auto ds = DegreeSequence::from_counts({{3, 4}, {2, 5}, {1, 6}});
  for (int rep = 0; rep < 20; ++rep) {
    Rng r = rng.child(rep);
    const PlaneTree t = sample_tree(ds, r);
    const auto d = depths(t);
    const std::size_t v = r.below(t.size());
    const auto sp = spine_profile(t, v);
    long long total = 0, lr = 1;
    for (const auto& [i, a] : sp.ancestors_by_kids) {
      total += a;
      lr += (i - 1) * a;
    }
    CHECK(total == d[v]);
    CHECK(lr == sp.lr);
    CHECK(sp.content.size() == static_cast<std::size_t>(d[v]));
  }
}

TEST_CASE("prefix class counts") {
  CHECK(prefix_class_counts(tree4, {0}) == I64{0, 0, 1, 1, 2, 3});
  CHECK(prefix_class_counts(tree4, {}) == I64{0, 0, 0, 0, 0, 0});
  CHECK(prefix_class_counts(cherry, {0, 1, 2, 3}) == I64{0, 1, 2, 3});
  // Monotone with unit/zero steps; final value = degree-sequence count.
  for (const auto& t : testing::all_trees_up_to(6)) {
    const auto lam = prefix_class_counts(t, {0, 2});
    const auto ds = DegreeSequence::of_tree(t);
    for (std::size_t i = 1; i < lam.size(); ++i) {
      const auto step = lam[i] - lam[i - 1];
      CHECK(step >= 0);
      CHECK(step <= 1);
    }
    CHECK(lam.back() == ds.count(0) + ds.count(2));
  }
}

TEST_CASE("label validity") {
  CHECK(valid_one_type_labels(cherry, {0, -1, 0}));
  CHECK(valid_one_type_labels(cherry, {0, 1, 0}));
  CHECK(!valid_one_type_labels(cherry, {0, -2, 0}));  // increment < -1
  CHECK(!valid_one_type_labels(cherry, {0, 0, 1}));   // last child differs
  CHECK(!valid_one_type_labels(cherry, {1, 1, 1}));   // root not 0
  CHECK(valid_one_type_labels(path, {0, 0, 0}));
  CHECK(!valid_one_type_labels(path, {0, 1, 1}));     // unary child must copy
}

TEST_CASE("encode_paths bundle") {
  const std::vector<std::int64_t> labels{0, -1, 0};
  const auto p = encode_paths(cherry, &labels);
  CHECK(p.w == I64{0, 1, 0, -1});
  CHECK(p.h == I64{0, 1, 1});
  CHECK(p.c == I64{0, 1, 0, 1, 0});
  CHECK(p.htilde == I64{0, 1, 0});
  CHECK(p.cwhite == I64{0, 0, 0});
  CHECK(p.labels == labels);
  CHECK(p.labels_white == I64{0, 0, 0});  // whites: root visited thrice
}
