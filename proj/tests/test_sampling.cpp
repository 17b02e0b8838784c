#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "pmaps/bridges.hpp"
#include "pmaps/sampling.hpp"
#include "pmaps/stats.hpp"
#include "pmaps/verify.hpp"

using namespace pmaps;

TEST_CASE("vervaat shift") {
  {
    const auto [exc, j] = vervaat_shift({-1, 1, 0, -1});
    CHECK(j == 1);
    CHECK(exc == Steps{1, 0, -1, -1});
  }
  {
    const auto [exc, j] = vervaat_shift({1, 0, -1, -1});
    CHECK(j == 4);  // already an excursion
    CHECK(exc == Steps{1, 0, -1, -1});
  }
  {
    const auto [exc, j] = vervaat_shift({-1, -1, 1});
    CHECK(j == 2);
    CHECK(exc == Steps{1, -1, -1});
  }
  CHECK_THROWS(vervaat_shift({1, -1}));  // sum != -1
}

TEST_CASE("cycle lemma: exactly one shift is an excursion") {
  // Every arrangement of every step multiset with <= 8 steps.
  for (int edges = 0; edges <= 7; ++edges) {
    for (const auto& ds : degree_sequences_with_edges(edges)) {
      Steps steps;
      for (int i = 0; i <= ds.delta(); ++i)
        for (long long c = 0; c < ds.count(i); ++c) steps.push_back(i - 1);
      std::sort(steps.begin(), steps.end());
      do {
        int excursions = 0;
        const std::size_t m = steps.size();
        for (std::size_t j = 1; j <= m; ++j) {
          Steps rot(m);
          for (std::size_t k = 1; k <= m; ++k) rot[k - 1] = steps[(k + j - 1) % m];
          excursions += is_excursion(rot);
        }
        CHECK(excursions == 1);
        const auto [exc, j] = vervaat_shift(steps);
        CHECK(is_excursion(exc));
        CHECK(j >= 1);
        CHECK(j <= m);
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
}

TEST_CASE("count_trees and enumerate_trees") {
  CHECK(count_trees(DegreeSequence::from_counts({{2, 1}})) == 1);
  CHECK(count_trees(DegreeSequence::from_counts({{1, 2}})) == 1);
  CHECK(count_trees(DegreeSequence::from_counts({{3, 1}, {1, 1}})) == 4);
  CHECK(enumerate_trees(DegreeSequence::from_counts({{2, 1}})) ==
        std::vector<PlaneTree>{PlaneTree({2, 0, 0})});
  CHECK(enumerate_trees(DegreeSequence::from_counts({{1, 1}})) ==
        std::vector<PlaneTree>{PlaneTree({1, 0})});
  CHECK(enumerate_trees(DegreeSequence::from_counts({{3, 1}, {1, 1}})).size() == 4);
  CHECK(count_trees(DegreeSequence()) == 1);  // singleton
  CHECK_THROWS(enumerate_trees(DegreeSequence::angulation(2, 40)));  // cap

  for (int edges = 1; edges <= 8; ++edges)
    for (const auto& ds : degree_sequences_with_edges(edges))
      CHECK(BigInt(enumerate_trees(ds, 8).size()) == count_trees(ds));
}

TEST_CASE("sample_tree hits unique trees and is deterministic") {
  Rng a(42), b(42);
  const auto ds_cherry = DegreeSequence::from_counts({{2, 1}});
  const auto ds_path = DegreeSequence::from_counts({{1, 2}});
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_tree(ds_cherry, a) == PlaneTree({2, 0, 0}));
    CHECK(sample_tree(ds_path, a) == PlaneTree({1, 1, 0}));
  }
  Rng c(42);
  for (int i = 0; i < 50; ++i) {
    const auto t1 = sample_tree(ds_cherry, b);
    const auto t2 = sample_tree(ds_cherry, c);
    (void)sample_tree(ds_path, b);
    (void)sample_tree(ds_path, c);
    CHECK(t1 == t2);
  }
}

TEST_CASE("sample_tree uniformity (chi-square)") {
  const auto ds = DegreeSequence::from_counts({{3, 1}, {1, 1}});
  const auto trees = enumerate_trees(ds);
  REQUIRE(trees.size() == 4);
  std::map<std::vector<std::int32_t>, double> expected;
  for (const auto& t : trees) expected[t.kids_all()] = 0.25;
  std::map<std::vector<std::int32_t>, long long> observed;
  Rng rng(1729);
  const long long draws = 100000;
  for (long long i = 0; i < draws; ++i) ++observed[sample_tree(ds, rng).kids_all()];
  CHECK(testing::chi_square_fit(observed, expected, draws) > 0.001);
}

TEST_CASE("label bridges") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i)
    CHECK(sample_label_bridge(1, rng) == std::vector<std::int64_t>{0, 0});

  CHECK(enumerate_label_bridges(2).size() == 3);
  CHECK(label_bridge_count(2) == 3);
  CHECK(label_bridge_count(3) == 10);
  for (int r = 1; r <= 6; ++r)
    CHECK(BigInt(enumerate_label_bridges(r).size()) == label_bridge_count(r));

  // r = 3: all 10 bridges equally likely.
  std::map<std::vector<std::int32_t>, double> expected;
  for (const auto& b : enumerate_label_bridges(3))
    expected[std::vector<std::int32_t>(b.begin(), b.end())] = 0.1;
  std::map<std::vector<std::int32_t>, long long> observed;
  const long long draws = 100000;
  for (long long i = 0; i < draws; ++i) {
    const auto b = sample_label_bridge(3, rng);
    ++observed[std::vector<std::int32_t>(b.begin(), b.end())];
  }
  CHECK(testing::chi_square_fit(observed, expected, draws) > 0.001);
}

TEST_CASE("label_tree examples") {
  Rng rng(99);
  const PlaneTree path({1, 1, 0});
  for (int i = 0; i < 30; ++i)
    CHECK(label_tree(path, rng).labels == std::vector<std::int64_t>{0, 0, 0});

  const PlaneTree single = PlaneTree::singleton();
  CHECK(label_tree(single, rng).labels == std::vector<std::int64_t>{0});

  const PlaneTree cherry({2, 0, 0});
  std::map<std::vector<std::int32_t>, long long> observed;
  std::map<std::vector<std::int32_t>, double> expected{
      {{-1}, 1.0 / 3}, {{0}, 1.0 / 3}, {{1}, 1.0 / 3}};
  const long long draws = 60000;
  for (long long i = 0; i < draws; ++i) {
    const auto lt = label_tree(cherry, rng);
    CHECK(lt.labels[2] == 0);  // rightmost child copies the root
    ++observed[{static_cast<std::int32_t>(lt.labels[1])}];
  }
  CHECK(testing::chi_square_fit(observed, expected, draws) > 0.001);
}

TEST_CASE("label_tree marginals match uniform bridges (k <= 4)") {
  Rng rng(1234);
  for (int k = 2; k <= 4; ++k) {
    std::vector<std::int32_t> kids(k + 1, 0);
    kids[0] = k;
    const PlaneTree star(kids);
    std::map<std::vector<std::int32_t>, double> expected;
    {
      const auto bridges = enumerate_label_bridges(k);
      for (const auto& b : bridges)
        expected[std::vector<std::int32_t>(b.begin() + 1, b.end())] = 1.0 / bridges.size();
    }
    std::map<std::vector<std::int32_t>, long long> observed;
    const long long draws = 100000;
    for (long long i = 0; i < draws; ++i) {
      const auto lt = label_tree(star, rng);
      std::vector<std::int32_t> key;
      for (int c = 1; c <= k; ++c) key.push_back(static_cast<std::int32_t>(lt.labels[c]));
      ++observed[key];
    }
    CHECK(testing::chi_square_fit(observed, expected, draws) > 0.001);
  }
}

TEST_CASE("count_labellings") {
  CHECK(count_labellings(PlaneTree({1, 1, 0})) == 1);
  CHECK(count_labellings(PlaneTree({2, 0, 0})) == 3);
  CHECK(count_labellings(PlaneTree({3, 0, 1, 0, 0})) == 10);
  for (const auto& t : testing::all_trees_up_to(5))
    CHECK(BigInt(enumerate_labellings(t).size()) == count_labellings(t));
  // Constant across T(ds).
  for (const auto& ds : degree_sequences_with_edges(6)) {
    const auto trees = enumerate_trees(ds);
    for (const auto& t : trees) CHECK(count_labellings(t) == count_labellings(trees[0]));
  }
}

TEST_CASE("sampled labellings are valid") {
  Rng rng(31337);
  const auto ds = DegreeSequence::from_counts({{3, 2}, {2, 1}, {1, 2}});
  for (int rep = 0; rep < 50; ++rep) {
    const auto lt = label_tree(sample_tree(ds, rng), rng);
    CHECK(valid_one_type_labels(lt.tree, lt.labels));
  }
}
