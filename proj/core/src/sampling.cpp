#include "pmaps/sampling.hpp"

#include <stdexcept>

namespace pmaps {

namespace {

void check_admissible(const DegreeSequence& ds) {
  if (ds.leaves() < 1) throw std::invalid_argument("inadmissible degree sequence");
}

}  // namespace

PlaneTree sample_tree(const DegreeSequence& ds, Rng& rng) {
  check_admissible(ds);
  Steps steps;
  steps.reserve(ds.tree_vertices());
  const auto& counts = ds.internal_counts();
  for (std::size_t i = 1; i < counts.size(); ++i)
    for (long long c = 0; c < counts[i]; ++c) steps.push_back(static_cast<std::int64_t>(i) - 1);
  for (long long c = 0; c < ds.leaves(); ++c) steps.push_back(-1);

  // Fisher-Yates: uniform over arrangements of the step multiset.
  for (std::size_t k = steps.size(); k > 1; --k)
    std::swap(steps[k - 1], steps[rng.below(k)]);

  return tree_from_excursion(vervaat_shift(steps).first);
}

BigInt count_trees(const DegreeSequence& ds) {
  check_admissible(ds);
  const long long m = ds.tree_vertices();  // N + 1
  BigInt numerator = factorial(m);
  BigInt denom = factorial(ds.leaves());
  const auto& counts = ds.internal_counts();
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > 0) denom *= factorial(counts[i]);
  BigInt multinomial = numerator / denom;
  BigInt q, r;
  boost::multiprecision::divide_qr(multinomial, BigInt(m), q, r);
  if (r != 0) throw std::logic_error("cycle lemma: multinomial not divisible by N+1");
  return q;
}

std::vector<PlaneTree> enumerate_trees(const DegreeSequence& ds, long long cap) {
  check_admissible(ds);
  if (ds.edges() > cap) throw std::invalid_argument("enumerate_trees: edge cap exceeded");
  const long long m = ds.tree_vertices();
  std::vector<long long> remaining(std::max<std::size_t>(ds.internal_counts().size(), 1), 0);
  for (std::size_t i = 1; i < ds.internal_counts().size(); ++i)
    remaining[i] = ds.internal_counts()[i];
  long long leaves_left = ds.leaves();

  std::vector<PlaneTree> out;
  std::vector<std::int32_t> kids;
  kids.reserve(m);
  // Backtracking over preorder child counts keeping prefix sums valid.
  auto rec = [&](auto&& self, long long placed, long long open) -> void {
    if (placed == m) {
      out.emplace_back(kids);
      return;
    }
    // open = 1 + sum (kids-1) over placed = #slots still to fill.
    if (open <= 0 || open > m - placed) return;
    if (leaves_left > 0) {
      --leaves_left;
      kids.push_back(0);
      self(self, placed + 1, open - 1);
      kids.pop_back();
      ++leaves_left;
    }
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (remaining[i] == 0) continue;
      --remaining[i];
      kids.push_back(static_cast<std::int32_t>(i));
      self(self, placed + 1, open - 1 + static_cast<long long>(i));
      kids.pop_back();
      ++remaining[i];
    }
  };
  rec(rec, 0, 1);
  return out;
}

LabelledTree label_tree(const PlaneTree& tree, Rng& rng) {
  std::vector<std::int64_t> labels(tree.size(), 0);
  const TreeLinks links = build_links(tree);
  for (std::size_t u = 0; u < tree.size(); ++u) {
    const int k = tree.kids(u);
    if (k == 0) continue;
    const auto bridge = sample_label_bridge(k, rng);
    std::int32_t c = links.first_child[u];
    for (int j = 1; j <= k; ++j, c = links.next_sibling[c]) labels[c] = labels[u] + bridge[j];
  }
  return LabelledTree{tree, std::move(labels)};
}

BigInt count_labellings(const PlaneTree& tree) {
  BigInt r = 1;
  for (std::size_t u = 0; u < tree.size(); ++u) {
    const int k = tree.kids(u);
    if (k >= 1) r *= label_bridge_count(k);
  }
  return r;
}

std::vector<std::vector<std::int64_t>> enumerate_labellings(const PlaneTree& tree) {
  const TreeLinks links = build_links(tree);
  std::vector<std::size_t> internals;
  for (std::size_t u = 0; u < tree.size(); ++u)
    if (tree.kids(u) >= 1) internals.push_back(u);

  std::vector<std::vector<std::vector<std::int64_t>>> choices;
  choices.reserve(internals.size());
  for (auto u : internals) choices.push_back(enumerate_label_bridges(tree.kids(u)));

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> labels(tree.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == internals.size()) {
      out.push_back(labels);
      return;
    }
    const std::size_t u = internals[idx];
    const int k = tree.kids(u);
    for (const auto& bridge : choices[idx]) {
      std::int32_t c = links.first_child[u];
      for (int j = 1; j <= k; ++j, c = links.next_sibling[c]) labels[c] = labels[u] + bridge[j];
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pmaps
