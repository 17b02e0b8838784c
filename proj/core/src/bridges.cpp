#include "pmaps/bridges.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmaps {

bool is_excursion(const Steps& steps) {
  long long s = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    s += steps[k];
    if (k + 1 < steps.size() && s < 0) return false;
  }
  return s == -1;
}

std::pair<Steps, std::size_t> vervaat_shift(const Steps& steps) {
  const std::size_t m = steps.size();
  long long sum = 0;
  for (auto x : steps) sum += x;
  if (sum != -1) throw std::invalid_argument("vervaat_shift: steps must sum to -1");

  // First time the walk attains its overall minimum.
  long long s = 0, min = 0;
  std::size_t j = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    s += steps[k - 1];
    if (s < min) {
      min = s;
      j = k;
    }
  }
  // For an excursion input the minimum -1 is first attained at M, so j = M.
  Steps out(m);
  for (std::size_t k = 1; k <= m; ++k) out[k - 1] = steps[(k + j - 1) % m];
  return {std::move(out), j};
}

PlaneTree tree_from_excursion(const Steps& steps) {
  std::vector<std::int32_t> kids(steps.size());
  for (std::size_t k = 0; k < steps.size(); ++k)
    kids[k] = static_cast<std::int32_t>(steps[k] + 1);
  return PlaneTree(std::move(kids));
}

std::vector<std::int64_t> sample_label_bridge(int r, Rng& rng) {
  if (r < 1) throw std::invalid_argument("label bridge needs r >= 1");
  // Floyd's algorithm: uniform (r-1)-subset of {1..2r-1} = bar positions.
  std::vector<std::int64_t> bars;
  bars.reserve(r - 1);
  const std::int64_t m = 2LL * r - 1;
  for (std::int64_t j = m - (r - 1) + 1; j <= m; ++j) {
    const std::int64_t t = static_cast<std::int64_t>(rng.below(j)) + 1;
    if (std::find(bars.begin(), bars.end(), t) != bars.end())
      bars.push_back(j);
    else
      bars.push_back(t);
  }
  std::sort(bars.begin(), bars.end());

  std::vector<std::int64_t> b(r + 1);
  b[0] = 0;
  std::int64_t prev = 0;
  for (int j = 1; j <= r; ++j) {
    const std::int64_t bar = (j <= r - 1) ? bars[j - 1] : m + 1;
    const std::int64_t stars = bar - prev - 1;  // y_j >= 0
    b[j] = b[j - 1] + stars - 1;
    prev = bar;
  }
  return b;
}

std::vector<std::vector<std::int64_t>> enumerate_label_bridges(int r) {
  if (r < 1) throw std::invalid_argument("label bridge needs r >= 1");
  std::vector<std::vector<std::int64_t>> all;
  std::vector<std::int64_t> b(r + 1, 0);
  // DFS over increments >= -1 whose total is 0.
  auto rec = [&](auto&& self, int j, std::int64_t value) -> void {
    if (j == r) {
      if (value == 0) all.push_back(b);
      return;
    }
    const std::int64_t remaining = r - j;
    // value + sum of remaining increments = 0; increments >= -1 each.
    for (std::int64_t inc = -1; value + inc - (remaining - 1) <= 0; ++inc) {
      b[j + 1] = value + inc;
      self(self, j + 1, value + inc);
    }
  };
  rec(rec, 0, 0);
  return all;
}

BigInt label_bridge_count(int r) { return binomial(2LL * r - 1, r - 1); }

}  // namespace pmaps
