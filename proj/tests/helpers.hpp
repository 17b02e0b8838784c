#pragma once

#include <map>
#include <vector>

#include "pmaps/sampling.hpp"
#include "pmaps/stats.hpp"
#include "pmaps/trees.hpp"

namespace pmaps::testing {

// Every plane tree with exactly `edges` edges, in generation order.
inline std::vector<PlaneTree> all_trees_with_edges(int edges) {
  std::vector<PlaneTree> out;
  std::vector<std::int32_t> cur;
  const int m = edges + 1;
  auto rec = [&](auto&& self, int placed, int open) -> void {
    if (placed == m) {
      if (open == 0) out.emplace_back(cur);
      return;
    }
    if (open <= 0 || open > m - placed) return;
    for (int k = 0; k <= m - placed - open; ++k) {
      cur.push_back(k);
      self(self, placed + 1, open - 1 + k);
      cur.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

inline std::vector<PlaneTree> all_trees_up_to(int max_edges) {
  std::vector<PlaneTree> out;
  for (int e = 0; e <= max_edges; ++e)
    for (auto& t : all_trees_with_edges(e)) out.push_back(std::move(t));
  return out;
}

// Chi-square p-value of observed category counts against expected probs.
inline double chi_square_fit(const std::map<std::vector<std::int32_t>, long long>& observed,
                             const std::map<std::vector<std::int32_t>, double>& expected,
                             long long draws) {
  std::vector<long long> obs;
  std::vector<double> probs;
  for (const auto& [key, p] : expected) {
    probs.push_back(p);
    const auto it = observed.find(key);
    obs.push_back(it == observed.end() ? 0 : it->second);
  }
  long long seen = 0;
  for (const auto& [key, c] : observed) {
    if (!expected.count(key)) return 0.0;  // sampled an impossible outcome
    seen += c;
  }
  if (seen != draws) return 0.0;
  const double stat = chi_square_stat(obs, probs, draws);
  return chi_square_pvalue(stat, static_cast<int>(probs.size()) - 1);
}

}  // namespace pmaps::testing
