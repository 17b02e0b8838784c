#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pmaps/bigint.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Step sequences x_1..x_M with x_j in {-1, 0, 1, ...} and sum -1 (the set
// B(m)); excursions E(m) additionally keep partial sums >= 0 before the end.
using Steps = std::vector<std::int64_t>;

bool is_excursion(const Steps& steps);

// Cyclic shift at the first time the walk attains its overall minimum. The
// result is the unique cyclic shift lying in E(m); the returned index j is
// that first-minimum time (j = M when the input is already an excursion).
std::pair<Steps, std::size_t> vervaat_shift(const Steps& steps);

// Excursion -> tree with kids[j] = steps[j] + 1 in preorder.
PlaneTree tree_from_excursion(const Steps& steps);

// Label bridges B_r^+: values b_0..b_r with b_0 = b_r = 0, increments >= -1.
// Sampling is exactly uniform: a uniform (r-1)-subset of {1..2r-1} picks the
// bar positions of a composition of r into r non-negative parts.
std::vector<std::int64_t> sample_label_bridge(int r, Rng& rng);
std::vector<std::vector<std::int64_t>> enumerate_label_bridges(int r);
BigInt label_bridge_count(int r);  // binom(2r-1, r-1)

}  // namespace pmaps
