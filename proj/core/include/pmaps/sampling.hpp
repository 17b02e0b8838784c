#pragma once

#include <cstdint>
#include <vector>

#include "pmaps/bigint.hpp"
#include "pmaps/bridges.hpp"
#include "pmaps/degree_sequence.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Exactly uniform over the trees with the given degree sequence: uniform
// shuffle (Fisher-Yates) of the step multiset {i-1 with multiplicity n_i},
// then the cyclic shift to the excursion.
PlaneTree sample_tree(const DegreeSequence& ds, Rng& rng);

// #T(ds) = multinomial(N+1; n_0, n_1, ...) / (N+1), exact.
BigInt count_trees(const DegreeSequence& ds);

// Test oracle; throws when ds.edges() exceeds cap.
std::vector<PlaneTree> enumerate_trees(const DegreeSequence& ds, long long cap = 10);

// Uniform labelling: independent uniform B_k^+ bridges at each internal
// vertex; the rightmost child copies its parent's label.
LabelledTree label_tree(const PlaneTree& tree, Rng& rng);

// Product of binom(2k-1, k-1) over internal vertices; constant on T(ds).
BigInt count_labellings(const PlaneTree& tree);

// All label vectors (preorder); grows as count_labellings, caller beware.
std::vector<std::vector<std::int64_t>> enumerate_labellings(const PlaneTree& tree);

}  // namespace pmaps
