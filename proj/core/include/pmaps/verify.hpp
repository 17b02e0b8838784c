#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmaps/degree_sequence.hpp"

namespace pmaps {

struct VerifyResult {
  bool ok = true;
  std::string detail;           // first failure, empty when ok
  long long trees_checked = 0;
  long long labelled_checked = 0;
  long long maps_checked = 0;
};

// All degree sequences (n_i; i >= 1) with sum i*n_i = edges.
std::vector<DegreeSequence> degree_sequences_with_edges(int edges);

// Exhaustive JS + BDG round trips, Lemma-2.1 process equalities, per-map
// audits, label-distance identity, corner distance bound, and the pointed
// map count 2 * sum count_labellings, over every ds with <= max_edges edges.
VerifyResult verify_bijections(int max_edges);

// count_trees == #enumerate_trees for every ds with <= max_edges edges, and
// #B_r^+ == binom(2r-1, r-1) for r <= max_r.
VerifyResult verify_counts(int max_edges = 8, int max_r = 6);

// Random-bridge sweep of the max-gap dichotomy; counterexamples break ok.
VerifyResult verify_bridge_lemma(long long bridges, int max_r, int max_x, std::uint64_t seed);

}  // namespace pmaps
