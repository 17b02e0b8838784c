#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pmaps/bigint.hpp"

namespace pmaps {

class PlaneTree;

// Prescribed degree sequence: n_i faces of degree 2i on the map side,
// equivalently n_i internal vertices with i children on the tree side.
// n_0 (leaves / map vertices minus one) is derived, never stored:
// n_0 = 1 + N - n where N = sum i*n_i and n = sum_{i>=1} n_i.
class DegreeSequence {
 public:
  DegreeSequence() = default;  // empty: the single-vertex tree
  static DegreeSequence from_counts(const std::vector<std::pair<int, long long>>& counts);
  // The 2*kappa-angulation with `faces` faces: n_kappa = faces.
  static DegreeSequence angulation(int kappa, long long faces);
  static DegreeSequence of_tree(const PlaneTree& tree);

  long long count(int i) const;            // n_i for i >= 0 (i = 0 derived)
  int delta() const;                       // Delta_n = max{i >= 0 : n_i > 0}
  long long internals() const { return internals_; }  // n
  long long edges() const { return edges_; }          // N_n
  long long leaves() const { return 1 + edges_ - internals_; }  // n_0
  long long tree_vertices() const { return edges_ + 1; }
  long long map_vertices() const { return leaves() + 1; }

  double p(int i) const;    // p_n(i) = n_i / (N_n + 1)
  BigRat p_exact(int i) const;
  double sigma2() const;    // sum i^2 p_n(i) - (N_n/(N_n+1))^2

  const std::vector<long long>& internal_counts() const { return counts_; }  // index i >= 1

  bool operator==(const DegreeSequence& o) const { return counts_ == o.counts_; }

 private:
  std::vector<long long> counts_;  // counts_[i] = n_i for 1 <= i <= delta; counts_[0] unused = 0
  long long internals_ = 0;
  long long edges_ = 0;
};

}  // namespace pmaps
