#include "pmaps/degree_sequence.hpp"

#include <stdexcept>

#include "pmaps/trees.hpp"

namespace pmaps {

DegreeSequence DegreeSequence::from_counts(
    const std::vector<std::pair<int, long long>>& counts) {
  DegreeSequence ds;
  for (const auto& [i, ni] : counts) {
    if (i < 1) throw std::invalid_argument("degree sequence index must be >= 1");
    if (ni < 0) throw std::invalid_argument("negative count in degree sequence");
    if (ni == 0) continue;
    if (static_cast<std::size_t>(i) >= ds.counts_.size()) ds.counts_.resize(i + 1, 0);
    ds.counts_[i] += ni;
    ds.internals_ += ni;
    ds.edges_ += static_cast<long long>(i) * ni;
  }
  return ds;
}

DegreeSequence DegreeSequence::angulation(int kappa, long long faces) {
  if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
  if (faces < 1) throw std::invalid_argument("need at least one face");
  return from_counts({{kappa, faces}});
}

DegreeSequence DegreeSequence::of_tree(const PlaneTree& tree) {
  std::vector<std::pair<int, long long>> counts;
  std::vector<long long> tally;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const int k = tree.kids(v);
    if (static_cast<std::size_t>(k) >= tally.size()) tally.resize(k + 1, 0);
    ++tally[k];
  }
  for (std::size_t i = 1; i < tally.size(); ++i)
    if (tally[i] > 0) counts.emplace_back(static_cast<int>(i), tally[i]);
  return from_counts(counts);
}

long long DegreeSequence::count(int i) const {
  if (i == 0) return leaves();
  if (i < 0 || static_cast<std::size_t>(i) >= counts_.size()) return 0;
  return counts_[i];
}

int DegreeSequence::delta() const {
  for (int i = static_cast<int>(counts_.size()) - 1; i >= 1; --i)
    if (counts_[i] > 0) return i;
  return 0;  // only leaves (or the empty sequence)
}

double DegreeSequence::p(int i) const {
  return static_cast<double>(count(i)) / static_cast<double>(edges_ + 1);
}

BigRat DegreeSequence::p_exact(int i) const {
  return BigRat(count(i), edges_ + 1);
}

double DegreeSequence::sigma2() const {
  const double m = static_cast<double>(edges_ + 1);
  double s = 0;
  for (std::size_t i = 1; i < counts_.size(); ++i)
    s += static_cast<double>(i) * static_cast<double>(i) * (counts_[i] / m);
  const double mean = edges_ / m;
  return s - mean * mean;
}

}  // namespace pmaps
