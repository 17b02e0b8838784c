#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pmaps/bigint.hpp"
#include "pmaps/bijections.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

struct GEval {
  double g = 0, g1 = 0, g2 = 0;
  bool finite = true;  // false beyond the radius of convergence
};

// Weight sequence q_k (k >= 1) with the derived tree-side weights
// qbar_0 = 1, qbar_k = binom(2k-1, k-1) q_k and g(x) = sum x^k qbar_k.
class WeightSequence {
 public:
  static WeightSequence all_ones();  // q_k = 1 for all k; g closed-form
  static WeightSequence from_table(const std::vector<std::pair<int, double>>& q);

  bool is_all_ones() const { return all_ones_; }
  double q(int k) const;
  double qbar(int k) const;
  int max_k() const { return static_cast<int>(q_.size()) - 1; }  // -1: unbounded
  double radius() const;

  // g, g', g'' at x >= 0 (compensated summation for tables, closed form for
  // all-ones). finite == false signals divergence at or beyond the radius.
  GEval eval(double x) const;

 private:
  bool all_ones_ = false;
  std::vector<double> q_;     // index k >= 1 (q_[0] unused)
  std::vector<double> qbar_;  // qbar_[0] = 1
};

enum class Criticality {
  no_fixed_point,
  two_fixed_points,    // admissible, g'(Z*) < 1, second fixed point beyond
  unique_subcritical,  // unique fixed point with g' < 1 (boundary case)
  unique_critical,     // tangency: g'(Z*) = 1
};
const char* to_string(Criticality c);

struct CriticalitySolution {
  Criticality kind = Criticality::no_fixed_point;
  bool admissible = false;
  bool critical = false;
  bool generic_critical = false;
  double zstar = 0;           // smallest fixed point when admissible
  std::vector<double> law;    // p_q(k) = Z*^{k-1} qbar_k (truncated tail)
  double sigma2 = 0;          // Z* g''(Z*) when critical
  double c_edges = 1;         // C^q_E
  double c_vertices = 0;      // C^q_V = p_q(0)
  double c_faces = 0;         // C^q_F = 1 - p_q(0)
  double c_faces_in(const std::set<int>& a) const;  // C^q_{F,A} = p_q(A)
};
CriticalitySolution classify(const WeightSequence& q);

struct TiltSolution {
  double x = 0;               // root of x g'(x) = g(x) in (0, R)
  double g = 0, g1 = 0, g2 = 0;
  std::vector<double> law;    // mu_q(k) = x^k qbar_k / g(x) (truncated tail)
  double ratio = 0;           // g / (x^2 g'')
  double rescale = 0;         // (9/4) * ratio, the distance-rescale constant
};
// Throws when no root exists in (0, R).
TiltSolution tilt_solve(const WeightSequence& q);

// Size functionals: which child counts are counted by the conditioning.
struct Conditioning {
  enum class Kind { edges, vertices, faces, faces_in } kind = Kind::edges;
  std::set<int> a;  // for faces_in
  bool counts(int k) const;
  static Conditioning edges() { return {Kind::edges, {}}; }
  static Conditioning vertices() { return {Kind::vertices, {}}; }
  static Conditioning faces() { return {Kind::faces, {}}; }
  static Conditioning faces_in(std::set<int> a) { return {Kind::faces_in, std::move(a)}; }
  std::string name() const;
};

// Exact conditioned Galton-Watson sampler: i.i.d. steps stopped at the n-th
// step with child count in the conditioning set, accepted when the walk sits
// at -1, then cyclically shifted to the excursion. Throws a feasibility
// diagnostic after max_attempts consecutive rejections (0 = automatic cap).
PlaneTree sample_conditioned_gw(const std::vector<double>& law, const Conditioning& cond,
                                long long n, Rng& rng, long long max_attempts = 0,
                                long long* attempts_out = nullptr);

// Conditioned-GW tree -> uniform labels -> mobile -> map. The law is mu_q
// (tilt_solve) for edge conditioning, p_q (classify, critical) otherwise.
// Requires n >= 2: the map has n-1 edges / n+1 vertices / n faces under
// E / V / F conditioning respectively.
BdgMap sample_boltzmann_map(const WeightSequence& q, const Conditioning& cond, long long n,
                            Rng& rng);

// Lemma-style tilting checks on exhaustive small trees, in exact arithmetic.
struct UntiltReport {
  bool ratio_ok = false;        // Theta^{q~}/Theta^q == 1/c for every tree
  BigRat ratio;                 // the common ratio observed
  bool conditioned_ok = false;  // size-n conditioned laws under q^ and q agree
  long long trees_checked = 0;
};
// `qbar` maps k >= 0 to exact tree-side weights (k = 0 entry required).
UntiltReport untilt_equivalence_check(const std::map<int, BigRat>& qbar, const BigRat& c,
                                      const BigRat& a, const BigRat& b, int max_edges = 7,
                                      int cond_vertices = 3);

}  // namespace pmaps
