#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pmaps/bigint.hpp"
#include "pmaps/degree_sequence.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Reference half-degree law p with exact entries (mean 1 assumed of genuine
// inputs; sigma2 > 0 required by h_diagnostics).
struct ReferenceLaw {
  std::vector<BigRat> p;  // p[i], i >= 0
  double sigma2() const;
  double mass(int i) const;
};
ReferenceLaw angulation_law(int kappa);  // p(0) = 1 - 1/kappa, p(kappa) = 1/kappa

struct HDiagnostics {
  std::vector<double> p_emp;      // p_n(i)
  double sigma2_emp = 0;          // sigma^2_n
  double delta_over_sqrt_n = 0;   // n^{-1/2} Delta_n
  double tv_to_ref = 0;           // total variation distance p_n vs p
  double sigma2_gap = 0;          // |sigma^2_n - sigma^2_p|
  double const_faces = 0;         // (9/4 (1-p(0))/sigma2_p / n)^{1/4}
  double const_edges = 0;         // (9/(4 sigma2_p) / N)^{1/4}
  BigRat const_faces_fourth;      // exact fourth power 9(1-p(0))/(4 sigma2_p n)
  BigRat const_edges_fourth;      // exact fourth power 9/(4 sigma2_p N)
};
// Throws when the reference law has sigma2 == 0.
HDiagnostics h_diagnostics(const DegreeSequence& ds, const ReferenceLaw& ref);

// max_i |Htilde(i) - ((n_0-1)/N) H(i)| / sqrt(N); 0 for the singleton.
double contour_height_gap(const PlaneTree& tree);

// Per-replica pair of distances d(x,y) and d(star,y) on a uniform pointed
// map; x, y are uniform over all vertices (star included), the non-star part
// drawn through the last-visit enumeration of the white contour. The two
// samples are exactly equal in law.
struct TwoPointSamples {
  std::vector<std::int32_t> d_xy;
  std::vector<std::int32_t> d_star_y;
};
TwoPointSamples two_point_identity(const DegreeSequence& ds, long long replicas, Rng& rng,
                                   int threads = 1);

struct KsResult {
  double d = 0;        // sup |F_a - F_b|
  double p_value = 1;  // asymptotic Kolmogorov tail (approximate for discrete data)
};
KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);
KsResult ks_two_sample(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b);

// Rescaled sup-label / sup-height summaries across sizes.
struct ScalingRow {
  long long faces = 0;
  long long edges = 0;
  double mean_sup_label = 0;    // E[max|L|] * (9/(4 sigma2_p N))^{1/4}
  double mean_sup_height = 0;   // E[max H]  * (sigma2_p/(4N))^{1/2}
  double median_sup_label = 0;
  double median_sup_height = 0;
};
ScalingRow label_scaling_profile(const DegreeSequence& ds, const ReferenceLaw& ref,
                                 long long replicas, Rng& rng, int threads = 1);

// Deterministic max-gap dichotomy for discrete bridges (b_0 = b_r = 0):
// "max - min >= 3x implies one of the four half-walk minima <= -x".
bool bridge_maxgap_dichotomy(const std::vector<std::int64_t>& bridge, std::int64_t x);

// max_i |Lambda_i(A) - p_n(A) i| / N^{3/4} on one sampled tree.
double lambda_linearity(const DegreeSequence& ds, const std::set<int>& a, Rng& rng);
double lambda_linearity_of(const PlaneTree& tree, const std::set<int>& a);

// Plumbing shared by tests and the CLI.
double chi_square_pvalue(double stat, int dof);
double chi_square_stat(const std::vector<long long>& observed,
                       const std::vector<double>& expected_probs, long long draws);
double kolmogorov_tail(double lambda);

}  // namespace pmaps
