#include "pmaps/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmaps/bijections.hpp"
#include "pmaps/maps.hpp"
#include "pmaps/parallel.hpp"
#include "pmaps/sampling.hpp"

namespace pmaps {

double ReferenceLaw::sigma2() const {
  BigRat s = 0;
  for (std::size_t i = 1; i < p.size(); ++i) s += BigRat(i) * BigRat(i) * p[i];
  return static_cast<double>(s - 1);  // mean-1 laws: variance = sum i^2 p(i) - 1
}

double ReferenceLaw::mass(int i) const {
  if (i < 0 || i >= static_cast<int>(p.size())) return 0;
  return static_cast<double>(p[i]);
}

ReferenceLaw angulation_law(int kappa) {
  if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
  ReferenceLaw law;
  law.p.assign(kappa + 1, BigRat(0));
  law.p[0] = BigRat(kappa - 1, kappa);
  law.p[kappa] = BigRat(1, kappa);
  return law;
}

HDiagnostics h_diagnostics(const DegreeSequence& ds, const ReferenceLaw& ref) {
  BigRat sig2_ref = 0;
  for (std::size_t i = 1; i < ref.p.size(); ++i)
    sig2_ref += BigRat(i) * BigRat(i) * ref.p[i];
  sig2_ref -= 1;
  if (sig2_ref <= 0) throw std::invalid_argument("h_diagnostics: reference law has sigma2 = 0");

  HDiagnostics out;
  const int top = std::max<int>(ds.delta(), static_cast<int>(ref.p.size()) - 1);
  out.p_emp.resize(top + 1);
  double tv = 0;
  for (int i = 0; i <= top; ++i) {
    out.p_emp[i] = ds.p(i);
    tv += std::fabs(out.p_emp[i] - ref.mass(i));
  }
  out.tv_to_ref = tv / 2;
  out.sigma2_emp = ds.sigma2();
  out.sigma2_gap = std::fabs(out.sigma2_emp - static_cast<double>(sig2_ref));
  out.delta_over_sqrt_n = ds.delta() / std::sqrt(static_cast<double>(ds.internals()));

  const BigRat one_minus_p0 = 1 - ref.p[0];
  out.const_faces_fourth = BigRat(9) * one_minus_p0 / (4 * sig2_ref * ds.internals());
  out.const_edges_fourth = BigRat(9) / (4 * sig2_ref * ds.edges());
  out.const_faces = std::pow(static_cast<double>(out.const_faces_fourth), 0.25);
  out.const_edges = std::pow(static_cast<double>(out.const_edges_fourth), 0.25);
  return out;
}

double contour_height_gap(const PlaneTree& tree) {
  const long long n_edges = tree.edge_count();
  if (n_edges == 0) return 0;
  const auto h = height_process(tree);
  const auto ht = modified_height(tree);
  long long leaves = 0;
  for (std::size_t v = 0; v < tree.size(); ++v) leaves += tree.is_leaf(v);
  const double ratio = static_cast<double>(leaves - 1) / static_cast<double>(n_edges);
  double sup = 0;
  for (std::size_t j = 0; j < h.size(); ++j)
    sup = std::max(sup, std::fabs(static_cast<double>(ht[j]) - ratio * static_cast<double>(h[j])));
  return sup / std::sqrt(static_cast<double>(n_edges));
}

TwoPointSamples two_point_identity(const DegreeSequence& ds, long long replicas, Rng& rng,
                                   int threads) {
  TwoPointSamples out;
  out.d_xy.resize(replicas);
  out.d_star_y.resize(replicas);
  run_indexed(replicas, threads, [&](std::int64_t rep) {
    Rng r = rng.child(static_cast<std::uint64_t>(rep));
    const PlaneTree tree = sample_tree(ds, r);
    const LabelledTree lt = label_tree(tree, r);
    const LabelledTwoType two = js_inverse_labelled(lt);
    const Orientation eps = r.coin() ? Orientation::plus : Orientation::minus;
    const BdgMap built = bdg_build_map(two.two, two.labels, eps);
    const PlanarMap& map = built.map;

    // Last-visit enumeration of the white contour; v_{n0} is the root.
    const std::size_t n = built.corners.corner_vertex.size();
    std::vector<std::int32_t> order;  // map vertices by last visit
    {
      std::vector<char> visited(map.vertex_count, 0);
      order.reserve(map.vertex_count - 1);
      for (std::size_t k = n; k-- > 0;) {  // scan backwards: first hit = last visit
        const std::int32_t v = built.corners.corner_vertex[k];
        if (!visited[v]) {
          visited[v] = 1;
          order.push_back(v);
        }
      }
      std::reverse(order.begin(), order.end());
      // The root's true last visit is the closing corner N, which the scan
      // over corners 0..N-1 cannot see; move it to the end of the order.
      if (order.back() != built.root_white) {
        auto it = std::find(order.begin(), order.end(), built.root_white);
        std::rotate(it, it + 1, order.end());
      }
    }
    const long long n0 = static_cast<long long>(order.size());
    // Uniform over all n0+1 vertices: index 0 = star, else the enumeration.
    auto draw_vertex = [&]() -> std::int32_t {
      const std::uint64_t i = r.below(static_cast<std::uint64_t>(n0) + 1);
      return i == 0 ? map.star : order[i - 1];
    };
    const std::int32_t x = draw_vertex();
    const std::int32_t y = draw_vertex();
    const auto d_from_x = bfs_distances(map, x);
    out.d_xy[rep] = d_from_x[y];
    const auto d_from_star = bfs_distances(map, map.star);
    out.d_star_y[rep] = d_from_star[y];
  });
  return out;
}

KsResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
  double d = 0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double v = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= v) ++i;
    while (j < sb.size() && sb[j] <= v) ++j;
    d = std::max(d, std::fabs(i / na - j / nb));
  }
  KsResult r;
  r.d = d;
  const double ne = na * nb / (na + nb);
  r.p_value = kolmogorov_tail(std::sqrt(ne) * d);
  return r;
}

KsResult ks_two_sample(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
  std::vector<double> da(a.begin(), a.end()), db(b.begin(), b.end());
  return ks_two_sample(da, db);
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0) return 1.0;
  if (lambda < 1.0) {
    // Complementary theta series, fast for small lambda.
    const double t = M_PI * M_PI / (8 * lambda * lambda);
    double s = 0;
    for (int k = 1; k <= 21; k += 2) s += std::exp(-t * k * k);
    const double cdf = std::sqrt(2 * M_PI) / lambda * s;
    return std::min(1.0, std::max(0.0, 1.0 - cdf));
  }
  double s = 0;
  for (int k = 1; k <= 101; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    s += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::min(1.0, std::max(0.0, 2 * s));
}

ScalingRow label_scaling_profile(const DegreeSequence& ds, const ReferenceLaw& ref,
                                 long long replicas, Rng& rng, int threads) {
  const double sig2 = [&] {
    BigRat s = 0;
    for (std::size_t i = 1; i < ref.p.size(); ++i) s += BigRat(i) * BigRat(i) * ref.p[i];
    return static_cast<double>(s - 1);
  }();
  const double n_edges = static_cast<double>(ds.edges());
  const double label_scale = std::pow(9.0 / (4.0 * sig2 * n_edges), 0.25);
  const double height_scale = std::sqrt(sig2 / (4.0 * n_edges));

  std::vector<double> sup_label(replicas), sup_height(replicas);
  run_indexed(replicas, threads, [&](std::int64_t rep) {
    Rng r = rng.child(static_cast<std::uint64_t>(rep));
    const PlaneTree tree = sample_tree(ds, r);
    const LabelledTree lt = label_tree(tree, r);
    std::int64_t sl = 0, sh = 0;
    const auto h = height_process(tree);
    for (std::size_t v = 0; v < tree.size(); ++v) {
      sl = std::max<std::int64_t>(sl, std::llabs(lt.labels[v]));
      sh = std::max<std::int64_t>(sh, h[v]);
    }
    sup_label[rep] = sl * label_scale;
    sup_height[rep] = sh * height_scale;
  });

  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (auto x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  };
  ScalingRow row;
  row.faces = ds.internals();
  row.edges = ds.edges();
  row.mean_sup_label = mean(sup_label);
  row.mean_sup_height = mean(sup_height);
  row.median_sup_label = median(sup_label);
  row.median_sup_height = median(sup_height);
  return row;
}

bool bridge_maxgap_dichotomy(const std::vector<std::int64_t>& bridge, std::int64_t x) {
  const std::size_t r = bridge.size() - 1;
  if (bridge.empty() || bridge.front() != 0 || bridge.back() != 0)
    throw std::invalid_argument("bridge_maxgap_dichotomy: not a bridge");
  std::int64_t mx = 0, mn = 0;
  for (auto v : bridge) {
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  if (mx - mn < 3 * x) return true;  // premise false

  const std::size_t half = (r + 1) / 2;  // ceil(r/2)
  std::int64_t m1 = 0, m2 = 0, m3 = 0, m4 = 0;
  for (std::size_t k = 0; k <= half; ++k) m1 = std::min(m1, bridge[k]);
  for (std::size_t k = 0; k <= half; ++k) m2 = std::min(m2, bridge[half] - bridge[half - k]);
  for (std::size_t k = 0; half + k <= r; ++k)
    m3 = std::min(m3, bridge[half + k] - bridge[half]);
  for (std::size_t k = 0; k <= half; ++k) m4 = std::min(m4, bridge[r] - bridge[r - k]);
  return m1 <= -x || m2 <= -x || m3 <= -x || m4 <= -x;
}

double lambda_linearity_of(const PlaneTree& tree, const std::set<int>& a) {
  const auto lam = prefix_class_counts(tree, a);
  const DegreeSequence ds = DegreeSequence::of_tree(tree);
  double pa = 0;
  for (auto i : a) pa += ds.p(i);
  const double n_edges = static_cast<double>(tree.edge_count());
  double sup = 0;
  for (std::size_t i = 1; i < lam.size(); ++i)
    sup = std::max(sup, std::fabs(static_cast<double>(lam[i]) - pa * static_cast<double>(i)));
  return sup / std::pow(n_edges, 0.75);
}

double lambda_linearity(const DegreeSequence& ds, const std::set<int>& a, Rng& rng) {
  if (ds.delta() <= 1 && ds.leaves() <= 1)
    throw std::invalid_argument("lambda_linearity: degenerate unary degree sequence");
  const PlaneTree tree = sample_tree(ds, rng);
  return lambda_linearity_of(tree, a);
}

double chi_square_stat(const std::vector<long long>& observed,
                       const std::vector<double>& expected_probs, long long draws) {
  if (observed.size() != expected_probs.size())
    throw std::invalid_argument("chi_square_stat: size mismatch");
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected_probs[i] * static_cast<double>(draws);
    if (e <= 0) throw std::invalid_argument("chi_square_stat: zero expected cell");
    const double diff = static_cast<double>(observed[i]) - e;
    stat += diff * diff / e;
  }
  return stat;
}

namespace {

// Regularized upper incomplete gamma Q(a, x), series / continued fraction.
double gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

double chi_square_pvalue(double stat, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof must be >= 1");
  return gamma_q(dof / 2.0, stat / 2.0);
}

}  // namespace pmaps
