#include "pmaps/boltzmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pmaps/sampling.hpp"

namespace pmaps {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double qbar_coeff(int k, double qk) {
  if (k == 0) return 1.0;
  return static_cast<double>(binomial(2LL * k - 1, k - 1)) * qk;
}

// Kahan-compensated sum of c_k x^k with c_k >= 0.
struct Comp {
  double s = 0, c = 0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// Alias method over a finite law.
struct AliasTable {
  std::vector<double> prob;
  std::vector<std::int32_t> alias;

  explicit AliasTable(const std::vector<double>& law) {
    const std::size_t n = law.size();
    prob.assign(n, 0);
    alias.assign(n, 0);
    double total = 0;
    for (auto p : law) total += p;
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = law[i] * n / total;
    std::vector<std::int32_t> small, large;
    for (std::size_t i = 0; i < n; ++i)
      (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::int32_t>(i));
    while (!small.empty() && !large.empty()) {
      const std::int32_t s = small.back(), l = large.back();
      small.pop_back();
      prob[s] = scaled[s];
      alias[s] = l;
      scaled[l] -= 1.0 - scaled[s];
      if (scaled[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    for (auto l : large) prob[l] = 1.0;
    for (auto s : small) prob[s] = 1.0;
  }

  std::int32_t draw(Rng& rng) const {
    const std::int32_t i = static_cast<std::int32_t>(rng.below(prob.size()));
    return rng.real53() < prob[i] ? i : alias[i];
  }
};

}  // namespace

WeightSequence WeightSequence::all_ones() {
  WeightSequence w;
  w.all_ones_ = true;
  return w;
}

WeightSequence WeightSequence::from_table(const std::vector<std::pair<int, double>>& q) {
  WeightSequence w;
  int maxk = 0;
  bool heavy = false;
  for (const auto& [k, qk] : q) {
    if (k < 1) throw std::invalid_argument("weights are indexed by k >= 1");
    if (qk < 0) throw std::invalid_argument("negative weight");
    maxk = std::max(maxk, k);
    if (k >= 2 && qk > 0) heavy = true;
  }
  if (!heavy) throw std::invalid_argument("need some q_k > 0 with k >= 2");
  w.q_.assign(maxk + 1, 0.0);
  for (const auto& [k, qk] : q) w.q_[k] += qk;
  w.qbar_.assign(maxk + 1, 0.0);
  w.qbar_[0] = 1.0;
  for (int k = 1; k <= maxk; ++k) w.qbar_[k] = qbar_coeff(k, w.q_[k]);
  return w;
}

double WeightSequence::q(int k) const {
  if (all_ones_) return k >= 1 ? 1.0 : 0.0;
  if (k < 1 || k >= static_cast<int>(q_.size())) return 0.0;
  return q_[k];
}

double WeightSequence::qbar(int k) const {
  if (k == 0) return 1.0;
  if (all_ones_) return static_cast<double>(binomial(2LL * k - 1, k - 1));
  if (k < 1 || k >= static_cast<int>(qbar_.size())) return 0.0;
  return qbar_[k];
}

double WeightSequence::radius() const { return all_ones_ ? 0.25 : kInf; }

GEval WeightSequence::eval(double x) const {
  if (x < 0) throw std::invalid_argument("g is defined for x >= 0");
  GEval r;
  if (all_ones_) {
    // g(x) = (1 + sqrt(1-4x)) / (2 sqrt(1-4x)), diverges at x = 1/4.
    if (x >= 0.25) {
      r.finite = false;
      r.g = r.g1 = r.g2 = kInf;
      return r;
    }
    const double s = std::sqrt(1.0 - 4.0 * x);
    r.g = 0.5 + 0.5 / s;
    r.g1 = 1.0 / (s * s * s);
    r.g2 = 6.0 / (s * s * s * s * s);
    return r;
  }
  Comp g, g1, g2;
  g.add(1.0);  // qbar_0
  double xk1 = 1.0;  // x^{k-1}
  double xk2 = 0.0;  // x^{k-2}
  for (int k = 1; k < static_cast<int>(qbar_.size()); ++k) {
    if (k >= 2) xk2 = (k == 2) ? 1.0 : xk2 * x;
    if (k >= 2) xk1 *= x;
    if (qbar_[k] == 0) continue;
    g.add(qbar_[k] * xk1 * x);
    g1.add(qbar_[k] * k * xk1);
    if (k >= 2) g2.add(qbar_[k] * k * (k - 1) * xk2);
  }
  r.g = g.s;
  r.g1 = g1.s;
  r.g2 = g2.s;
  return r;
}

const char* to_string(Criticality c) {
  switch (c) {
    case Criticality::no_fixed_point: return "no-fixed-point";
    case Criticality::two_fixed_points: return "two-fixed-points";
    case Criticality::unique_subcritical: return "unique-subcritical";
    case Criticality::unique_critical: return "unique-critical";
  }
  return "?";
}

double CriticalitySolution::c_faces_in(const std::set<int>& a) const {
  double s = 0;
  for (auto k : a)
    if (k >= 1 && k < static_cast<int>(law.size())) s += law[k];
  return s;
}

namespace {

std::vector<double> law_from_x(const WeightSequence& q, double x, double normalizer) {
  // law(k) = x^{k-1} qbar_k / normalizer-with-x, truncated when the tail is
  // below 1e-15 of the running sum (closed-form generators only).
  std::vector<double> law;
  if (!q.is_all_ones()) {
    law.resize(q.max_k() + 1, 0.0);
    for (int k = 0; k <= q.max_k(); ++k) law[k] = std::pow(x, k) * q.qbar(k) / normalizer;
    return law;
  }
  double sum = 0;
  for (int k = 0;; ++k) {
    const double term = std::pow(x, k) * q.qbar(k) / normalizer;
    law.push_back(term);
    sum += term;
    if (k > 4 && term < 1e-15 * sum) break;
    if (k > 4096) break;
  }
  return law;
}

}  // namespace

CriticalitySolution classify(const WeightSequence& q) {
  CriticalitySolution sol;
  const double radius = q.radius();
  const double hi_cap = std::isfinite(radius) ? radius : 1e18;

  auto g = [&](double x) { return q.eval(x); };

  // g' is increasing; locate x_m with g'(x_m) = 1 when it exists in (0, R).
  // Probe points approach a finite radius geometrically from below, or grow
  // geometrically when R is infinite; divergence counts as g' >= 1.
  const double g1_at_0 = q.qbar(1);
  double xm = -1;
  if (g1_at_0 < 1.0) {
    double lo = 0, hi = -1;
    double probe = std::isfinite(radius) ? radius / 2 : 1.0;
    for (;;) {
      const GEval e = g(probe);
      if (!e.finite || e.g1 >= 1.0) {
        hi = probe;
        break;
      }
      lo = probe;
      if (std::isfinite(radius)) {
        probe = radius - (radius - probe) / 2;
        if (radius - probe < radius * 1e-14) break;
      } else {
        probe *= 2;
        if (probe > hi_cap) break;
      }
    }
    if (hi > 0) {
      for (int it = 0; it < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const GEval e = g(mid);
        if (!e.finite || e.g1 >= 1.0)
          hi = mid;
        else
          lo = mid;
      }
      xm = 0.5 * (lo + hi);
    }
  }

  const double tol_fix = 1e-9;
  auto h = [&](double x) {
    const GEval e = g(x);
    return e.finite ? e.g - x : kInf;
  };

  double zstar = -1;
  if (g1_at_0 >= 1.0) {
    // h' = g' - 1 >= 0 on [0, R): h increasing from h(0) = 1, never a root.
    sol.kind = Criticality::no_fixed_point;
  } else if (xm < 0) {
    // g' < 1 throughout: h decreasing; a root exists iff h -> <= 0 at R.
    const double probe = std::isfinite(radius) ? radius * (1 - 1e-12) : 1e18;
    if (h(probe) <= 0) {
      double lo = 0, hi = probe;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) > 0 ? lo : hi) = mid;
      }
      zstar = 0.5 * (lo + hi);
      sol.kind = Criticality::unique_subcritical;
    } else {
      sol.kind = Criticality::no_fixed_point;
    }
  } else {
    const double hm = h(xm);
    if (hm > tol_fix * std::max(1.0, xm)) {
      sol.kind = Criticality::no_fixed_point;
    } else if (hm >= -tol_fix * std::max(1.0, xm)) {
      zstar = xm;  // tangency
      sol.kind = Criticality::unique_critical;
    } else {
      double lo = 0, hi = xm;  // smallest fixed point lies left of the minimum
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) > 0 ? lo : hi) = mid;
      }
      zstar = 0.5 * (lo + hi);
      sol.kind = Criticality::two_fixed_points;
    }
  }

  if (zstar > 0) {
    sol.admissible = true;
    sol.zstar = zstar;
    const GEval e = g(zstar);
    sol.critical = std::fabs(e.g1 - 1.0) <= 1e-8;
    if (sol.kind == Criticality::unique_critical) sol.critical = true;
    sol.generic_critical = sol.critical && std::isfinite(e.g2);
    sol.sigma2 = sol.critical ? zstar * e.g2 : 0.0;
    sol.law = law_from_x(q, zstar, zstar);  // p_q(k) = Z*^{k-1} qbar_k
    sol.c_vertices = sol.law.empty() ? 0 : sol.law[0];
    sol.c_faces = 1.0 - sol.c_vertices;
  }
  return sol;
}

TiltSolution tilt_solve(const WeightSequence& q) {
  const double radius = q.radius();
  auto phi = [&](double x) {
    const GEval e = q.eval(x);
    return e.finite ? x * e.g1 - e.g : kInf;
  };
  // phi(0) = -1 and phi is increasing; bracket a sign change below R.
  double lo = 0, hi;
  if (std::isfinite(radius)) {
    hi = radius * 0.5;
    while (phi(hi) <= 0) {
      hi = radius - (radius - hi) * 0.5;
      if (radius - hi < radius * 1e-15)
        throw std::invalid_argument("tilt_solve: no root of x g'(x) = g(x) inside the radius");
    }
  } else {
    hi = 1;
    while (phi(hi) <= 0) {
      hi *= 2;
      if (hi > 1e18) throw std::invalid_argument("tilt_solve: no root of x g'(x) = g(x)");
    }
  }
  for (int it = 0; it < 300 && (hi - lo) > 1e-16 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (phi(mid) <= 0 ? lo : hi) = mid;
  }
  TiltSolution t;
  t.x = 0.5 * (lo + hi);
  // One Newton polish: phi' = x g''.
  {
    const GEval e = q.eval(t.x);
    if (e.finite && e.g2 > 0) {
      const double step = (t.x * e.g1 - e.g) / (t.x * e.g2);
      const double cand = t.x - step;
      if (cand > 0 && cand < (std::isfinite(radius) ? radius : 1e18)) t.x = cand;
    }
  }
  const GEval e = q.eval(t.x);
  t.g = e.g;
  t.g1 = e.g1;
  t.g2 = e.g2;
  if (std::fabs(t.x * t.g1 - t.g) > 1e-12 * t.g)
    throw std::logic_error("tilt_solve: root did not converge");
  t.law = law_from_x(q, t.x, t.g);  // mu_q(k) = x^k qbar_k / g(x)
  t.ratio = t.g / (t.x * t.x * t.g2);
  t.rescale = 2.25 * t.ratio;
  return t;
}

bool Conditioning::counts(int k) const {
  switch (kind) {
    case Kind::edges: return true;
    case Kind::vertices: return k == 0;
    case Kind::faces: return k >= 1;
    case Kind::faces_in: return a.count(k) > 0;
  }
  return false;
}

std::string Conditioning::name() const {
  switch (kind) {
    case Kind::edges: return "E";
    case Kind::vertices: return "V";
    case Kind::faces: return "F";
    case Kind::faces_in: {
      std::string s = "F,A={";
      bool first = true;
      for (auto k : a) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(k);
      }
      return s + "}";
    }
  }
  return "?";
}

PlaneTree sample_conditioned_gw(const std::vector<double>& law, const Conditioning& cond,
                                long long n, Rng& rng, long long max_attempts,
                                long long* attempts_out) {
  if (n < 1) throw std::invalid_argument("sample_conditioned_gw: n must be >= 1");
  double mass = 0;
  for (std::size_t k = 0; k < law.size(); ++k)
    if (cond.counts(static_cast<int>(k))) mass += law[k];
  if (mass <= 0)
    throw std::invalid_argument("sample_conditioned_gw: conditioning set has zero mass");
  if (max_attempts <= 0)
    max_attempts = std::max<long long>(
        100000, 200 * static_cast<long long>(std::sqrt(static_cast<double>(n)) + 1));

  const AliasTable alias(law);
  Steps steps;
  for (long long attempt = 0; attempt < max_attempts; ++attempt) {
    steps.clear();
    long long hits = 0;
    std::int64_t sum = 0;
    while (hits < n) {
      const std::int32_t k = alias.draw(rng);
      steps.push_back(static_cast<std::int64_t>(k) - 1);
      sum += k - 1;
      if (cond.counts(k)) ++hits;
    }
    if (sum == -1) {
      if (attempts_out) *attempts_out = attempt + 1;
      return tree_from_excursion(vervaat_shift(steps).first);
    }
  }
  throw std::runtime_error("sample_conditioned_gw: zero acceptance after " +
                           std::to_string(max_attempts) +
                           " attempts; (law, " + cond.name() + ", n=" + std::to_string(n) +
                           ") looks infeasible");
}

BdgMap sample_boltzmann_map(const WeightSequence& q, const Conditioning& cond, long long n,
                            Rng& rng) {
  if (n < 2) throw std::invalid_argument("sample_boltzmann_map: n must be >= 2");
  std::vector<double> law;
  if (cond.kind == Conditioning::Kind::edges) {
    law = tilt_solve(q).law;
  } else {
    const CriticalitySolution sol = classify(q);
    if (!sol.admissible || !sol.critical)
      throw std::invalid_argument(
          "sample_boltzmann_map: weights are not critical; only edge conditioning applies");
    law = sol.law;
  }
  const PlaneTree tree = sample_conditioned_gw(law, cond, n, rng);
  const LabelledTree lt = label_tree(tree, rng);
  const LabelledTwoType two = js_inverse_labelled(lt);
  const Orientation eps = rng.coin() ? Orientation::plus : Orientation::minus;
  return bdg_build_map(two.two, two.labels, eps);
}

UntiltReport untilt_equivalence_check(const std::map<int, BigRat>& qbar, const BigRat& c,
                                      const BigRat& a, const BigRat& b, int max_edges,
                                      int cond_vertices) {
  UntiltReport rep;
  auto weight = [&](const PlaneTree& t, auto&& per_k) {
    BigRat w = 1;
    for (std::size_t v = 0; v < t.size(); ++v) w *= per_k(t.kids(v));
    return w;
  };
  auto base = [&](int k) {
    const auto it = qbar.find(k);
    return it == qbar.end() ? BigRat(0) : it->second;
  };
  auto tilted = [&](int k) {  // c^{k-1} qbar_k
    BigRat f = base(k);
    int e = k - 1;
    for (; e > 0; --e) f *= c;
    for (; e < 0; ++e) f /= c;
    return f;
  };
  auto hatted = [&](int k) {  // a b^k qbar_k
    BigRat f = base(k) * a;
    for (int e = 0; e < k; ++e) f *= b;
    return f;
  };

  // Part (i): Theta^{q~}(T) / Theta^q(T) == 1/c on every tree.
  rep.ratio_ok = true;
  rep.ratio = BigRat(1) / c;
  std::vector<PlaneTree> all;
  for (int edges = 0; edges <= max_edges; ++edges) {
    for (const auto& kids : [&] {
           // enumerate all kids arrays with `edges` edges, any child counts
           std::vector<std::vector<std::int32_t>> out;
           std::vector<std::int32_t> cur;
           auto rec = [&](auto&& self, int placed, int open) -> void {
             if (placed == edges + 1) {
               if (open == 0) out.push_back(cur);
               return;
             }
             if (open <= 0 || open > edges + 1 - placed) return;
             for (int k = 0; k <= edges + 1 - placed - open + 1; ++k) {
               cur.push_back(k);
               self(self, placed + 1, open - 1 + k);
               cur.pop_back();
             }
           };
           rec(rec, 0, 1);
           return out;
         }()) {
      all.emplace_back(kids);
    }
  }
  for (const auto& t : all) {
    const BigRat wq = weight(t, base);
    const BigRat wt = weight(t, tilted);
    ++rep.trees_checked;
    if (wq != 0) {
      if (wt / wq != rep.ratio) rep.ratio_ok = false;
    } else if (wt != 0) {
      rep.ratio_ok = false;
    }
  }

  // Part (ii): conditioned laws on #T = cond_vertices under q^ and q agree.
  BigRat zq = 0, zh = 0;
  std::vector<std::pair<BigRat, BigRat>> weights;  // (q, q^) per tree of that size
  for (const auto& t : all) {
    if (static_cast<int>(t.size()) != cond_vertices) continue;
    const BigRat wq = weight(t, base);
    const BigRat wh = weight(t, hatted);
    weights.emplace_back(wq, wh);
    zq += wq;
    zh += wh;
  }
  rep.conditioned_ok = zq != 0 && zh != 0;
  if (rep.conditioned_ok)
    for (const auto& [wq, wh] : weights)
      if (wq / zq != wh / zh) rep.conditioned_ok = false;
  return rep;
}

}  // namespace pmaps
