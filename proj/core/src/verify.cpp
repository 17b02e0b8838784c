#include "pmaps/verify.hpp"

#include <set>
#include <sstream>

#include "pmaps/bijections.hpp"
#include "pmaps/bridges.hpp"
#include "pmaps/maps.hpp"
#include "pmaps/rng.hpp"
#include "pmaps/sampling.hpp"
#include "pmaps/stats.hpp"

namespace pmaps {

std::vector<DegreeSequence> degree_sequences_with_edges(int edges) {
  std::vector<DegreeSequence> out;
  std::vector<std::pair<int, long long>> counts;
  // Partitions of `edges` into parts i with multiplicities n_i.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(DegreeSequence::from_counts(counts));
      return;
    }
    for (int i = std::min(remaining, max_part); i >= 1; --i) {
      for (long long m = remaining / i; m >= 1; --m) {
        counts.emplace_back(i, m);
        self(self, remaining - i * static_cast<int>(m), i - 1);
        counts.pop_back();
      }
    }
  };
  rec(rec, edges, edges);
  return out;
}

namespace {

std::string describe(const DegreeSequence& ds) {
  std::ostringstream os;
  os << "ds{";
  const auto& c = ds.internal_counts();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i]) os << " n" << i << "=" << c[i];
  os << " }";
  return os.str();
}

}  // namespace

VerifyResult verify_bijections(int max_edges) {
  VerifyResult res;
  auto fail = [&](const std::string& what) {
    if (res.ok) {
      res.ok = false;
      res.detail = what;
    }
  };

  for (int edges = 1; edges <= max_edges && res.ok; ++edges) {
    for (const auto& ds : degree_sequences_with_edges(edges)) {
      if (!res.ok) break;
      const auto trees = enumerate_trees(ds, max_edges);
      if (BigInt(trees.size()) != count_trees(ds))
        fail("count_trees mismatch at " + describe(ds));

      BigInt labelled_total = 0;
      std::set<std::vector<std::int32_t>> pointed_forms;

      for (const auto& tree : trees) {
        ++res.trees_checked;
        // JS round trip and degree transport.
        const JsInverse inv = js_inverse(tree);
        const JsForward fwd = js_forward(inv.two);
        if (!(fwd.one == tree)) {
          fail("js_forward(js_inverse(t)) != t at " + describe(ds));
          break;
        }
        const TwoTypeTree& mobile = inv.two;
        if (mobile.white_count() != ds.leaves() || !(mobile.black_degrees() == ds)) {
          fail("JS degree transport broken at " + describe(ds));
          break;
        }

        const auto labellings = enumerate_labellings(tree);
        labelled_total += BigInt(labellings.size());
        if (BigInt(labellings.size()) != count_labellings(tree)) {
          fail("count_labellings mismatch at " + describe(ds));
          break;
        }

        const auto h_tilde = modified_height(tree);
        const auto c_white = white_contour(mobile);

        for (const auto& labels : labellings) {
          ++res.labelled_checked;
          const LabelledTree lt{tree, labels};
          const LabelledTwoType two = js_inverse_labelled(lt);

          // Lemma 2.1: white contour = modified height, white labels = labels.
          for (std::size_t j = 0; j < h_tilde.size(); ++j)
            if (c_white[j] != h_tilde[j]) {
              fail("C-white != H-tilde at " + describe(ds));
              break;
            }
          const auto l_white = white_label_process(two.two, two.labels);
          for (std::size_t j = 0; j < l_white.size(); ++j)
            if (l_white[j] != labels[j]) {
              fail("white label process != label process at " + describe(ds));
              break;
            }
          if (!res.ok) break;

          for (const Orientation eps : {Orientation::plus, Orientation::minus}) {
            const BdgMap built = bdg_build_map(two.two, two.labels, eps);
            ++res.maps_checked;

            const AuditReport rep = audit(built.map);
            if (!rep.ok()) {
              fail("audit failed at " + describe(ds) + ": " + rep.summary());
              break;
            }
            if (rep.faces != ds.internals() || rep.edges != ds.edges() ||
                rep.vertices != ds.map_vertices()) {
              fail("V/E/F mismatch at " + describe(ds));
              break;
            }
            // Face degrees = twice the black degrees.
            std::map<long long, long long> want;
            const auto& counts = ds.internal_counts();
            for (std::size_t i = 1; i < counts.size(); ++i)
              if (counts[i]) want[2 * static_cast<long long>(i)] = counts[i];
            if (rep.face_degree_counts != want) {
              fail("face degree multiset mismatch at " + describe(ds));
              break;
            }

            // Distance identities on every instance.
            std::vector<std::int64_t> vertex_labels(built.map.vertex_count, 0);
            for (std::size_t i = 0; i < built.corners.corner_vertex.size(); ++i)
              vertex_labels[built.corners.corner_vertex[i]] = built.corners.corner_label[i];
            if (label_distance_check(built.map, vertex_labels) != 0) {
              fail("label-distance identity violated at " + describe(ds));
              break;
            }
            Rng pair_rng(7);
            if (distance_upper_bound_check(built.map, built.corners, 0, pair_rng) > 0) {
              fail("corner distance bound violated at " + describe(ds));
              break;
            }

            // Round trip through the inverse.
            const BdgInverse back = bdg_inverse(built.map);
            if (!(back.two == two.two) || back.labels != two.labels || back.eps != eps) {
              fail("bdg round trip broken at " + describe(ds));
              break;
            }
            const BdgMap rebuilt = bdg_build_map(back.two, back.labels, back.eps);
            if (!maps_equal(rebuilt.map, built.map)) {
              fail("bdg rebuild differs at " + describe(ds));
              break;
            }

            pointed_forms.insert(canonical_form(built.map));
          }
          if (!res.ok) break;
        }
        if (!res.ok) break;
      }

      if (res.ok && BigInt(pointed_forms.size()) != 2 * labelled_total)
        fail("pointed map count != 2 * labellings at " + describe(ds));
    }
  }
  return res;
}

VerifyResult verify_counts(int max_edges, int max_r) {
  VerifyResult res;
  for (int edges = 1; edges <= max_edges && res.ok; ++edges) {
    for (const auto& ds : degree_sequences_with_edges(edges)) {
      const auto trees = enumerate_trees(ds, max_edges);
      res.trees_checked += static_cast<long long>(trees.size());
      if (BigInt(trees.size()) != count_trees(ds)) {
        res.ok = false;
        res.detail = "count_trees mismatch at " + describe(ds);
        break;
      }
    }
  }
  for (int r = 1; r <= max_r && res.ok; ++r) {
    const auto bridges = enumerate_label_bridges(r);
    if (BigInt(bridges.size()) != label_bridge_count(r)) {
      res.ok = false;
      res.detail = "label bridge count mismatch at r=" + std::to_string(r);
    }
  }
  return res;
}

VerifyResult verify_bridge_lemma(long long bridges, int max_r, int max_x, std::uint64_t seed) {
  VerifyResult res;
  Rng rng(seed, 0xB71D6E);
  for (long long i = 0; i < bridges && res.ok; ++i) {
    const int r = 1 + static_cast<int>(rng.below(max_r));
    const auto bridge = sample_label_bridge(r, rng);
    for (int x = 1; x <= max_x; ++x) {
      if (!bridge_maxgap_dichotomy(bridge, x)) {
        res.ok = false;
        res.detail = "dichotomy counterexample at r=" + std::to_string(r) +
                     " x=" + std::to_string(x);
        break;
      }
    }
    ++res.trees_checked;
  }
  return res;
}

}  // namespace pmaps
