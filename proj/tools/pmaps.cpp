// pmaps: samplers, bijections, audits and scaling experiments for random
// bipartite planar maps, one subcommand per pipeline.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pmaps/bijections.hpp"
#include "pmaps/boltzmann.hpp"
#include "pmaps/io.hpp"
#include "pmaps/maps.hpp"
#include "pmaps/parallel.hpp"
#include "pmaps/presets.hpp"
#include "pmaps/sampling.hpp"
#include "pmaps/stats.hpp"
#include "pmaps/verify.hpp"

using namespace pmaps;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kFormatVersion = "pmaps-files/1";

int threads_flag = 0;
int threads() { return threads_flag > 0 ? threads_flag : default_threads(); }

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open input file " + path);
  return is;
}

DegreeSequence resolve_degrees(const std::string& preset, const std::string& file) {
  if (!preset.empty() && !file.empty())
    throw CLI::ValidationError("give either --preset or --degrees, not both");
  if (!preset.empty()) return parse_degree_preset(preset);
  if (!file.empty()) {
    auto is = open_in(file);
    return read_degree_file(is);
  }
  throw CLI::ValidationError("one of --preset or --degrees is required");
}

WeightSequence resolve_weights(const std::string& preset, const std::string& file) {
  if (!preset.empty() && !file.empty())
    throw CLI::ValidationError("give either --preset or --weights, not both");
  if (!preset.empty()) return parse_weight_preset(preset);
  if (!file.empty()) {
    auto is = open_in(file);
    return WeightSequence::from_table(read_weight_file(is));
  }
  throw CLI::ValidationError("one of --preset or --weights is required");
}

Conditioning parse_conditioning(const std::string& s) {
  if (s == "E") return Conditioning::edges();
  if (s == "V") return Conditioning::vertices();
  if (s == "F") return Conditioning::faces();
  if (s.rfind("FA:", 0) == 0) {
    std::set<int> a;
    std::stringstream ss(s.substr(3));
    std::string tok;
    while (std::getline(ss, tok, ',')) a.insert(std::stoi(tok));
    if (a.empty()) throw CLI::ValidationError("FA: needs a comma-separated set, e.g. FA:1,2");
    return Conditioning::faces_in(a);
  }
  throw CLI::ValidationError("--cond must be E, V, F or FA:<k,k,...>");
}

std::vector<long long> parse_sizes(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(static_cast<long long>(std::stod(tok)));
  if (out.empty()) throw CLI::ValidationError("--sizes must be a comma-separated list");
  return out;
}

// ---------------------------------------------------------------- sample-tree

int cmd_sample_tree(const std::string& preset, const std::string& degrees, long long count,
                    std::uint64_t seed, const std::string& out, bool labelled) {
  const DegreeSequence ds = resolve_degrees(preset, degrees);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  std::vector<std::string> lines(count);
  Rng rng(seed);
  run_indexed(count, threads(), [&](std::int64_t i) {
    Rng r = rng.child(i);
    const PlaneTree t = sample_tree(ds, r);
    lines[i] = labelled ? format_labelled_tree(label_tree(t, r)) : format_tree(t);
  });
  for (const auto& l : lines) *os << l << '\n';
  return 0;
}

// ----------------------------------------------------------------- sample-map

int cmd_sample_map(const std::string& preset, const std::string& degrees, long long count,
                   std::uint64_t seed, const std::string& out, bool unpointed) {
  const DegreeSequence ds = resolve_degrees(preset, degrees);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  std::vector<std::string> blocks(count);
  Rng rng(seed);
  run_indexed(count, threads(), [&](std::int64_t i) {
    Rng r = rng.child(i);
    const PlanarMap m = sample_uniform_map(ds, r, !unpointed);
    std::ostringstream ss;
    write_map(ss, m);
    blocks[i] = ss.str();
  });
  for (const auto& b : blocks) *os << b;
  return 0;
}

// ---------------------------------------------------------------------- audit

int cmd_audit(const std::string& in) {
  auto is = open_in(in);
  int bad = 0, index = 0;
  while (true) {
    is >> std::ws;
    if (is.eof()) break;
    const PlanarMap m = read_map(is);
    const AuditReport rep = audit(m);
    std::cout << "map " << index++ << ": " << rep.summary() << '\n';
    if (!rep.ok()) ++bad;
  }
  if (index == 0) {
    std::cerr << "no maps in " << in << '\n';
    return 2;
  }
  return bad ? 1 : 0;
}

// ------------------------------------------------------------------ distances

int cmd_distances(const std::string& in, const std::string& source, const std::string& out) {
  auto is = open_in(in);
  const PlanarMap m = read_map(is);
  std::int32_t src;
  if (source == "star") {
    if (m.star < 0) {
      std::cerr << "map is not pointed; pass --source <vertex>\n";
      return 2;
    }
    src = m.star;
  } else {
    src = std::stoi(source);
  }
  const auto d = bfs_distances(m, src);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  for (std::size_t v = 0; v < d.size(); ++v) *os << v << ' ' << d[v] << '\n';
  return 0;
}

// -------------------------------------------------------------------- convert

int cmd_convert(const std::string& from, const std::string& to, int eps_flag,
                const std::string& in, const std::string& out) {
  const auto known = [](const std::string& s) {
    return s == "tree1" || s == "tree2" || s == "map";
  };
  if (!known(from) || !known(to))
    throw CLI::ValidationError("--from/--to must be tree1, tree2 or map");
  if (from == "map" && to != "tree2")
    throw CLI::ValidationError("map converts to tree2 only");
  if (to == "map" && from == "map")
    throw CLI::ValidationError("map -> map is not a conversion");
  auto is = open_in(in);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  const Orientation eps = eps_flag >= 0 ? Orientation::plus : Orientation::minus;

  if (from == "map") {
    if (to != "tree2") throw CLI::ValidationError("map converts to tree2 only");
    while (true) {
      is >> std::ws;
      if (is.eof()) break;
      const PlanarMap m = read_map(is);
      const BdgInverse inv = bdg_inverse(m);
      *os << "# eps " << (inv.eps == Orientation::plus ? "+1" : "-1") << '\n';
      *os << format_labelled_tree(LabelledTree{inv.two.tree, inv.labels}) << '\n';
    }
    return 0;
  }

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const ParsedTree parsed = parse_tree_line(line);
    if (from == "tree1") {
      if (to == "tree2") {
        if (parsed.labels) {
          const auto two = js_inverse_labelled(LabelledTree{parsed.tree, *parsed.labels});
          *os << format_labelled_tree(LabelledTree{two.two.tree, two.labels}) << '\n';
        } else {
          *os << format_tree(js_inverse(parsed.tree).two.tree) << '\n';
        }
      } else if (to == "map") {
        if (!parsed.labels) throw std::invalid_argument("tree1 -> map needs labels");
        const auto two = js_inverse_labelled(LabelledTree{parsed.tree, *parsed.labels});
        write_map(*os, bdg_build_map(two.two, two.labels, eps).map);
      } else {
        *os << line << '\n';  // tree1 -> tree1
      }
    } else if (from == "tree2") {
      const TwoTypeTree two(parsed.tree);
      if (to == "tree1") {
        if (parsed.labels) {
          *os << format_labelled_tree(js_forward_labelled(two, *parsed.labels)) << '\n';
        } else {
          *os << format_tree(js_forward(two).one) << '\n';
        }
      } else if (to == "map") {
        if (!parsed.labels) throw std::invalid_argument("tree2 -> map needs labels");
        write_map(*os, bdg_build_map(two, *parsed.labels, eps).map);
      } else {
        *os << line << '\n';
      }
    } else {
      throw CLI::ValidationError("--from must be tree1, tree2 or map");
    }
  }
  return 0;
}

// ------------------------------------------------------------------ boltzmann

int cmd_boltzmann_solve(const std::string& preset, const std::string& weights,
                        const std::string& out) {
  const WeightSequence q = resolve_weights(preset, weights);
  json rec;
  rec["input"] = preset.empty() ? weights : preset;
  rec["format"] = kFormatVersion;
  const CriticalitySolution sol = classify(q);
  rec["classification"] = to_string(sol.kind);
  rec["admissible"] = sol.admissible;
  rec["critical"] = sol.critical;
  rec["generic_critical"] = sol.generic_critical;
  if (sol.admissible) {
    rec["zstar"] = sol.zstar;
    if (sol.critical) rec["sigma2"] = sol.sigma2;
    rec["constants"] = {{"C_E", sol.c_edges},
                        {"C_V", sol.c_vertices},
                        {"C_F", sol.c_faces}};
  }
  try {
    const TiltSolution t = tilt_solve(q);
    rec["tiltX"] = t.x;
    rec["tilt_ratio"] = t.ratio;      // g / (x^2 g'')
    rec["tilt_rescale"] = t.rescale;  // (9/4) * ratio
  } catch (const std::exception& e) {
    rec["tiltX"] = nullptr;
    rec["tilt_error"] = e.what();
  }
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  *os << rec.dump() << '\n';
  return 0;
}

int cmd_boltzmann_sample(const std::string& preset, const std::string& weights,
                         const std::string& cond_str, long long n, long long count,
                         std::uint64_t seed, const std::string& out) {
  const WeightSequence q = resolve_weights(preset, weights);
  const Conditioning cond = parse_conditioning(cond_str);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  std::vector<std::string> blocks(count);
  Rng rng(seed);
  run_indexed(count, threads(), [&](std::int64_t i) {
    Rng r = rng.child(i);
    const BdgMap built = sample_boltzmann_map(q, cond, n, r);
    std::ostringstream ss;
    write_map(ss, built.map);
    blocks[i] = ss.str();
  });
  for (const auto& b : blocks) *os << b;
  return 0;
}

// -------------------------------------------------------------------- scaling

struct ScalingRecord {
  long long faces, edges, replica;
  double gap, sup_label, sup_height, lambda0;
};

int cmd_scaling_run(const std::string& preset, const std::string& sizes_str, long long replicas,
                    std::uint64_t seed, std::string out_dir) {
  if (const char* env = std::getenv("PMAPS_OUT_DIR")) out_dir = env;
  const auto sizes = parse_sizes(sizes_str);
  const ReferenceLaw ref = preset_reference_law(preset);
  const double sig2 = ref.sigma2();
  std::filesystem::create_directories(out_dir);

  auto records_os = open_out(out_dir + "/records.ndjson");
  auto agg_os = open_out(out_dir + "/aggregates.csv");
  agg_os << "faces,edges,replicas,mean_gap,median_gap,mean_sup_label,median_sup_label,"
            "mean_sup_height,median_sup_height,mean_lambda0,share_lambda0_lt_1\n";

  Rng master(seed);
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    // Family preset "2kappa:K" instantiated at each face count.
    const DegreeSequence ds =
        parse_degree_preset(preset + ":" + std::to_string(sizes[si]));
    const double n_edges = static_cast<double>(ds.edges());
    const double label_scale = std::pow(9.0 / (4.0 * sig2 * n_edges), 0.25);
    const double height_scale = std::sqrt(sig2 / (4.0 * n_edges));

    std::vector<ScalingRecord> recs(replicas);
    Rng size_rng = master.child(si);
    run_indexed(replicas, threads(), [&](std::int64_t rep) {
      Rng r = size_rng.child(rep);
      const PlaneTree tree = sample_tree(ds, r);
      const LabelledTree lt = label_tree(tree, r);
      std::int64_t sup_l = 0, sup_h = 0;
      const auto h = height_process(tree);
      for (std::size_t v = 0; v < tree.size(); ++v) {
        sup_l = std::max<std::int64_t>(sup_l, std::llabs(lt.labels[v]));
        sup_h = std::max<std::int64_t>(sup_h, h[v]);
      }
      recs[rep] = ScalingRecord{ds.internals(), ds.edges(), rep,
                                contour_height_gap(tree), sup_l * label_scale,
                                sup_h * height_scale, lambda_linearity_of(tree, {0})};
    });

    std::vector<double> gaps, labels_v, heights, lambdas;
    for (const auto& rec : recs) {
      json j{{"faces", rec.faces},           {"edges", rec.edges},
             {"replica", rec.replica},       {"contour_height_gap", rec.gap},
             {"sup_label_rescaled", rec.sup_label},
             {"sup_height_rescaled", rec.sup_height},
             {"lambda0", rec.lambda0},
             {"seed_path", {seed, si, rec.replica}}};
      records_os << j.dump() << '\n';
      gaps.push_back(rec.gap);
      labels_v.push_back(rec.sup_label);
      heights.push_back(rec.sup_height);
      lambdas.push_back(rec.lambda0);
    }
    auto mean = [](const std::vector<double>& v) {
      double s = 0;
      for (auto x : v) s += x;
      return s / v.size();
    };
    auto median = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      return v.size() % 2 ? v[v.size() / 2]
                          : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
    };
    double lt1 = 0;
    for (auto l : lambdas) lt1 += l < 1.0;
    agg_os << ds.internals() << ',' << ds.edges() << ',' << replicas << ',' << mean(gaps) << ','
           << median(gaps) << ',' << mean(labels_v) << ',' << median(labels_v) << ','
           << mean(heights) << ',' << median(heights) << ',' << mean(lambdas) << ','
           << lt1 / static_cast<double>(replicas) << '\n';
  }

  json manifest{{"tool", "pmaps"},
                {"version", kVersion},
                {"format", kFormatVersion},
                {"rng", Rng::kName},
                {"command", "scaling run"},
                {"preset", preset},
                {"sizes", sizes},
                {"replicas", replicas},
                {"seed", seed},
                {"outputs", {"records.ndjson", "aggregates.csv"}},
                {"notes",
                 "stability tolerances (0.8 median-gap ratio, 10% sup-label agreement) are "
                 "engineering choices, not limit-theorem rates"}};
  open_out(out_dir + "/manifest.json") << manifest.dump(2) << '\n';
  return 0;
}

int cmd_scaling_identity(const std::string& preset, long long faces, long long replicas,
                         std::uint64_t seed) {
  DegreeSequence ds = parse_degree_preset(preset + ":" + std::to_string(faces));
  Rng rng(seed);
  const auto s = two_point_identity(ds, replicas, rng, threads());
  const auto ks = ks_two_sample(s.d_xy, s.d_star_y);
  json rec{{"preset", preset}, {"faces", faces},        {"replicas", replicas},
           {"seed", seed},     {"ks_distance", ks.d},   {"ks_p_value", ks.p_value},
           {"pass_at_0.001", ks.p_value > 0.001}};
  std::cout << rec.dump() << '\n';
  return ks.p_value > 0.001 ? 0 : 1;
}

int cmd_scaling_ks(long long draws, int cells, int trials, std::uint64_t seed) {
  Rng rng(seed);
  int pass = 0;
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.child(t);
    std::vector<double> a(draws), b(draws);
    for (auto& x : a) x = static_cast<double>(r.below(cells));
    for (auto& x : b) x = static_cast<double>(r.below(cells));
    pass += ks_two_sample(a, b).p_value > 0.001;
  }
  json rec{{"trials", trials},
           {"draws", draws},
           {"cells", cells},
           {"pass_rate", static_cast<double>(pass) / trials}};
  std::cout << rec.dump() << '\n';
  return pass * 100 >= trials * 99 ? 0 : 1;
}

int cmd_scaling_lemma_b(long long bridges, int rmax, int xmax, std::uint64_t seed) {
  const auto res = verify_bridge_lemma(bridges, rmax, xmax, seed);
  json rec{{"bridges", bridges}, {"rmax", rmax}, {"xmax", xmax}, {"ok", res.ok}};
  if (!res.ok) rec["detail"] = res.detail;
  std::cout << rec.dump() << '\n';
  return res.ok ? 0 : 1;
}

// --------------------------------------------------------------------- verify

int cmd_verify(int max_edges, std::uint64_t seed) {
  bool ok = true;
  {
    const auto r = verify_bijections(max_edges);
    std::cout << (r.ok ? "ok" : "FAIL") << "  bijections: " << r.labelled_checked
              << " labelled trees, " << r.maps_checked << " maps";
    if (!r.ok) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
    ok = ok && r.ok;
  }
  {
    const auto r = verify_counts(max_edges + 1, 6);
    std::cout << (r.ok ? "ok" : "FAIL") << "  counts: " << r.trees_checked
              << " trees enumerated";
    if (!r.ok) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
    ok = ok && r.ok;
  }
  {
    const auto r = verify_bridge_lemma(100000, 200, 5, seed);
    std::cout << (r.ok ? "ok" : "FAIL") << "  bridge lemma: " << r.trees_checked << " bridges";
    if (!r.ok) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
    ok = ok && r.ok;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random bipartite planar maps: exact samplers, bijections, diagnostics"};
  app.set_version_flag("--version", kVersion);
  app.add_option("--threads", threads_flag, "worker threads (default: hardware concurrency)");
  app.require_subcommand(1);

  std::string preset, degrees, weights, out, in, cond = "E", source = "star";
  std::string from = "tree1", to = "tree2", sizes = "1000";
  long long count = 1, n = 2, replicas = 100, bridges = 100000, draws = 10000;
  std::uint64_t seed = 1;
  int eps = 1, max_edges = 6, rmax = 200, xmax = 5, cells = 7, trials = 100;
  long long faces = 1000;
  bool labelled = false, unpointed = false;

  auto* st = app.add_subcommand("sample-tree", "uniform trees with prescribed degrees");
  st->add_option("--preset", preset, "degree preset, e.g. 2kappa:2:1000");
  st->add_option("--degrees", degrees, "degree-sequence file (lines: i count)");
  st->add_option("--count", count, "number of trees");
  st->add_option("--seed", seed, "RNG seed");
  st->add_option("--out", out, "output file (default stdout)");
  st->add_flag("--labelled", labelled, "attach uniform labels");

  auto* sm = app.add_subcommand("sample-map", "uniform rooted (pointed) bipartite maps");
  sm->add_option("--preset", preset, "degree preset, e.g. 2kappa:2:1000");
  sm->add_option("--degrees", degrees, "degree-sequence file");
  sm->add_option("--count", count, "number of maps");
  sm->add_option("--seed", seed, "RNG seed");
  sm->add_option("--out", out, "output file (default stdout)");
  sm->add_flag("--unpointed", unpointed, "drop the distinguished vertex");

  auto* au = app.add_subcommand("audit", "structural audit of map files");
  au->add_option("--in", in, "map file")->required();

  auto* di = app.add_subcommand("distances", "BFS distances from a source vertex");
  di->add_option("--in", in, "map file")->required();
  di->add_option("--source", source, "star or a vertex id (default star)");
  di->add_option("--out", out, "output file (default stdout)");

  auto* cv = app.add_subcommand("convert", "convert between tree1, tree2 and map");
  cv->add_option("--from", from, "tree1 | tree2 | map")->required();
  cv->add_option("--to", to, "tree1 | tree2 | map")->required();
  cv->add_option("--eps", eps, "root orientation for tree -> map (-1 or +1)");
  cv->add_option("--in", in, "input file")->required();
  cv->add_option("--out", out, "output file (default stdout)");

  auto* bz = app.add_subcommand("boltzmann", "weight calculus and Boltzmann samplers");
  bz->require_subcommand(1);
  auto* bs = bz->add_subcommand("solve", "classify weights, fixed point, tilt");
  bs->add_option("--preset", preset, "all-ones | quad-critical");
  bs->add_option("--weights", weights, "weights file (lines: k q_k)");
  bs->add_option("--out", out, "output file (default stdout)");
  auto* bp = bz->add_subcommand("sample", "conditioned Boltzmann maps");
  bp->add_option("--preset", preset, "all-ones | quad-critical");
  bp->add_option("--weights", weights, "weights file");
  bp->add_option("--cond", cond, "E | V | F | FA:<k,...> (default E)");
  bp->add_option("--n", n, "conditioned size")->required();
  bp->add_option("--count", count, "number of maps");
  bp->add_option("--seed", seed, "RNG seed");
  bp->add_option("--out", out, "output file (default stdout)");

  auto* sc = app.add_subcommand("scaling", "statistical experiments");
  sc->require_subcommand(1);
  auto* sr = sc->add_subcommand("run", "per-size replica records and aggregates");
  sr->add_option("--preset", preset, "family preset, e.g. 2kappa:2")->required();
  sr->add_option("--sizes", sizes, "comma-separated face counts, e.g. 1e3,1e4");
  sr->add_option("--replicas", replicas, "replicas per size");
  sr->add_option("--seed", seed, "RNG seed");
  sr->add_option("--out", out, "output directory (PMAPS_OUT_DIR overrides)")->required();
  auto* si = sc->add_subcommand("identity", "two-point re-rooting identity KS test");
  si->add_option("--preset", preset, "family preset, e.g. 2kappa:2");
  si->add_option("--n", faces, "faces per map");
  si->add_option("--replicas", replicas, "number of replicas");
  si->add_option("--seed", seed, "RNG seed");
  auto* sk = sc->add_subcommand("ks", "KS self-calibration on identical laws");
  sk->add_option("--draws", draws, "sample size per side");
  sk->add_option("--cells", cells, "support size of the test law");
  sk->add_option("--trials", trials, "number of trials");
  sk->add_option("--seed", seed, "RNG seed");
  auto* sl = sc->add_subcommand("lemma-b", "bridge max-gap dichotomy sweep");
  sl->add_option("--bridges", bridges, "number of random bridges");
  sl->add_option("--rmax", rmax, "max bridge length");
  sl->add_option("--xmax", xmax, "max gap parameter x");
  sl->add_option("--seed", seed, "RNG seed");

  auto* vf = app.add_subcommand("verify", "exhaustive bijection/count/lemma suites");
  vf->add_option("--max-edges", max_edges, "edge cap for the exhaustive sweeps");
  vf->add_option("--seed", seed, "RNG seed for the bridge sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (st->parsed()) return cmd_sample_tree(preset, degrees, count, seed, out, labelled);
    if (sm->parsed()) return cmd_sample_map(preset, degrees, count, seed, out, unpointed);
    if (au->parsed()) return cmd_audit(in);
    if (di->parsed()) return cmd_distances(in, source, out);
    if (cv->parsed()) return cmd_convert(from, to, eps, in, out);
    if (bz->parsed()) {
      if (bs->parsed()) return cmd_boltzmann_solve(preset, weights, out);
      if (bp->parsed()) return cmd_boltzmann_sample(preset, weights, cond, n, count, seed, out);
    }
    if (sc->parsed()) {
      if (sr->parsed()) return cmd_scaling_run(preset, sizes, replicas, seed, out);
      if (si->parsed()) return cmd_scaling_identity(preset, faces, replicas, seed);
      if (sk->parsed()) return cmd_scaling_ks(draws, cells, trials, seed);
      if (sl->parsed()) return cmd_scaling_lemma_b(bridges, rmax, xmax, seed);
    }
    if (vf->parsed()) return cmd_verify(max_edges, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
