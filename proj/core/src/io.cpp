#include "pmaps/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pmaps {

std::string format_tree(const PlaneTree& tree) {
  std::ostringstream os;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (v) os << ' ';
    os << tree.kids(v);
  }
  return os.str();
}

std::string format_labelled_tree(const LabelledTree& tree) {
  std::ostringstream os;
  os << format_tree(tree.tree);
  for (auto l : tree.labels) os << ' ' << l;
  return os.str();
}

ParsedTree parse_tree_line(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::int64_t> tokens;
  std::int64_t x;
  while (is >> x) tokens.push_back(x);
  if (tokens.empty()) throw std::invalid_argument("empty tree line");

  // 2m tokens whose first half closes a tree = labelled; otherwise all kids.
  if (tokens.size() % 2 == 0) {
    const std::size_t m = tokens.size() / 2;
    long long sum = 0;
    bool valid = true;
    for (std::size_t j = 0; j < m && valid; ++j) {
      if (tokens[j] < 0) valid = false;
      sum += tokens[j] - 1;
      if (j + 1 < m && sum < 0) valid = false;
    }
    if (valid && sum == -1) {
      std::vector<std::int32_t> kids(tokens.begin(), tokens.begin() + m);
      std::vector<std::int64_t> labels(tokens.begin() + m, tokens.end());
      return ParsedTree{PlaneTree(std::move(kids)), std::move(labels)};
    }
  }
  std::vector<std::int32_t> kids(tokens.begin(), tokens.end());
  return ParsedTree{PlaneTree(std::move(kids)), std::nullopt};
}

void write_map(std::ostream& os, const PlanarMap& map) {
  // File vertex ids = next-orbits numbered by first appearance over half-edge
  // ids, the numbering read_map reconstructs.
  std::int32_t star_file_id = -1;
  if (map.star >= 0) {
    std::vector<std::int32_t> file_id(map.twin.size(), -1);
    std::int32_t nv = 0;
    for (std::size_t h = 0; h < map.twin.size(); ++h) {
      if (file_id[h] != -1) continue;
      std::int32_t x = static_cast<std::int32_t>(h);
      while (file_id[x] == -1) {
        file_id[x] = nv;
        if (map.vertex[x] == map.star) star_file_id = nv;
        x = map.next[x];
      }
      ++nv;
    }
  }
  os << map.edge_count() << ' ' << map.root << ' ' << star_file_id << '\n';
  for (std::size_t h = 0; h < map.twin.size(); ++h)
    os << h << ' ' << map.twin[h] << ' ' << map.next[h] << '\n';
}

PlanarMap read_map(std::istream& is) {
  long long e;
  PlanarMap map;
  if (!(is >> e >> map.root >> map.star)) throw std::invalid_argument("bad map header");
  if (e < 1) throw std::invalid_argument("map needs at least one edge");
  map.twin.assign(2 * e, -1);
  map.next.assign(2 * e, -1);
  for (long long i = 0; i < 2 * e; ++i) {
    long long h, t, n;
    if (!(is >> h >> t >> n)) throw std::invalid_argument("truncated map body");
    if (h < 0 || h >= 2 * e || t < 0 || t >= 2 * e || n < 0 || n >= 2 * e)
      throw std::invalid_argument("half-edge id out of range");
    map.twin[h] = static_cast<std::int32_t>(t);
    map.next[h] = static_cast<std::int32_t>(n);
  }
  // Vertices = orbits of next.
  map.vertex.assign(2 * e, -1);
  std::int32_t nv = 0;
  for (long long h = 0; h < 2 * e; ++h) {
    if (map.vertex[h] != -1) continue;
    std::int32_t x = static_cast<std::int32_t>(h);
    while (map.vertex[x] == -1) {
      map.vertex[x] = nv;
      x = map.next[x];
      if (x < 0) throw std::invalid_argument("next is not a permutation");
    }
    ++nv;
  }
  map.vertex_count = nv;
  if (map.star >= nv) throw std::invalid_argument("star vertex out of range");
  if (map.root < 0 || map.root >= 2 * e) throw std::invalid_argument("root out of range");
  return map;
}

DegreeSequence read_degree_file(std::istream& is) {
  std::vector<std::pair<int, long long>> counts;
  long long i, c;
  while (is >> i >> c) counts.emplace_back(static_cast<int>(i), c);
  return DegreeSequence::from_counts(counts);
}

void write_degree_file(std::ostream& os, const DegreeSequence& ds) {
  const auto& counts = ds.internal_counts();
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > 0) os << i << ' ' << counts[i] << '\n';
}

std::vector<std::pair<int, double>> read_weight_file(std::istream& is) {
  std::vector<std::pair<int, double>> q;
  long long k;
  double w;
  while (is >> k >> w) q.emplace_back(static_cast<int>(k), w);
  return q;
}

}  // namespace pmaps
