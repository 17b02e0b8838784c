#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmaps/degree_sequence.hpp"
#include "pmaps/maps.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Tree text format, one tree per line: space-separated child counts in
// preorder. A labelled tree doubles the token count: the first half is the
// child counts, the second half the labels in the same order.
std::string format_tree(const PlaneTree& tree);
std::string format_labelled_tree(const LabelledTree& tree);
struct ParsedTree {
  PlaneTree tree;
  std::optional<std::vector<std::int64_t>> labels;
};
ParsedTree parse_tree_line(const std::string& line);

// Map text format: header "E root star" (star = -1 when unpointed), then one
// line "h twin[h] next[h]" per half-edge.
void write_map(std::ostream& os, const PlanarMap& map);
PlanarMap read_map(std::istream& is);

// Degree-sequence file: lines "i count" (i >= 1).
DegreeSequence read_degree_file(std::istream& is);
void write_degree_file(std::ostream& os, const DegreeSequence& ds);

// Weights file: lines "k q_k".
std::vector<std::pair<int, double>> read_weight_file(std::istream& is);

}  // namespace pmaps
