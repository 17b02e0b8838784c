#pragma once

#include <cstdint>
#include <vector>

#include "pmaps/maps.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Root-edge orientation bit of the tree-to-map correspondence.
enum class Orientation : int { minus = -1, plus = +1 };

// Tree-vertex correspondences returned with each direction: index_map[v] is
// the image of vertex v (preorder index on the source side) on the result.
struct JsForward {
  PlaneTree one;
  std::vector<std::int32_t> index_map;
};
struct JsInverse {
  TwoTypeTree two;
  std::vector<std::int32_t> index_map;
};

// Two-type -> one-type: white vertices become leaves, black vertices with
// degree k become internal vertices with k children.
JsForward js_forward(const TwoTypeTree& two);

// One-type -> two-type, via u* = last ancestor whose last child is not an
// ancestor; the new root is the last leaf.
JsInverse js_inverse(const PlaneTree& one);

// Labels ride the vertex correspondence unchanged (black vertices carry the
// label of their white parent on the two-type side).
LabelledTree js_forward_labelled(const TwoTypeTree& two, const std::vector<std::int64_t>& labels);
struct LabelledTwoType {
  TwoTypeTree two;
  std::vector<std::int64_t> labels;
};
LabelledTwoType js_inverse_labelled(const LabelledTree& one);

// Labelled mobile -> rooted pointed bipartite map. Each white corner is
// joined to the next corner of label one less (the star collects the minima);
// the root is the arc drawn from corner e_0, tail side picked by eps.
struct BdgMap {
  PlanarMap map;
  CornerData corners;                      // contour position -> vertex, label
  std::vector<std::int32_t> white_vertex;  // mobile white vertex -> map vertex
  std::int32_t root_white = -1;            // map vertex of the mobile root
};
BdgMap bdg_build_map(const TwoTypeTree& two, const std::vector<std::int64_t>& labels,
                     Orientation eps);

struct BdgInverse {
  TwoTypeTree two;
  std::vector<std::int64_t> labels;
  Orientation eps;
};
// Pointed rooted bipartite map -> labelled mobile. Labels are recovered from
// graph distances to the star; the mobile structure from face walks.
BdgInverse bdg_inverse(const PlanarMap& map);

}  // namespace pmaps
