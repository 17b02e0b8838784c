#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "pmaps/degree_sequence.hpp"

namespace pmaps {

// Rooted ordered tree stored as the preorder sequence of child counts.
// Vertex identity is the 0-based preorder index. Construction validates the
// Lukasiewicz condition: prefix sums of (kids[j]-1) stay >= 0 and total -1.
class PlaneTree {
 public:
  explicit PlaneTree(std::vector<std::int32_t> kids);
  static PlaneTree singleton() { return PlaneTree({0}); }

  std::size_t size() const { return kids_.size(); }      // N + 1 vertices
  long long edge_count() const { return static_cast<long long>(kids_.size()) - 1; }
  std::int32_t kids(std::size_t v) const { return kids_[v]; }
  std::int32_t parent(std::size_t v) const { return parent_[v]; }  // -1 at root
  std::int32_t child_rank(std::size_t v) const { return child_rank_[v]; }  // 1-based, 0 at root
  bool is_leaf(std::size_t v) const { return kids_[v] == 0; }
  bool is_last_child(std::size_t v) const {
    return parent_[v] >= 0 && child_rank_[v] == kids_[parent_[v]];
  }
  const std::vector<std::int32_t>& kids_all() const { return kids_; }

  bool operator==(const PlaneTree& o) const { return kids_ == o.kids_; }

 private:
  std::vector<std::int32_t> kids_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> child_rank_;
};

// First-child / next-sibling / last-child index links, -1 when absent.
struct TreeLinks {
  std::vector<std::int32_t> first_child;
  std::vector<std::int32_t> next_sibling;
  std::vector<std::int32_t> last_child;
};
TreeLinks build_links(const PlaneTree& tree);

std::vector<std::int32_t> depths(const PlaneTree& tree);

// A plane tree with the even/odd-generation coloring (even = white). The
// parity view is implicit; invariants are checked, not encoded.
struct TwoTypeTree {
  PlaneTree tree;

  explicit TwoTypeTree(PlaneTree t) : tree(std::move(t)) {}
  long long white_count() const;
  // Black vertices have graph degree (children + 1); tallied as n_i.
  DegreeSequence black_degrees() const;
  bool operator==(const TwoTypeTree& o) const { return tree == o.tree; }
};

// Labels in preorder. For the one-type reading every vertex carries its own
// label; for the two-type reading black labels equal their white parent's.
struct LabelledTree {
  PlaneTree tree;
  std::vector<std::int64_t> labels;
  bool operator==(const LabelledTree& o) const {
    return tree == o.tree && labels == o.labels;
  }
};

// Root label 0; rightmost child copies its parent; increments parent->first
// child and between consecutive children are >= -1.
bool valid_one_type_labels(const PlaneTree& tree, const std::vector<std::int64_t>& labels);
// Root label 0; around every black vertex the cyclic white-neighbour
// increments (parent, children..., parent) are >= -1; blacks carry their
// white parent's label.
bool valid_two_type_labels(const PlaneTree& tree, const std::vector<std::int64_t>& labels);

// Encoding processes. Integer sequences at integer times; interpolation, when
// needed, happens in the statistics layer.
std::vector<std::int64_t> lukasiewicz_path(const PlaneTree& tree);          // length N+2
std::vector<std::int64_t> height_process(const PlaneTree& tree);            // length N+1
std::vector<std::int64_t> height_from_lukasiewicz(const std::vector<std::int64_t>& w);
std::vector<std::int64_t> contour_process(const PlaneTree& tree);           // length 2N+1
std::vector<std::int32_t> contour_sequence(const PlaneTree& tree);          // vertex ids
std::vector<std::int64_t> modified_height(const PlaneTree& tree);           // length N+1
std::vector<std::int64_t> modified_height_from_lukasiewicz(const std::vector<std::int64_t>& w);
std::vector<std::int64_t> white_contour(const TwoTypeTree& two);            // length N+1
std::vector<std::int32_t> white_contour_sequence(const TwoTypeTree& two);   // vertex ids
std::vector<std::int64_t> white_label_process(const TwoTypeTree& two,
                                              const std::vector<std::int64_t>& labels);

struct EncodedPaths {
  std::vector<std::int64_t> w;       // Lukasiewicz
  std::vector<std::int64_t> h;       // height
  std::vector<std::int64_t> c;       // contour
  std::vector<std::int64_t> htilde;  // modified height
  std::vector<std::int64_t> cwhite;  // white contour (two-type reading)
  std::vector<std::int64_t> labels;      // label process, when labelled
  std::vector<std::int64_t> labels_white;
};
EncodedPaths encode_paths(const PlaneTree& tree,
                          const std::vector<std::int64_t>* labels = nullptr);

// Branch data for a vertex: A_i(v) = #strict ancestors with i children,
// LR = 1 + sum (i-1) A_i, content = ((k_parent, child rank); shallow to deep).
struct SpineProfile {
  std::map<int, long long> ancestors_by_kids;  // A
  long long height = 0;                        // |A| = depth(v)
  long long lr = 1;
  std::vector<std::pair<std::int32_t, std::int32_t>> content;
};
SpineProfile spine_profile(const PlaneTree& tree, std::size_t v);

// Lambda_{T,i}(A): #vertices among the first i (preorder) with child count in
// A; nondecreasing, length N+2.
std::vector<std::int64_t> prefix_class_counts(const PlaneTree& tree,
                                              const std::set<int>& child_counts);

}  // namespace pmaps
