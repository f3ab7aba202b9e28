#pragma once

#include <cstdint>
#include <vector>

#include "treestat/full_tree.hpp"
#include "treestat/tree.hpp"

namespace treestat {

// Per-vertex presence probabilities p_v for every vertex of generation <=
// depth, stored densely in FullTreeIndex order. Presence of a child implies
// presence of the mother, so profiles are monotone along edges; this is
// enforced at construction.
class MarginalProfile {
 public:
  MarginalProfile(int m, int depth, std::vector<double> values);

  int arity() const { return index_.arity(); }
  int depth() const { return index_.depth(); }
  const FullTreeIndex& index() const { return index_; }
  const std::vector<double>& values() const { return values_; }

  double at(std::size_t idx) const { return values_[idx]; }
  double at(const Vertex& v) const { return values_[index_.index_of(v)]; }

  // True iff every probability is 0 or 1 (a point mass). The support tree is
  // then the set of vertices with p_v = 1.
  bool is_degenerate() const;
  Tree support_tree() const;

  // The indicator profile of a fixed tree within a depth cap.
  static MarginalProfile indicator(const Tree& t, int depth);

 private:
  FullTreeIndex index_;
  std::vector<double> values_;
};

// Per-vertex deviations delta_v = p_hat_v - p0_v in [-1, 1], dense in
// FullTreeIndex order.
class DeltaProfile {
 public:
  DeltaProfile(int m, int depth, std::vector<double> values);

  int arity() const { return index_.arity(); }
  int depth() const { return index_.depth(); }
  const FullTreeIndex& index() const { return index_; }
  const std::vector<double>& values() const { return values_; }
  double at(std::size_t idx) const { return values_[idx]; }

 private:
  FullTreeIndex index_;
  std::vector<double> values_;
};

DeltaProfile profile_difference(const MarginalProfile& lhs, const MarginalProfile& rhs);

// Per-vertex presence counts of a sample over the dense layout.
std::vector<std::int64_t> presence_counts(const TreeSample& sample,
                                          const FullTreeIndex& index);

}  // namespace treestat
