#include "treestat/profile.hpp"

#include <string>

#include "treestat/errors.hpp"

namespace treestat {

MarginalProfile::MarginalProfile(int m, int depth, std::vector<double> values)
    : index_(m, depth), values_(std::move(values)) {
  if (values_.size() != index_.size()) {
    throw DimensionMismatch("marginal profile holds " + std::to_string(values_.size()) +
                            " values, expected " + std::to_string(index_.size()));
  }
  for (double p : values_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidParams("marginal probabilities must lie in [0,1]");
    }
  }
  // Monotonicity along edges: p_{va} <= p_v.
  for (std::size_t i = index_.gen_begin(2); i < index_.size(); ++i) {
    if (values_[i] > values_[index_.mother(i)]) {
      throw InvalidParams("marginal profile not monotone along edges");
    }
  }
}

bool MarginalProfile::is_degenerate() const {
  for (double p : values_) {
    if (p != 0.0 && p != 1.0) return false;
  }
  return true;
}

Tree MarginalProfile::support_tree() const {
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 1.0) vertices.push_back(index_.vertex_at(i));
  }
  return make_tree(arity(), std::move(vertices));
}

MarginalProfile MarginalProfile::indicator(const Tree& t, int depth) {
  FullTreeIndex index(t.arity(), depth);
  std::vector<double> values(index.size(), 0.0);
  for (const Vertex& v : t.vertices()) values[index.index_of(v)] = 1.0;
  return MarginalProfile(t.arity(), depth, std::move(values));
}

DeltaProfile::DeltaProfile(int m, int depth, std::vector<double> values)
    : index_(m, depth), values_(std::move(values)) {
  if (values_.size() != index_.size()) {
    throw DimensionMismatch("delta profile holds " + std::to_string(values_.size()) +
                            " values, expected " + std::to_string(index_.size()));
  }
  for (double d : values_) {
    if (!(d >= -1.0 && d <= 1.0)) {
      throw InvalidParams("deviations must lie in [-1,1]");
    }
  }
}

DeltaProfile profile_difference(const MarginalProfile& lhs, const MarginalProfile& rhs) {
  if (lhs.arity() != rhs.arity() || lhs.depth() != rhs.depth()) {
    throw DimensionMismatch("marginal profiles differ in arity or depth");
  }
  std::vector<double> delta(lhs.values().size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    delta[i] = lhs.values()[i] - rhs.values()[i];
  }
  return DeltaProfile(lhs.arity(), lhs.depth(), std::move(delta));
}

std::vector<std::int64_t> presence_counts(const TreeSample& sample,
                                          const FullTreeIndex& index) {
  if (sample.arity() != index.arity()) {
    throw ArityViolation("sample arity differs from index arity");
  }
  if (sample.depth_cap() > index.depth()) {
    throw DimensionMismatch("sample depth cap exceeds index depth");
  }
  std::vector<std::int64_t> counts(index.size(), 0);
  for (const Tree& t : sample.trees()) {
    for (const Vertex& v : t.vertices()) ++counts[index.index_of(v)];
  }
  return counts;
}

}  // namespace treestat
