#include "treestat/vertex.hpp"

#include <algorithm>

#include "treestat/errors.hpp"

namespace treestat {

Vertex::Vertex(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw ArityViolation("vertex label sequence must be non-empty");
  }
  if (labels_.front() != 1) {
    throw ArityViolation("vertex label sequence must start at the root label 1");
  }
  for (Label a : labels_) {
    if (a < 1) throw ArityViolation("vertex labels must be >= 1");
  }
}

Vertex::Vertex(std::initializer_list<int> labels) {
  labels_.reserve(labels.size());
  for (int a : labels) {
    if (a < 1 || a > kMaxArity) {
      throw ArityViolation("vertex label " + std::to_string(a) + " outside 1.." +
                           std::to_string(kMaxArity));
    }
    labels_.push_back(static_cast<Label>(a));
  }
  if (labels_.empty() || labels_.front() != 1) {
    throw ArityViolation("vertex label sequence must start at the root label 1");
  }
}

int Vertex::max_label() const {
  return static_cast<int>(*std::max_element(labels_.begin(), labels_.end()));
}

Vertex Vertex::mother() const {
  if (is_root()) throw OrphanVertex("the root has no mother");
  return Vertex(std::vector<Label>(labels_.begin(), labels_.end() - 1));
}

Vertex Vertex::child(int a) const {
  if (a < 1 || a > kMaxArity) {
    throw ArityViolation("child slot " + std::to_string(a) + " outside 1.." +
                         std::to_string(kMaxArity));
  }
  std::vector<Label> labels = labels_;
  labels.push_back(static_cast<Label>(a));
  return Vertex(std::move(labels));
}

Vertex Vertex::prefix(int generation) const {
  return Vertex(std::vector<Label>(labels_.begin(), labels_.begin() + generation));
}

bool Vertex::is_prefix_of(const Vertex& other) const {
  if (labels_.size() > other.labels_.size()) return false;
  return std::equal(labels_.begin(), labels_.end(), other.labels_.begin());
}

void check_vertex_arity(const Vertex& v, int m) {
  if (v.max_label() > m) {
    throw ArityViolation("vertex label " + std::to_string(v.max_label()) +
                         " exceeds arity m=" + std::to_string(m));
  }
}

void check_arity_value(int m) {
  if (m < 1 || m > kMaxArity) {
    throw ArityViolation("arity m=" + std::to_string(m) + " outside 1.." +
                         std::to_string(kMaxArity));
  }
}

}  // namespace treestat
