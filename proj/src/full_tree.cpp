#include "treestat/full_tree.hpp"

#include <algorithm>
#include <string>

#include "treestat/errors.hpp"

namespace treestat {

namespace {

// Dense profiles and DP tables allocate a few doubles per vertex; this guard
// keeps a single profile under ~200 MB.
constexpr std::size_t kMaxDenseVertices = 25'000'000;

}  // namespace

FullTreeIndex::FullTreeIndex(int m, int depth) : m_(m), depth_(depth) {
  check_arity_value(m);
  if (depth < 1) throw InvalidParams("depth cap must be >= 1");
  offsets_.reserve(static_cast<std::size_t>(depth) + 1);
  offsets_.push_back(0);
  std::size_t gen_size = 1;
  for (int g = 1; g <= depth; ++g) {
    const std::size_t total = offsets_.back() + gen_size;
    if (total > kMaxDenseVertices) {
      throw InvalidParams("full tree of arity " + std::to_string(m) + " and depth " +
                          std::to_string(depth) + " is too large for dense storage");
    }
    offsets_.push_back(total);
    if (g < depth && gen_size > kMaxDenseVertices / static_cast<std::size_t>(m)) {
      throw InvalidParams("full tree of arity " + std::to_string(m) + " and depth " +
                          std::to_string(depth) + " is too large for dense storage");
    }
    gen_size *= static_cast<std::size_t>(m);
  }
}

int FullTreeIndex::generation_of(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<int>(it - offsets_.begin());
}

std::size_t FullTreeIndex::mother(std::size_t index) const {
  const int g = generation_of(index);
  if (g == 1) throw OrphanVertex("the root has no mother");
  const std::size_t rank = index - gen_begin(g);
  return gen_begin(g - 1) + rank / static_cast<std::size_t>(m_);
}

std::size_t FullTreeIndex::index_of(const Vertex& v) const {
  const int g = v.generation();
  if (g > depth_) {
    throw DimensionMismatch("vertex generation " + std::to_string(g) +
                            " exceeds depth cap " + std::to_string(depth_));
  }
  check_vertex_arity(v, m_);
  std::size_t rank = 0;
  for (int i = 1; i < g; ++i) {
    rank = rank * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(v.label(i) - 1);
  }
  return gen_begin(g) + rank;
}

Vertex FullTreeIndex::vertex_at(std::size_t index) const {
  const int g = generation_of(index);
  std::size_t rank = index - gen_begin(g);
  std::vector<Label> labels(static_cast<std::size_t>(g));
  for (int i = g - 1; i >= 1; --i) {
    labels[static_cast<std::size_t>(i)] =
        static_cast<Label>(rank % static_cast<std::size_t>(m_) + 1);
    rank /= static_cast<std::size_t>(m_);
  }
  labels[0] = 1;
  return Vertex(std::move(labels));
}

std::vector<Vertex> FullTreeIndex::all_vertices() const {
  std::vector<Vertex> result;
  result.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) result.push_back(vertex_at(i));
  return result;
}

}  // namespace treestat
