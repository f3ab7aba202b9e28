#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "treestat/vertex.hpp"

namespace treestat {

// Dense level-order indexing of every vertex of the full m-ary tree with
// generation <= depth. Index 0 is the root; generation g occupies the range
// [gen_begin(g), gen_end(g)), and the children of index i are contiguous.
// This is the storage layout behind marginal profiles and the subtree DP.
class FullTreeIndex {
 public:
  FullTreeIndex(int m, int depth);

  int arity() const { return m_; }
  int depth() const { return depth_; }
  std::size_t size() const { return offsets_.back(); }

  std::size_t gen_begin(int g) const { return offsets_[static_cast<std::size_t>(g - 1)]; }
  std::size_t gen_end(int g) const { return offsets_[static_cast<std::size_t>(g)]; }

  int generation_of(std::size_t index) const;

  // Child in slot a (1..m); the caller guarantees generation_of(index) < depth.
  std::size_t child(std::size_t index, int a) const {
    const int g = generation_of(index);
    const std::size_t rank = index - gen_begin(g);
    return gen_end(g) + rank * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(a - 1);
  }

  std::size_t mother(std::size_t index) const;

  std::size_t index_of(const Vertex& v) const;
  Vertex vertex_at(std::size_t index) const;

  // Decoded labels for every index, in index order.
  std::vector<Vertex> all_vertices() const;

 private:
  int m_;
  int depth_;
  std::vector<std::size_t> offsets_;  // offsets_[g-1] = first index of generation g
};

}  // namespace treestat
