#pragma once

#include <cstdint>
#include <vector>

#include "treestat/vertex.hpp"

namespace treestat {

// A finite rooted tree: a prefix-closed set of vertices of the full m-ary
// tree. Equivalently a {0,1}-valued vertex function x with x(v) >= x(va).
// The empty set is a valid tree; any non-empty tree contains the root.
//
// Vertices are stored in canonical (lexicographic) order. Trees are immutable
// after construction and safe to share across threads.
class Tree {
 public:
  static Tree empty(int m);

  int arity() const { return m_; }
  bool is_empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }

  // Maximum generation present; 0 for the empty tree.
  int depth() const { return depth_; }

  bool contains(const Vertex& v) const;
  const std::vector<Vertex>& vertices() const { return vertices_; }

  // Vertices with no child present; empty for the empty tree. A finite tree
  // is characterized by this set.
  std::vector<Vertex> terminals() const;

  // Subset test on vertex sets (both trees must share the arity).
  bool is_subtree_of(const Tree& other) const;

  friend bool operator==(const Tree& a, const Tree& b) = default;

  // Canonical order on trees: lexicographic on the sorted vertex lists, with
  // vertices compared in their own canonical order. Deterministic tie-free
  // ordering for enumeration and serialization.
  static bool canonical_less(const Tree& a, const Tree& b);

 private:
  Tree(int m, std::vector<Vertex> sorted_vertices);

  friend Tree make_tree(int m, std::vector<Vertex> vertices);
  friend Tree from_terminals(int m, const std::vector<Vertex>& terminals);

  int m_ = 2;
  int depth_ = 0;
  std::vector<Vertex> vertices_;
};

// Validates a candidate vertex set: every label within 1..m and the set
// prefix-closed. Duplicates are collapsed. Throws ArityViolation or
// OrphanVertex.
Tree make_tree(int m, std::vector<Vertex> vertices);

// Smallest prefix-closed tree containing all the given vertices (ancestor
// closure). The listed vertices need not be mutually non-ancestral.
Tree from_terminals(int m, const std::vector<Vertex>& terminals);

// Number of trees of depth <= max_depth, including the empty tree:
// S(0) = 1, S(k) = 1 + S(k-1)^m. Throws EnumerationTooLarge beyond the
// enumeration guard.
std::uint64_t count_trees(int m, int max_depth);

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

// All trees of depth <= max_depth, each exactly once, sorted by
// Tree::canonical_less. Guarded by kEnumerationLimit on the count.
std::vector<Tree> enumerate_trees(int m, int max_depth);

// An ordered i.i.d.-style sample of trees sharing one arity and depth cap.
class TreeSample {
 public:
  int arity() const { return m_; }
  int depth_cap() const { return depth_cap_; }
  std::size_t size() const { return trees_.size(); }
  const std::vector<Tree>& trees() const { return trees_; }
  const Tree& operator[](std::size_t i) const { return trees_[i]; }

 private:
  TreeSample(int m, int depth_cap, std::vector<Tree> trees);
  friend TreeSample make_sample(int m, int depth_cap, std::vector<Tree> trees);

  int m_ = 2;
  int depth_cap_ = 1;
  std::vector<Tree> trees_;
};

// Validates that all trees share arity m and respect the depth cap.
TreeSample make_sample(int m, int depth_cap, std::vector<Tree> trees);

}  // namespace treestat
