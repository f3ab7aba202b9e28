#include "treestat/tree.hpp"

#include <algorithm>
#include <string>

#include "treestat/errors.hpp"

namespace treestat {

namespace {

int max_generation(const std::vector<Vertex>& vertices) {
  int depth = 0;
  for (const Vertex& v : vertices) depth = std::max(depth, v.generation());
  return depth;
}

}  // namespace

Tree::Tree(int m, std::vector<Vertex> sorted_vertices)
    : m_(m), depth_(max_generation(sorted_vertices)), vertices_(std::move(sorted_vertices)) {}

Tree Tree::empty(int m) {
  check_arity_value(m);
  return Tree(m, {});
}

bool Tree::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Vertex> Tree::terminals() const {
  // A vertex is terminal iff it is nobody's mother.
  std::vector<char> has_child(vertices_.size(), 0);
  for (const Vertex& v : vertices_) {
    if (v.is_root()) continue;
    const Vertex mother = v.mother();
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), mother);
    has_child[static_cast<std::size_t>(it - vertices_.begin())] = 1;
  }
  std::vector<Vertex> result;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!has_child[i]) result.push_back(vertices_[i]);
  }
  return result;
}

bool Tree::is_subtree_of(const Tree& other) const {
  if (m_ != other.m_) {
    throw ArityViolation("subset test across different arities");
  }
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

bool Tree::canonical_less(const Tree& a, const Tree& b) {
  return std::lexicographical_compare(a.vertices_.begin(), a.vertices_.end(),
                                      b.vertices_.begin(), b.vertices_.end());
}

Tree make_tree(int m, std::vector<Vertex> vertices) {
  check_arity_value(m);
  for (const Vertex& v : vertices) check_vertex_arity(v, m);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const Vertex& v : vertices) {
    if (v.is_root()) continue;
    if (!std::binary_search(vertices.begin(), vertices.end(), v.mother())) {
      throw OrphanVertex("vertex of generation " + std::to_string(v.generation()) +
                         " present without its mother");
    }
  }
  return Tree(m, std::move(vertices));
}

Tree from_terminals(int m, const std::vector<Vertex>& terminals) {
  check_arity_value(m);
  std::vector<Vertex> closure;
  for (const Vertex& t : terminals) {
    check_vertex_arity(t, m);
    for (int g = 1; g <= t.generation(); ++g) closure.push_back(t.prefix(g));
  }
  std::sort(closure.begin(), closure.end());
  closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
  return Tree(m, std::move(closure));
}

std::uint64_t count_trees(int m, int max_depth) {
  check_arity_value(m);
  if (max_depth < 0) throw InvalidParams("max_depth must be >= 0");
  std::uint64_t s = 1;  // S(0): the empty tree only
  for (int k = 1; k <= max_depth; ++k) {
    // S(k) = 1 + S(k-1)^m, with an overflow-safe power under the guard.
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i) {
      if (p > kEnumerationLimit / s) {
        throw EnumerationTooLarge("tree count for m=" + std::to_string(m) +
                                  ", depth<=" + std::to_string(max_depth) +
                                  " exceeds " + std::to_string(kEnumerationLimit));
      }
      p *= s;
    }
    s = p + 1;
    if (s > kEnumerationLimit) {
      throw EnumerationTooLarge("tree count for m=" + std::to_string(m) +
                                ", depth<=" + std::to_string(max_depth) + " exceeds " +
                                std::to_string(kEnumerationLimit));
    }
  }
  return s;
}

namespace {

// A rooted shape is the set of label paths below (and including) a present
// subtree root; the empty path stands for the root itself.
using Path = std::vector<Label>;
using Shape = std::vector<Path>;

std::vector<Shape> rooted_shapes(int m, int k) {
  if (k <= 1) return {Shape{Path{}}};
  const std::vector<Shape> sub = rooted_shapes(m, k - 1);
  const std::size_t options = sub.size() + 1;  // 0 = slot empty, i = sub[i-1]

  std::vector<Shape> result;
  std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
  for (;;) {
    Shape shape{Path{}};
    for (int a = 1; a <= m; ++a) {
      const std::size_t c = choice[static_cast<std::size_t>(a - 1)];
      if (c == 0) continue;
      for (const Path& p : sub[c - 1]) {
        Path extended;
        extended.reserve(p.size() + 1);
        extended.push_back(static_cast<Label>(a));
        extended.insert(extended.end(), p.begin(), p.end());
        shape.push_back(std::move(extended));
      }
    }
    result.push_back(std::move(shape));

    int pos = 0;
    while (pos < m && ++choice[static_cast<std::size_t>(pos)] == options) {
      choice[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
  return result;
}

}  // namespace

std::vector<Tree> enumerate_trees(int m, int max_depth) {
  const std::uint64_t total = count_trees(m, max_depth);  // also runs the guard
  std::vector<Tree> trees;
  trees.reserve(static_cast<std::size_t>(total));
  trees.push_back(Tree::empty(m));
  if (max_depth >= 1) {
    for (const Shape& shape : rooted_shapes(m, max_depth)) {
      std::vector<Vertex> vertices;
      vertices.reserve(shape.size());
      for (const Path& p : shape) {
        std::vector<Label> labels;
        labels.reserve(p.size() + 1);
        labels.push_back(1);
        labels.insert(labels.end(), p.begin(), p.end());
        vertices.emplace_back(std::move(labels));
      }
      trees.push_back(make_tree(m, std::move(vertices)));
    }
  }
  std::sort(trees.begin(), trees.end(), Tree::canonical_less);
  return trees;
}

TreeSample::TreeSample(int m, int depth_cap, std::vector<Tree> trees)
    : m_(m), depth_cap_(depth_cap), trees_(std::move(trees)) {}

TreeSample make_sample(int m, int depth_cap, std::vector<Tree> trees) {
  check_arity_value(m);
  if (depth_cap < 1) throw InvalidParams("depth cap must be >= 1");
  for (const Tree& t : trees) {
    if (t.arity() != m) {
      throw ArityViolation("sample tree arity " + std::to_string(t.arity()) +
                           " differs from sample arity " + std::to_string(m));
    }
    if (t.depth() > depth_cap) {
      throw DimensionMismatch("sample tree of depth " + std::to_string(t.depth()) +
                              " exceeds depth cap " + std::to_string(depth_cap));
    }
  }
  return TreeSample(m, depth_cap, std::move(trees));
}

}  // namespace treestat
