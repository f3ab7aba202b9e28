#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace treestat {

using Label = std::uint8_t;

// Largest arity the text format supports (two-digit labels).
inline constexpr int kMaxArity = 99;

// A vertex of the full m-ary tree, identified by its label sequence from the
// root. The root is the one-element sequence (1); the child of v in slot a is
// the sequence v·a with a in 1..m. generation() is the sequence length, so
// the root has generation 1.
//
// Vertex enforces label >= 1 and labels[0] == 1; the upper bound depends on
// the arity m of the surrounding tree and is checked where an m is known.
class Vertex {
 public:
  explicit Vertex(std::vector<Label> labels);
  Vertex(std::initializer_list<int> labels);

  static Vertex root() { return Vertex({1}); }

  int generation() const { return static_cast<int>(labels_.size()); }
  bool is_root() const { return labels_.size() == 1; }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(int position) const { return labels_[static_cast<std::size_t>(position)]; }
  Label last_label() const { return labels_.back(); }
  int max_label() const;

  Vertex mother() const;     // throws on the root
  Vertex child(int a) const; // a in 1..kMaxArity
  Vertex prefix(int generation) const;

  // Reflexive ancestor test: every vertex is a prefix of itself.
  bool is_prefix_of(const Vertex& other) const;

  // Lexicographic order on label sequences; a proper prefix sorts before any
  // of its extensions. This is the canonical vertex order everywhere.
  friend auto operator<=>(const Vertex& a, const Vertex& b) = default;

 private:
  std::vector<Label> labels_;
};

// Checks that every label of v lies in 1..m.
void check_vertex_arity(const Vertex& v, int m);

// Checks 1 <= m <= kMaxArity.
void check_arity_value(int m);

}  // namespace treestat
