#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treestat/full_tree.hpp"
#include "treestat/metric.hpp"
#include "treestat/profile.hpp"
#include "treestat/rng.hpp"
#include "treestat/tree.hpp"

namespace treestat {

// A Galton-Watson-type generator on the full m-ary tree. The root is present
// with probability root_prob; below a present vertex, child slots fill
// according to the offspring rule, independently across vertices; below an
// absent vertex nothing is present.
//
// per_slot: slot a of a present vertex is occupied independently with
// probability rho_a. With all rho_a = rho and root_prob = rho this is the
// site-percolation construction mu_rho (keep the maximal subtree connected to
// the root among i.i.d. Bernoulli(rho) site variables). With m = 2 and
// rho = (p, p) the offspring count is Binomial(2, p).
//
// count_left_fill: a present vertex draws an offspring count N from the mass
// q_0..q_m and its children occupy the leftmost N slots.
class GWModel {
 public:
  enum class Offspring { per_slot, count_left_fill };

  static GWModel per_slot(double root_prob, std::vector<double> slot_probs);
  static GWModel count_left_fill(double root_prob, std::vector<double> count_mass);

  int arity() const { return m_; }
  double root_prob() const { return root_prob_; }
  Offspring offspring() const { return offspring_; }
  const std::vector<double>& slot_probs() const { return slot_probs_; }
  const std::vector<double>& count_mass() const { return count_mass_; }

  // P(offspring count >= a) for slot a; the marginal factor of edge (v, va).
  double slot_factor(int a) const;

  // True when every probability is 0 or 1, so sampling is deterministic.
  bool deterministic() const;

  std::string describe() const;

 private:
  GWModel(int m, double root_prob, Offspring offspring, std::vector<double> slot_probs,
          std::vector<double> count_mass);

  int m_;
  double root_prob_;
  Offspring offspring_;
  std::vector<double> slot_probs_;  // per_slot: size m
  std::vector<double> count_mass_;  // count_left_fill: size m + 1
};

// Draws the present-vertex indices of one tree of depth <= index.depth(),
// in level order. One uniform is consumed for the root, then one per child
// slot (per-slot rules) or one per present vertex (count rules), scanning
// present vertices in canonical order; the draw sequence is part of the
// reproducibility contract.
void sample_vertex_indices(const GWModel& model, const FullTreeIndex& index, Pcg32& rng,
                           std::vector<std::uint32_t>& out);

Tree sample_tree(const GWModel& model, int depth_cap, Pcg32& rng);

// Exact vertex marginals up to the depth cap:
//   p_v = root_prob * prod over non-root labels a of the slot factor of a,
// where the slot factor is rho_a (per-slot) or P(N >= a) (count rules).
MarginalProfile marginal_profile(const GWModel& model, int depth_cap);

// Exact P(u and v both present) for per-slot models: root_prob times the
// product of slot probabilities over the union of the two root paths.
// Count-based rules have no slot-independent joint law and are refused.
double joint_presence(const GWModel& model, const Vertex& u, const Vertex& v);

// Exact covariance of (d(T,s), d(T,t)) under a per-slot model, from the
// expansion |T(u) - s(u)| = s(u) + (1 - 2 s(u)) T(u):
//   Cov = sum_{u,v} phi(u) phi(v) (1-2s(u)) (1-2t(v)) [P(u&v) - p_u p_v]
// over vertices of generation <= K. This is the covariance function of the
// Gaussian limit of sqrt(n) (g_n - g).
double exact_cov(const GWModel& model, const Tree& s, const Tree& t,
                 const MetricParams& params);

}  // namespace treestat
