#pragma once

#include <vector>

#include "treestat/profile.hpp"
#include "treestat/tree.hpp"

namespace treestat {

enum class WeightRule { geometric, per_generation };

// Parameters of the weighted-L1 distance d(x,y) = sum over the symmetric
// difference of phi(gen(v)), truncated at a depth cap K.
//
// The geometric rule phi(k) = z^k with 0 < z < m^(-3/2) is the regime in
// which the Gaussian limit of the centered empirical process is certified;
// geometric_relaxed() admits any 0 < z < 1 but the inference routines refuse
// parameters that are not clt_safe().
class MetricParams {
 public:
  static MetricParams geometric(int m, double z, int depth_cap);
  static MetricParams geometric_relaxed(int m, double z, int depth_cap);
  // Weights indexed by generation 1..K; all strictly positive.
  static MetricParams per_generation(int m, std::vector<double> weights);

  int arity() const { return m_; }
  int depth_cap() const { return depth_cap_; }
  WeightRule rule() const { return rule_; }
  bool clt_safe() const { return clt_safe_; }
  double z() const;  // geometric rules only

  // phi(generation); generations beyond the table are an error for
  // per-generation rules and extend the geometric product otherwise.
  double phi(int generation) const;

  // Total phi-mass of one generation: m^(g-1) * phi(g).
  double generation_mass(int generation) const;

  // Cached phi values for generations 1..depth_cap.
  const std::vector<double>& phi_table() const { return phi_; }

 private:
  MetricParams(int m, int depth_cap, WeightRule rule, double z, bool clt_safe,
               std::vector<double> phi);

  int m_;
  int depth_cap_;
  WeightRule rule_;
  double z_;
  bool clt_safe_;
  std::vector<double> phi_;
};

// Weighted-L1 distance between trees of depth <= K sharing the arity of
// params: the phi-mass of the symmetric difference of the vertex sets.
double distance(const Tree& x, const Tree& y, const MetricParams& params);

// The Otter-Neveu distance exp(-k*) where k* is the last generation through
// which the two trees agree everywhere; 0 when x == y, 1 when they differ at
// the root. Not accepted by the statistic and inference modules.
double distance_otter_neveu(const Tree& x, const Tree& y);

// Expected distance g(y) = E d(T,y) from vertex marginals:
//   g(y) = sum_v phi(v) * [y(v)(1 - p_v) + (1 - y(v)) p_v].
double g_from_marginals(const Tree& y, const MarginalProfile& profile,
                        const MetricParams& params);

// Empirical expected distance g_n(y) = (1/n) sum_i d(T_i, y)^p, p >= 1.
double g_empirical(const Tree& y, const TreeSample& sample, const MetricParams& params,
                   double exponent = 1.0);

}  // namespace treestat
