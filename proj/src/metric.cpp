#include "treestat/metric.hpp"

#include <cmath>
#include <string>

#include "treestat/errors.hpp"

namespace treestat {

namespace {

std::vector<double> geometric_table(double z, int depth_cap) {
  std::vector<double> phi(static_cast<std::size_t>(depth_cap));
  double value = 1.0;
  for (int k = 1; k <= depth_cap; ++k) {
    value *= z;
    phi[static_cast<std::size_t>(k - 1)] = value;
  }
  return phi;
}

void check_tree_against(const Tree& t, const MetricParams& params, const char* role) {
  if (t.arity() != params.arity()) {
    throw ArityViolation(std::string(role) + " tree arity " + std::to_string(t.arity()) +
                         " differs from metric arity " + std::to_string(params.arity()));
  }
  if (t.depth() > params.depth_cap()) {
    throw DimensionMismatch(std::string(role) + " tree depth " + std::to_string(t.depth()) +
                            " exceeds depth cap " + std::to_string(params.depth_cap()));
  }
}

}  // namespace

MetricParams::MetricParams(int m, int depth_cap, WeightRule rule, double z, bool clt_safe,
                           std::vector<double> phi)
    : m_(m), depth_cap_(depth_cap), rule_(rule), z_(z), clt_safe_(clt_safe),
      phi_(std::move(phi)) {}

MetricParams MetricParams::geometric(int m, double z, int depth_cap) {
  check_arity_value(m);
  if (depth_cap < 1) throw InvalidParams("depth cap must be >= 1");
  const double upper = std::pow(static_cast<double>(m), -1.5);
  if (!(z > 0.0 && z < upper)) {
    throw InvalidParams("geometric weight base z must satisfy 0 < z < m^(-3/2); "
                        "use geometric_relaxed for 0 < z < 1");
  }
  return MetricParams(m, depth_cap, WeightRule::geometric, z, true,
                      geometric_table(z, depth_cap));
}

MetricParams MetricParams::geometric_relaxed(int m, double z, int depth_cap) {
  check_arity_value(m);
  if (depth_cap < 1) throw InvalidParams("depth cap must be >= 1");
  if (!(z > 0.0 && z < 1.0)) {
    throw InvalidParams("geometric weight base z must satisfy 0 < z < 1");
  }
  const bool safe = z < std::pow(static_cast<double>(m), -1.5);
  return MetricParams(m, depth_cap, WeightRule::geometric, z, safe,
                      geometric_table(z, depth_cap));
}

MetricParams MetricParams::per_generation(int m, std::vector<double> weights) {
  check_arity_value(m);
  if (weights.empty()) throw InvalidParams("per-generation weight table is empty");
  for (double w : weights) {
    if (!(w > 0.0)) throw InvalidParams("per-generation weights must be strictly positive");
  }
  return MetricParams(m, static_cast<int>(weights.size()), WeightRule::per_generation,
                      0.0, false, std::move(weights));
}

double MetricParams::z() const {
  if (rule_ != WeightRule::geometric) {
    throw InvalidParams("z is defined for geometric weight rules only");
  }
  return z_;
}

double MetricParams::phi(int generation) const {
  if (generation < 1) throw InvalidParams("generation must be >= 1");
  if (generation <= depth_cap_) return phi_[static_cast<std::size_t>(generation - 1)];
  if (rule_ == WeightRule::per_generation) {
    throw DimensionMismatch("generation " + std::to_string(generation) +
                            " beyond the weight table (K=" + std::to_string(depth_cap_) + ")");
  }
  double value = phi_.back();
  for (int k = depth_cap_; k < generation; ++k) value *= z_;
  return value;
}

double MetricParams::generation_mass(int generation) const {
  double mass = phi(generation);
  for (int i = 1; i < generation; ++i) mass *= static_cast<double>(m_);
  return mass;
}

double distance(const Tree& x, const Tree& y, const MetricParams& params) {
  if (x.arity() != y.arity()) {
    throw ArityViolation("distance between trees of different arities");
  }
  check_tree_against(x, params, "left");
  check_tree_against(y, params, "right");

  // Merge walk over the two canonical vertex lists; unmatched vertices form
  // the symmetric difference.
  const auto& xv = x.vertices();
  const auto& yv = y.vertices();
  double total = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xv.size() && j < yv.size()) {
    if (xv[i] == yv[j]) {
      ++i;
      ++j;
    } else if (xv[i] < yv[j]) {
      total += params.phi(xv[i].generation());
      ++i;
    } else {
      total += params.phi(yv[j].generation());
      ++j;
    }
  }
  for (; i < xv.size(); ++i) total += params.phi(xv[i].generation());
  for (; j < yv.size(); ++j) total += params.phi(yv[j].generation());
  return total;
}

double distance_otter_neveu(const Tree& x, const Tree& y) {
  if (x.arity() != y.arity()) {
    throw ArityViolation("distance between trees of different arities");
  }
  if (x == y) return 0.0;
  // First generation where the trees disagree = 1 + the last generation of
  // full agreement.
  const auto& xv = x.vertices();
  const auto& yv = y.vertices();
  int first_disagreement = 0;
  std::size_t i = 0, j = 0;
  auto note = [&first_disagreement](int gen) {
    if (first_disagreement == 0 || gen < first_disagreement) first_disagreement = gen;
  };
  while (i < xv.size() && j < yv.size()) {
    if (xv[i] == yv[j]) {
      ++i;
      ++j;
    } else if (xv[i] < yv[j]) {
      note(xv[i].generation());
      ++i;
    } else {
      note(yv[j].generation());
      ++j;
    }
  }
  for (; i < xv.size(); ++i) note(xv[i].generation());
  for (; j < yv.size(); ++j) note(yv[j].generation());
  return std::exp(-static_cast<double>(first_disagreement - 1));
}

double g_from_marginals(const Tree& y, const MarginalProfile& profile,
                        const MetricParams& params) {
  if (profile.arity() != params.arity()) {
    throw ArityViolation("profile arity differs from metric arity");
  }
  if (profile.depth() != params.depth_cap()) {
    throw DimensionMismatch("profile depth " + std::to_string(profile.depth()) +
                            " differs from depth cap " +
                            std::to_string(params.depth_cap()));
  }
  check_tree_against(y, params, "argument");

  const FullTreeIndex& index = profile.index();
  std::vector<char> member(index.size(), 0);
  for (const Vertex& v : y.vertices()) member[index.index_of(v)] = 1;

  double total = 0.0;
  for (int g = 1; g <= index.depth(); ++g) {
    const double phi = params.phi(g);
    for (std::size_t i = index.gen_begin(g); i < index.gen_end(g); ++i) {
      const double p = profile.at(i);
      total += phi * (member[i] ? (1.0 - p) : p);
    }
  }
  return total;
}

double g_empirical(const Tree& y, const TreeSample& sample, const MetricParams& params,
                   double exponent) {
  if (sample.size() == 0) throw EmptySample("empirical expected distance of an empty sample");
  if (exponent < 1.0) throw InvalidParams("exponent p must be >= 1");
  if (sample.arity() != params.arity()) {
    throw ArityViolation("sample arity differs from metric arity");
  }
  if (sample.depth_cap() > params.depth_cap()) {
    throw DimensionMismatch("sample depth cap exceeds metric depth cap");
  }
  check_tree_against(y, params, "argument");

  double total = 0.0;
  for (const Tree& t : sample.trees()) {
    const double d = distance(t, y, params);
    total += exponent == 1.0 ? d : std::pow(d, exponent);
  }
  return total / static_cast<double>(sample.size());
}

}  // namespace treestat
