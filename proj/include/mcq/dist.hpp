#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mcq/errors.hpp"

namespace mcq {

struct Atom {
  std::string label;
  double prob = 0.0;
};

// Finite labeled probability vector. Immutable after construction.
class DiscreteDist {
 public:
  // Validates: probs >= 0, unique labels, total mass 1 within 1e-12.
  // With normalize = true, a positive total is rescaled to 1 instead.
  explicit DiscreteDist(std::vector<Atom> atoms, bool normalize = false);

  // Labels "a0", "a1", ...
  static DiscreteDist from_probs(const std::vector<double>& probs,
                                 bool normalize = false);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double prob(std::size_t i) const { return atoms_.at(i).prob; }
  const std::string& label(std::size_t i) const { return atoms_.at(i).label; }

  bool same_labels(const DiscreteDist& other) const;

 private:
  std::vector<Atom> atoms_;
};

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;

  double density() const { return mass / (hi - lo); }
};

// 1-D piecewise-constant density given as disjoint segments with masses.
class PiecewiseUniformDist {
 public:
  explicit PiecewiseUniformDist(std::vector<Segment> segments,
                                bool normalize = false);

  static PiecewiseUniformDist uniform(double lo, double hi);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  double support_lo() const { return segments_.front().lo; }
  double support_hi() const { return segments_.back().hi; }

  // Density at x (0 outside all segments).
  double density_at(double x) const;

 private:
  std::vector<Segment> segments_;  // sorted by lo, non-overlapping
};

// Product distribution over m-tuples of base labels.
struct PackedDist {
  DiscreteDist base;
  int degree = 1;
  DiscreteDist atoms;  // n^m tuples, lexicographic in base order
};

inline constexpr std::size_t kDefaultPackGuard = 10'000'000;

// Exact cell discretization: one atom per cell of the refinement of segment
// boundaries and extra_breakpoints; atom prob = density * cell width.
DiscreteDist discretize(const PiecewiseUniformDist& pw,
                        const std::vector<double>& extra_breakpoints = {});

// Discretize both densities onto the union of all breakpoints so the two
// outputs share one label set.
std::pair<DiscreteDist, DiscreteDist> common_refinement(
    const PiecewiseUniformDist& p, const PiecewiseUniformDist& q);

// 0.5 * sum |p_i - q_i|; requires identical label sets in identical order.
double total_variation(const DiscreteDist& p, const DiscreteDist& q);

PackedDist pack(const DiscreteDist& p, int m,
                std::size_t guard = kDefaultPackGuard);

// KL(q||p) in nats. Zero entries in either vector are replaced by `smoothing`
// (no renormalization). With smoothing = 0 an absolute-continuity violation
// returns +infinity.
double kl_divergence(const DiscreteDist& q, const DiscreteDist& p,
                     double smoothing);

// Shannon entropy in nats, 0*log 0 := 0.
double entropy(const DiscreteDist& p);

}  // namespace mcq
