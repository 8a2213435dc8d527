#pragma once

#include <iosfwd>
#include <vector>

#include "mcq/dist.hpp"

namespace mcq {

struct BoundaryVertex {
  double epsilon = 0.0;
  double delta = 0.0;
};

// Concave piecewise-linear upper boundary of a mode-collapse region
// (equivalently, of a binary hypothesis-testing region), running from
// (0,0) to (1,1) with non-increasing slopes and delta >= epsilon.
class RegionBoundary {
 public:
  explicit RegionBoundary(std::vector<BoundaryVertex> vertices);

  const std::vector<BoundaryVertex>& vertices() const noexcept {
    return vertices_;
  }

  // Boundary delta at a given epsilon, by linear interpolation on the hull.
  double delta_at(double epsilon) const;

 private:
  std::vector<BoundaryVertex> vertices_;
};

// Likelihood-ratio construction: atoms sorted by descending p/q (q = 0
// first), equal ratios merged, vertices are the cumulative (sum q, sum p).
RegionBoundary region_boundary(const DiscreteDist& p, const DiscreteDist& q);

// Max over vertices of delta - epsilon; equals total_variation(p, q).
double dtv_from_boundary(const RegionBoundary& b);

// Area between the boundary and the diagonal delta = epsilon, in [0, 0.5].
double region_area(const RegionBoundary& b);

// True iff (epsilon, delta) lies inside the convexified region.
// Requires 0 <= epsilon < delta <= 1.
bool has_mode_collapse(const RegionBoundary& b, double epsilon, double delta);

// Plot-ready CSV, header "epsilon,delta".
void write_boundary_csv(const RegionBoundary& b, std::ostream& out);

}  // namespace mcq
