#include "mcq/region.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "mcq/text.hpp"

namespace mcq {

namespace {
constexpr double kGeomTol = 1e-9;
}  // namespace

RegionBoundary::RegionBoundary(std::vector<BoundaryVertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw validation_error("boundary needs at least two vertices");
  }
  if (std::abs(vertices_.front().epsilon) > kGeomTol ||
      std::abs(vertices_.front().delta) > kGeomTol ||
      std::abs(vertices_.back().epsilon - 1.0) > kGeomTol ||
      std::abs(vertices_.back().delta - 1.0) > kGeomTol) {
    throw validation_error("boundary must run from (0,0) to (1,1)");
  }
  vertices_.front() = {0.0, 0.0};
  vertices_.back() = {1.0, 1.0};
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i - 1];
    const auto& b = vertices_[i];
    if (b.epsilon < a.epsilon - 1e-12 || b.delta < a.delta - 1e-12) {
      throw validation_error("boundary vertices must be non-decreasing");
    }
    if (b.delta < b.epsilon - 1e-12) {
      throw validation_error("boundary must satisfy delta >= epsilon");
    }
  }
  for (std::size_t i = 2; i < vertices_.size(); ++i) {
    const double dx1 = vertices_[i - 1].epsilon - vertices_[i - 2].epsilon;
    const double dy1 = vertices_[i - 1].delta - vertices_[i - 2].delta;
    const double dx2 = vertices_[i].epsilon - vertices_[i - 1].epsilon;
    const double dy2 = vertices_[i].delta - vertices_[i - 1].delta;
    // concavity: slope must not increase (cross product test avoids
    // dividing through vertical segments)
    if (dx1 * dy2 - dx2 * dy1 > kGeomTol) {
      throw validation_error("boundary is not concave");
    }
  }
}

double RegionBoundary::delta_at(double epsilon) const {
  const double eps = std::clamp(epsilon, 0.0, 1.0);
  // last vertex with epsilon <= eps, so a vertical segment reads its top
  std::size_t i = vertices_.size() - 1;
  while (i > 0 && vertices_[i].epsilon > eps) --i;
  if (i == vertices_.size() - 1) return vertices_.back().delta;
  const auto& a = vertices_[i];
  const auto& b = vertices_[i + 1];
  const double t = (eps - a.epsilon) / (b.epsilon - a.epsilon);
  return a.delta + t * (b.delta - a.delta);
}

RegionBoundary region_boundary(const DiscreteDist& p, const DiscreteDist& q) {
  if (!p.same_labels(q)) {
    throw validation_error("region_boundary: label sets differ");
  }

  struct Cell {
    double p_mass;
    double q_mass;
  };
  Cell infinite{0.0, 0.0};  // q = 0 atoms, leading vertical step
  std::vector<Cell> finite;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.prob(i);
    const double qi = q.prob(i);
    if (pi == 0.0 && qi == 0.0) continue;
    if (qi == 0.0) {
      infinite.p_mass += pi;
    } else {
      finite.push_back({pi, qi});
    }
  }
  std::sort(finite.begin(), finite.end(), [](const Cell& a, const Cell& b) {
    return a.p_mass * b.q_mass > b.p_mass * a.q_mass;
  });

  std::vector<BoundaryVertex> vertices;
  vertices.push_back({0.0, 0.0});
  double ce = 0.0;
  double cd = infinite.p_mass;
  if (infinite.p_mass > 0.0) vertices.push_back({0.0, cd});
  for (std::size_t i = 0; i < finite.size(); ++i) {
    ce += finite[i].q_mass;
    cd += finite[i].p_mass;
    // merge equal-ratio atoms into one segment (canonical vertices)
    if (i + 1 < finite.size() &&
        std::abs(finite[i].p_mass * finite[i + 1].q_mass -
                 finite[i + 1].p_mass * finite[i].q_mass) <= 1e-12) {
      continue;
    }
    vertices.push_back({ce, cd});
  }
  if (vertices.back().epsilon != 1.0 || vertices.back().delta != 1.0) {
    if (std::abs(vertices.back().epsilon - 1.0) <= 1e-9 &&
        std::abs(vertices.back().delta - 1.0) <= 1e-9) {
      vertices.back() = {1.0, 1.0};
    } else {
      vertices.push_back({1.0, 1.0});
    }
  }
  return RegionBoundary(std::move(vertices));
}

double dtv_from_boundary(const RegionBoundary& b) {
  double best = 0.0;
  for (const auto& v : b.vertices()) {
    best = std::max(best, v.delta - v.epsilon);
  }
  return best;
}

double region_area(const RegionBoundary& b) {
  // shoelace over the polygon closed by the diagonal edge (1,1) -> (0,0)
  const auto& vs = b.vertices();
  double twice = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& a = vs[i];
    const auto& c = vs[(i + 1) % vs.size()];
    twice += a.epsilon * c.delta - c.epsilon * a.delta;
  }
  return std::abs(twice) / 2.0;
}

bool has_mode_collapse(const RegionBoundary& b, double epsilon, double delta) {
  if (!(0.0 <= epsilon && epsilon < delta && delta <= 1.0)) {
    throw std::domain_error("has_mode_collapse requires 0 <= eps < delta <= 1");
  }
  return delta <= b.delta_at(epsilon) + 1e-12;
}

void write_boundary_csv(const RegionBoundary& b, std::ostream& out) {
  out << "epsilon,delta\n";
  for (const auto& v : b.vertices()) {
    out << fmt_double(v.epsilon) << ',' << fmt_double(v.delta) << '\n';
  }
}

}  // namespace mcq
