#include "mcq/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "mcq/region.hpp"

namespace mcq {

namespace {

void check_query(const BoundQuery& q) {
  if (!(q.tau >= 0.0 && q.tau <= 1.0)) {
    throw validation_error("tau must lie in [0, 1]");
  }
  if (q.m < 1) {
    throw validation_error("packing degree must be >= 1");
  }
}

}  // namespace

double dtv_upper_bound(const BoundQuery& q) {
  check_query(q);
  return 1.0 - std::pow(1.0 - q.tau, q.m);
}

double binomial_dtv(double alpha, double tau, int m) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw validation_error("tau must lie in [0, 1]");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0 - tau + 1e-15)) {
    throw std::domain_error("alpha must lie in [0, 1-tau]");
  }
  if (m < 1 || m > 64) {
    throw validation_error("binomial_dtv supports 1 <= m <= 64");
  }
  const double a = alpha;
  const double b = alpha + tau;
  double coeff = 1.0;  // C(m, 0)
  double tv = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double pa = std::pow(a, k) * std::pow(1.0 - a, m - k);
    const double pb = std::pow(b, k) * std::pow(1.0 - b, m - k);
    tv += std::abs(coeff * (pa - pb));
    coeff *= static_cast<double>(m - k) / static_cast<double>(k + 1);
  }
  return 0.5 * tv;
}

LowerBoundResult dtv_lower_bound(const BoundQuery& q) {
  check_query(q);
  const double hi = 1.0 - q.tau;
  const int grid = 1024;
  double best_alpha = 0.0;
  double best_value = binomial_dtv(0.0, q.tau, q.m);
  for (int i = 1; i <= grid; ++i) {
    const double a = hi * static_cast<double>(i) / grid;
    const double v = binomial_dtv(a, q.tau, q.m);
    if (v < best_value - 1e-15) {  // strict improvement: smallest-alpha tie-break
      best_value = v;
      best_alpha = a;
    }
  }
  // golden-section refinement on the bracketing grid neighbours
  const double step = hi / grid;
  double lo = std::max(0.0, best_alpha - step);
  double up = std::min(hi, best_alpha + step);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = up - phi * (up - lo);
  double x2 = lo + phi * (up - lo);
  double f1 = binomial_dtv(x1, q.tau, q.m);
  double f2 = binomial_dtv(x2, q.tau, q.m);
  while (up - lo > 1e-10) {
    if (f1 <= f2) {
      up = x2;
      x2 = x1;
      f2 = f1;
      x1 = up - phi * (up - lo);
      f1 = binomial_dtv(x1, q.tau, q.m);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (up - lo);
      f2 = binomial_dtv(x2, q.tau, q.m);
    }
  }
  const double mid = 0.5 * (lo + up);
  const double fmid = binomial_dtv(mid, q.tau, q.m);
  if (fmid < best_value) {
    best_value = fmid;
    best_alpha = mid;
  }
  return {best_alpha, best_value};
}

std::vector<SweepRow> packing_sweep(const DiscreteDist& p,
                                    const DiscreteDist& q, int m_max,
                                    std::size_t guard) {
  if (m_max < 1) {
    throw validation_error("m_max must be >= 1");
  }
  const double tau = total_variation(p, q);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    const PackedDist pp = pack(p, m, guard);
    const PackedDist qq = pack(q, m, guard);
    SweepRow row;
    row.m = m;
    row.dtv = total_variation(pp.atoms, qq.atoms);
    row.area = region_area(region_boundary(pp.atoms, qq.atoms));
    row.lower = dtv_lower_bound({tau, m}).value;
    row.upper = dtv_upper_bound({tau, m});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mcq
