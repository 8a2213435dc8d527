#pragma once

#include <vector>

#include "mcq/dist.hpp"

namespace mcq {

struct BoundQuery {
  double tau = 0.0;  // total variation of the base pair, in [0, 1]
  int m = 1;         // packing degree
};

struct SweepRow {
  int m = 0;
  double dtv = 0.0;
  double area = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Closed-form maximum of TV(P^m, Q^m) at fixed base TV tau: 1 - (1-tau)^m.
double dtv_upper_bound(const BoundQuery& q);

// TV between the m-fold products of the binary pair [1-alpha, alpha] and
// [1-alpha-tau, alpha+tau], via a stable binomial recurrence (m <= 64).
double binomial_dtv(double alpha, double tau, int m);

struct LowerBoundResult {
  double alpha_star = 0.0;
  double value = 0.0;
};

// Minimum of binomial_dtv over alpha in [0, 1-tau]: 1024-point grid scan
// followed by golden-section refinement to |d alpha| <= 1e-10. Tie-break is
// the smallest grid alpha.
LowerBoundResult dtv_lower_bound(const BoundQuery& q);

// Packed TV, region area and envelope bounds for m = 1..m_max,
// with tau computed from the inputs.
std::vector<SweepRow> packing_sweep(const DiscreteDist& p,
                                    const DiscreteDist& q, int m_max,
                                    std::size_t guard = kDefaultPackGuard);

}  // namespace mcq
