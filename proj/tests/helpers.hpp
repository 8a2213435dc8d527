#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mcq/blackwell.hpp"
#include "mcq/dist.hpp"
#include "mcq/rng.hpp"

namespace testutil {

// Random fully supported distribution on shared labels a0..a(n-1).
inline mcq::DiscreteDist random_dist(mcq::Rng& rng, std::size_t n) {
  return mcq::DiscreteDist::from_probs(mcq::random_simplex(rng, n));
}

// Random distribution allowed to have zero atoms.
inline mcq::DiscreteDist random_sparse_dist(mcq::Rng& rng, std::size_t n) {
  std::vector<double> probs = mcq::random_simplex(rng, n);
  for (auto& p : probs) {
    if (mcq::uniform_unit(rng) < 0.25) p = 0.0;
  }
  double total = 0.0;
  for (double p : probs) total += p;
  if (total == 0.0) probs[0] = total = 1.0;
  for (auto& p : probs) p /= total;
  return mcq::DiscreteDist::from_probs(probs);
}

inline mcq::MarkovMatrix random_markov(mcq::Rng& rng, std::size_t n,
                                       std::size_t q) {
  mcq::Matrix rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(mcq::random_simplex(rng, q));
  }
  return mcq::MarkovMatrix(std::move(rows));
}

// Extended-precision summation oracles, independent of the library path.

inline long double entropy_oracle(const mcq::DiscreteDist& p) {
  long double h = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long double pi = p.prob(i);
    if (pi > 0.0L) h -= pi * std::log(pi);
  }
  return h;
}

// TV by direct tuple enumeration, without going through pack().
inline double packed_tv_oracle(const mcq::DiscreteDist& p,
                               const mcq::DiscreteDist& q, int m) {
  const std::size_t n = p.size();
  std::size_t count = 1;
  for (int k = 0; k < m; ++k) count *= n;
  long double tv = 0.0L;
  for (std::size_t t = 0; t < count; ++t) {
    long double pp = 1.0L;
    long double qq = 1.0L;
    std::size_t rest = t;
    for (int k = 0; k < m; ++k) {
      const std::size_t i = rest % n;
      rest /= n;
      pp *= p.prob(i);
      qq *= q.prob(i);
    }
    tv += std::abs(pp - qq);
  }
  return static_cast<double>(tv / 2.0L);
}

// Exhaustive max payoff over all deterministic decision rules (r^q of them).
inline double payoff_oracle(const mcq::MarkovMatrix& b,
                            const mcq::PayoffSpec& spec) {
  const std::size_t n = b.n_states();
  const std::size_t q = b.n_signals();
  const std::size_t r = spec.payoff.size();
  std::size_t combos = 1;
  for (std::size_t j = 0; j < q; ++j) combos *= r;
  double best = -1e300;
  std::vector<std::size_t> choice(q, 0);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    for (std::size_t j = 0; j < q; ++j) {
      choice[j] = rest % r;
      rest /= r;
    }
    double value = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        value += spec.prior[i] * b(i, j) * spec.payoff[choice[j]][i];
      }
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace testutil
