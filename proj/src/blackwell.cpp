#include "mcq/blackwell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mcq/rng.hpp"

namespace mcq {

namespace {

constexpr double kRowSumTol = 1e-10;
constexpr double kPivotEps = 1e-11;
constexpr std::size_t kLpGuard = 400;  // max n * q per channel

// Phase-1 simplex with Bland's rule: minimize the sum of artificial
// variables subject to A x = rhs, x >= 0. Small dense instances only.
struct Phase1Result {
  double objective = 0.0;
  std::vector<double> x;
};

Phase1Result phase1_simplex(const std::vector<std::vector<double>>& a,
                            std::vector<double> rhs) {
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  const std::size_t cols = n + m + 1;  // structurals, artificials, rhs

  std::vector<std::vector<double>> t(m, std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = sign * rhs[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // objective row: reduced costs with artificial basis (cost 1 each)
  std::vector<double> obj(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) obj[n + i] = 0.0;

  for (;;) {
    // Bland: entering variable = lowest index with negative reduced cost
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (obj[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > kPivotEps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best_ratio - kPivotEps ||
            (ratio < best_ratio + kPivotEps &&
             (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase 1

    const double piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    const double fo = obj[enter];
    if (fo != 0.0) {
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= fo * t[leave][j];
    }
    basis[leave] = enter;
  }

  Phase1Result res;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      res.x[basis[i]] = t[i][cols - 1];
    } else {
      res.objective += t[i][cols - 1];
    }
  }
  return res;
}

}  // namespace

MarkovMatrix::MarkovMatrix(Matrix rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw validation_error("Markov matrix must be non-empty");
  }
  const std::size_t q = rows_.front().size();
  for (const auto& row : rows_) {
    if (row.size() != q) {
      throw validation_error("Markov matrix rows have unequal length");
    }
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0)) {
        throw validation_error("Markov matrix entry is negative");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTol) {
      throw validation_error("Markov matrix row does not sum to 1");
    }
  }
}

MarkovMatrix MarkovMatrix::identity(std::size_t n) {
  Matrix rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1.0;
  return MarkovMatrix(std::move(rows));
}

MarkovMatrix multiply(const MarkovMatrix& a, const MarkovMatrix& b) {
  if (a.n_signals() != b.n_states()) {
    throw validation_error("multiply: dimension mismatch");
  }
  Matrix out(a.n_states(), std::vector<double>(b.n_signals(), 0.0));
  for (std::size_t i = 0; i < a.n_states(); ++i) {
    for (std::size_t j = 0; j < a.n_signals(); ++j) {
      const double v = a(i, j);
      if (v == 0.0) continue;
      for (std::size_t k = 0; k < b.n_signals(); ++k) {
        out[i][k] += v * b(j, k);
      }
    }
  }
  return MarkovMatrix(std::move(out));
}

double max_expected_payoff(const MarkovMatrix& b, const PayoffSpec& spec) {
  const std::size_t n = b.n_states();
  const std::size_t q = b.n_signals();
  const std::size_t r = spec.payoff.size();
  if (spec.prior.size() != n) {
    throw validation_error("prior length does not match state count");
  }
  double prior_sum = 0.0;
  for (double p : spec.prior) {
    if (!(p >= 0.0)) throw validation_error("prior entry is negative");
    prior_sum += p;
  }
  if (std::abs(prior_sum - 1.0) > kRowSumTol) {
    throw validation_error("prior does not sum to 1");
  }
  for (const auto& row : spec.payoff) {
    if (row.size() != n) {
      throw validation_error("payoff matrix width does not match state count");
    }
  }

  double total = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < r; ++k) {
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        v += spec.prior[i] * b(i, j) * spec.payoff[k][i];
      }
      best = std::max(best, v);
    }
    total += best;
  }
  return total;
}

std::optional<MarkovMatrix> factorize(const MarkovMatrix& b,
                                      const MarkovMatrix& c, double tol) {
  const std::size_t n = b.n_states();
  if (c.n_states() != n) {
    throw validation_error("factorize: state counts differ");
  }
  const std::size_t q = b.n_signals();
  const std::size_t qp = c.n_signals();
  if (n * q > kLpGuard || n * qp > kLpGuard) {
    throw size_error("factorize: instance exceeds dense LP guard");
  }

  // variables M_jk (j * qp + k); constraints B M = C plus row sums of M = 1
  const std::size_t nvars = q * qp;
  std::vector<std::vector<double>> a;
  std::vector<double> rhs;
  a.reserve(n * qp + q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < qp; ++k) {
      std::vector<double> row(nvars, 0.0);
      for (std::size_t j = 0; j < q; ++j) row[j * qp + k] = b(i, j);
      a.push_back(std::move(row));
      rhs.push_back(c(i, k));
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    std::vector<double> row(nvars, 0.0);
    for (std::size_t k = 0; k < qp; ++k) row[j * qp + k] = 1.0;
    a.push_back(std::move(row));
    rhs.push_back(1.0);
  }

  const Phase1Result sol = phase1_simplex(a, rhs);
  if (sol.objective > tol) return std::nullopt;

  Matrix m_rows(q, std::vector<double>(qp, 0.0));
  for (std::size_t j = 0; j < q; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < qp; ++k) {
      m_rows[j][k] = std::max(sol.x[j * qp + k], 0.0);
      sum += m_rows[j][k];
    }
    if (sum <= 0.0) return std::nullopt;
    for (std::size_t k = 0; k < qp; ++k) m_rows[j][k] /= sum;
  }
  MarkovMatrix m(std::move(m_rows));

  const MarkovMatrix bm = multiply(b, m);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < qp; ++k) {
      residual = std::max(residual, std::abs(bm(i, k) - c(i, k)));
    }
  }
  if (residual > tol) return std::nullopt;
  return m;
}

InformativenessResult is_more_informative(const MarkovMatrix& b,
                                          const MarkovMatrix& c,
                                          int payoff_trials,
                                          std::uint64_t seed, double tol) {
  if (b.n_states() != c.n_states()) {
    throw validation_error("is_more_informative: state counts differ");
  }
  InformativenessResult result;
  if (auto m = factorize(b, c, tol)) {
    result.verdict = InformativenessVerdict::MoreInformative;
    result.garbling = std::move(m);
    return result;
  }

  const std::size_t n = b.n_states();
  Rng rng(seed);
  for (int t = 0; t < payoff_trials; ++t) {
    PayoffSpec spec;
    spec.payoff.assign(n, std::vector<double>(n, 0.0));
    for (auto& row : spec.payoff) {
      for (auto& v : row) v = uniform_in(rng, -1.0, 1.0);
    }
    spec.prior = random_simplex(rng, n);
    const double gap =
        max_expected_payoff(c, spec) - max_expected_payoff(b, spec);
    if (gap > tol) {
      result.verdict = InformativenessVerdict::NotMoreInformative;
      result.counterexample = std::move(spec);
      result.counterexample_gap = gap;
      return result;
    }
  }
  result.verdict = InformativenessVerdict::Undetermined;
  return result;
}

}  // namespace mcq
