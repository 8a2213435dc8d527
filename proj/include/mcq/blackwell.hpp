#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcq/errors.hpp"

namespace mcq {

using Matrix = std::vector<std::vector<double>>;

// Row-stochastic matrix (a channel from states to signals).
class MarkovMatrix {
 public:
  // Validates: rectangular, entries >= 0, row sums 1 within 1e-10.
  explicit MarkovMatrix(Matrix rows);

  static MarkovMatrix identity(std::size_t n);

  const Matrix& rows() const noexcept { return rows_; }
  std::size_t n_states() const noexcept { return rows_.size(); }
  std::size_t n_signals() const noexcept { return rows_.front().size(); }
  double operator()(std::size_t i, std::size_t j) const {
    return rows_[i][j];
  }

 private:
  Matrix rows_;
};

MarkovMatrix multiply(const MarkovMatrix& a, const MarkovMatrix& b);

// Payoff matrix U (actions x states) and a prior over states.
struct PayoffSpec {
  Matrix payoff;              // r x n
  std::vector<double> prior;  // length n, sums to 1
};

// Maximum expected payoff over all decision rules. A linear objective over
// row-stochastic decision matrices attains its optimum at a deterministic
// rule, so each signal independently takes its best action.
double max_expected_payoff(const MarkovMatrix& b, const PayoffSpec& spec);

inline constexpr double kFactorizeTol = 1e-8;

// Solve C = B * M for a row-stochastic M via a phase-1 simplex. Returns the
// garbling M when the system is feasible within tol, otherwise nullopt.
std::optional<MarkovMatrix> factorize(const MarkovMatrix& b,
                                      const MarkovMatrix& c,
                                      double tol = kFactorizeTol);

enum class InformativenessVerdict {
  MoreInformative,
  NotMoreInformative,
  Undetermined,
};

struct InformativenessResult {
  InformativenessVerdict verdict = InformativenessVerdict::Undetermined;
  std::optional<MarkovMatrix> garbling;  // set when MoreInformative
  // Counterexample payoff (and its payoff gap) when NotMoreInformative.
  std::optional<PayoffSpec> counterexample;
  double counterexample_gap = 0.0;
};

// Decide whether b is more informative than c: factorization certifies yes;
// a sampled payoff with F(c) > F(b) certifies no; otherwise undetermined
// (the separating-hyperplane witness construction is not implemented).
InformativenessResult is_more_informative(const MarkovMatrix& b,
                                          const MarkovMatrix& c,
                                          int payoff_trials,
                                          std::uint64_t seed,
                                          double tol = kFactorizeTol);

}  // namespace mcq
