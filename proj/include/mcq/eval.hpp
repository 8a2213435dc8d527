#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mcq/dist.hpp"

namespace mcq {

// A label histogram (e.g. digit frequencies from one generation trial).
struct LabelCounts {
  std::map<std::string, std::int64_t> counts;

  std::int64_t total() const;

  // Empirical distribution on the given ordered label set; labels absent
  // from the histogram get probability 0.
  DiscreteDist to_dist(const std::vector<std::string>& labels) const;
};

// Parses `label,count` CSV or a JSON object {"label": count, ...}. Errors
// carry the offending line number.
LabelCounts load_counts(const std::string& path);

inline constexpr double kDefaultSmoothing = 1e-10;

struct KlReportRow {
  std::string source;
  double kl_mean = 0.0;
  int trials = 0;
  std::vector<double> kl_per_trial;
};

struct KlReport {
  std::vector<KlReportRow> rows;
  std::string reference_name;
  double smoothing = kDefaultSmoothing;
};

// KL of each generated histogram against the reference, averaged across
// trials sharing a source name. Label sets are unified; zeros are smoothed
// without renormalization.
KlReport kl_report(
    const std::vector<std::pair<std::string, LabelCounts>>& generated,
    const LabelCounts& reference, const std::string& reference_name,
    double smoothing = kDefaultSmoothing);

void write_report_csv(const KlReport& report, std::ostream& out);
void write_report_json(const KlReport& report, std::ostream& out);

// n seeded inverse-CDF draws, binned on the given breakpoints (which must
// cover the support). Bin labels are the cell intervals.
LabelCounts sample_synthetic(const PiecewiseUniformDist& dist, std::int64_t n,
                             const std::vector<double>& bins,
                             std::uint64_t seed);

// Header `label,count,probability`.
void write_frequency_csv(const LabelCounts& counts, std::ostream& out);

}  // namespace mcq
