#include "mcq/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mcq/rng.hpp"
#include "mcq/text.hpp"

#include <nlohmann/json.hpp>

namespace mcq {

std::int64_t LabelCounts::total() const {
  std::int64_t t = 0;
  for (const auto& [label, c] : counts) t += c;
  return t;
}

DiscreteDist LabelCounts::to_dist(
    const std::vector<std::string>& labels) const {
  const double t = static_cast<double>(total());
  if (t <= 0) {
    throw validation_error("histogram has zero total count");
  }
  std::vector<Atom> atoms;
  atoms.reserve(labels.size());
  for (const auto& label : labels) {
    const auto it = counts.find(label);
    const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    atoms.push_back({label, c / t});
  }
  return DiscreteDist(std::move(atoms), /*normalize=*/true);
}

namespace {

LabelCounts parse_counts_json(const std::string& path, std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw validation_error(path + ": expected a JSON object of label counts");
  }
  LabelCounts lc;
  for (const auto& [label, value] : doc.items()) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
      throw validation_error(path + ": count for '" + label +
                             "' must be a non-negative integer");
    }
    lc.counts[label] = value.get<std::int64_t>();
  }
  if (lc.counts.empty()) {
    throw validation_error(path + ": no counts found");
  }
  return lc;
}

LabelCounts parse_counts_csv(const std::string& path, std::istream& in) {
  LabelCounts lc;
  std::string line;
  int lineno = 0;
  // labels may contain commas (interval bins), so columns split from the
  // right; a `label,count,probability` header switches to three columns
  bool has_probability_column = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line == "label,count,probability") {
      has_probability_column = true;
      continue;
    }
    if (lineno == 1 && line == "label,count") continue;
    auto comma = line.rfind(',');
    if (has_probability_column && comma != std::string::npos && comma > 0) {
      comma = line.rfind(',', comma - 1);
    }
    if (comma == std::string::npos) {
      throw validation_error(path + ":" + std::to_string(lineno) +
                             ": expected `label,count`");
    }
    std::string label = line.substr(0, comma);
    std::string count_text = line.substr(comma + 1);
    if (has_probability_column) {
      const auto inner = count_text.find(',');
      count_text = count_text.substr(0, inner);
    }
    std::int64_t count = 0;
    try {
      std::size_t pos = 0;
      count = std::stoll(count_text, &pos);
      if (pos != count_text.size()) throw std::invalid_argument(count_text);
    } catch (const std::exception&) {
      throw validation_error(path + ":" + std::to_string(lineno) +
                             ": bad count '" + count_text + "'");
    }
    if (count < 0) {
      throw validation_error(path + ":" + std::to_string(lineno) +
                             ": negative count");
    }
    if (!lc.counts.emplace(label, count).second) {
      throw validation_error(path + ":" + std::to_string(lineno) +
                             ": duplicate label '" + label + "'");
    }
  }
  if (lc.counts.empty()) {
    throw validation_error(path + ": no counts found");
  }
  return lc;
}

}  // namespace

LabelCounts load_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("cannot open '" + path + "'");
  }
  // sniff the first non-space character: '{' means JSON
  int ch = in.peek();
  while (ch != EOF && std::isspace(ch)) {
    in.get();
    ch = in.peek();
  }
  if (ch == EOF) {
    throw validation_error(path + ": file is empty");
  }
  if (ch == '{') return parse_counts_json(path, in);
  return parse_counts_csv(path, in);
}

KlReport kl_report(
    const std::vector<std::pair<std::string, LabelCounts>>& generated,
    const LabelCounts& reference, const std::string& reference_name,
    double smoothing) {
  if (reference.total() <= 0) {
    throw validation_error("reference histogram is empty");
  }
  // unified label set: reference labels plus anything any source produced
  std::map<std::string, bool> label_set;
  for (const auto& [label, c] : reference.counts) label_set[label] = true;
  for (const auto& [name, lc] : generated) {
    for (const auto& [label, c] : lc.counts) label_set[label] = true;
  }
  std::vector<std::string> labels;
  labels.reserve(label_set.size());
  for (const auto& [label, unused] : label_set) labels.push_back(label);

  const DiscreteDist ref = reference.to_dist(labels);

  KlReport report;
  report.reference_name = reference_name;
  report.smoothing = smoothing;
  for (const auto& [name, lc] : generated) {
    const double kl = kl_divergence(lc.to_dist(labels), ref, smoothing);
    auto it = std::find_if(report.rows.begin(), report.rows.end(),
                           [&](const KlReportRow& r) { return r.source == name; });
    if (it == report.rows.end()) {
      report.rows.push_back({name, 0.0, 0, {}});
      it = std::prev(report.rows.end());
    }
    it->kl_per_trial.push_back(kl);
    it->trials += 1;
  }
  for (auto& row : report.rows) {
    double sum = 0.0;
    for (double v : row.kl_per_trial) sum += v;
    row.kl_mean = sum / static_cast<double>(row.trials);
  }
  return report;
}

void write_report_csv(const KlReport& report, std::ostream& out) {
  out << "source,avg_kl,trials\n";
  for (const auto& row : report.rows) {
    out << row.source << ',' << fmt_double(row.kl_mean) << ',' << row.trials
        << '\n';
  }
}

void write_report_json(const KlReport& report, std::ostream& out) {
  nlohmann::json doc;
  doc["reference"] = report.reference_name;
  doc["smoothing"] = report.smoothing;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    doc["rows"].push_back({{"source", row.source},
                           {"avg_kl", row.kl_mean},
                           {"trials", row.trials},
                           {"kl_per_trial", row.kl_per_trial}});
  }
  out << doc.dump(2) << '\n';
}

LabelCounts sample_synthetic(const PiecewiseUniformDist& dist, std::int64_t n,
                             const std::vector<double>& bins,
                             std::uint64_t seed) {
  if (n <= 0) {
    throw validation_error("sample count must be positive");
  }
  if (bins.size() < 2 || !std::is_sorted(bins.begin(), bins.end())) {
    throw validation_error("bins must be a sorted list of >= 2 breakpoints");
  }
  if (bins.front() > dist.support_lo() || bins.back() < dist.support_hi()) {
    throw validation_error("bins do not cover the support");
  }

  // cumulative masses for inverse-CDF draws
  const auto& segs = dist.segments();
  std::vector<double> cum(segs.size() + 1, 0.0);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    cum[i + 1] = cum[i] + segs[i].mass;
  }
  cum.back() = 1.0;

  std::vector<std::string> bin_labels;
  for (std::size_t i = 0; i + 1 < bins.size(); ++i) {
    bin_labels.push_back("[" + fmt_double(bins[i]) + "," +
                         fmt_double(bins[i + 1]) + ")");
  }

  LabelCounts lc;
  for (const auto& label : bin_labels) lc.counts[label] = 0;

  Rng rng(seed);
  for (std::int64_t k = 0; k < n; ++k) {
    const double u = uniform_unit(rng);
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const std::size_t si =
        std::min(static_cast<std::size_t>(it - cum.begin()) - 1,
                 segs.size() - 1);
    const auto& s = segs[si];
    const double frac = s.mass > 0.0 ? (u - cum[si]) / s.mass : 0.0;
    const double x = s.lo + frac * (s.hi - s.lo);

    auto bit = std::upper_bound(bins.begin(), bins.end(), x);
    std::size_t bi = std::min(static_cast<std::size_t>(bit - bins.begin()),
                              bins.size() - 1) - 1;
    lc.counts[bin_labels[bi]] += 1;
  }
  return lc;
}

void write_frequency_csv(const LabelCounts& counts, std::ostream& out) {
  const double total = static_cast<double>(counts.total());
  if (total <= 0) {
    throw validation_error("histogram has zero total count");
  }
  out << "label,count,probability\n";
  for (const auto& [label, c] : counts.counts) {
    out << label << ',' << c << ','
        << fmt_double(static_cast<double>(c) / total) << '\n';
  }
}

}  // namespace mcq
