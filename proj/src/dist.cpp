#include "mcq/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mcq/text.hpp"

namespace mcq {

namespace {
constexpr double kMassTol = 1e-12;
}  // namespace

DiscreteDist::DiscreteDist(std::vector<Atom> atoms, bool normalize)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw validation_error("distribution has no atoms");
  }
  double total = 0.0;
  std::set<std::string> seen;
  for (const auto& a : atoms_) {
    if (!(a.prob >= 0.0)) {
      throw validation_error("negative probability on atom '" + a.label + "'");
    }
    if (!seen.insert(a.label).second) {
      throw validation_error("duplicate label '" + a.label + "'");
    }
    total += a.prob;
  }
  if (normalize) {
    if (total <= 0.0) {
      throw validation_error("cannot normalize zero total mass");
    }
    for (auto& a : atoms_) a.prob /= total;
  } else if (std::abs(total - 1.0) > kMassTol) {
    throw validation_error("probabilities sum to " + fmt_double(total) +
                           ", expected 1");
  }
}

DiscreteDist DiscreteDist::from_probs(const std::vector<double>& probs,
                                      bool normalize) {
  std::vector<Atom> atoms;
  atoms.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    atoms.push_back({"a" + std::to_string(i), probs[i]});
  }
  return DiscreteDist(std::move(atoms), normalize);
}

bool DiscreteDist::same_labels(const DiscreteDist& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (atoms_[i].label != other.atoms_[i].label) return false;
  }
  return true;
}

PiecewiseUniformDist::PiecewiseUniformDist(std::vector<Segment> segments,
                                           bool normalize)
    : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw validation_error("piecewise distribution has no segments");
  }
  std::sort(segments_.begin(), segments_.end(),
            [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  double total = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (!(s.lo < s.hi)) {
      throw validation_error("segment with lo >= hi");
    }
    if (!(s.mass >= 0.0)) {
      throw validation_error("segment with negative mass");
    }
    if (i > 0 && segments_[i - 1].hi > s.lo + 1e-15) {
      throw validation_error("overlapping segments");
    }
    total += s.mass;
  }
  if (normalize) {
    if (total <= 0.0) {
      throw validation_error("cannot normalize zero total mass");
    }
    for (auto& s : segments_) s.mass /= total;
  } else if (std::abs(total - 1.0) > kMassTol) {
    throw validation_error("segment masses sum to " + fmt_double(total) +
                           ", expected 1");
  }
}

PiecewiseUniformDist PiecewiseUniformDist::uniform(double lo, double hi) {
  return PiecewiseUniformDist({{lo, hi, 1.0}});
}

double PiecewiseUniformDist::density_at(double x) const {
  for (const auto& s : segments_) {
    if (x >= s.lo && x < s.hi) return s.density();
  }
  if (x == segments_.back().hi) return segments_.back().density();
  return 0.0;
}

DiscreteDist discretize(const PiecewiseUniformDist& pw,
                        const std::vector<double>& extra_breakpoints) {
  std::vector<double> pts;
  for (const auto& s : pw.segments()) {
    pts.push_back(s.lo);
    pts.push_back(s.hi);
  }
  pts.insert(pts.end(), extra_breakpoints.begin(), extra_breakpoints.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Atom> atoms;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i];
    const double hi = pts[i + 1];
    const double density = pw.density_at(0.5 * (lo + hi));
    atoms.push_back({"[" + fmt_double(lo) + "," + fmt_double(hi) + ")",
                     density * (hi - lo)});
  }
  return DiscreteDist(std::move(atoms));
}

std::pair<DiscreteDist, DiscreteDist> common_refinement(
    const PiecewiseUniformDist& p, const PiecewiseUniformDist& q) {
  std::vector<double> pts;
  for (const auto& s : p.segments()) {
    pts.push_back(s.lo);
    pts.push_back(s.hi);
  }
  for (const auto& s : q.segments()) {
    pts.push_back(s.lo);
    pts.push_back(s.hi);
  }
  return {discretize(p, pts), discretize(q, pts)};
}

double total_variation(const DiscreteDist& p, const DiscreteDist& q) {
  if (!p.same_labels(q)) {
    throw validation_error("total_variation: label sets differ");
  }
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    tv += std::max(p.prob(i) - q.prob(i), 0.0);
  }
  return tv;
}

PackedDist pack(const DiscreteDist& p, int m, std::size_t guard) {
  if (m < 1) {
    throw validation_error("packing degree must be >= 1");
  }
  const std::size_t n = p.size();
  std::size_t count = 1;
  for (int k = 0; k < m; ++k) {
    if (count > guard / n) {
      throw size_error("pack: " + std::to_string(n) + "^" + std::to_string(m) +
                       " tuples exceed guard " + std::to_string(guard));
    }
    count *= n;
  }

  std::vector<Atom> tuples;
  tuples.reserve(count);
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (std::size_t t = 0; t < count; ++t) {
    std::string label;
    double prob = 1.0;
    for (int k = 0; k < m; ++k) {
      if (k > 0) label += '|';
      label += p.label(idx[k]);
      prob *= p.prob(idx[k]);
    }
    tuples.push_back({std::move(label), prob});
    // odometer, last coordinate fastest
    for (int k = m - 1; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  // Products of a normalized vector can drift below the construction
  // tolerance for large m; renormalize the (provably unit) total.
  return {p, m, DiscreteDist(std::move(tuples), /*normalize=*/true)};
}

double kl_divergence(const DiscreteDist& q, const DiscreteDist& p,
                     double smoothing) {
  if (!q.same_labels(p)) {
    throw validation_error("kl_divergence: label sets differ");
  }
  if (smoothing < 0.0) {
    throw validation_error("smoothing must be >= 0");
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    double qi = q.prob(i);
    double pi = p.prob(i);
    if (qi == 0.0) qi = smoothing;
    if (pi == 0.0) pi = smoothing;
    if (qi == 0.0) continue;  // 0*log 0 = 0
    if (pi == 0.0) return std::numeric_limits<double>::infinity();
    kl += qi * std::log(qi / pi);
  }
  return kl;
}

double entropy(const DiscreteDist& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.prob(i);
    if (pi > 0.0) h -= pi * std::log(pi);
  }
  return h;
}

}  // namespace mcq
