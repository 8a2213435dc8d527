#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcq/bounds.hpp"
#include "mcq/eval.hpp"
#include "mcq/json_io.hpp"
#include "mcq/region.hpp"
#include "mcq/text.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitFailedCheck = 2;

// Output sink: --out path, or stdout when unset.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) {
        throw mcq::validation_error("cannot write '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> parse_breakpoints(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw mcq::validation_error("bad breakpoint '" + item + "'");
    }
  }
  return out;
}

double log_scale(const std::string& base) {
  if (base == "e") return 1.0;
  if (base == "2") return std::log(2.0);
  if (base == "10") return std::log(10.0);
  throw mcq::validation_error("--log-base must be e, 2 or 10");
}

void require_pair(const std::vector<std::string>& inputs) {
  if (inputs.size() != 2) {
    throw mcq::validation_error("exactly two --input files required");
  }
}

int run_region(const std::vector<std::string>& inputs,
               const std::string& out) {
  require_pair(inputs);
  const auto [p, q] = mcq::load_distribution_pair(inputs[0], inputs[1]);
  Sink sink(out);
  mcq::write_boundary_csv(mcq::region_boundary(p, q), sink.stream());
  return 0;
}

int run_dtv(const std::vector<std::string>& inputs, int m,
            const std::string& out) {
  require_pair(inputs);
  const auto [p, q] = mcq::load_distribution_pair(inputs[0], inputs[1]);
  double dtv;
  if (m <= 1) {
    dtv = mcq::total_variation(p, q);
  } else {
    dtv = mcq::total_variation(mcq::pack(p, m).atoms, mcq::pack(q, m).atoms);
  }
  Sink sink(out);
  sink.stream() << mcq::fmt_double(dtv) << '\n';
  return 0;
}

int run_pack_sweep(const std::vector<std::string>& inputs, int m_max,
                   const std::string& out) {
  require_pair(inputs);
  const auto [p, q] = mcq::load_distribution_pair(inputs[0], inputs[1]);
  const auto rows = mcq::packing_sweep(p, q, m_max);
  Sink sink(out);
  auto& os = sink.stream();
  os << "m,dtv,area,lower,upper\n";
  for (const auto& row : rows) {
    os << row.m << ',' << mcq::fmt_double(row.dtv) << ','
       << mcq::fmt_double(row.area) << ',' << mcq::fmt_double(row.lower)
       << ',' << mcq::fmt_double(row.upper) << '\n';
  }
  return 0;
}

int run_bounds(double tau, int m, bool curve, const std::string& out) {
  Sink sink(out);
  auto& os = sink.stream();
  if (curve) {
    os << "tau,m,lower,upper\n";
    for (int deg = 1; deg <= m; ++deg) {
      for (int i = 0; i <= 100; ++i) {
        const double t = static_cast<double>(i) / 100.0;
        const mcq::BoundQuery q{t, deg};
        os << mcq::fmt_double(t) << ',' << deg << ','
           << mcq::fmt_double(mcq::dtv_lower_bound(q).value) << ','
           << mcq::fmt_double(mcq::dtv_upper_bound(q)) << '\n';
      }
    }
    return 0;
  }
  const mcq::BoundQuery q{tau, m};
  const auto lower = mcq::dtv_lower_bound(q);
  os << "tau," << mcq::fmt_double(tau) << '\n'
     << "m," << m << '\n'
     << "alpha_star," << mcq::fmt_double(lower.alpha_star) << '\n'
     << "lower," << mcq::fmt_double(lower.value) << '\n'
     << "upper," << mcq::fmt_double(mcq::dtv_upper_bound(q)) << '\n';
  return 0;
}

int run_blackwell(const std::vector<std::string>& inputs, int trials,
                  std::uint64_t seed, double tol, const std::string& out) {
  require_pair(inputs);
  const auto b = mcq::markov_from_json(mcq::load_json(inputs[0]));
  const auto c = mcq::markov_from_json(mcq::load_json(inputs[1]));
  const auto result = mcq::is_more_informative(b, c, trials, seed, tol);
  Sink sink(out);
  auto& os = sink.stream();
  switch (result.verdict) {
    case mcq::InformativenessVerdict::MoreInformative: {
      os << "verdict,MoreInformative\n";
      nlohmann::json witness = mcq::to_json(*result.garbling);
      os << "garbling," << witness.dump() << '\n';
      return 0;
    }
    case mcq::InformativenessVerdict::NotMoreInformative: {
      os << "verdict,NotMoreInformative\n";
      nlohmann::json witness = {
          {"payoff", result.counterexample->payoff},
          {"prior", result.counterexample->prior},
          {"gap", result.counterexample_gap}};
      os << "counterexample," << witness.dump() << '\n';
      return kExitFailedCheck;
    }
    case mcq::InformativenessVerdict::Undetermined:
      os << "verdict,Undetermined\n";
      return kExitFailedCheck;
  }
  return kExitFailedCheck;
}

int run_veegan_check(const std::vector<std::string>& inputs, double tol,
                     const std::string& out) {
  if (inputs.size() != 1) {
    throw mcq::validation_error("exactly one --input config required");
  }
  const auto cfg = mcq::veegan_from_json(mcq::load_json(inputs[0]));
  const auto report = mcq::verify_bound(cfg);
  const bool matched = mcq::matched_optimum_check(cfg, tol);
  Sink sink(out);
  auto& os = sink.stream();
  os << "lhs," << mcq::fmt_double(report.lhs) << '\n'
     << "rhs," << mcq::fmt_double(report.rhs) << '\n'
     << "gap," << mcq::fmt_double(report.rhs - report.lhs) << '\n'
     << "bound_holds," << (report.holds ? "true" : "false") << '\n'
     << "entropy_p0," << mcq::fmt_double(mcq::entropy(cfg.p0())) << '\n'
     << "matched_optimum," << (matched ? "true" : "false") << '\n';
  return report.holds ? 0 : kExitFailedCheck;
}

int run_kl_eval(const std::vector<std::string>& inputs,
                const std::string& reference_path, double smoothing,
                const std::string& log_base, const std::string& out) {
  if (inputs.empty()) {
    throw mcq::validation_error("at least one --input histogram required");
  }
  if (reference_path.empty()) {
    throw mcq::validation_error("--reference is required");
  }
  std::vector<std::pair<std::string, mcq::LabelCounts>> generated;
  for (const auto& arg : inputs) {
    // `name=path` pins a source name; repeated names are averaged
    std::string name;
    std::string path;
    const auto eq = arg.find('=');
    if (eq != std::string::npos) {
      name = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    } else {
      path = arg;
      name = std::filesystem::path(arg).stem().string();
    }
    generated.emplace_back(name, mcq::load_counts(path));
  }
  const auto reference = mcq::load_counts(reference_path);
  auto report =
      mcq::kl_report(generated, reference,
                     std::filesystem::path(reference_path).stem().string(),
                     smoothing);
  const double scale = log_scale(log_base);
  if (scale != 1.0) {
    for (auto& row : report.rows) {
      row.kl_mean /= scale;
      for (auto& v : row.kl_per_trial) v /= scale;
    }
  }
  Sink sink(out);
  if (out.size() >= 5 && out.substr(out.size() - 5) == ".json") {
    mcq::write_report_json(report, sink.stream());
  } else {
    mcq::write_report_csv(report, sink.stream());
  }
  return 0;
}

int run_sample(const std::vector<std::string>& inputs, std::int64_t n,
               const std::string& bins_text, std::uint64_t seed,
               const std::string& out) {
  if (inputs.size() != 1) {
    throw mcq::validation_error("exactly one --input distribution required");
  }
  const auto pw = mcq::piecewise_from_json(mcq::load_json(inputs[0]));
  const auto counts =
      mcq::sample_synthetic(pw, n, parse_breakpoints(bins_text), seed);
  Sink sink(out);
  mcq::write_frequency_csv(counts, sink.stream());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mode-collapse metrics for discrete distributions"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string reference;
  std::string out;
  std::string bins_text;
  std::string log_base = "e";
  int m = 1;
  double tau = 0.0;
  bool curve = false;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  double smoothing = mcq::kDefaultSmoothing;
  double tol = mcq::kFactorizeTol;
  int trials = 20;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("--input,-i", inputs, "input file(s)");
    if (needs_input) opt->required();
    sub->add_option("--out", out, "output file (default: stdout)");
  };

  auto* region = app.add_subcommand("region", "mode-collapse region boundary");
  add_common(region, true);

  auto* dtv = app.add_subcommand("dtv", "total variation distance");
  add_common(dtv, true);
  dtv->add_option("--m", m, "packing degree");

  auto* sweep = app.add_subcommand("pack-sweep", "packed TV/area sweep");
  add_common(sweep, true);
  sweep->add_option("--m", m, "max packing degree")->required();

  auto* bounds = app.add_subcommand("bounds", "packing envelope bounds");
  add_common(bounds, false);
  bounds->add_option("--tau", tau, "base total variation");
  bounds->add_option("--m", m, "packing degree")->required();
  bounds->add_flag("--curve", curve, "emit tau,m,lower,upper curve CSV");

  auto* blackwell =
      app.add_subcommand("blackwell", "channel informativeness verdict");
  add_common(blackwell, true);
  blackwell->add_option("--trials", trials, "payoff samples for falsification");
  blackwell->add_option("--seed", seed, "payoff sampling seed");
  blackwell->add_option("--tol", tol, "factorization tolerance");

  auto* veegan = app.add_subcommand("veegan-check",
                                    "reconstructor objective bound check");
  add_common(veegan, true);
  veegan->add_option("--tol", tol, "matched-optimum tolerance");

  auto* kleval = app.add_subcommand("kl-eval", "KL report for histograms");
  add_common(kleval, true);
  kleval->add_option("--reference", reference, "reference histogram")
      ->required();
  kleval->add_option("--smoothing", smoothing, "zero-probability substitute");
  kleval->add_option("--log-base", log_base, "e, 2 or 10");

  auto* sample = app.add_subcommand("sample", "seeded synthetic histogram");
  add_common(sample, true);
  sample->add_option("--n", n, "number of draws")->required();
  sample->add_option("--bins", bins_text, "comma-separated breakpoints")
      ->required();
  sample->add_option("--seed", seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (region->parsed()) return run_region(inputs, out);
    if (dtv->parsed()) return run_dtv(inputs, m, out);
    if (sweep->parsed()) return run_pack_sweep(inputs, m, out);
    if (bounds->parsed()) return run_bounds(tau, m, curve, out);
    if (blackwell->parsed())
      return run_blackwell(inputs, trials, seed, tol, out);
    if (veegan->parsed()) return run_veegan_check(inputs, tol, out);
    if (kleval->parsed())
      return run_kl_eval(inputs, reference, smoothing, log_base, out);
    if (sample->parsed()) return run_sample(inputs, n, bins_text, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
