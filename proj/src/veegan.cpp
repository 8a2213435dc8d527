#include "mcq/veegan.hpp"

#include <cmath>
#include <limits>

namespace mcq {

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    d += diff * diff;
  }
  return d;
}

}  // namespace

FiniteVeeganConfig::FiniteVeeganConfig(
    DiscreteDist p0, DiscreteDist p_x, MarkovMatrix gen_cond,
    MarkovMatrix rec_cond, std::vector<std::vector<double>> z_embeddings)
    : p0_(std::move(p0)),
      p_x_(std::move(p_x)),
      gen_cond_(std::move(gen_cond)),
      rec_cond_(std::move(rec_cond)),
      z_embeddings_(std::move(z_embeddings)) {
  const std::size_t nz = p0_.size();
  const std::size_t nx = p_x_.size();
  if (gen_cond_.n_states() != nz || gen_cond_.n_signals() != nx) {
    throw validation_error("gen_cond must be |z| x |x|");
  }
  if (rec_cond_.n_states() != nx || rec_cond_.n_signals() != nz) {
    throw validation_error("rec_cond must be |x| x |z|");
  }
  if (z_embeddings_.empty()) {
    z_embeddings_.assign(nz, std::vector<double>(nz, 0.0));
    for (std::size_t i = 0; i < nz; ++i) z_embeddings_[i][i] = 1.0;
  }
  if (z_embeddings_.size() != nz) {
    throw validation_error("one embedding per z atom required");
  }
  const std::size_t dim = z_embeddings_.front().size();
  for (const auto& e : z_embeddings_) {
    if (e.size() != dim) {
      throw validation_error("embeddings must share one dimension");
    }
  }
}

DiscreteDist reconstructor_marginal(const FiniteVeeganConfig& cfg) {
  const std::size_t nz = cfg.p0().size();
  const std::size_t nx = cfg.p_x().size();
  std::vector<Atom> atoms;
  atoms.reserve(nz);
  for (std::size_t k = 0; k < nz; ++k) {
    double mass = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      mass += cfg.rec_cond()(x, k) * cfg.p_x().prob(x);
    }
    atoms.push_back({cfg.p0().label(k), mass});
  }
  return DiscreteDist(std::move(atoms), /*normalize=*/true);
}

DiscreteDist generator_marginal(const FiniteVeeganConfig& cfg) {
  const std::size_t nz = cfg.p0().size();
  const std::size_t nx = cfg.p_x().size();
  std::vector<Atom> atoms;
  atoms.reserve(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    double mass = 0.0;
    for (std::size_t z = 0; z < nz; ++z) {
      mass += cfg.gen_cond()(z, x) * cfg.p0().prob(z);
    }
    atoms.push_back({cfg.p_x().label(x), mass});
  }
  return DiscreteDist(std::move(atoms), /*normalize=*/true);
}

double cross_entropy_term(const FiniteVeeganConfig& cfg) {
  const DiscreteDist marginal = reconstructor_marginal(cfg);
  double h = 0.0;
  for (std::size_t z = 0; z < cfg.p0().size(); ++z) {
    const double pz = cfg.p0().prob(z);
    if (pz == 0.0) continue;
    const double mz = marginal.prob(z);
    if (mz == 0.0) return std::numeric_limits<double>::infinity();
    h -= pz * std::log(mz);
  }
  return h;
}

double kl_joint(const FiniteVeeganConfig& cfg) {
  const std::size_t nz = cfg.p0().size();
  const std::size_t nx = cfg.p_x().size();
  double kl = 0.0;
  for (std::size_t z = 0; z < nz; ++z) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double num = cfg.p0().prob(z) * cfg.gen_cond()(z, x);
      if (num == 0.0) continue;
      const double den = cfg.p_x().prob(x) * cfg.rec_cond()(x, z);
      if (den == 0.0) return std::numeric_limits<double>::infinity();
      kl += num * std::log(num / den);
    }
  }
  return kl;
}

double autoencoder_loss(const FiniteVeeganConfig& cfg) {
  const std::size_t nz = cfg.p0().size();
  const std::size_t nx = cfg.p_x().size();
  const auto& emb = cfg.z_embeddings();
  double loss = 0.0;
  for (std::size_t z = 0; z < nz; ++z) {
    const double pz = cfg.p0().prob(z);
    if (pz == 0.0) continue;
    for (std::size_t x = 0; x < nx; ++x) {
      const double w = pz * cfg.gen_cond()(z, x);
      if (w == 0.0) continue;
      for (std::size_t zh = 0; zh < nz; ++zh) {
        const double v = cfg.rec_cond()(x, zh);
        if (v == 0.0) continue;
        loss += w * v * sq_dist(emb[z], emb[zh]);
      }
    }
  }
  return loss;
}

double objective_upper_bound(const FiniteVeeganConfig& cfg) {
  return kl_joint(cfg) + entropy(cfg.p0()) + autoencoder_loss(cfg);
}

BoundReport verify_bound(const FiniteVeeganConfig& cfg) {
  BoundReport report;
  report.lhs = cross_entropy_term(cfg) + autoencoder_loss(cfg);
  report.rhs = objective_upper_bound(cfg);
  report.holds = report.lhs <= report.rhs + 1e-10;
  return report;
}

bool matched_optimum_check(const FiniteVeeganConfig& cfg, double tol) {
  const std::size_t nz = cfg.p0().size();
  const std::size_t nx = cfg.p_x().size();
  for (std::size_t z = 0; z < nz; ++z) {
    for (std::size_t x = 0; x < nx; ++x) {
      const double lhs = cfg.p0().prob(z) * cfg.gen_cond()(z, x);
      const double rhs = cfg.p_x().prob(x) * cfg.rec_cond()(x, z);
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return autoencoder_loss(cfg) <= tol;
}

}  // namespace mcq
