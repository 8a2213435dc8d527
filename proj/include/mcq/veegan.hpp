#pragma once

#include <string>
#include <vector>

#include "mcq/blackwell.hpp"
#include "mcq/dist.hpp"

namespace mcq {

// Finite-alphabet reconstructor setup: noise prior p0 over z, data
// distribution p_x over x, generator table q(x|z) and reconstructor table
// p(zhat|x), with zhat living on the z alphabet. Embeddings give the z atoms
// the geometry needed by the squared-reconstruction term.
class FiniteVeeganConfig {
 public:
  FiniteVeeganConfig(DiscreteDist p0, DiscreteDist p_x, MarkovMatrix gen_cond,
                     MarkovMatrix rec_cond,
                     std::vector<std::vector<double>> z_embeddings = {});

  const DiscreteDist& p0() const noexcept { return p0_; }
  const DiscreteDist& p_x() const noexcept { return p_x_; }
  const MarkovMatrix& gen_cond() const noexcept { return gen_cond_; }
  const MarkovMatrix& rec_cond() const noexcept { return rec_cond_; }
  const std::vector<std::vector<double>>& z_embeddings() const noexcept {
    return z_embeddings_;
  }

 private:
  DiscreteDist p0_;         // over z
  DiscreteDist p_x_;        // over x
  MarkovMatrix gen_cond_;   // |z| x |x|
  MarkovMatrix rec_cond_;   // |x| x |z|
  std::vector<std::vector<double>> z_embeddings_;  // default: one-hot
};

// p(zhat) = sum_x p(zhat|x) p_x(x), on the z label set.
DiscreteDist reconstructor_marginal(const FiniteVeeganConfig& cfg);

// sum_z q(x|z) p0(z), on the x label set.
DiscreteDist generator_marginal(const FiniteVeeganConfig& cfg);

// -sum_z p0(z) log p(zhat = z); +infinity on an absolute-continuity failure.
double cross_entropy_term(const FiniteVeeganConfig& cfg);

// KL between the joints q(x|z)p0(z) and p(zhat|x)p_x(x), zhat identified
// with z.
double kl_joint(const FiniteVeeganConfig& cfg);

// Expected squared embedding distance over the chain z -> x -> zhat.
double autoencoder_loss(const FiniteVeeganConfig& cfg);

// kl_joint + H(p0) + autoencoder_loss.
double objective_upper_bound(const FiniteVeeganConfig& cfg);

struct BoundReport {
  double lhs = 0.0;  // cross-entropy objective: H(z, F(x)) + l2 term
  double rhs = 0.0;  // its KL upper bound
  bool holds = false;
};

BoundReport verify_bound(const FiniteVeeganConfig& cfg);

// True iff the two joints match entrywise within tol and the reconstruction
// loss is within tol of zero.
bool matched_optimum_check(const FiniteVeeganConfig& cfg, double tol);

}  // namespace mcq
