#pragma once

#include <span>
#include <utility>
#include <vector>

namespace svi {

// Parameters of a Dirichlet distribution; every entry must be > 0 and the
// dimension must be at least 2. Construction validates.
struct DirichletParams {
  std::vector<double> concentration;

  explicit DirichletParams(std::vector<double> conc);
};

// Parameters of a Beta distribution; both shapes must be > 0.
struct BetaParams {
  double shape1;
  double shape2;

  BetaParams(double a, double b);
};

// Unnormalized log-probabilities awaiting normalization; entries must be
// finite and there must be at least one.
struct LogWeights {
  std::vector<double> values;

  explicit LogWeights(std::vector<double> v);
};

// Psi(x) for x > 0. Absolute error below 1e-12 for x >= 1e-6.
// Throws std::domain_error on non-positive or non-finite input.
double digamma(double x);

// Psi'(x) for x > 0, same domain handling as digamma.
double trigamma(double x);

// Entry k is E[log theta_k] = Psi(gamma_k) - Psi(sum gamma); all entries
// are strictly negative.
std::vector<double> dirichlet_expect_log(const DirichletParams& params);

// (E[log V], E[log(1-V)]) for V ~ Beta(a, b).
std::pair<double, double> beta_expect_logs(const BetaParams& params);

// log of the Dirichlet normalizing constant:
// sum_i log Gamma(gamma_i) - log Gamma(sum_i gamma_i).
double dirichlet_log_normalizer(const DirichletParams& params);

// Softmax with max-subtraction; output sums to 1 and tolerates log-space
// spreads of 700+ without overflow.
std::vector<double> normalize_exp(const LogWeights& weights);

// ---- unchecked span forms for inner loops --------------------------------
// These skip argument validation; callers guarantee positive/finite inputs.

// out[k] = Psi(conc[k]) - Psi(sum conc); returns nothing.
void dirichlet_expect_log_inplace(std::span<const double> conc,
                                  std::span<double> out);

// Normalizes logw into out (may alias); returns log(sum exp(logw)).
double normalize_exp_inplace(std::span<const double> logw, std::span<double> out);

}  // namespace svi
