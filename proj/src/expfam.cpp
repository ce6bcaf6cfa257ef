#include "svi/expfam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "svi/kernels.hpp"

namespace svi {

namespace {

void require_positive_finite(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": argument must be positive and finite");
  }
}

}  // namespace

DirichletParams::DirichletParams(std::vector<double> conc)
    : concentration(std::move(conc)) {
  if (concentration.size() < 2)
    throw std::domain_error("DirichletParams: dimension must be >= 2");
  for (double c : concentration) require_positive_finite(c, "DirichletParams");
}

BetaParams::BetaParams(double a, double b) : shape1(a), shape2(b) {
  require_positive_finite(a, "BetaParams");
  require_positive_finite(b, "BetaParams");
}

LogWeights::LogWeights(std::vector<double> v) : values(std::move(v)) {
  if (values.empty()) throw std::domain_error("LogWeights: empty input");
  for (double x : values)
    if (!std::isfinite(x)) throw std::domain_error("LogWeights: entries must be finite");
}

double digamma(double x) {
  require_positive_finite(x, "digamma");
  return kernels::digamma_scalar(x);
}

double trigamma(double x) {
  require_positive_finite(x, "trigamma");
  return kernels::trigamma_scalar(x);
}

void dirichlet_expect_log_inplace(std::span<const double> conc,
                                  std::span<double> out) {
  const auto& k = kernels::active();
  const double total = k.sum(conc.data(), conc.size());
  k.digamma(conc.data(), out.data(), conc.size());
  const double psi_total = kernels::digamma_scalar(total);
  for (double& v : out) v -= psi_total;
}

std::vector<double> dirichlet_expect_log(const DirichletParams& params) {
  std::vector<double> out(params.concentration.size());
  dirichlet_expect_log_inplace(params.concentration, out);
  return out;
}

std::pair<double, double> beta_expect_logs(const BetaParams& params) {
  const double psi_ab = kernels::digamma_scalar(params.shape1 + params.shape2);
  return {kernels::digamma_scalar(params.shape1) - psi_ab,
          kernels::digamma_scalar(params.shape2) - psi_ab};
}

double dirichlet_log_normalizer(const DirichletParams& params) {
  double sum = 0.0;
  double acc = 0.0;
  for (double c : params.concentration) {
    acc += std::lgamma(c);
    sum += c;
  }
  return acc - std::lgamma(sum);
}

double normalize_exp_inplace(std::span<const double> logw, std::span<double> out) {
  return kernels::active().exp_normalize(logw.data(), out.data(), logw.size());
}

std::vector<double> normalize_exp(const LogWeights& weights) {
  std::vector<double> out(weights.values.size());
  normalize_exp_inplace(weights.values, out);
  return out;
}

}  // namespace svi
