#include "svi/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace svi {

uint64_t Rng::uniform_below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be >= 1");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

double Rng::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a+1) * U^(1/a)
    const double u = uniform_pos();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

void Rng::dirichlet_symmetric(double conc, std::span<double> out) {
  double sum = 0.0;
  for (double& x : out) {
    x = gamma(conc);
    sum += x;
  }
  // A sum of gamma draws is zero only with probability zero; guard anyway so
  // extreme concentrations (1e-3 and below) cannot emit NaNs.
  if (sum <= 0.0 || !std::isfinite(sum)) {
    const double u = 1.0 / static_cast<double>(out.size());
    for (double& x : out) x = u;
    return;
  }
  for (double& x : out) x /= sum;
}

int Rng::categorical(std::span<const double> probs) {
  const double u = uniform01();
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

std::string Rng::serialize() const {
  std::ostringstream os;
  os << gen_;
  return os.str();
}

void Rng::deserialize(const std::string& text) {
  std::istringstream is(text);
  is >> gen_;
  if (is.fail()) throw std::runtime_error("Rng::deserialize: malformed state");
}

}  // namespace svi
