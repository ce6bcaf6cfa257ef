#include "svi/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace svi::kernels {

namespace {

double sum_scalar(const double* x, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double max_scalar(const double* x, size_t n) {
  double m = x[0];
  for (size_t i = 1; i < n; ++i) m = x[i] > m ? x[i] : m;
  return m;
}

double dot_scalar(const double* x, const double* y, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double* y, double a, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void blend_scalar(double* out, const double* a, const double* b, double rho,
                  size_t n) {
  const double w = 1.0 - rho;
  for (size_t i = 0; i < n; ++i) out[i] = w * a[i] + rho * b[i];
}

void digamma_array_scalar(const double* x, double* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = digamma_scalar(x[i]);
}

double exp_normalize_scalar(const double* logw, double* out, size_t n) {
  const double m = max_scalar(logw, n);
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) {
    out[i] = std::exp(logw[i] - m);
    s += out[i];
  }
  const double inv = 1.0 / s;
  for (size_t i = 0; i < n; ++i) out[i] *= inv;
  return m + std::log(s);
}

const Ops kScalarOps = {
    "scalar",        sum_scalar,           max_scalar, dot_scalar,
    axpy_scalar,     blend_scalar,         digamma_array_scalar,
    exp_normalize_scalar,
};

const Ops& select() {
  if (const char* env = std::getenv("SVI_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return kScalarOps;
    if (std::strcmp(env, "avx2") == 0 && avx2() != nullptr) return *avx2();
  }
  if (const Ops* v = avx2()) return *v;
  return kScalarOps;
}

}  // namespace

const Ops& scalar() { return kScalarOps; }

#if defined(__x86_64__) || defined(_M_X64)
namespace detail {
const Ops* avx2_table();  // kernels_avx2.cpp
}
const Ops* avx2() {
  static const Ops* table =
      (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
          ? detail::avx2_table()
          : nullptr;
  return table;
}
#else
const Ops* avx2() { return nullptr; }
#endif

const Ops& active() {
  static const Ops& ops = select();
  return ops;
}

// Digamma by lifting the argument to >= 8 with psi(x) = psi(x+1) - 1/x and
// evaluating the asymptotic series
//   psi(x) ~ ln x - 1/(2x) - sum_n B_{2n} / (2n x^{2n})
// through the x^-14 term; truncation error is below 2e-14 at x = 8.
double digamma_scalar(double x) {
  double acc = 0.0;
  while (x < 8.0) {
    acc += 1.0 / x;
    x += 1.0;
  }
  const double w = 1.0 / (x * x);
  const double series =
      w * (1.0 / 12.0 +
           w * (-1.0 / 120.0 +
                w * (1.0 / 252.0 +
                     w * (-1.0 / 240.0 +
                          w * (1.0 / 132.0 +
                               w * (-691.0 / 32760.0 + w * (1.0 / 12.0)))))));
  return std::log(x) - 0.5 / x - series - acc;
}

// Trigamma with the same lift; psi'(x) = psi'(x+1) + 1/x^2 and
//   psi'(x) ~ 1/x + 1/(2x^2) + sum_n B_{2n} / x^{2n+1}.
double trigamma_scalar(double x) {
  double acc = 0.0;
  while (x < 8.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double w = 1.0 / (x * x);
  const double series =
      w * (1.0 / 6.0 +
           w * (-1.0 / 30.0 +
                w * (1.0 / 42.0 +
                     w * (-1.0 / 30.0 +
                          w * (5.0 / 66.0 +
                               w * (-691.0 / 2730.0 + w * (7.0 / 6.0)))))));
  return 1.0 / x + 0.5 * w + series / x + acc;
}

}  // namespace svi::kernels
