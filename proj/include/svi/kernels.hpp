#pragma once

#include <cstddef>

namespace svi::kernels {

// Data-parallel inner loops used by the inference hot paths. Each operation
// has a scalar reference implementation and, on x86-64 with AVX2+FMA, a
// vectorized variant. The active table is chosen once at startup from CPU
// features; set SVI_KERNELS=scalar (or avx2) in the environment to override,
// e.g. when cross-checking the two lanes.
//
// All functions assume validated inputs (finite, positive where required);
// argument checking lives in the calling layer.
struct Ops {
  const char* name;

  double (*sum)(const double* x, size_t n);
  double (*max)(const double* x, size_t n);
  double (*dot)(const double* x, const double* y, size_t n);

  // y[i] += a * x[i]
  void (*axpy)(double* y, double a, const double* x, size_t n);
  // out[i] = (1 - rho) * a[i] + rho * b[i]
  void (*blend)(double* out, const double* a, const double* b, double rho, size_t n);

  // Elementwise digamma for strictly positive inputs.
  void (*digamma)(const double* x, double* out, size_t n);

  // out = softmax(logw) via max-subtraction; returns log(sum exp(logw))
  // (the log-normalizer). n must be >= 1.
  double (*exp_normalize)(const double* logw, double* out, size_t n);
};

const Ops& scalar();

// AVX2+FMA table, or nullptr when unsupported (wrong arch or CPU).
const Ops* avx2();

// The runtime-selected table (stable for the lifetime of the process).
const Ops& active();

// Scalar digamma/trigamma used by code that works one value at a time.
// Same recurrence-lift + asymptotic-series algorithm as the array kernel.
double digamma_scalar(double x);
double trigamma_scalar(double x);

}  // namespace svi::kernels
