#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "svi/corpus.hpp"
#include "svi/matrix.hpp"
#include "svi/rng.hpp"

namespace svi {

// Step-size schedule rho_t = (t + tau)^(-kappa).
struct StepSchedule {
  double tau = 1.0;
  double kappa = 0.9;
};

// Returns (t + tau)^(-kappa); throws std::domain_error when t + tau == 0.
double step_size(long long t, const StepSchedule& schedule);

// True iff kappa lies in (0.5, 1] and tau >= 0, the parameterization under
// which the schedule satisfies sum rho = inf and sum rho^2 < inf.
bool check_robbins_monro(const StepSchedule& schedule);

struct SviConfig {
  StepSchedule schedule;
  int minibatch_size = 100;
  int max_iterations = 1000;
  double local_tolerance = 1e-3;
  int local_max_sweeps = 100;
  uint64_t seed = 0;
  bool sample_with_replacement = false;
};

// One named exponential-family natural-parameter block (a lambda matrix,
// a stick vector, ...). Blocks blend elementwise and keep their shape.
struct GlobalBlock {
  std::string name;
  Mat values;
};

struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// (1 - rho) * current + rho * intermediate, elementwise.
GlobalBlock blend(const GlobalBlock& current, const GlobalBlock& intermediate,
                  double rho);

// Elementwise arithmetic mean of a non-empty, shape-uniform list.
GlobalBlock minibatch_average(std::span<const GlobalBlock> intermediates);

// Uniform sample of S document indices from 0..D-1. Without replacement the
// indices are distinct (requires S <= D).
std::vector<int> sample_minibatch(int D, int S, bool with_replacement, Rng& rng);

// Blends every block from the previous iteration's values simultaneously;
// lists must align by name and shape.
std::vector<GlobalBlock> blocked_svi_step(
    const std::vector<GlobalBlock>& blocks,
    const std::vector<GlobalBlock>& intermediates, double rho);

// One rho-scaled gradient step on the exchangeable document-Dirichlet
// hyperparameter, ascending D * E_q[log p(theta | alpha)]:
//   alpha' = alpha + rho * D * (K Psi(K alpha) - K Psi(alpha) + sum_k E[log theta_k])
// clamped to >= 1e-6.
double empirical_bayes_alpha_step(double alpha, int K,
                                  std::span<const double> expected_log_theta,
                                  int D, double rho);

// Helper used by the driver: positionwise minibatch_average over per-slot
// block lists.
std::vector<GlobalBlock> average_block_groups(
    const std::vector<std::vector<GlobalBlock>>& groups);

// ---- checkpoints ----------------------------------------------------------
// Versioned self-describing text format; doubles at 17 significant digits so
// a resumed run reproduces the original bitwise.

struct Checkpoint {
  std::string model;  // "lda" or "hdp"
  long long iteration = 0;
  long long documents_seen = 0;
  std::string rng_state;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<GlobalBlock> blocks;
};

void write_checkpoint(const Checkpoint& ck, std::ostream& out);
Checkpoint read_checkpoint(std::istream& in);

// ---- driver ----------------------------------------------------------------

template <class M>
concept SviTrainable = requires(M m, const M cm, const Document& d,
                                const std::vector<GlobalBlock>& blocks) {
  { cm.current_blocks() } -> std::same_as<std::vector<GlobalBlock>>;
  { cm.intermediate_blocks(d, 1) } -> std::same_as<std::vector<GlobalBlock>>;
  m.apply_blocks(blocks);
  { cm.iteration() } -> std::convertible_to<long long>;
  m.set_iteration(0LL);
};

struct SviRunResult {
  long long iterations = 0;
  long long documents_seen = 0;
};

// Runs config.max_iterations outer steps of Robbins-Monro natural-gradient
// ascent: sample a minibatch, optimize locals under frozen globals, average
// the per-document intermediate blocks, blend with rho_t. `after_iteration`
// runs synchronously between steps (evaluation, checkpointing). With
// threads > 1 the local phase is parallel; results are reduced in slot order
// so output is independent of the thread count.
template <SviTrainable Model>
SviRunResult run_svi(
    Model& model, const Corpus& corpus, const SviConfig& config, Rng& rng,
    const std::function<void(long long iteration, long long documents_seen)>&
        after_iteration = {},
    int threads = 1);

}  // namespace svi

#include "svi/engine_impl.hpp"
