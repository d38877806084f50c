#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acyclekit/random_models.hpp"
#include "acyclekit/stability.hpp"

namespace acyclekit {

/// Worker count for trial loops: hardware concurrency, capped by the
/// ACYCLEKIT_THREADS environment variable.
std::size_t trial_threads();

/// Riemann zeta(3).
inline constexpr double kZeta3 = 1.2020569031595942;

enum class Process { Nearest, Death, Msa };
const char* process_name(Process p);

struct BatchParams {
  std::size_t n = 0;
  int d = 1;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// When set, every trial also runs the perturbed model on the same base
  /// weights.
  std::optional<NoiseModel> noise;
  BaseDistribution base = BaseDistribution::uniform();
};

/// Scaled nearest-face, death and MSA-weight processes of one filtration.
struct ProcessSample {
  PointMeasure nearest;
  PointMeasure death;
  PointMeasure msa;
  double msa_weight = 0.0;   // unscaled total weight of the MSA
  double death_total = 0.0;  // unscaled sum of the death times

  const PointMeasure& get(Process p) const;
};

struct PerturbedTrial {
  ProcessSample sample;
  PerturbationDiagnostics diagnostics;
  double death_bottleneck = 0.0;  // between scaled perturbed and base deaths
  double bottleneck_bound = 0.0;  // Lipschitz(F) n ||eps||_inf
};

struct TrialRecord {
  std::uint64_t seed = 0;
  ProcessSample base;
  /// Exact identities checked on the unscaled multisets.
  bool death_equals_msa = false;
  bool nearest_within_death = false;
  bool distinct_weights = false;
  std::optional<PerturbedTrial> perturbed;
};

struct TrialBatch {
  BatchParams params;
  std::vector<TrialRecord> trials;

  bool identities_hold() const;
};

/// Runs params.trials independent trials, in parallel, each seeded by
/// trial_seed(params.seed, t). The result does not depend on the thread
/// count.
TrialBatch run_batch(const BatchParams& params);

/// One statistic against its target.
struct ExperimentReport {
  std::string statistic;
  double empirical = 0.0;
  double target = 0.0;
  double standard_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Mean and standard error of a sample.
std::pair<double, double> mean_and_se(const std::vector<double>& xs);

/// Builds a report that passes when |empirical - target| <= tolerance, the
/// tolerance defaulting to 3 standard errors.
ExperimentReport make_report(std::string statistic, const std::vector<double>& xs, double target,
                             std::optional<double> tolerance = std::nullopt);

struct Interval {
  double lo;
  double hi;  // may be +inf
};

/// integral of e^{-x} over a union of disjoint intervals.
double exponential_mass(const std::vector<Interval>& intervals);

/// Mean of m(m-1)...(m-l+1) for the count m of points in the interval
/// union, for l = 1..max_order, against (integral of e^{-x})^l. Requires
/// at least 30 trials.
std::vector<ExperimentReport> estimate_factorial_moments(const TrialBatch& batch, const std::vector<Interval>& intervals,
                                                         int max_order, Process process = Process::Death,
                                                         bool use_perturbed = false);

struct PoissonFit {
  ExperimentReport mean;
  double variance = 0.0;
  double target_variance = 0.0;
  double chi_square = 0.0;
  double p_value = 0.0;
  std::vector<std::size_t> observed;  // bins 0, 1, 2, >= 3
  std::vector<double> expected;
  bool pass() const { return mean.pass && p_value > 0.01; }
};

/// Counts in (c, inf) against Poisson(e^{-c}). Requires at least 100
/// trials.
PoissonFit poisson_gof(const TrialBatch& batch, double c, Process process = Process::Death, bool use_perturbed = false);

struct GapRow {
  std::size_t n;
  double mean_gap;
  double standard_error;
};

/// E|beta_{d-1} - N_{d-1}| of U_{n,d}(p_n): beta_{d-1} counts deaths above
/// p_n, N_{d-1} counts isolated (d-1)-faces.
std::vector<GapRow> betti_isolated_gap(const std::vector<std::size_t>& n_list, int d, double c, std::size_t trials,
                                       std::uint64_t seed);

/// Gaps are non-increasing within 2 standard errors.
bool gap_non_increasing(const std::vector<GapRow>& rows);

struct FriezeResult {
  ExperimentReport report;
  double max_identity_residual = 0.0;  // |w(M) - sum of H_0 deaths| per trial
};

/// Mean MST weight of the uniformly weighted complete graph against
/// zeta(3); passes within 0.05 and within 3 standard errors.
FriezeResult frieze_lifetime_experiment(std::size_t n, std::size_t trials, std::uint64_t seed);

struct GrowthRow {
  std::size_t n;
  double mean_lifetime;
  double standard_error;
  double ratio;  // mean / n^{d-1}
};

struct GrowthResult {
  std::vector<GrowthRow> rows;
  double spread = 0.0;  // max ratio / min ratio
  double band = 3.0;
  bool pass = false;
};

GrowthResult growth_rate_experiment(const std::vector<std::size_t>& n_list, int d, std::size_t trials,
                                    std::uint64_t seed, double band = 3.0,
                                    const std::optional<NoiseModel>& noise = std::nullopt);

struct PerturbationRow {
  std::size_t n;
  double mean_scaled_noise;   // mean of n ||eps||_inf
  std::size_t clamped = 0;    // total floored weights
  double bound_hold_rate;     // fraction of trials with the bottleneck bound
  PoissonFit nearest;
  PoissonFit death;
  PoissonFit msa;
};

PerturbationRow perturbation_row(const TrialBatch& batch, double c);

std::vector<PerturbationRow> perturbation_convergence_experiment(const std::vector<std::size_t>& n_list, int d,
                                                                 const NoiseModel& noise, double c,
                                                                 std::size_t trials, std::uint64_t seed);

}  // namespace acyclekit
