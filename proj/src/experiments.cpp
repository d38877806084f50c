#include "acyclekit/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "acyclekit/error.hpp"
#include "acyclekit/persistence.hpp"
#include "acyclekit/spanning_acycle.hpp"

namespace acyclekit {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
  const std::size_t workers = std::min(trial_threads(), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers <= 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

struct RawSample {
  ProcessSample scaled;
  std::vector<double> deaths;
  std::vector<double> msa;
  PointMeasure nearest;
};

RawSample sample_processes(const SimplicialComplex& k, const WeightedFiltration& wf, const BatchParams& p) {
  RawSample r;
  r.deaths = death_times(k, wf, p.d - 1);
  auto msa = kruskal_msa(k, wf, p.d);
  r.msa = msa.sorted_weights();
  r.nearest = nearest_face_distances(k, wf, p.d);
  PointMeasure deaths(r.deaths);
  r.scaled.nearest = scale_point_set(r.nearest, p.n, p.d, p.base.cdf);
  r.scaled.death = scale_point_set(deaths, p.n, p.d, p.base.cdf);
  r.scaled.msa = scale_point_set(PointMeasure(r.msa), p.n, p.d, p.base.cdf);
  r.scaled.msa_weight = msa.total_weight;
  auto sorted = deaths.points();
  r.scaled.death_total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
  return r;
}

const PointMeasure& pick(const TrialRecord& t, Process p, bool perturbed) {
  if (!perturbed) return t.base.get(p);
  if (!t.perturbed) throw PreconditionError("batch was run without a perturbation");
  return t.perturbed->sample.get(p);
}

std::vector<double> counts_above(const TrialBatch& batch, double c, Process p, bool perturbed) {
  std::vector<double> out;
  out.reserve(batch.trials.size());
  for (const auto& t : batch.trials)
    out.push_back(static_cast<double>(pick(t, p, perturbed).count_in(c, kInfinity)));
  return out;
}

}  // namespace

std::size_t trial_threads() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ACYCLEKIT_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

const char* process_name(Process p) {
  switch (p) {
    case Process::Nearest: return "nearest";
    case Process::Death: return "death";
    case Process::Msa: return "msa";
  }
  return "?";
}

const PointMeasure& ProcessSample::get(Process p) const {
  switch (p) {
    case Process::Nearest: return nearest;
    case Process::Death: return death;
    case Process::Msa: return msa;
  }
  return death;
}

bool TrialBatch::identities_hold() const {
  return std::all_of(trials.begin(), trials.end(), [](const TrialRecord& t) {
    return t.death_equals_msa && t.nearest_within_death && t.distinct_weights;
  });
}

TrialBatch run_batch(const BatchParams& params) {
  if (params.d < 1) throw PreconditionError("experiments need d >= 1");
  if (params.n < static_cast<std::size_t>(params.d) + 2) throw PreconditionError("experiments need n >= d + 2");
  validate_distribution(params.base);
  const SimplicialComplex k = complete_skeleton(params.n, params.d);

  TrialBatch batch{params, std::vector<TrialRecord>(params.trials)};
  parallel_for(params.trials, [&](std::size_t t) {
    TrialRecord& rec = batch.trials[t];
    rec.seed = trial_seed(params.seed, t);
    PerturbedModelParams mp{params.n, params.d, rec.seed, params.base, params.noise.value_or(NoiseModel{})};
    auto filtrations = perturbed_filtrations(k, mp);

    auto weights = filtrations.base.weights()[params.d];
    std::sort(weights.begin(), weights.end());
    rec.distinct_weights = std::adjacent_find(weights.begin(), weights.end()) == weights.end();

    auto raw = sample_processes(k, filtrations.base, params);
    rec.death_equals_msa = raw.deaths == raw.msa;
    // Two (d-1)-faces can share their least coface, so compare distinct values.
    std::vector<double> nearest(raw.nearest.points().begin(), raw.nearest.points().end());
    nearest.erase(std::unique(nearest.begin(), nearest.end()), nearest.end());
    rec.nearest_within_death = std::includes(raw.deaths.begin(), raw.deaths.end(), nearest.begin(), nearest.end());
    rec.base = std::move(raw.scaled);

    if (params.noise) {
      PerturbedTrial pt;
      pt.sample = sample_processes(k, filtrations.perturbed, params).scaled;
      pt.diagnostics = filtrations.diagnostics;
      pt.death_bottleneck = bottleneck_distance(pt.sample.death, rec.base.death);
      pt.bottleneck_bound = params.base.lipschitz * static_cast<double>(params.n) * pt.diagnostics.sup_norm;
      rec.perturbed = std::move(pt);
    }
  });
  return batch;
}

std::pair<double, double> mean_and_se(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(xs.size());
  double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

ExperimentReport make_report(std::string statistic, const std::vector<double>& xs, double target,
                             std::optional<double> tolerance) {
  auto [mean, se] = mean_and_se(xs);
  ExperimentReport r;
  r.statistic = std::move(statistic);
  r.empirical = mean;
  r.target = target;
  r.standard_error = se;
  r.tolerance = tolerance.value_or(3.0 * se);
  r.pass = std::abs(mean - target) <= r.tolerance;
  return r;
}

double exponential_mass(const std::vector<Interval>& intervals) {
  double total = 0.0;
  for (const auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) continue;
    total += std::exp(-iv.lo) - (std::isinf(iv.hi) ? 0.0 : std::exp(-iv.hi));
  }
  return total;
}

std::vector<ExperimentReport> estimate_factorial_moments(const TrialBatch& batch, const std::vector<Interval>& intervals,
                                                         int max_order, Process process, bool use_perturbed) {
  if (batch.trials.size() < 30) throw PreconditionError("factorial moments need at least 30 trials");
  if (max_order < 1) throw PreconditionError("moment order must be >= 1");
  const double mass = exponential_mass(intervals);
  std::vector<ExperimentReport> out;
  for (int l = 1; l <= max_order; ++l) {
    std::vector<double> xs;
    for (const auto& t : batch.trials) {
      const auto& m = pick(t, process, use_perturbed);
      std::size_t count = 0;
      for (const auto& iv : intervals) count += m.count_in(iv.lo, iv.hi);
      double fm = 1.0;
      for (int j = 0; j < l; ++j) fm *= static_cast<double>(count) - j;
      xs.push_back(fm);
    }
    out.push_back(make_report(std::string(process_name(process)) + " factorial moment " + std::to_string(l), xs,
                              std::pow(mass, l)));
  }
  return out;
}

PoissonFit poisson_gof(const TrialBatch& batch, double c, Process process, bool use_perturbed) {
  if (batch.trials.size() < 100) throw PreconditionError("goodness of fit needs at least 100 trials");
  auto counts = counts_above(batch, c, process, use_perturbed);
  const double lambda = std::exp(-c);
  PoissonFit fit;
  fit.mean = make_report(std::string(process_name(process)) + " count mean", counts, lambda);
  const double se = fit.mean.standard_error;
  fit.variance = se * se * static_cast<double>(counts.size());
  fit.target_variance = lambda;

  const double trials = static_cast<double>(counts.size());
  fit.observed.assign(4, 0);
  for (double m : counts) fit.observed[std::min<std::size_t>(static_cast<std::size_t>(m), 3)]++;
  double p0 = std::exp(-lambda);
  double p1 = p0 * lambda;
  double p2 = p1 * lambda / 2.0;
  fit.expected = {trials * p0, trials * p1, trials * p2, trials * std::max(0.0, 1.0 - p0 - p1 - p2)};
  int bins = 0;
  for (std::size_t b = 0; b < 4; ++b) {
    if (fit.expected[b] <= 0.0) continue;
    double diff = static_cast<double>(fit.observed[b]) - fit.expected[b];
    fit.chi_square += diff * diff / fit.expected[b];
    ++bins;
  }
  if (bins >= 2) {
    boost::math::chi_squared dist(bins - 1);
    fit.p_value = boost::math::cdf(boost::math::complement(dist, fit.chi_square));
  } else {
    fit.p_value = 1.0;
  }
  return fit;
}

std::vector<GapRow> betti_isolated_gap(const std::vector<std::size_t>& n_list, int d, double c, std::size_t trials,
                                       std::uint64_t seed) {
  std::vector<GapRow> rows;
  for (std::size_t n : n_list) {
    if (n < static_cast<std::size_t>(d) + 2) throw PreconditionError("gap experiment needs n >= d + 2");
    auto batch = run_batch({n, d, trials, seed, std::nullopt, BaseDistribution::uniform()});
    // On the scaled axis the threshold p_n sits at c.
    std::vector<double> gaps;
    for (const auto& t : batch.trials) {
      double betti = static_cast<double>(t.base.death.count_in(c, kInfinity));
      double isolated = static_cast<double>(t.base.nearest.count_in(c, kInfinity));
      gaps.push_back(std::abs(betti - isolated));
    }
    auto [mean, se] = mean_and_se(gaps);
    rows.push_back({n, mean, se});
  }
  return rows;
}

bool gap_non_increasing(const std::vector<GapRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double band = 2.0 * std::hypot(rows[i - 1].standard_error, rows[i].standard_error);
    if (rows[i].mean_gap > rows[i - 1].mean_gap + band) return false;
  }
  return true;
}

FriezeResult frieze_lifetime_experiment(std::size_t n, std::size_t trials, std::uint64_t seed) {
  auto batch = run_batch({n, 1, trials, seed, std::nullopt, BaseDistribution::uniform()});
  FriezeResult r;
  std::vector<double> lifetimes;
  for (const auto& t : batch.trials) {
    lifetimes.push_back(t.base.msa_weight);
    r.max_identity_residual = std::max(r.max_identity_residual, std::abs(t.base.msa_weight - t.base.death_total));
  }
  r.report = make_report("mst weight", lifetimes, kZeta3, 0.05);
  r.report.pass = r.report.pass && std::abs(r.report.empirical - kZeta3) <= 3.0 * r.report.standard_error;
  return r;
}

GrowthResult growth_rate_experiment(const std::vector<std::size_t>& n_list, int d, std::size_t trials,
                                    std::uint64_t seed, double band, const std::optional<NoiseModel>& noise) {
  if (d < 2) throw PreconditionError("growth experiment needs d >= 2");
  GrowthResult r;
  r.band = band;
  for (std::size_t n : n_list) {
    auto batch = run_batch({n, d, trials, seed, noise, BaseDistribution::uniform()});
    std::vector<double> lifetimes;
    for (const auto& t : batch.trials)
      lifetimes.push_back(t.perturbed ? t.perturbed->sample.msa_weight : t.base.msa_weight);
    auto [mean, se] = mean_and_se(lifetimes);
    r.rows.push_back({n, mean, se, mean / std::pow(static_cast<double>(n), d - 1)});
  }
  if (!r.rows.empty()) {
    auto [lo, hi] = std::minmax_element(r.rows.begin(), r.rows.end(),
                                        [](const GrowthRow& a, const GrowthRow& b) { return a.ratio < b.ratio; });
    r.spread = lo->ratio > 0.0 ? hi->ratio / lo->ratio : kInfinity;
    r.pass = lo->ratio > 0.0 && r.spread <= band;
  }
  return r;
}

PerturbationRow perturbation_row(const TrialBatch& batch, double c) {
  PerturbationRow row{batch.params.n, 0.0, 0, 0.0, poisson_gof(batch, c, Process::Nearest, true),
                      poisson_gof(batch, c, Process::Death, true), poisson_gof(batch, c, Process::Msa, true)};
  std::size_t held = 0;
  std::vector<double> scaled_noise;
  for (const auto& t : batch.trials) {
    const auto& pt = *t.perturbed;
    scaled_noise.push_back(static_cast<double>(batch.params.n) * pt.diagnostics.sup_norm);
    row.clamped += pt.diagnostics.clamped;
    if (pt.death_bottleneck <= pt.bottleneck_bound + 1e-9) ++held;
  }
  row.mean_scaled_noise = mean_and_se(scaled_noise).first;
  row.bound_hold_rate = batch.trials.empty() ? 1.0 : static_cast<double>(held) / batch.trials.size();
  return row;
}

std::vector<PerturbationRow> perturbation_convergence_experiment(const std::vector<std::size_t>& n_list, int d,
                                                                 const NoiseModel& noise, double c,
                                                                 std::size_t trials, std::uint64_t seed) {
  std::vector<PerturbationRow> rows;
  for (std::size_t n : n_list)
    rows.push_back(perturbation_row(run_batch({n, d, trials, seed, noise, BaseDistribution::uniform()}), c));
  return rows;
}

}  // namespace acyclekit
