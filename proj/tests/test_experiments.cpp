#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "acyclekit/error.hpp"
#include "acyclekit/experiments.hpp"

using namespace acyclekit;

namespace {

bool same_measure(const PointMeasure& a, const PointMeasure& b) { return a == b; }

bool same_batch(const TrialBatch& a, const TrialBatch& b) {
  if (a.trials.size() != b.trials.size()) return false;
  for (std::size_t t = 0; t < a.trials.size(); ++t) {
    const auto& x = a.trials[t];
    const auto& y = b.trials[t];
    if (x.seed != y.seed || !same_measure(x.base.death, y.base.death) || !same_measure(x.base.msa, y.base.msa) ||
        !same_measure(x.base.nearest, y.base.nearest) || x.base.msa_weight != y.base.msa_weight)
      return false;
    if (x.perturbed.has_value() != y.perturbed.has_value()) return false;
    if (x.perturbed && !same_measure(x.perturbed->sample.death, y.perturbed->sample.death)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("mean, standard error and reports") {
  auto [m, se] = mean_and_se({1, 2, 3, 4});
  CHECK(m == 2.5);
  CHECK(se == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  auto r = make_report("x", {1, 2, 3, 4}, 2.0);
  CHECK(r.tolerance == doctest::Approx(3 * se));
  CHECK(r.pass);
  CHECK_FALSE(make_report("x", {1, 2, 3, 4}, 2.0, 0.1).pass);
  CHECK(make_report("x", {1, 1, 1}, 1.0).pass);
}

TEST_CASE("exponential mass") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(exponential_mass({{0, inf}}) == doctest::Approx(1.0));
  CHECK(exponential_mass({{1, 2}}) == doctest::Approx(std::exp(-1.0) - std::exp(-2.0)));
  CHECK(exponential_mass({{0, inf}, {1, 2}}) == doctest::Approx(1.0 + std::exp(-1.0) - std::exp(-2.0)));
  CHECK(exponential_mass({{-1, 0}}) == doctest::Approx(std::exp(1.0) - 1.0));
}

TEST_CASE("batch identities hold and results ignore the thread count") {
  BatchParams p;
  p.n = 12;
  p.d = 2;
  p.trials = 24;
  p.seed = 5;
  p.noise = NoiseModel{IidScaledNoise{}};
  setenv("ACYCLEKIT_THREADS", "1", 1);
  auto serial = run_batch(p);
  setenv("ACYCLEKIT_THREADS", "4", 1);
  auto parallel = run_batch(p);
  unsetenv("ACYCLEKIT_THREADS");
  CHECK(same_batch(serial, parallel));
  CHECK(serial.identities_hold());
  for (const auto& t : serial.trials) {
    CHECK(t.distinct_weights);
    CHECK(t.base.death.size() == binomial(11, 2));
    REQUIRE(t.perturbed.has_value());
    CHECK(t.perturbed->death_bottleneck <= t.perturbed->bottleneck_bound + 1e-9);
  }
  CHECK(serial.trials[0].seed == trial_seed(5, 0));

  p.seed = 6;
  CHECK_FALSE(same_batch(serial, run_batch(p)));
}

TEST_CASE("batch preconditions") {
  BatchParams p;
  p.n = 3;
  p.d = 2;
  p.trials = 1;
  CHECK_THROWS_AS(run_batch(p), PreconditionError);
  p.n = 10;
  p.d = 0;
  CHECK_THROWS_AS(run_batch(p), PreconditionError);
  p.d = 1;
  p.trials = 10;
  auto small = run_batch(p);
  CHECK_THROWS_AS(estimate_factorial_moments(small, {{0, 1}}, 1), PreconditionError);
  CHECK_THROWS_AS(poisson_gof(small, 0.0), PreconditionError);
  p.trials = 100;
  auto plain = run_batch(p);
  CHECK_THROWS_AS(poisson_gof(plain, 0.0, Process::Death, true), PreconditionError);
}

TEST_CASE("factorial moments and Poisson fit on a graph batch") {
  BatchParams p;
  p.n = 150;
  p.d = 1;
  p.trials = 200;
  p.seed = 17;
  auto batch = run_batch(p);
  const double inf = std::numeric_limits<double>::infinity();
  auto moments = estimate_factorial_moments(batch, {{0, inf}, {1, 2}}, 2);
  REQUIRE(moments.size() == 2);
  double lam = 1.0 + std::exp(-1.0) - std::exp(-2.0);
  CHECK(moments[0].target == doctest::Approx(lam));
  CHECK(moments[1].target == doctest::Approx(lam * lam));
  for (const auto& m : moments) CHECK(m.pass);

  auto fit = poisson_gof(batch, 0.0);
  CHECK(fit.mean.target == doctest::Approx(1.0));
  CHECK(fit.target_variance == doctest::Approx(1.0));
  CHECK(fit.observed.size() == 4);
  std::size_t total = 0;
  for (auto o : fit.observed) total += o;
  CHECK(total == 200);
  double expected = 0;
  for (double e : fit.expected) expected += e;
  CHECK(expected == doctest::Approx(200.0));
  CHECK(fit.pass());
  for (auto proc : {Process::Nearest, Process::Msa}) CHECK(poisson_gof(batch, 0.0, proc).mean.pass);
}

TEST_CASE("gap, growth and Frieze experiments run on small inputs") {
  auto rows = betti_isolated_gap({20, 40}, 1, 0.0, 40, 3);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) CHECK(r.mean_gap >= 0);
  CHECK(gap_non_increasing({{10, 0.5, 0.01}, {20, 0.3, 0.01}, {30, 0.31, 0.01}}));
  CHECK_FALSE(gap_non_increasing({{10, 0.2, 0.01}, {20, 0.5, 0.01}}));

  auto growth = growth_rate_experiment({6, 8}, 2, 10, 4);
  REQUIRE(growth.rows.size() == 2);
  CHECK(growth.spread >= 1.0);
  CHECK(growth.rows[0].ratio == doctest::Approx(growth.rows[0].mean_lifetime / 6.0));
  CHECK_THROWS_AS(growth_rate_experiment({6}, 1, 10, 4), PreconditionError);

  auto fz = frieze_lifetime_experiment(40, 30, 8);
  CHECK(fz.max_identity_residual < 1e-9);
  CHECK(fz.report.target == doctest::Approx(kZeta3));
}

TEST_CASE("perturbation rows") {
  BatchParams p;
  p.n = 80;
  p.d = 1;
  p.trials = 100;
  p.seed = 23;
  p.noise = NoiseModel{IidScaledNoise{}};
  auto batch = run_batch(p);
  auto row = perturbation_row(batch, 0.0);
  CHECK(row.n == 80);
  CHECK(row.bound_hold_rate == 1.0);
  CHECK(row.mean_scaled_noise <= 1.0 / std::pow(std::log(80.0), 2));
}
