#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "acyclekit/error.hpp"
#include "acyclekit/random_models.hpp"
#include "acyclekit/stability.hpp"
#include "support/generators.hpp"

using namespace acyclekit;
using acyclekit::testing::Rng;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Minimum over all bijections, by permutation search.
double all_bijections(const std::vector<double>& a, const std::vector<double>& b, double p) {
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      double diff = std::abs(a[i] - b[perm[i]]);
      if (std::isinf(p)) cost = std::max(cost, diff);
      else if (p == 0.0) cost += diff != 0.0 ? 1.0 : 0.0;
      else cost += std::pow(diff, p);
    }
    best = std::min(best, cost);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

PointMeasure pm(std::vector<double> v) { return PointMeasure(std::move(v)); }

}  // namespace

TEST_CASE("point measures") {
  auto m = pm({3, 1, 2, 2});
  CHECK(m.size() == 4);
  CHECK(m.points()[0] == 1);
  CHECK(m.count_in(1, 3) == 2);
  CHECK(m.count_in(0, kInf) == 4);
  CHECK(m.count_in(2, 2) == 0);
  CHECK(m.includes(pm({2, 2, 3})));
  CHECK_FALSE(m.includes(pm({3, 3})));
  CHECK(m.integrate([](double x) { return x; }) == 8);
  CHECK_THROWS_AS(pm({kInf}), ValidationError);
  CHECK_THROWS_AS(pm({std::nan("")}), ValidationError);
}

TEST_CASE("matching distance examples") {
  for (double p : {0.0, 1.0, 2.0, kSupNorm}) CHECK(lp_matching_distance(pm({1, 2}), pm({2, 1}), p) == 0);
  CHECK(lp_matching_distance(pm({0, 1}), pm({0.5, 1.5}), 1) == doctest::Approx(1.0));
  CHECK(lp_matching_distance(pm({0, 1}), pm({0.5, 1.5}), kSupNorm) == doctest::Approx(0.5));
  CHECK(std::isinf(lp_matching_distance(pm({0, 1}), pm({0, 1, 2}), 1)));
  CHECK(lp_matching_distance(pm({0, 1, 1, 4}), pm({1, 4, 5, 6}), 0) == 2);
  CHECK_THROWS_AS(lp_matching_distance(pm({0}), pm({1}), 0.5), ValidationError);
  CHECK_THROWS_AS(lp_matching_distance(pm({0}), pm({1}), -1), ValidationError);
}

TEST_CASE("bottleneck examples") {
  CHECK(bottleneck_distance(pm({0}), pm({1})) == 1);
  CHECK(bottleneck_distance(pm({4, 5, 5}), pm({5, 4, 5})) == 0);
  CHECK(bottleneck_distance(pm({0, 10}), pm({1, 9})) == 1);
  CHECK(std::isinf(bottleneck_distance(pm({}), pm({1}))));
  CHECK(bottleneck_distance(pm({}), pm({})) == 0);
}

TEST_CASE("sorted matching is optimal among all bijections") {
  Rng rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = rng.below(7);
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = static_cast<double>(rng.below(5)) + (rng.coin() ? rng.uniform() : 0.0);
    for (auto& x : b) x = static_cast<double>(rng.below(5)) + (rng.coin() ? rng.uniform() : 0.0);
    for (double p : {0.0, 1.0, 2.0, kSupNorm})
      CHECK(lp_matching_distance(pm(a), pm(b), p) == doctest::Approx(all_bijections(a, b, p)));
  }
}

TEST_CASE("vague test intervals follow the fixed enumeration") {
  auto eq = [](TestInterval iv, double lo, double hi) { return iv.lo == lo && iv.hi == hi; };
  CHECK(eq(vague_interval(1), 0.0, 0.5));
  CHECK(eq(vague_interval(2), -0.5, 0.0));
  CHECK(eq(vague_interval(3), 0.0, 1.0));
  CHECK(eq(vague_interval(4), -0.5, 0.5));
  CHECK_THROWS_AS(vague_interval(0), PreconditionError);
  for (std::size_t j = 1; j < 200; ++j) {
    auto iv = vague_interval(j);
    CHECK(iv.lo < iv.hi);
    CHECK(std::fmod(iv.lo * 2, 1.0) == 0.0);
  }
  TestInterval unit{0, 1};
  CHECK(vague_test_function(unit, 0.5) == 1);
  CHECK(vague_test_function(unit, 1.125) == doctest::Approx(0.5));
  CHECK(vague_test_function(unit, -0.25) == 0);
  CHECK(vague_test_function(unit, 2) == 0);
}

TEST_CASE("vague metric") {
  CHECK(vague_metric(pm({1, 2}), pm({1, 2}), 20) == 0);
  CHECK(vague_metric(pm({}), pm({}), 20) == 0);
  CHECK(vague_metric(pm({0, 0, 0, 0, 0}), pm({}), 60) < 1);
  CHECK(vague_metric(pm({0.1}), pm({}), 10) > 0);
  CHECK_THROWS_AS(vague_metric(pm({}), pm({}), 0), PreconditionError);
}

TEST_CASE("vague metric is bounded by the bottleneck distance") {
  Rng rng(73);
  const std::size_t J = 40;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.below(8);
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = 6.0 * rng.uniform() - 3.0;
      b[i] = a[i] + (rng.uniform() - 0.5) * 0.4 * rng.uniform();
    }
    auto A = pm(a), B = pm(b);
    double db = bottleneck_distance(A, B);
    REQUIRE(db < 1.0);
    // Points of A within distance 1 of the hull of both supports: all of them.
    double bound = 2.0 * kVagueLipschitz * static_cast<double>(A.size()) * db + std::ldexp(1.0, -static_cast<int>(J));
    CHECK(vague_metric(A, B, J) <= bound);
  }
}

TEST_CASE("capped bottleneck distance is a metric on random triples") {
  Rng rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng.below(5);
    auto draw = [&] {
      std::vector<double> v(rng.coin(0.9) ? n : n + 1);
      for (auto& x : v) x = rng.uniform() * 3;
      return pm(v);
    };
    auto a = draw(), b = draw(), c = draw();
    auto d = [](const PointMeasure& x, const PointMeasure& y) { return std::min(bottleneck_distance(x, y), 1.0); };
    CHECK(d(a, b) == d(b, a));
    CHECK(d(a, a) == 0);
    CHECK(d(a, c) <= d(a, b) + d(b, c) + 1e-12);
  }
}

TEST_CASE("weight perturbation norms") {
  FaceWeights f{{0, 0}, {1.0, 2.0, 3.0}}, g{{0, 0}, {1.5, 2.0, 1.0}};
  CHECK(weight_perturbation_norm(f, g, 1, 0) == 2);
  CHECK(weight_perturbation_norm(f, g, 1, 1) == doctest::Approx(2.5));
  CHECK(weight_perturbation_norm(f, g, 1, 2) == doctest::Approx(4.25));
  CHECK(weight_perturbation_norm(f, g, 1, kSupNorm) == doctest::Approx(2.0));
}

TEST_CASE("stability check") {
  auto k = complete_skeleton(7, 2);
  Rng rng(83);
  auto f = acyclekit::testing::top_uniform_weights(rng, k, 2);
  for (double p : {0.0, 1.0, 2.0, kSupNorm}) {
    auto r = stability_check(k, f, f, 2, p);
    CHECK(r.lhs_death == 0);
    CHECK(r.lhs_birth == 0);
    CHECK(r.rhs == 0);
  }
  auto bad = f;
  bad[0][0] = 2.0;
  CHECK_THROWS_AS(stability_check(k, f, bad, 2, 1), ValidationError);

  for (int trial = 0; trial < 100; ++trial) {
    auto g = f;
    for (auto& w : g[2])
      if (rng.coin(0.2)) w = rng.uniform();
    for (double p : {0.0, 1.0, 2.0, kSupNorm}) CHECK(stability_check(k, f, g, 2, p).holds());
    auto h = acyclekit::testing::top_uniform_weights(rng, k, 2);
    for (double p : {0.0, 1.0, 2.0, kSupNorm}) CHECK(stability_check(k, f, h, 2, p).holds());
  }
}

TEST_CASE("single-face perturbation moves at most two faces") {
  auto k = complete_skeleton(7, 2);
  Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = acyclekit::testing::top_uniform_weights(rng, k, 2);
    auto face = static_cast<FaceIndex>(rng.below(k.count(2)));
    double c = rng.uniform();
    auto r = single_face_perturbation(k, f, 2, face, c);
    CHECK((r.symmetric_difference == 0 || r.symmetric_difference == 2));
    CHECK(r.moved_weight <= r.shift + 1e-15);
    CHECK(r.shift == std::abs(c - f[2][face]));
  }
}
