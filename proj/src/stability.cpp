#include "acyclekit/stability.hpp"

#include <algorithm>
#include <cmath>

#include "acyclekit/error.hpp"
#include "acyclekit/persistence.hpp"
#include "acyclekit/spanning_acycle.hpp"

namespace acyclekit {

namespace {

void check_exponent(double p) {
  if (std::isnan(p) || p < 0.0 || (p > 0.0 && p < 1.0))
    throw ValidationError("matching exponent p must be 0, >= 1 or inf");
}

// Accumulates |x|^p terms under the 0^0 = 0 convention.
class PowerSum {
 public:
  explicit PowerSum(double p) : p_(p) {}
  void add(double diff) {
    diff = std::abs(diff);
    if (std::isinf(p_)) {
      total_ = std::max(total_, diff);
    } else if (p_ == 0.0) {
      if (diff != 0.0) total_ += 1.0;
    } else if (p_ == 1.0) {
      total_ += diff;
    } else {
      total_ += std::pow(diff, p_);
    }
  }
  double value() const { return total_; }

 private:
  double p_;
  double total_ = 0.0;
};

}  // namespace

PointMeasure::PointMeasure(std::vector<double> points) : points_(std::move(points)) {
  for (double x : points_)
    if (!std::isfinite(x)) throw ValidationError("point measures hold finite reals only");
  std::sort(points_.begin(), points_.end());
}

std::size_t PointMeasure::count_in(double lo, double hi) const {
  if (!(lo < hi)) return 0;
  auto first = std::upper_bound(points_.begin(), points_.end(), lo);
  auto last = std::lower_bound(points_.begin(), points_.end(), hi);
  return first < last ? static_cast<std::size_t>(last - first) : 0;
}

double PointMeasure::integrate(const std::function<double(double)>& h) const {
  double s = 0.0;
  for (double x : points_) s += h(x);
  return s;
}

bool PointMeasure::includes(const PointMeasure& sub) const {
  return std::includes(points_.begin(), points_.end(), sub.points_.begin(), sub.points_.end());
}

double lp_matching_distance(const PointMeasure& a, const PointMeasure& b, double p) {
  check_exponent(p);
  if (a.size() != b.size()) return kInfinity;
  auto pa = a.points();
  auto pb = b.points();
  if (p == 0.0) {
    // Unmatched points after pairing equal values.
    std::size_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
      if (pa[i] == pb[j]) {
        ++common, ++i, ++j;
      } else if (pa[i] < pb[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    return static_cast<double>(pa.size() - common);
  }
  PowerSum sum(p);
  for (std::size_t i = 0; i < pa.size(); ++i) sum.add(pa[i] - pb[i]);
  return sum.value();
}

double bottleneck_distance(const PointMeasure& a, const PointMeasure& b) {
  return lp_matching_distance(a, b, kSupNorm);
}

TestInterval vague_interval(std::size_t j) {
  if (j == 0) throw PreconditionError("test functions are numbered from 1");
  // Endpoint i runs through 0, 1/2, -1/2, 1, -1, 3/2, ...; pairs (i, k) are
  // walked along anti-diagonals and kept when the endpoints are increasing.
  auto endpoint = [](std::size_t i) {
    double mag = 0.5 * static_cast<double>((i + 1) / 2);
    return i % 2 == 1 ? mag : -mag;
  };
  std::size_t seen = 0;
  for (std::size_t s = 0;; ++s) {
    for (std::size_t i = 0; i <= s; ++i) {
      double lo = endpoint(i), hi = endpoint(s - i);
      if (lo < hi && ++seen == j) return {lo, hi};
    }
  }
}

double vague_test_function(const TestInterval& iv, double x) {
  const double flank = 1.0 / kVagueLipschitz;
  if (x >= iv.lo && x <= iv.hi) return 1.0;
  double gap = x < iv.lo ? iv.lo - x : x - iv.hi;
  return gap >= flank ? 0.0 : 1.0 - gap / flank;
}

double vague_metric(const PointMeasure& a, const PointMeasure& b, std::size_t truncation) {
  if (truncation < 1) throw PreconditionError("vague metric truncation must be >= 1");
  double total = 0.0;
  double scale = 1.0;
  for (std::size_t j = 1; j <= truncation; ++j) {
    scale *= 0.5;
    TestInterval iv = vague_interval(j);
    auto h = [&](double x) { return vague_test_function(iv, x); };
    total += (1.0 - std::exp(-std::abs(a.integrate(h) - b.integrate(h)))) * scale;
  }
  return total;
}

double weight_perturbation_norm(const FaceWeights& f, const FaceWeights& g, int d, double p) {
  check_exponent(p);
  if (d < 0 || static_cast<std::size_t>(d) >= f.size() || f.size() != g.size() || f[d].size() != g[d].size())
    throw ValidationError("weight vectors do not describe the same d-faces");
  PowerSum sum(p);
  for (std::size_t i = 0; i < f[d].size(); ++i) sum.add(f[d][i] - g[d][i]);
  return sum.value();
}

bool StabilityResult::holds() const {
  const double slack = 1e-9 * (1.0 + std::abs(rhs));
  return std::max(lhs_death, lhs_birth) <= rhs + slack;
}

StabilityResult stability_check(const SimplicialComplex& k, const FaceWeights& f, const FaceWeights& g, int d,
                                double p) {
  auto wf = WeightedFiltration::build(k, f);
  auto wg = WeightedFiltration::build(k, g);
  auto mf = run_incremental(k, wf);
  auto mg = run_incremental(k, wg);
  StabilityResult r{};
  r.lhs_death = lp_matching_distance(PointMeasure(mf.deaths(d - 1)), PointMeasure(mg.deaths(d - 1)), p);
  r.lhs_birth = lp_matching_distance(PointMeasure(mf.births(d)), PointMeasure(mg.births(d)), p);
  r.rhs = weight_perturbation_norm(f, g, d, p);
  return r;
}

SingleFacePerturbation single_face_perturbation(const SimplicialComplex& k, const FaceWeights& f, int d,
                                                FaceIndex face, double new_weight) {
  FaceWeights g = f;
  if (d < 0 || static_cast<std::size_t>(d) >= g.size() || face >= g[d].size())
    throw PreconditionError("no such d-face to perturb");
  g[d][face] = new_weight;
  auto before = kruskal_msa(k, WeightedFiltration::build(k, f), d);
  auto after = kruskal_msa(k, WeightedFiltration::build(k, g), d);
  auto a = before.sorted_indices();
  auto b = after.sorted_indices();
  std::vector<FaceIndex> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return {diff.size(), bottleneck_distance(PointMeasure(before.weights), PointMeasure(after.weights)),
          std::abs(new_weight - f[d][face])};
}

}  // namespace acyclekit
