#include "acyclekit/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "acyclekit/error.hpp"

namespace acyclekit {

namespace {

constexpr std::uint64_t kWeightStream = 0;
constexpr std::uint64_t kNoiseStream = 1;
constexpr std::uint64_t kNoiseAuxStream = 2;
constexpr std::uint64_t kTrialStream = 0x7472'6961'6c73ULL;

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_model(std::size_t n, int d) {
  if (d < 0) throw PreconditionError("model dimension must be >= 0");
  if (n < static_cast<std::size_t>(d) + 1)
    throw PreconditionError("need n >= d + 1 (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
}

double log_factorial(int d) { return std::lgamma(static_cast<double>(d) + 1.0); }

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix(mix(mix(seed) ^ stream) ^ index);
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return (static_cast<double>(counter_hash(seed, stream, index) >> 11) + 0.5) * 0x1.0p-53;
}

double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  double u1 = counter_uniform(seed, stream, index);
  double u2 = counter_uniform(seed, stream + kNoiseAuxStream, index);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return counter_hash(master, kTrialStream, trial);
}

WeightedFiltration uniform_filtration(const SimplicialComplex& k, int d, std::uint64_t seed) {
  FaceWeights w(static_cast<std::size_t>(k.dim() + 1));
  for (int j = 0; j <= k.dim(); ++j) w[j].assign(k.count(j), 0.0);
  if (d >= 0 && d <= k.dim())
    for (FaceIndex i = 0; i < k.count(d); ++i) w[d][i] = counter_uniform(seed, kWeightStream, i);
  return WeightedFiltration::build(k, std::move(w));
}

WeightedComplex gen_uniform_complex(const UniformModelParams& params) {
  check_model(params.n, params.d);
  auto k = complete_skeleton(params.n, params.d);
  auto wf = uniform_filtration(k, params.d, params.seed);
  return {std::move(k), std::move(wf)};
}

BaseDistribution BaseDistribution::uniform() {
  return {"uniform", [](double x) { return std::clamp(x, 0.0, 1.0); }, [](double u) { return u; }, 1.0};
}

BaseDistribution BaseDistribution::exponential() {
  return {"exponential", [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); },
          [](double u) { return -std::log1p(-u); }, 1.0};
}

void validate_distribution(const BaseDistribution& f) {
  if (!f.cdf || !f.inverse_cdf) throw ValidationError("distribution needs both a CDF and its inverse");
  if (!(f.lipschitz > 0.0)) throw ValidationError("distribution Lipschitz constant must be positive");
  double prev_x = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < 100; ++i) {
    double u = i / 100.0;
    double x = f.inverse_cdf(u);
    if (!std::isfinite(x) || !(x > prev_x))
      throw ValidationError("distribution " + f.name + " is not strictly increasing");
    if (std::abs(f.cdf(x) - u) > 1e-9) throw ValidationError("distribution " + f.name + ": CDF does not invert");
    prev_x = x;
  }
}

std::string noise_name(const NoiseModel& noise) {
  struct {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(const IidScaledNoise& n) const {
      return n.law == NoiseLaw::Uniform ? "iid_uniform" : "iid_normal";
    }
    std::string operator()(const SharedShiftNoise&) const { return "shared_shift"; }
    std::string operator()(const CustomNoise&) const { return "custom"; }
  } visitor;
  return std::visit(visitor, noise);
}

PerturbedFiltrations perturbed_filtrations(const SimplicialComplex& k, const PerturbedModelParams& params) {
  validate_distribution(params.base);
  const int d = params.d;
  const std::size_t n = params.n;
  FaceWeights base(static_cast<std::size_t>(k.dim() + 1));
  for (int j = 0; j <= k.dim(); ++j) base[j].assign(k.count(j), 0.0);
  if (d < 0 || d > k.dim()) throw PreconditionError("model dimension exceeds the complex");
  for (FaceIndex i = 0; i < k.count(d); ++i)
    base[d][i] = params.base.inverse_cdf(counter_uniform(params.seed, kWeightStream, i));

  FaceWeights perturbed = base;
  PerturbationDiagnostics diag;
  double a_n = 1.0;
  if (auto* iid = std::get_if<IidScaledNoise>(&params.noise)) {
    if (n < 2) throw PreconditionError("scaled noise needs n >= 2");
    double ln = std::log(static_cast<double>(n));
    a_n = iid->a_n.value_or(static_cast<double>(n) * ln * ln);
    if (!(a_n > 0.0)) throw ValidationError("noise scale a_n must be positive");
  }
  for (FaceIndex i = 0; i < k.count(d); ++i) {
    double eps = 0.0;
    if (auto* iid = std::get_if<IidScaledNoise>(&params.noise)) {
      double psi = iid->law == NoiseLaw::Uniform ? 2.0 * counter_uniform(params.seed, kNoiseStream, i) - 1.0
                                                 : counter_normal(params.seed, kNoiseStream, i);
      eps = psi / a_n;
    } else if (auto* shift = std::get_if<SharedShiftNoise>(&params.noise)) {
      eps = shift->shift;
    } else if (auto* custom = std::get_if<CustomNoise>(&params.noise)) {
      eps = custom->noise(k.face(d, i), i, params.seed);
    }
    double w = base[d][i] + eps;
    if (w < kPerturbationFloor) {
      w = kPerturbationFloor;
      ++diag.clamped;
    }
    perturbed[d][i] = w;
    double applied = std::abs(w - base[d][i]);
    diag.sup_norm = std::max(diag.sup_norm, applied);
    diag.l1_norm += applied;
  }
  return {WeightedFiltration::build(k, std::move(base)), WeightedFiltration::build(k, std::move(perturbed)), diag};
}

PerturbedComplex gen_perturbed_complex(const PerturbedModelParams& params) {
  check_model(params.n, params.d);
  auto k = complete_skeleton(params.n, params.d);
  auto f = perturbed_filtrations(k, params);
  return {std::move(k), std::move(f)};
}

PointMeasure nearest_face_distances(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  if (d < 1) throw PreconditionError("nearest-face distances need d >= 1");
  std::vector<double> least(k.count(d - 1), std::numeric_limits<double>::infinity());
  for (FaceIndex i = 0; i < k.count(d); ++i) {
    double w = wf.weight(d, i);
    for (FaceIndex f : k.facets(d, i)) least[f] = std::min(least[f], w);
  }
  for (FaceIndex f = 0; f < least.size(); ++f)
    if (std::isinf(least[f]))
      throw PreconditionError("face " + k.face(d - 1, f).to_string() + " has no coface");
  return PointMeasure(std::move(least));
}

PointMeasure scale_point_set(const PointMeasure& points, std::size_t n, int d,
                             const std::function<double(double)>& cdf) {
  if (n < 2) throw PreconditionError("scaling needs n >= 2");
  const double nn = static_cast<double>(n);
  const double shift = d * std::log(nn) - log_factorial(d);
  std::vector<double> out;
  out.reserve(points.size());
  for (double x : points.points()) out.push_back(nn * (cdf ? cdf(x) : x) - shift);
  return PointMeasure(std::move(out));
}

double critical_probability(std::size_t n, int d, double c) {
  const double nn = static_cast<double>(n);
  return (d * std::log(nn) + c - log_factorial(d)) / nn;
}

}  // namespace acyclekit
