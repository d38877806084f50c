#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "acyclekit/complex.hpp"
#include "acyclekit/filtration.hpp"
#include "acyclekit/stability.hpp"

namespace acyclekit {

/// SplitMix64 finalizer over (seed, stream, index). Every random value in
/// the models is a pure function of its coordinates, so faces and trials
/// can be generated in any order or in parallel.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform in the open interval (0, 1).
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Standard normal by Box-Muller on two counter draws.
double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Seed of trial t under a master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

struct UniformModelParams {
  std::size_t n = 0;
  int d = 1;
  std::uint64_t seed = 0;
};

/// Faces below dimension d get weight 0; d-faces get i.i.d. uniform(0,1)
/// weights. k must be the complete d-skeleton.
WeightedFiltration uniform_filtration(const SimplicialComplex& k, int d, std::uint64_t seed);

/// Complete d-skeleton on n vertices with uniform top weights. Throws
/// PreconditionError when n < d + 1.
WeightedComplex gen_uniform_complex(const UniformModelParams& params);

/// Base law of the perturbed model: a strictly increasing CDF with its
/// inverse and a Lipschitz constant valid on the support.
struct BaseDistribution {
  std::string name;
  std::function<double(double)> cdf;
  std::function<double(double)> inverse_cdf;
  double lipschitz = 1.0;

  static BaseDistribution uniform();
  static BaseDistribution exponential();
};

/// Spot checks that the CDF is strictly increasing and inverts. Throws
/// ValidationError otherwise.
void validate_distribution(const BaseDistribution& f);

enum class NoiseLaw { Uniform, Normal };

/// eps(sigma) = psi(sigma) / a_n with psi i.i.d.; a_n defaults to n (log n)^2.
struct IidScaledNoise {
  NoiseLaw law = NoiseLaw::Uniform;
  std::optional<double> a_n;
};

/// eps(sigma) = c for every d-face.
struct SharedShiftNoise {
  double shift = 0.0;
};

/// Arbitrary per-face noise from (face, face index, seed).
struct CustomNoise {
  std::function<double(const Face&, FaceIndex, std::uint64_t)> noise;
};

using NoiseModel = std::variant<std::monostate, IidScaledNoise, SharedShiftNoise, CustomNoise>;

std::string noise_name(const NoiseModel& noise);

/// Perturbed weights are floored here so they stay above the lower faces.
inline constexpr double kPerturbationFloor = 1e-12;

struct PerturbedModelParams {
  std::size_t n = 0;
  int d = 1;
  std::uint64_t seed = 0;
  BaseDistribution base = BaseDistribution::uniform();
  NoiseModel noise;
};

/// Norms of the noise actually applied (after flooring).
struct PerturbationDiagnostics {
  double sup_norm = 0.0;
  double l1_norm = 0.0;
  std::size_t clamped = 0;
};

/// Base and perturbed weights on the same complex.
struct PerturbedFiltrations {
  WeightedFiltration base;
  WeightedFiltration perturbed;
  PerturbationDiagnostics diagnostics;
};

/// Base d-weights are F^{-1}(U) for the same uniforms as
/// uniform_filtration, so with the uniform law the base filtration equals
/// the unperturbed model.
PerturbedFiltrations perturbed_filtrations(const SimplicialComplex& k, const PerturbedModelParams& params);

struct PerturbedComplex {
  SimplicialComplex complex;
  PerturbedFiltrations filtrations;
};

PerturbedComplex gen_perturbed_complex(const PerturbedModelParams& params);

/// C(sigma) = least coface weight, one point per (d-1)-face. Throws
/// PreconditionError if some (d-1)-face has no coface.
PointMeasure nearest_face_distances(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

/// x -> n F(x) - d log n + log d!, with F the identity when absent.
/// Requires n >= 2.
PointMeasure scale_point_set(const PointMeasure& points, std::size_t n, int d,
                             const std::function<double(double)>& cdf = {});

/// p_n = (d log n + c - log d!) / n.
double critical_probability(std::size_t n, int d, double c);

}  // namespace acyclekit
