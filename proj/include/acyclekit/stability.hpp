#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "acyclekit/complex.hpp"
#include "acyclekit/filtration.hpp"

namespace acyclekit {

/// Finite multiset of reals, kept sorted. m(I) counts the points in I.
class PointMeasure {
 public:
  PointMeasure() = default;
  /// Throws ValidationError on NaN or infinite points.
  explicit PointMeasure(std::vector<double> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const double> points() const { return points_; }

  /// Points in the open interval (lo, hi); hi may be +inf.
  std::size_t count_in(double lo, double hi) const;
  /// sum of h over the points.
  double integrate(const std::function<double(double)>& h) const;
  /// Multiset inclusion: every point of sub occurs here at least as often.
  bool includes(const PointMeasure& sub) const;

  friend bool operator==(const PointMeasure&, const PointMeasure&) = default;

 private:
  std::vector<double> points_;
};

/// Value of p standing for the supremum.
inline constexpr double kSupNorm = std::numeric_limits<double>::infinity();

/// Optimal matching cost between equal-size multisets: sum |a_i - b_i|^p
/// over the sorted order for p >= 1, the maximum for p = kSupNorm, and the
/// number of unmatched points for p = 0. Unequal sizes give +inf. Throws
/// ValidationError for p in (0, 1) or p < 0.
double lp_matching_distance(const PointMeasure& a, const PointMeasure& b, double p);

double bottleneck_distance(const PointMeasure& a, const PointMeasure& b);

/// Closed interval [lo, hi] with half-integer endpoints.
struct TestInterval {
  double lo;
  double hi;
};

/// The j-th interval (j >= 1) of the fixed enumeration behind the vague
/// metric.
TestInterval vague_interval(std::size_t j);

/// Lipschitz constant shared by every test function.
inline constexpr double kVagueLipschitz = 4.0;

/// Trapezoid equal to 1 on [lo, hi] and falling linearly to 0 over a
/// flank of width 1/4 on either side.
double vague_test_function(const TestInterval& iv, double x);

/// sum_{j <= J} (1 - exp(-|A(h_j) - B(h_j)|)) / 2^j. Requires J >= 1.
double vague_metric(const PointMeasure& a, const PointMeasure& b, std::size_t truncation);

/// |sum over F^d of |f - g|^p| with the same conventions as
/// lp_matching_distance (p = 0 counts differing faces).
double weight_perturbation_norm(const FaceWeights& f, const FaceWeights& g, int d, double p);

struct StabilityResult {
  double lhs_death;  // distance between D_{d-1} multisets
  double lhs_birth;  // distance between B_d multisets
  double rhs;
  bool holds() const;
};

/// Builds both filtrations (throws ValidationError if either is not
/// monotone) and compares birth and death multisets against the weight
/// perturbation on the d-faces.
StabilityResult stability_check(const SimplicialComplex& k, const FaceWeights& f, const FaceWeights& g,
                                int d, double p);

struct SingleFacePerturbation {
  std::size_t symmetric_difference;  // |M xor M'| for the Kruskal MSAs
  double moved_weight;               // bottleneck between MSA weight multisets
  double shift;                      // |a - a'|
};

/// Moves the weight of d-face `face` to `new_weight` and compares the MSAs
/// before and after.
SingleFacePerturbation single_face_perturbation(const SimplicialComplex& k, const FaceWeights& f, int d,
                                                FaceIndex face, double new_weight);

}  // namespace acyclekit
