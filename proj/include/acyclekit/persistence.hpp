#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "acyclekit/complex.hpp"
#include "acyclekit/filtration.hpp"
#include "acyclekit/homology.hpp"

namespace acyclekit {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Sign of every face along the filtration, and for each negative face the
/// (d-1)-face whose class it kills.
struct FiltrationReduction {
  // Indexed [d][face index].
  std::vector<std::vector<FaceSign>> sign;
  std::vector<std::vector<std::optional<FaceIndex>>> kills;
};

/// Runs the pivot reduction dimension by dimension. Once the number of
/// negative d-faces reaches z_{d-1}, the remaining d-faces are positive
/// without further reduction.
FiltrationReduction reduce_filtration(const SimplicialComplex& k, const WeightedFiltration& wf);

/// Birth and death multisets per dimension, d >= -1, in filtration order
/// (hence non-decreasing).
class BirthDeathMultisets {
 public:
  explicit BirthDeathMultisets(int max_dim = -1);

  int max_dim() const { return max_dim_; }
  const std::vector<double>& births(int d) const { return births_.at(static_cast<std::size_t>(d + 1)); }
  const std::vector<double>& deaths(int d) const { return deaths_.at(static_cast<std::size_t>(d + 1)); }
  std::vector<double>& births(int d) { return births_.at(static_cast<std::size_t>(d + 1)); }
  std::vector<double>& deaths(int d) { return deaths_.at(static_cast<std::size_t>(d + 1)); }

 private:
  int max_dim_;
  std::vector<std::vector<double>> births_;
  std::vector<std::vector<double>> deaths_;
};

/// Incremental persistence: a negative d-face adds its weight to D_{d-1},
/// a positive one to B_d.
BirthDeathMultisets run_incremental(const SimplicialComplex& k, const WeightedFiltration& wf);

/// D_{d-1} alone, skipping the other dimensions.
std::vector<double> death_times(const SimplicialComplex& k, const WeightedFiltration& wf, int d_minus_1);

struct DiagramPoint {
  double birth;
  double death;  // kInfinity when the class survives
  /// Discrete filtration values (global positions). The dimension -1 class
  /// has no birth face.
  std::optional<std::size_t> birth_position;
  std::optional<std::size_t> death_position;

  bool is_essential() const { return !death_position.has_value(); }
  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

class PersistenceDiagram {
 public:
  explicit PersistenceDiagram(int max_dim = -1);

  int max_dim() const { return max_dim_; }
  /// Points of dimension d in [-1, max_dim]; empty outside.
  const std::vector<DiagramPoint>& points(int d) const;
  std::vector<DiagramPoint>& mutable_points(int d) { return points_.at(static_cast<std::size_t>(d + 1)); }

  /// Finite birth and death values of dimension d (the projections).
  std::vector<double> births(int d) const;
  std::vector<double> finite_deaths(int d) const;

 private:
  int max_dim_;
  std::vector<std::vector<DiagramPoint>> points_;
};

PersistenceDiagram build_diagram(const SimplicialComplex& k, const WeightedFiltration& wf);

/// CSV with header `dim,birth,death`; `inf` marks essential classes. The
/// dimension -1 row is written only on request.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& dgm, bool include_reduced_row = false);

struct LifetimeSummary {
  int dim;
  double pairing_sum;  // sum of (death - birth)
  double integral;     // integral of beta_d(t) over the real line
  double residual;
};

/// Both routes for L_d. Throws DivergingIntegralError when beta_d(K) != 0.
LifetimeSummary lifetime_sum(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

/// |L_{d-1} - (w(M_d) + w(M_{d-1}) - w(F^{d-1}))|. Requires
/// beta_{d-1}(K) = beta_{d-2}(K) = 0 and d >= 1.
double lifetime_identity_check(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

}  // namespace acyclekit
