#pragma once

#include <functional>
#include <vector>

#include "acyclekit/complex.hpp"
#include "acyclekit/filtration.hpp"
#include "acyclekit/gf2.hpp"

namespace acyclekit {

/// Reduced Betti numbers beta_d for -1 <= d <= max_dim, with the cycle and
/// boundary ranks they come from.
struct BettiVector {
  int max_dim = -1;
  std::vector<long> betti;       // index d + 1
  std::vector<long> cycles;      // z_d
  std::vector<long> boundaries;  // b_d

  explicit BettiVector(int max_dim = -1);

  long beta(int d) const { return at(betti, d); }
  long z(int d) const { return at(cycles, d); }
  long b(int d) const { return at(boundaries, d); }

  /// sum_{j >= -1} (-1)^j beta_j; equals the same alternating sum of
  /// face counts with f_{-1} = 1.
  long alternating_sum() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  long at(const std::vector<long>& v, int d) const {
    if (d < -1 || d > max_dim) return 0;
    return v[static_cast<std::size_t>(d + 1)];
  }
};

/// Boundary column of face (d, i). Rows are (d-1)-face indices, or the
/// single augmentation row when d == 0.
BitColumn boundary_column(const SimplicialComplex& k, int d, FaceIndex i);

/// Matrix of the boundary map on d-chains.
Gf2Matrix boundary_matrix(const SimplicialComplex& k, int d);

/// rank of the boundary map on d-chains; 0 outside [0, dim].
std::size_t boundary_rank(const SimplicialComplex& k, int d);

BettiVector betti_numbers(const SimplicialComplex& k, int d_max);
inline BettiVector betti_numbers(const SimplicialComplex& k) { return betti_numbers(k, k.dim()); }

/// sum_{j >= -1} (-1)^j f_j with f_{-1} = 1.
long alternating_face_count(const SimplicialComplex& k);

enum class FaceSign { Negative, Positive };

/// Sign of a face not yet in k whose facets all are: negative when its
/// boundary is not a boundary in k (beta_{d-1} drops), positive otherwise
/// (beta_d rises).
FaceSign classify_face(const SimplicialComplex& k, const Face& sigma);

struct InsertionStep {
  FaceRef face;
  FaceSign sign;
  BettiVector betti;
};

/// Betti numbers after each insertion along the total order of wf.
void for_each_insertion(const SimplicialComplex& k, const WeightedFiltration& wf,
                        const std::function<void(const InsertionStep&)>& visit);
std::vector<InsertionStep> incremental_betti(const SimplicialComplex& k,
                                             const WeightedFiltration& wf);

}  // namespace acyclekit
