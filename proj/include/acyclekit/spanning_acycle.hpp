#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acyclekit/complex.hpp"
#include "acyclekit/filtration.hpp"

namespace acyclekit {

/// A set of d-faces S with beta_d(K^{d-1} u S) = 0 and, when spanning,
/// beta_{d-1}(K^{d-1} u S) = beta_{d-1}(K).
struct SpanningAcycle {
  int dim = 0;
  std::vector<FaceIndex> indices;  // selection order
  std::vector<Face> faces;         // aligned with indices
  std::vector<double> weights;     // aligned with indices
  double total_weight = 0.0;

  std::vector<FaceIndex> sorted_indices() const;
  std::vector<double> sorted_weights() const;
  bool contains(FaceIndex i) const;
};

/// The three expressions for gamma_d(K).
struct GammaRoutes {
  long betti_drop;      // beta_{d-1}(K^{d-1}) - beta_{d-1}(K^d)
  long boundary_rank;   // b_{d-1}(K) = rank of the boundary on d-chains
  long face_count;      // f_d - beta_d(K^d)
};

GammaRoutes gamma_routes(const SimplicialComplex& k, int d);

/// Cardinality of every maximal d-acycle. Throws InvariantViolation if the
/// routes disagree.
long gamma_d(const SimplicialComplex& k, int d);

/// Greedy over d-faces in filtration order, keeping each face that is
/// negative with respect to K^{d-1} u S. Stops once beta_{d-1} hits zero.
/// Throws NoSpanningAcycleError when beta_{d-1}(K) != 0.
SpanningAcycle kruskal_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

/// Grows from seed through cofaces of the reached (d-1)-faces, always
/// taking the least unmarked coface.
SpanningAcycle prim_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d, const Face& seed);
/// Seeds from the lexicographically first (d-1)-face.
SpanningAcycle prim_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

struct BruteForceOptions {
  std::uint64_t max_subsets = 2'000'000;
};

/// Enumerates all gamma_d-subsets of d-faces and returns the cheapest
/// spanning acycle; ties go to the set whose sorted positions are least.
SpanningAcycle brute_force_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d,
                               const BruteForceOptions& opts = {});

/// Betti test of K^{d-1} u S: acyclic in dimension d and spanning in d-1.
bool is_spanning_acycle(const SimplicialComplex& k, int d, std::span<const FaceIndex> faces);

/// Connectivity of the graph on (d-1)-faces where two faces are adjacent
/// when their union is a d-face. Requires d >= 1.
bool hypergraph_connected(const SimplicialComplex& k, int d);

/// rank of ker(H_e(K1 n K2) -> H_e(K1) + H_e(K2)), from explicit cycle
/// representatives.
long mayer_vietoris_kernel_rank(const SimplicialComplex& k1, const SimplicialComplex& k2, int e);

struct MvGammaResult {
  long gamma_first;
  long gamma_second;
  long gamma_union;
  long gamma_intersection;
  long kernel_rank;
  long lhs;  // gamma(K1) + gamma(K2)
  long rhs;  // gamma(K1 u K2) + gamma(K1 n K2) + kernel_rank
  bool holds() const { return lhs == rhs; }
};

MvGammaResult mv_gamma_identity_check(const SimplicialComplex& k1, const SimplicialComplex& k2, int d);

/// Checks, for every d-face, that membership in the Kruskal MSA matches a
/// direct span test of its boundary against the d-faces preceding it.
bool char_msa_check(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

struct PropertyReport {
  std::size_t exchange_checks = 0;
  std::size_t cycle_checks = 0;
  std::size_t cut_checks = 0;
  std::size_t subcomplex_checks = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// Exchange, cycle, cut and sub-complex properties of the Kruskal MSA,
/// checked exhaustively. Meant for small complexes.
PropertyReport structural_property_suite(const SimplicialComplex& k, const WeightedFiltration& wf, int d);

}  // namespace acyclekit
