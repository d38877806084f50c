#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "acyclekit/complex.hpp"

namespace acyclekit {

/// Weights aligned with a complex: weights[d][i] belongs to face (d, i).
using FaceWeights = std::vector<std::vector<double>>;

/// How faces of equal weight are ordered. Faces of lower dimension always
/// come first, so every rule extends the face partial order.
struct TieBreak {
  enum class Rule { Lexicographic, ReverseLexicographic };
  Rule rule = Rule::Lexicographic;
  /// Placed before every other face of the same dimension and weight.
  std::optional<Face> favored;

  static TieBreak lexicographic() { return {}; }
  static TieBreak reverse_lexicographic() { return {Rule::ReverseLexicographic, std::nullopt}; }
  static TieBreak favoring(Face f) { return {Rule::Lexicographic, std::move(f)}; }
};

/// Monotone weight function on a complex plus the total order extending
/// it. The same object is consumed by persistence and by the spanning
/// acycle algorithms so both see one order.
class WeightedFiltration {
 public:
  /// Validates shape, finiteness and monotonicity (w(facet) <= w(face)).
  static WeightedFiltration build(const SimplicialComplex& k, FaceWeights weights,
                                  TieBreak tie = TieBreak::lexicographic());

  double weight(int d, FaceIndex i) const { return weights_[d][i]; }
  double weight(FaceRef r) const { return weights_[r.dim][r.index]; }
  const FaceWeights& weights() const { return weights_; }

  /// Position of a face in the global total order (the discrete
  /// filtration value).
  std::size_t position(int d, FaceIndex i) const { return position_[d][i]; }

  /// Rank of a face among faces of its own dimension.
  FaceIndex rank_in_dim(int d, FaceIndex i) const { return rank_in_dim_[d][i]; }

  /// Faces of one dimension, sorted by the total order.
  std::span<const FaceIndex> order(int d) const;

  /// Every face, sorted by the total order.
  std::span<const FaceRef> global_order() const { return global_order_; }

  /// Weight of the face at a global position (the projection back to
  /// weight values).
  double weight_at(std::size_t position) const { return weight(global_order_[position]); }

  const TieBreak& tie_break() const { return tie_; }
  int dim() const { return static_cast<int>(weights_.size()) - 1; }

 private:
  FaceWeights weights_;
  std::vector<std::vector<FaceIndex>> order_;
  std::vector<std::vector<std::size_t>> position_;
  std::vector<std::vector<FaceIndex>> rank_in_dim_;
  std::vector<FaceRef> global_order_;
  TieBreak tie_;
};

/// Builds the filtration for explicit weights (alias of build()).
WeightedFiltration total_order(const SimplicialComplex& k, FaceWeights weights,
                               TieBreak tie = TieBreak::lexicographic());

/// Same complex, same weights, different tie-break rule.
WeightedFiltration with_tie_break(const SimplicialComplex& k, const WeightedFiltration& wf,
                                  TieBreak tie);

/// K(t): all faces with weight <= t. Checks monotonicity of wf against k.
SimplicialComplex sublevel_complex(const SimplicialComplex& k, const WeightedFiltration& wf,
                                   double t);

/// Carries weights from a complex to one of its subcomplexes, keeping the
/// tie-break rule.
WeightedFiltration restrict_filtration(const SimplicialComplex& k, const WeightedFiltration& wf,
                                       const SimplicialComplex& sub);

/// Complex together with its filtration.
struct WeightedComplex {
  SimplicialComplex complex;
  WeightedFiltration filtration;
};

}  // namespace acyclekit
