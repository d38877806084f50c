#include "acyclekit/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "acyclekit/error.hpp"

namespace acyclekit {

WeightedFiltration WeightedFiltration::build(const SimplicialComplex& k, FaceWeights weights,
                                             TieBreak tie) {
  const int top = k.dim();
  if (static_cast<int>(weights.size()) != top + 1)
    throw ValidationError("weights cover " + std::to_string(weights.size()) +
                          " dimensions, complex has " + std::to_string(top + 1));
  for (int d = 0; d <= top; ++d) {
    if (weights[d].size() != k.count(d))
      throw ValidationError("missing weights in dimension " + std::to_string(d));
    for (double w : weights[d])
      if (std::isnan(w)) throw ValidationError("NaN weight in dimension " + std::to_string(d));
  }
  for (int d = 1; d <= top; ++d) {
    for (FaceIndex i = 0; i < k.count(d); ++i) {
      for (FaceIndex f : k.facets(d, i)) {
        if (weights[d - 1][f] > weights[d][i])
          throw ValidationError("weights are not monotone: w" + k.face(d - 1, f).to_string() + " > w" +
                                k.face(d, i).to_string());
      }
    }
  }

  std::optional<FaceRef> favored;
  if (tie.favored) {
    auto idx = k.index_of(*tie.favored);
    if (!idx) throw ValidationError("favored face " + tie.favored->to_string() + " is not in the complex");
    favored = FaceRef{tie.favored->dim(), *idx};
  }

  WeightedFiltration wf;
  wf.global_order_.reserve(k.total_count());
  for (int d = 0; d <= top; ++d)
    for (FaceIndex i = 0; i < k.count(d); ++i) wf.global_order_.push_back({d, i});

  const bool reverse = tie.rule == TieBreak::Rule::ReverseLexicographic;
  // Within one dimension, face indices follow lexicographic vertex order.
  auto less = [&](const FaceRef& a, const FaceRef& b) {
    double wa = weights[a.dim][a.index], wb = weights[b.dim][b.index];
    if (wa != wb) return wa < wb;
    if (a.dim != b.dim) return a.dim < b.dim;
    if (favored) {
      bool fa = a == *favored, fb = b == *favored;
      if (fa != fb) return fa;
    }
    return reverse ? a.index > b.index : a.index < b.index;
  };
  std::sort(wf.global_order_.begin(), wf.global_order_.end(), less);

  wf.order_.assign(top + 1, {});
  wf.position_.assign(top + 1, {});
  wf.rank_in_dim_.assign(top + 1, {});
  for (int d = 0; d <= top; ++d) {
    wf.order_[d].reserve(k.count(d));
    wf.position_[d].resize(k.count(d));
    wf.rank_in_dim_[d].resize(k.count(d));
  }
  for (std::size_t pos = 0; pos < wf.global_order_.size(); ++pos) {
    auto [d, i] = wf.global_order_[pos];
    wf.position_[d][i] = pos;
    wf.rank_in_dim_[d][i] = static_cast<FaceIndex>(wf.order_[d].size());
    wf.order_[d].push_back(i);
  }
  wf.weights_ = std::move(weights);
  wf.tie_ = std::move(tie);
  return wf;
}

std::span<const FaceIndex> WeightedFiltration::order(int d) const {
  if (d < 0 || d > dim()) return {};
  return order_[d];
}

WeightedFiltration total_order(const SimplicialComplex& k, FaceWeights weights, TieBreak tie) {
  return WeightedFiltration::build(k, std::move(weights), std::move(tie));
}

WeightedFiltration with_tie_break(const SimplicialComplex& k, const WeightedFiltration& wf,
                                  TieBreak tie) {
  return WeightedFiltration::build(k, wf.weights(), std::move(tie));
}

SimplicialComplex sublevel_complex(const SimplicialComplex& k, const WeightedFiltration& wf,
                                   double t) {
  // Rebuilding validates monotonicity against k.
  (void)WeightedFiltration::build(k, wf.weights(), wf.tie_break());
  std::vector<Face> faces;
  for (int d = 0; d <= k.dim(); ++d)
    for (FaceIndex i = 0; i < k.count(d); ++i)
      if (wf.weight(d, i) <= t) faces.push_back(k.face(d, i));
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

WeightedFiltration restrict_filtration(const SimplicialComplex& k, const WeightedFiltration& wf,
                                       const SimplicialComplex& sub) {
  FaceWeights w(sub.dim() + 1);
  for (int d = 0; d <= sub.dim(); ++d) {
    w[d].reserve(sub.count(d));
    for (const auto& f : sub.faces(d)) {
      auto idx = k.index_of(f);
      if (!idx) throw ValidationError("face " + f.to_string() + " is not in the parent complex");
      w[d].push_back(wf.weight(d, *idx));
    }
  }
  TieBreak tie = wf.tie_break();
  if (tie.favored && !sub.contains(*tie.favored)) tie.favored.reset();
  return WeightedFiltration::build(sub, std::move(w), std::move(tie));
}

}  // namespace acyclekit
