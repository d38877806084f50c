#include "acyclekit/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "acyclekit/complex_io.hpp"
#include "acyclekit/error.hpp"
#include "acyclekit/spanning_acycle.hpp"

namespace acyclekit {

namespace {

struct DimensionResult {
  std::vector<FaceSign> sign;
  std::vector<std::optional<FaceIndex>> kills;
  std::size_t negatives = 0;
};

// Rows are ranks of (d-1)-faces in the filtration order, so the pivot of a
// reduced column is the youngest face it can kill.
DimensionResult reduce_dimension(const SimplicialComplex& k, const WeightedFiltration& wf, int d,
                                 std::size_t max_rank) {
  DimensionResult out;
  const std::size_t n = k.count(d);
  out.sign.assign(n, FaceSign::Positive);
  out.kills.assign(n, std::nullopt);
  if (n == 0) return out;

  const std::size_t nrows = d == 0 ? 1 : k.count(d - 1);
  ColumnReducer reducer(nrows);
  auto lower_order = wf.order(d - 1);
  for (FaceIndex i : wf.order(d)) {
    if (out.negatives == max_rank) break;
    BitColumn col(nrows);
    if (d == 0) {
      col.set(0);
    } else {
      for (FaceIndex f : k.facets(d, i)) col.set(wf.rank_in_dim(d - 1, f));
    }
    if (auto low = reducer.insert(std::move(col))) {
      out.sign[i] = FaceSign::Negative;
      if (d > 0) out.kills[i] = lower_order[*low];
      ++out.negatives;
    }
  }
  return out;
}

// z_{d-1} = f_{d-1} - rank of the boundary on (d-1)-chains.
std::size_t cycle_rank_below(const SimplicialComplex& k, int d, std::size_t negatives_below) {
  if (d == 0) return 1;
  return k.count(d - 1) - negatives_below;
}

}  // namespace

FiltrationReduction reduce_filtration(const SimplicialComplex& k, const WeightedFiltration& wf) {
  FiltrationReduction r;
  std::size_t negatives_below = 0;
  for (int d = 0; d <= k.dim(); ++d) {
    auto res = reduce_dimension(k, wf, d, cycle_rank_below(k, d, negatives_below));
    negatives_below = res.negatives;
    r.sign.push_back(std::move(res.sign));
    r.kills.push_back(std::move(res.kills));
  }
  return r;
}

BirthDeathMultisets::BirthDeathMultisets(int max_dim)
    : max_dim_(max_dim),
      births_(static_cast<std::size_t>(max_dim + 2)),
      deaths_(static_cast<std::size_t>(max_dim + 2)) {}

BirthDeathMultisets run_incremental(const SimplicialComplex& k, const WeightedFiltration& wf) {
  auto red = reduce_filtration(k, wf);
  BirthDeathMultisets out(k.dim());
  for (const FaceRef& ref : wf.global_order()) {
    double w = wf.weight(ref);
    if (red.sign[ref.dim][ref.index] == FaceSign::Negative)
      out.deaths(ref.dim - 1).push_back(w);
    else
      out.births(ref.dim).push_back(w);
  }
  return out;
}

std::vector<double> death_times(const SimplicialComplex& k, const WeightedFiltration& wf, int e) {
  const int d = e + 1;
  if (d < 0 || d > k.dim()) return {};
  std::size_t below = 0;
  for (int j = 0; j < d; ++j) below = reduce_dimension(k, wf, j, cycle_rank_below(k, j, below)).negatives;
  auto res = reduce_dimension(k, wf, d, cycle_rank_below(k, d, below));
  std::vector<double> out;
  out.reserve(res.negatives);
  for (FaceIndex i : wf.order(d))
    if (res.sign[i] == FaceSign::Negative) out.push_back(wf.weight(d, i));
  return out;
}

PersistenceDiagram::PersistenceDiagram(int max_dim)
    : max_dim_(max_dim), points_(static_cast<std::size_t>(max_dim + 2)) {}

const std::vector<DiagramPoint>& PersistenceDiagram::points(int d) const {
  static const std::vector<DiagramPoint> kEmpty;
  if (d < -1 || d > max_dim_) return kEmpty;
  return points_[static_cast<std::size_t>(d + 1)];
}

std::vector<double> PersistenceDiagram::births(int d) const {
  std::vector<double> out;
  for (const auto& p : points(d))
    if (p.birth_position) out.push_back(p.birth);
  return out;
}

std::vector<double> PersistenceDiagram::finite_deaths(int d) const {
  std::vector<double> out;
  for (const auto& p : points(d))
    if (!p.is_essential()) out.push_back(p.death);
  return out;
}

PersistenceDiagram build_diagram(const SimplicialComplex& k, const WeightedFiltration& wf) {
  auto red = reduce_filtration(k, wf);
  PersistenceDiagram dgm(k.dim());
  std::vector<std::vector<bool>> paired(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) paired[d].assign(k.count(d), false);

  for (int d = 0; d <= k.dim(); ++d) {
    for (FaceIndex i : wf.order(d)) {
      if (red.sign[d][i] != FaceSign::Negative) continue;
      DiagramPoint p{};
      p.death = wf.weight(d, i);
      p.death_position = wf.position(d, i);
      if (d == 0) {
        p.birth = -kInfinity;
      } else {
        FaceIndex b = *red.kills[d][i];
        paired[d - 1][b] = true;
        p.birth = wf.weight(d - 1, b);
        p.birth_position = wf.position(d - 1, b);
      }
      dgm.mutable_points(d - 1).push_back(p);
    }
  }
  for (int d = 0; d <= k.dim(); ++d) {
    for (FaceIndex i : wf.order(d)) {
      if (red.sign[d][i] != FaceSign::Positive || paired[d][i]) continue;
      dgm.mutable_points(d).push_back({wf.weight(d, i), kInfinity, wf.position(d, i), std::nullopt});
    }
  }
  for (int d = -1; d <= k.dim(); ++d) {
    auto& pts = dgm.mutable_points(d);
    std::sort(pts.begin(), pts.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
      auto key = [](const DiagramPoint& p) {
        return std::pair{p.birth_position ? static_cast<long long>(*p.birth_position) : -1LL,
                         p.death_position ? static_cast<long long>(*p.death_position) : -1LL};
      };
      return key(a) < key(b);
    });
  }
  return dgm;
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& dgm, bool include_reduced_row) {
  out << "dim,birth,death\n";
  for (int d = include_reduced_row ? -1 : 0; d <= dgm.max_dim(); ++d)
    for (const auto& p : dgm.points(d))
      out << d << ',' << format_real(p.birth) << ',' << format_real(p.death) << '\n';
}

LifetimeSummary lifetime_sum(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  if (d < 0) throw PreconditionError("lifetime sums are defined for d >= 0");
  auto dgm = build_diagram(k, wf);
  LifetimeSummary s{d, 0.0, 0.0, 0.0};
  for (const auto& p : dgm.points(d)) {
    if (p.is_essential())
      throw DivergingIntegralError("beta_" + std::to_string(d) + "(K) != 0: the lifetime integral diverges");
    s.pairing_sum += p.death - p.birth;
  }

  // beta_d(t) is a right-continuous step function with jumps at face weights.
  long beta = 0;
  double prev = 0.0;
  bool started = false;
  for_each_insertion(k, wf, [&](const InsertionStep& step) {
    double t = wf.weight(step.face);
    if (started) s.integral += static_cast<double>(beta) * (t - prev);
    started = true;
    prev = t;
    beta = step.betti.beta(d);
  });
  s.residual = std::abs(s.pairing_sum - s.integral);
  return s;
}

double lifetime_identity_check(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  if (d < 1) throw PreconditionError("lifetime identity needs d >= 1");
  auto bv = betti_numbers(k, d);
  if (bv.beta(d - 1) != 0 || bv.beta(d - 2) != 0)
    throw PreconditionError("lifetime identity needs beta_{d-1}(K) = beta_{d-2}(K) = 0");
  double lifetime = lifetime_sum(k, wf, d - 1).pairing_sum;
  double top = kruskal_msa(k, wf, d).total_weight;
  double lower = kruskal_msa(k, wf, d - 1).total_weight;
  double all_lower = 0.0;
  for (FaceIndex i = 0; i < k.count(d - 1); ++i) all_lower += wf.weight(d - 1, i);
  return std::abs(lifetime - (top + lower - all_lower));
}

}  // namespace acyclekit
