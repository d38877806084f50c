#include "acyclekit/homology.hpp"

#include "acyclekit/error.hpp"

namespace acyclekit {

BettiVector::BettiVector(int max_dim)
    : max_dim(max_dim),
      betti(static_cast<std::size_t>(max_dim + 2), 0),
      cycles(static_cast<std::size_t>(max_dim + 2), 0),
      boundaries(static_cast<std::size_t>(max_dim + 2), 0) {}

long BettiVector::alternating_sum() const {
  long s = 0;
  for (int d = -1; d <= max_dim; ++d) s += (d % 2 == 0 ? 1 : -1) * beta(d);
  return s;
}

BitColumn boundary_column(const SimplicialComplex& k, int d, FaceIndex i) {
  if (d == 0) {
    BitColumn c(1);
    c.set(0);
    return c;
  }
  BitColumn c(k.count(d - 1));
  for (FaceIndex f : k.facets(d, i)) c.set(f);
  return c;
}

Gf2Matrix boundary_matrix(const SimplicialComplex& k, int d) {
  Gf2Matrix m;
  m.nrows = d == 0 ? 1 : k.count(d - 1);
  m.columns.reserve(k.count(d));
  for (FaceIndex i = 0; i < k.count(d); ++i) m.columns.push_back(boundary_column(k, d, i));
  return m;
}

std::size_t boundary_rank(const SimplicialComplex& k, int d) {
  if (d < 0 || d > k.dim()) return 0;
  if (d == 0) return k.count(0) > 0 ? 1 : 0;
  return gf2_rank(boundary_matrix(k, d));
}

BettiVector betti_numbers(const SimplicialComplex& k, int d_max) {
  BettiVector bv(d_max);
  std::vector<long> rank(static_cast<std::size_t>(d_max + 3), 0);  // rank[j] = rank of boundary on j-chains
  for (int j = 0; j <= d_max + 1; ++j) rank[j] = static_cast<long>(boundary_rank(k, j));
  for (int d = -1; d <= d_max; ++d) {
    long f = d == -1 ? 1 : static_cast<long>(k.count(d));
    long z = f - (d >= 0 ? rank[d] : 0);
    long b = rank[d + 1];
    bv.cycles[d + 1] = z;
    bv.boundaries[d + 1] = b;
    bv.betti[d + 1] = z - b;
  }
  return bv;
}

long alternating_face_count(const SimplicialComplex& k) {
  long s = -1;
  for (int d = 0; d <= k.dim(); ++d) s += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(d));
  return s;
}

FaceSign classify_face(const SimplicialComplex& k, const Face& sigma) {
  if (k.contains(sigma)) throw PreconditionError("face " + sigma.to_string() + " is already in the complex");
  const int d = sigma.dim();
  if (d == 0) return k.count(0) == 0 ? FaceSign::Negative : FaceSign::Positive;

  BitColumn col(k.count(d - 1));
  for (const auto& f : sigma.facets()) {
    auto idx = k.index_of(f);
    if (!idx) throw PreconditionError("facet " + f.to_string() + " of " + sigma.to_string() + " is missing");
    col.set(*idx);
  }
  ColumnReducer r(k.count(d - 1));
  for (FaceIndex i = 0; i < k.count(d); ++i) r.insert(boundary_column(k, d, i));
  return r.in_span(std::move(col)) ? FaceSign::Positive : FaceSign::Negative;
}

void for_each_insertion(const SimplicialComplex& k, const WeightedFiltration& wf,
                        const std::function<void(const InsertionStep&)>& visit) {
  const int top = k.dim();
  std::vector<ColumnReducer> reducers;
  for (int d = 0; d <= top; ++d) reducers.emplace_back(d == 0 ? 1 : k.count(d - 1));

  InsertionStep step{{0, 0}, FaceSign::Positive, BettiVector(top)};
  step.betti.betti[0] = 1;  // empty complex: beta_{-1} = 1
  step.betti.cycles[0] = 1;
  for (const FaceRef& ref : wf.global_order()) {
    const int d = ref.dim;
    auto low = reducers[d].insert(boundary_column(k, d, ref.index));
    auto& bv = step.betti;
    if (low) {
      bv.betti[d] -= 1;       // beta_{d-1}
      bv.boundaries[d] += 1;  // b_{d-1}
      step.sign = FaceSign::Negative;
    } else {
      bv.betti[d + 1] += 1;
      bv.cycles[d + 1] += 1;
      step.sign = FaceSign::Positive;
    }
    step.face = ref;
    visit(step);
  }
}

std::vector<InsertionStep> incremental_betti(const SimplicialComplex& k, const WeightedFiltration& wf) {
  std::vector<InsertionStep> out;
  out.reserve(k.total_count());
  for_each_insertion(k, wf, [&](const InsertionStep& s) { out.push_back(s); });
  return out;
}

}  // namespace acyclekit
