#include "acyclekit/spanning_acycle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>

#include "acyclekit/error.hpp"
#include "acyclekit/homology.hpp"
#include "acyclekit/persistence.hpp"

namespace acyclekit {

namespace {

// z_{d-1}: the dimension of the (d-1)-cycle space, i.e. beta_{d-1}(K^{d-1}).
std::size_t lower_cycle_rank(const SimplicialComplex& k, int d) {
  if (d == 0) return 1;
  return k.count(d - 1) - boundary_rank(k, d - 1);
}

std::size_t row_count(const SimplicialComplex& k, int d) { return d == 0 ? 1 : k.count(d - 1); }

SpanningAcycle make_acycle(const SimplicialComplex& k, const WeightedFiltration& wf, int d,
                           std::vector<FaceIndex> chosen) {
  SpanningAcycle s;
  s.dim = d;
  for (FaceIndex i : chosen) {
    s.faces.push_back(k.face(d, i));
    s.weights.push_back(wf.weight(d, i));
  }
  // Summation in ascending weight order keeps totals independent of the
  // selection order.
  auto sorted = s.weights;
  std::sort(sorted.begin(), sorted.end());
  s.total_weight = std::accumulate(sorted.begin(), sorted.end(), 0.0);
  s.indices = std::move(chosen);
  return s;
}

std::vector<std::vector<FaceIndex>> coface_lists(const SimplicialComplex& k, int d) {
  std::vector<std::vector<FaceIndex>> cof(k.count(d - 1));
  for (FaceIndex i = 0; i < k.count(d); ++i)
    for (FaceIndex f : k.facets(d, i)) cof[f].push_back(i);
  return cof;
}

std::size_t subset_rank(const SimplicialComplex& k, int d, std::span<const FaceIndex> faces) {
  ColumnReducer r(row_count(k, d));
  for (FaceIndex i : faces) r.insert(boundary_column(k, d, i));
  return r.rank();
}

SimplicialComplex without_face(const SimplicialComplex& k, const Face& sigma) {
  std::vector<Face> kept;
  for (const auto& f : k.all_faces())
    if (!sigma.is_subface_of(f)) kept.push_back(f);
  return SimplicialComplex::from_closed_faces(std::move(kept));
}

}  // namespace

std::vector<FaceIndex> SpanningAcycle::sorted_indices() const {
  auto v = indices;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> SpanningAcycle::sorted_weights() const {
  auto v = weights;
  std::sort(v.begin(), v.end());
  return v;
}

bool SpanningAcycle::contains(FaceIndex i) const {
  return std::find(indices.begin(), indices.end(), i) != indices.end();
}

GammaRoutes gamma_routes(const SimplicialComplex& k, int d) {
  if (d < 0) throw PreconditionError("gamma_d needs d >= 0");
  GammaRoutes g{};
  g.betti_drop = betti_numbers(k.skeleton(d - 1), d - 1).beta(d - 1) - betti_numbers(k.skeleton(d), d).beta(d - 1);
  g.boundary_rank = static_cast<long>(boundary_rank(k, d));
  g.face_count = static_cast<long>(k.count(d)) - betti_numbers(k.skeleton(d), d).beta(d);
  return g;
}

long gamma_d(const SimplicialComplex& k, int d) {
  auto g = gamma_routes(k, d);
  if (g.betti_drop != g.boundary_rank || g.face_count != g.boundary_rank)
    throw InvariantViolation("gamma_" + std::to_string(d) + " routes disagree: " + std::to_string(g.betti_drop) +
                             " / " + std::to_string(g.boundary_rank) + " / " + std::to_string(g.face_count));
  return g.boundary_rank;
}

SpanningAcycle kruskal_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  if (d < 0) throw PreconditionError("kruskal_msa needs d >= 0");
  const std::size_t target = lower_cycle_rank(k, d);
  ColumnReducer reducer(row_count(k, d));
  std::vector<FaceIndex> chosen;
  for (FaceIndex i : wf.order(d)) {
    if (chosen.size() == target) break;
    if (reducer.insert(boundary_column(k, d, i))) chosen.push_back(i);
  }
  if (chosen.size() != target)
    throw NoSpanningAcycleError("beta_" + std::to_string(d - 1) + "(K) = " + std::to_string(target - chosen.size()) +
                                " != 0: no spanning acycle");
  return make_acycle(k, wf, d, std::move(chosen));
}

SpanningAcycle prim_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d, const Face& seed) {
  if (d < 1) throw PreconditionError("prim_msa needs d >= 1");
  if (seed.dim() != d - 1) throw PreconditionError("seed face must have dimension d - 1");
  auto seed_idx = k.index_of(seed);
  if (!seed_idx) throw PreconditionError("seed face " + seed.to_string() + " is not in the complex");
  if (!hypergraph_connected(k, d))
    throw HypergraphDisconnectedError("complex is not " + std::to_string(d) + "-hypergraph connected");

  const std::size_t target = lower_cycle_rank(k, d);
  const std::size_t nfaces = k.count(d);
  auto cofaces = coface_lists(k, d);

  using Entry = std::pair<std::size_t, FaceIndex>;  // (position, face)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::vector<bool> reached(k.count(d - 1), false), marked(nfaces, false);
  std::size_t marked_count = 0;
  auto reach = [&](FaceIndex f) {
    if (reached[f]) return;
    reached[f] = true;
    for (FaceIndex c : cofaces[f])
      if (!marked[c]) frontier.emplace(wf.position(d, c), c);
  };
  reach(*seed_idx);

  ColumnReducer reducer(row_count(k, d));
  std::vector<FaceIndex> chosen;
  while (marked_count < nfaces && chosen.size() < target) {
    // Drop stale entries for faces marked since they were queued.
    while (!frontier.empty() && marked[frontier.top().second]) frontier.pop();
    if (frontier.empty()) break;
    FaceIndex tau = frontier.top().second;
    frontier.pop();
    if (reducer.insert(boundary_column(k, d, tau))) chosen.push_back(tau);
    marked[tau] = true;
    ++marked_count;
    for (FaceIndex f : k.facets(d, tau)) reach(f);
  }
  if (chosen.size() != target)
    throw NoSpanningAcycleError("beta_" + std::to_string(d - 1) + "(K) != 0: no spanning acycle");
  return make_acycle(k, wf, d, std::move(chosen));
}

SpanningAcycle prim_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  if (d < 1 || k.count(d - 1) == 0) throw PreconditionError("prim_msa needs a (d-1)-face to start from");
  return prim_msa(k, wf, d, k.face(d - 1, 0));
}

bool is_spanning_acycle(const SimplicialComplex& k, int d, std::span<const FaceIndex> faces) {
  const long rank = static_cast<long>(subset_rank(k, d, faces));
  const long beta_top = static_cast<long>(faces.size()) - rank;                  // beta_d(K^{d-1} u S)
  const long beta_lower = static_cast<long>(lower_cycle_rank(k, d)) - rank;      // beta_{d-1}(K^{d-1} u S)
  const long beta_lower_k = betti_numbers(k, d).beta(d - 1);
  return beta_top == 0 && beta_lower == beta_lower_k;
}

SpanningAcycle brute_force_msa(const SimplicialComplex& k, const WeightedFiltration& wf, int d,
                               const BruteForceOptions& opts) {
  if (d < 0) throw PreconditionError("brute_force_msa needs d >= 0");
  if (betti_numbers(k, d).beta(d - 1) != 0)
    throw NoSpanningAcycleError("beta_" + std::to_string(d - 1) + "(K) != 0: no spanning acycle");
  const std::size_t f = k.count(d);
  const std::size_t g = static_cast<std::size_t>(gamma_d(k, d));
  if (binomial(f, g) > opts.max_subsets)
    throw TooLargeError("C(" + std::to_string(f) + ", " + std::to_string(g) + ") subsets exceed the cap");

  const std::size_t z = lower_cycle_rank(k, d);
  std::vector<FaceIndex> comb(g);
  std::iota(comb.begin(), comb.end(), FaceIndex{0});
  std::vector<FaceIndex> best;
  double best_weight = kInfinity;
  std::vector<std::size_t> best_positions;

  for (bool more = true; more;) {
    std::size_t rank = subset_rank(k, d, comb);
    // beta_d(K^{d-1} u S) = |S| - rank, beta_{d-1}(K^{d-1} u S) = z_{d-1} - rank.
    if (rank == g && z - rank == 0) {
      std::vector<double> w;
      std::vector<std::size_t> pos;
      for (FaceIndex i : comb) {
        w.push_back(wf.weight(d, i));
        pos.push_back(wf.position(d, i));
      }
      std::sort(w.begin(), w.end());
      std::sort(pos.begin(), pos.end());
      double total = std::accumulate(w.begin(), w.end(), 0.0);
      if (total < best_weight || (total == best_weight && pos < best_positions)) {
        best_weight = total;
        best = comb;
        best_positions = std::move(pos);
      }
    }
    // Next combination of g indices out of f.
    more = false;
    for (std::size_t i = g; i-- > 0;) {
      if (comb[i] < f - (g - i)) {
        ++comb[i];
        for (std::size_t j = i + 1; j < g; ++j) comb[j] = comb[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  if (best.size() != g) throw NoSpanningAcycleError("no spanning acycle found");
  return make_acycle(k, wf, d, std::move(best));
}

bool hypergraph_connected(const SimplicialComplex& k, int d) {
  if (d < 1) throw PreconditionError("hypergraph connectivity needs d >= 1");
  const std::size_t n = k.count(d - 1);
  if (n <= 1) return true;
  auto cofaces = coface_lists(k, d);
  std::vector<bool> seen(n, false);
  std::deque<FaceIndex> queue{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!queue.empty()) {
    FaceIndex f = queue.front();
    queue.pop_front();
    for (FaceIndex c : cofaces[f]) {
      for (FaceIndex g : k.facets(d, c)) {
        if (!seen[g]) {
          seen[g] = true;
          ++visited;
          queue.push_back(g);
        }
      }
    }
  }
  return visited == n;
}

long mayer_vietoris_kernel_rank(const SimplicialComplex& k1, const SimplicialComplex& k2, int e) {
  if (e < -1) return 0;
  const SimplicialComplex uni = complex_union(k1, k2);
  const SimplicialComplex meet = complex_intersection(k1, k2);

  // Chains of dimension e live on the e-faces of the union; dimension -1
  // has the single augmentation row.
  const std::size_t rows = e == -1 ? 1 : uni.count(e);
  auto embed = [&](const SimplicialComplex& sub, int dim, FaceIndex i) {
    // Boundary of (dim, i) in sub, written on union rows.
    BitColumn col(rows);
    if (dim == 0) {
      col.set(0);
    } else {
      for (FaceIndex f : sub.facets(dim, i)) col.set(*uni.index_of(sub.face(dim - 1, f)));
    }
    return col;
  };

  // Cycle space of the intersection in dimension e.
  std::vector<BitColumn> cycles;
  if (e == -1) {
    BitColumn c(1);
    c.set(0);
    cycles.push_back(std::move(c));
  } else {
    const std::size_t n = meet.count(e);
    ColumnReducer kernel(e == 0 ? 1 : meet.count(e - 1), n);
    for (FaceIndex i = 0; i < n; ++i) {
      BitColumn col = boundary_column(meet, e, i);
      BitColumn probe = col;
      if (kernel.reduce(probe)) {
        kernel.insert(std::move(col));
        continue;
      }
      // Dependent: the combination plus this column is a cycle.
      auto combo = kernel.solve(col);
      kernel.insert(std::move(col));
      BitColumn cycle(rows);
      cycle.flip(*uni.index_of(meet.face(e, i)));
      for (auto j : *combo) cycle.flip(*uni.index_of(meet.face(e, static_cast<FaceIndex>(j))));
      cycles.push_back(std::move(cycle));
    }
  }

  // Homology representatives: cycles independent modulo the boundaries.
  ColumnReducer homology(rows);
  for (FaceIndex i = 0; i < meet.count(e + 1); ++i) homology.insert(embed(meet, e + 1, i));
  std::vector<BitColumn> reps;
  for (auto& c : cycles)
    if (homology.insert(c)) reps.push_back(c);
  const long beta_meet = static_cast<long>(reps.size());

  // rank of nu = rank[B1 (+) 0 | 0 (+) B2 | (z, z)] - rank B1 - rank B2.
  auto stacked = [&](const BitColumn& top, const BitColumn& bottom) {
    BitColumn col(2 * rows);
    for (auto r : top.ones()) col.set(r);
    for (auto r : bottom.ones()) col.set(rows + r);
    return col;
  };
  const BitColumn zero(rows);
  ColumnReducer joint(2 * rows);
  std::size_t rank1 = 0, rank2 = 0;
  {
    ColumnReducer r1(rows), r2(rows);
    for (FaceIndex i = 0; i < k1.count(e + 1); ++i) {
      auto col = embed(k1, e + 1, i);
      r1.insert(col);
      joint.insert(stacked(col, zero));
    }
    for (FaceIndex i = 0; i < k2.count(e + 1); ++i) {
      auto col = embed(k2, e + 1, i);
      r2.insert(col);
      joint.insert(stacked(zero, col));
    }
    rank1 = r1.rank();
    rank2 = r2.rank();
  }
  for (const auto& z : reps) joint.insert(stacked(z, z));
  const long rank_nu = static_cast<long>(joint.rank() - rank1 - rank2);
  return beta_meet - rank_nu;
}

MvGammaResult mv_gamma_identity_check(const SimplicialComplex& k1, const SimplicialComplex& k2, int d) {
  MvGammaResult r{};
  r.gamma_first = gamma_d(k1, d);
  r.gamma_second = gamma_d(k2, d);
  r.gamma_union = gamma_d(complex_union(k1, k2), d);
  r.gamma_intersection = gamma_d(complex_intersection(k1, k2), d);
  r.kernel_rank = mayer_vietoris_kernel_rank(k1, k2, d - 1);
  r.lhs = r.gamma_first + r.gamma_second;
  r.rhs = r.gamma_union + r.gamma_intersection + r.kernel_rank;
  return r;
}

bool char_msa_check(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  auto msa = kruskal_msa(k, wf, d);
  auto order = wf.order(d);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ColumnReducer earlier(row_count(k, d));
    for (std::size_t j = 0; j < pos; ++j) earlier.insert(boundary_column(k, d, order[j]));
    bool negative = !earlier.in_span(boundary_column(k, d, order[pos]));
    if (negative != msa.contains(order[pos])) return false;
  }
  return true;
}

PropertyReport structural_property_suite(const SimplicialComplex& k, const WeightedFiltration& wf, int d) {
  PropertyReport rep;
  auto msa = kruskal_msa(k, wf, d);
  const auto members = msa.sorted_indices();
  auto fail = [&](std::string what) { rep.counterexamples.push_back(std::move(what)); };

  // Exchange and cycle properties via the unique cycle in M u sigma.
  ColumnReducer span(row_count(k, d), members.size());
  for (FaceIndex i : members) span.insert(boundary_column(k, d, i));
  for (FaceIndex sigma = 0; sigma < k.count(d); ++sigma) {
    if (msa.contains(sigma)) continue;
    auto combo = span.solve(boundary_column(k, d, sigma));
    if (!combo) {
      fail("face " + k.face(d, sigma).to_string() + " is negative with respect to the MSA");
      continue;
    }
    std::vector<FaceIndex> cycle{sigma};
    for (auto j : *combo) cycle.push_back(members[j]);

    for (std::size_t j = 1; j < cycle.size(); ++j) {
      std::vector<FaceIndex> swapped;
      for (FaceIndex m : members)
        if (m != cycle[j]) swapped.push_back(m);
      swapped.push_back(sigma);
      ++rep.exchange_checks;
      if (!is_spanning_acycle(k, d, swapped))
        fail("exchange of " + k.face(d, cycle[j]).to_string() + " for " + k.face(d, sigma).to_string() +
             " is not a spanning acycle");
    }

    double top = -kInfinity;
    std::size_t top_count = 0;
    FaceIndex top_face = sigma;
    for (FaceIndex c : cycle) {
      double w = wf.weight(d, c);
      if (w > top) {
        top = w;
        top_count = 1;
        top_face = c;
      } else if (w == top) {
        ++top_count;
      }
    }
    if (top_count == 1) {
      ++rep.cycle_checks;
      if (msa.contains(top_face))
        fail("strict maximum " + k.face(d, top_face).to_string() + " of a cycle lies in the MSA");
    }
  }

  // Cut property on coface cuts.
  if (d >= 1) {
    auto cofaces = coface_lists(k, d);
    for (FaceIndex tau = 0; tau < cofaces.size(); ++tau) {
      if (cofaces[tau].empty()) continue;
      double least = kInfinity;
      for (FaceIndex c : cofaces[tau]) least = std::min(least, wf.weight(d, c));
      for (FaceIndex c : cofaces[tau]) {
        if (wf.weight(d, c) != least) continue;
        ++rep.cut_checks;
        auto favored = with_tie_break(k, wf, TieBreak::favoring(k.face(d, c)));
        if (!kruskal_msa(k, favored, d).contains(c))
          fail("least coface " + k.face(d, c).to_string() + " of " + k.face(d - 1, tau).to_string() +
               " is in no MSA");
      }
    }
  }

  // Sub-complex monotonicity for single-face deletions keeping beta_{d-1} = 0.
  for (FaceIndex sigma = 0; sigma < k.count(d); ++sigma) {
    auto sub = without_face(k, k.face(d, sigma));
    if (betti_numbers(sub, d).beta(d - 1) != 0) continue;
    ++rep.subcomplex_checks;
    auto sub_msa = kruskal_msa(sub, restrict_filtration(k, wf, sub), d);
    for (const auto& f : msa.faces) {
      if (!sub.contains(f)) continue;
      if (std::find(sub_msa.faces.begin(), sub_msa.faces.end(), f) == sub_msa.faces.end())
        fail("MSA face " + f.to_string() + " missing from the MSA after deleting " +
             k.face(d, sigma).to_string());
    }
  }
  return rep;
}

}  // namespace acyclekit
