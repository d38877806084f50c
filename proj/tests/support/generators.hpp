#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "acyclekit/complex.hpp"
#include "acyclekit/filtration.hpp"
#include "acyclekit/gf2.hpp"

namespace acyclekit::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin(double p = 0.5) { return uniform() < p; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Closure of random vertex tuples of dimension <= max_dim on vertices 1..n.
inline SimplicialComplex random_complex(Rng& rng, std::size_t n, int max_dim, double density) {
  std::vector<std::vector<Vertex>> tuples;
  for (Vertex v = 1; v <= n; ++v)
    if (rng.coin(0.9)) tuples.push_back({v});
  for (int d = 1; d <= max_dim; ++d) {
    auto k = complete_skeleton(n, d);
    for (const auto& f : k.faces(d))
      if (rng.coin(density)) tuples.emplace_back(f.vertices().begin(), f.vertices().end());
  }
  return build_complex(tuples);
}

// Random subcomplex of k keeping each top face with probability p.
inline SimplicialComplex random_subcomplex(Rng& rng, const SimplicialComplex& k, double p) {
  std::vector<Face> kept;
  for (int d = 0; d <= k.dim(); ++d)
    for (const auto& f : k.faces(d))
      if (rng.coin(p)) kept.push_back(f);
  return SimplicialComplex::closure_of(std::span<const Face>(kept));
}

// Monotone weights built bottom-up: each face gets the max over its facets
// plus a random increment. With ties, increments are drawn from {0, 1}.
inline FaceWeights random_monotone_weights(Rng& rng, const SimplicialComplex& k, bool ties = false) {
  FaceWeights w(static_cast<std::size_t>(k.dim() + 1));
  for (int d = 0; d <= k.dim(); ++d) {
    w[d].resize(k.count(d));
    for (FaceIndex i = 0; i < k.count(d); ++i) {
      double base = 0.0;
      if (d > 0)
        for (FaceIndex f : k.facets(d, i)) base = std::max(base, w[d - 1][f]);
      w[d][i] = base + (ties ? static_cast<double>(rng.below(2)) : rng.uniform());
    }
  }
  return w;
}

// Lower faces at 0, d-faces uniform on (0, 1).
inline FaceWeights top_uniform_weights(Rng& rng, const SimplicialComplex& k, int d) {
  FaceWeights w(static_cast<std::size_t>(k.dim() + 1));
  for (int j = 0; j <= k.dim(); ++j) w[j].assign(k.count(j), 0.0);
  for (auto& x : w[d]) x = rng.uniform();
  return w;
}

// Rank by exhaustive search: the largest column subset with no non-empty
// sub-subset summing to zero. Only for a handful of columns.
inline std::size_t oracle_rank(const std::vector<std::vector<bool>>& columns) {
  const std::size_t c = columns.size();
  const std::size_t rows = c ? columns[0].size() : 0;
  std::vector<bool> zero_sum(std::size_t{1} << c, false);
  for (std::size_t mask = 1; mask < (std::size_t{1} << c); ++mask) {
    std::vector<bool> acc(rows, false);
    for (std::size_t j = 0; j < c; ++j)
      if (mask >> j & 1)
        for (std::size_t r = 0; r < rows; ++r) acc[r] = acc[r] != columns[j][r];
    zero_sum[mask] = std::none_of(acc.begin(), acc.end(), [](bool b) { return b; });
  }
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
    bool independent = true;
    for (std::size_t sub = mask; sub && independent; sub = (sub - 1) & mask) independent = !zero_sum[sub];
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

// Boundary matrix of dimension d as bool columns, built from face lists
// only (no library boundary code).
inline std::vector<std::vector<bool>> oracle_boundary(const SimplicialComplex& k, int d) {
  std::vector<std::vector<bool>> cols;
  if (d == 0) {
    for (std::size_t i = 0; i < k.count(0); ++i) cols.push_back({true});
    return cols;
  }
  auto lower = k.faces(d - 1);
  for (const auto& f : k.faces(d)) {
    std::vector<bool> col(lower.size(), false);
    auto verts = f.vertices();
    for (std::size_t drop = 0; drop < verts.size(); ++drop) {
      std::vector<Vertex> sub;
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (j != drop) sub.push_back(verts[j]);
      Face facet(sub);
      auto it = std::find(lower.begin(), lower.end(), facet);
      col[static_cast<std::size_t>(it - lower.begin())] = true;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

// Reduced Betti numbers beta_{-1..dim} from the oracle rank.
inline std::vector<long> oracle_betti(const SimplicialComplex& k) {
  auto rank = [&](int d) -> long {
    if (d < 0 || d > k.dim()) return 0;
    return static_cast<long>(oracle_rank(oracle_boundary(k, d)));
  };
  std::vector<long> out;
  for (int d = -1; d <= k.dim(); ++d) {
    long f = d == -1 ? 1 : static_cast<long>(k.count(d));
    out.push_back(f - rank(d) - rank(d + 1));
  }
  return out;
}

// Every simplicial complex on vertices 1..n (including the empty one)
// whose face counts per dimension stay within max_per_dim.
inline std::vector<SimplicialComplex> all_complexes(std::size_t n, std::size_t max_per_dim) {
  std::vector<std::vector<Vertex>> subsets;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(static_cast<Vertex>(v + 1));
    subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<SimplicialComplex> out;
  std::vector<Face> chosen;
  std::vector<std::size_t> per_dim(n + 1, 0);
  auto has = [&](const Face& f) { return std::find(chosen.begin(), chosen.end(), f) != chosen.end(); };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == subsets.size()) {
      out.push_back(SimplicialComplex::from_closed_faces(chosen));
      return;
    }
    self(self, i + 1);
    Face f(subsets[i]);
    const auto dim = static_cast<std::size_t>(f.dim());
    if (per_dim[dim] >= max_per_dim) return;
    if (dim > 0) {
      for (const auto& facet : f.facets())
        if (!has(facet)) return;
    }
    chosen.push_back(f);
    ++per_dim[dim];
    self(self, i + 1);
    chosen.pop_back();
    --per_dim[dim];
  };
  rec(rec, 0);
  return out;
}

}  // namespace acyclekit::testing
