#include <doctest.h>

#include "acyclekit/error.hpp"
#include "acyclekit/gf2.hpp"
#include "acyclekit/homology.hpp"
#include "support/generators.hpp"

using namespace acyclekit;
using acyclekit::testing::Rng;

namespace {

SimplicialComplex from_tuples(std::vector<std::vector<Vertex>> tuples) { return build_complex(tuples); }

std::vector<std::vector<bool>> to_bools(const Gf2Matrix& m) {
  std::vector<std::vector<bool>> out;
  for (const auto& c : m.columns) {
    std::vector<bool> col(m.nrows);
    for (std::size_t r = 0; r < m.nrows; ++r) col[r] = c.test(r);
    out.push_back(col);
  }
  return out;
}

}  // namespace

TEST_CASE("bit columns") {
  BitColumn c(130);
  CHECK(c.none());
  CHECK_FALSE(c.low());
  c.set(3);
  c.set(129);
  CHECK(*c.low() == 129);
  CHECK(c.popcount() == 2);
  c.flip(129);
  CHECK(*c.low() == 3);
  CHECK(c.ones() == std::vector<std::size_t>{3});
}

TEST_CASE("gf2 rank examples") {
  CHECK(gf2_rank(Gf2Matrix::identity(3)) == 3);
  CHECK(gf2_rank(Gf2Matrix::zero(4, 5)) == 0);
  CHECK(gf2_rank(boundary_matrix(complete_skeleton(3, 1), 1)) == 2);
}

TEST_CASE("gf2 rank agrees with exhaustive search on small matrices") {
  Rng rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t rows = 1 + rng.below(7), cols = rng.below(7);
    Gf2Matrix m = Gf2Matrix::zero(rows, cols);
    for (auto& c : m.columns)
      for (std::size_t r = 0; r < rows; ++r)
        if (rng.coin(0.4)) c.set(r);
    CHECK(gf2_rank(m) == acyclekit::testing::oracle_rank(to_bools(m)));
  }
}

TEST_CASE("column reducer solves for combinations") {
  ColumnReducer r(4, 4);
  BitColumn a(4), b(4), c(4);
  a.set(0), a.set(1);
  b.set(1), b.set(2);
  c.set(0), c.set(2);
  CHECK(r.insert(a));
  CHECK(r.insert(b));
  CHECK_FALSE(r.insert(c));
  CHECK(r.rank() == 2);
  CHECK(r.inserted() == 3);
  auto combo = r.solve(c);
  REQUIRE(combo);
  CHECK(*combo == std::vector<std::size_t>{0, 1});
  BitColumn d(4);
  d.set(3);
  CHECK_FALSE(r.solve(d));
  CHECK(r.in_span(c));
  CHECK_FALSE(r.in_span(d));
  ColumnReducer plain(4);
  CHECK_THROWS(plain.solve(a));
}

TEST_CASE("reduced Betti numbers") {
  auto empty = SimplicialComplex();
  auto be = betti_numbers(empty);
  CHECK(be.beta(-1) == 1);

  auto point = from_tuples({{1}});
  CHECK(betti_numbers(point).beta(-1) == 0);
  CHECK(betti_numbers(point).beta(0) == 0);

  auto hollow = complete_skeleton(3, 1);
  auto bh = betti_numbers(hollow);
  CHECK(bh.beta(0) == 0);
  CHECK(bh.beta(1) == 1);

  auto sphere = complete_skeleton(4, 2);
  auto bs = betti_numbers(sphere);
  CHECK(bs.beta(1) == 0);
  CHECK(bs.beta(2) == 1);

  for (Vertex n = 1; n <= 6; ++n) {
    std::vector<std::vector<Vertex>> pts;
    for (Vertex v = 1; v <= n; ++v) pts.push_back({v});
    CHECK(betti_numbers(build_complex(pts)).beta(0) == static_cast<long>(n) - 1);
  }
}

TEST_CASE("Betti numbers match the oracle on every small complex") {
  for (std::size_t n : {3u, 4u}) {
    for (const auto& k : acyclekit::testing::all_complexes(n, 6)) {
      auto bv = betti_numbers(k);
      auto oracle = acyclekit::testing::oracle_betti(k);
      for (int d = -1; d <= k.dim(); ++d) CHECK(bv.beta(d) == oracle[d + 1]);
    }
  }
}

TEST_CASE("Euler-Poincare and beta = z - b") {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    auto k = acyclekit::testing::random_complex(rng, 7, 3, 0.35);
    auto bv = betti_numbers(k);
    CHECK(bv.alternating_sum() == alternating_face_count(k));
    for (int d = -1; d <= k.dim(); ++d) {
      CHECK(bv.beta(d) == bv.z(d) - bv.b(d));
      CHECK(bv.beta(d) >= 0);
    }
  }
  CHECK(betti_numbers(SimplicialComplex()).alternating_sum() == alternating_face_count(SimplicialComplex()));
}

TEST_CASE("face classification") {
  auto two_points = from_tuples({{1}, {2}});
  CHECK(classify_face(two_points, Face{1, 2}) == FaceSign::Negative);
  auto path = from_tuples({{1, 2}, {2, 3}});
  CHECK(classify_face(path, Face{1, 3}) == FaceSign::Positive);
  auto hollow = complete_skeleton(3, 1);
  CHECK(classify_face(hollow, Face{1, 2, 3}) == FaceSign::Negative);
  CHECK(classify_face(SimplicialComplex(), Face{1}) == FaceSign::Negative);
  CHECK(classify_face(path, Face{4}) == FaceSign::Positive);

  CHECK_THROWS_AS(classify_face(path, Face{1, 2}), PreconditionError);
  CHECK_THROWS_AS(classify_face(path, Face{1, 4}), PreconditionError);
}

TEST_CASE("classification agrees with Betti differences") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto k = acyclekit::testing::random_complex(rng, 6, 2, 0.5);
    auto full = complete_skeleton(6, 3);
    for (int d = 0; d <= 3; ++d) {
      for (const auto& sigma : full.faces(d)) {
        if (k.contains(sigma)) continue;
        auto facets = d == 0 ? std::vector<Face>{} : sigma.facets();
        bool facets_in = std::all_of(facets.begin(), facets.end(), [&](const Face& f) { return k.contains(f); });
        if (!facets_in) continue;
        auto faces = k.all_faces();
        faces.push_back(sigma);
        auto bigger = SimplicialComplex::from_closed_faces(faces);
        auto before = betti_numbers(k, d), after = betti_numbers(bigger, d);
        auto sign = classify_face(k, sigma);
        if (sign == FaceSign::Negative) {
          CHECK(after.beta(d - 1) == before.beta(d - 1) - 1);
          CHECK(after.beta(d) == before.beta(d));
        } else {
          CHECK(after.beta(d) == before.beta(d) + 1);
          CHECK(after.beta(d - 1) == before.beta(d - 1));
        }
      }
    }
  }
}

TEST_CASE("incremental Betti numbers") {
  auto k = complete_skeleton(3, 1);
  auto wf = WeightedFiltration::build(k, {{0, 0, 0}, {0, 0, 0}});
  auto steps = incremental_betti(k, wf);
  REQUIRE(steps.size() == 6);
  CHECK(k.face(steps[5].face) == Face{2, 3});
  CHECK(steps[5].betti.beta(1) == 1);
  CHECK(steps[0].betti.beta(-1) == 0);

  auto point = build_complex(std::vector<std::vector<Vertex>>{{1}});
  auto one = incremental_betti(point, WeightedFiltration::build(point, {{0}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].sign == FaceSign::Negative);
  CHECK(one[0].betti.beta(-1) == 0);

  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = acyclekit::testing::random_complex(rng, 6, 3, 0.4);
    auto w = WeightedFiltration::build(c, acyclekit::testing::random_monotone_weights(rng, c, trial % 3 == 0));
    BettiVector prev(c.dim());
    prev.betti[0] = 1;
    bool first = true;
    for (const auto& s : incremental_betti(c, w)) {
      int changed = 0;
      for (int d = -1; d <= c.dim(); ++d) {
        long delta = s.betti.beta(d) - prev.beta(d);
        if (delta != 0) {
          ++changed;
          CHECK((delta == 1 || delta == -1));
          CHECK((d == s.face.dim || d == s.face.dim - 1));
        }
      }
      CHECK(changed == 1);
      // Adding d-faces never raises beta_{d-1}.
      CHECK(s.betti.beta(s.face.dim - 1) <= prev.beta(s.face.dim - 1));
      prev = s.betti;
      first = false;
    }
    if (!first) CHECK(prev.betti == betti_numbers(c).betti);
  }
}
