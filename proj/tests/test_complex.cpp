#include <doctest.h>

#include "acyclekit/complex.hpp"
#include "acyclekit/error.hpp"
#include "acyclekit/filtration.hpp"
#include "support/generators.hpp"

using namespace acyclekit;
using acyclekit::testing::Rng;

namespace {

SimplicialComplex from_tuples(std::vector<std::vector<Vertex>> tuples) { return build_complex(tuples); }

WeightedComplex k3(double a = 0.1, double b = 0.2, double c = 0.3) {
  auto k = complete_skeleton(3, 1);
  auto wf = WeightedFiltration::build(k, {{0, 0, 0}, {a, b, c}});
  return {k, wf};
}

}  // namespace

TEST_CASE("faces are sorted tuples and reject repeats") {
  Face f{3, 1, 2};
  CHECK(f.dim() == 2);
  CHECK(f.to_string() == "(1,2,3)");
  CHECK_THROWS_AS(Face({1, 1}), MalformedFaceError);
  CHECK_THROWS_AS(Face(std::vector<Vertex>{}), MalformedFaceError);
  CHECK(Face::augmentation().dim() == -1);
  CHECK(Face{1, 2}.is_subface_of(Face{1, 2, 3}));
  CHECK_FALSE(Face{1, 4}.is_subface_of(Face{1, 2, 3}));
  CHECK(Face{2} < Face{1, 2});
  CHECK(Face{1, 2} < Face{1, 3});
}

TEST_CASE("boundary chains") {
  auto b = boundary_chain(Face{1, 2, 3});
  CHECK(b.dim() == 1);
  CHECK(b.support() == std::set<Face>{Face{2, 3}, Face{1, 3}, Face{1, 2}});
  CHECK(boundary_chain(Face{1, 2}).support() == std::set<Face>{Face{1}, Face{2}});
  CHECK(boundary_chain(b).is_zero());

  auto vertex = boundary_chain(Face{7});
  CHECK(vertex.dim() == -1);
  CHECK(vertex.support() == std::set<Face>{Face::augmentation()});
  CHECK(boundary_chain(boundary_chain(Face{1, 2})).is_zero());

  Chain c(1);
  c.toggle(Face{1, 2});
  c.toggle(Face{1, 2});
  CHECK(c.is_zero());
}

TEST_CASE("boundary of a boundary vanishes on random complexes") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = acyclekit::testing::random_complex(rng, 6, 3, 0.4);
    for (int d = 0; d <= k.dim(); ++d)
      for (const auto& f : k.faces(d)) CHECK(boundary_chain(boundary_chain(f)).is_zero());
  }
}

TEST_CASE("build_complex takes the downward closure") {
  auto tri = from_tuples({{1, 2, 3}});
  CHECK(tri.count(2) == 1);
  CHECK(tri.count(1) == 3);
  CHECK(tri.count(0) == 3);
  std::vector<std::vector<Vertex>> again;
  for (const auto& f : tri.all_faces()) again.emplace_back(f.vertices().begin(), f.vertices().end());
  CHECK(build_complex(again) == tri);

  auto empty = from_tuples({});
  CHECK(empty.empty());
  CHECK(empty.dim() == -1);

  auto path = from_tuples({{1, 2}, {2, 3}});
  CHECK(path.count(0) == 3);
  CHECK(path.count(1) == 2);

  CHECK_THROWS_AS(from_tuples({{1, 1, 2}}), MalformedFaceError);
}

TEST_CASE("built complexes are closed") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = acyclekit::testing::random_complex(rng, 7, 3, 0.3);
    for (const auto& f : k.all_faces())
      if (f.dim() > 0)
        for (const auto& g : f.facets()) CHECK(k.contains(g));
  }
}

TEST_CASE("from_closed_faces rejects a missing sub-face") {
  CHECK_THROWS_AS(SimplicialComplex::from_closed_faces({Face{1}, Face{1, 2}}), ValidationError);
}

TEST_CASE("complete skeleton counts") {
  auto k = complete_skeleton(3, 1);
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 3);
  auto t = complete_skeleton(4, 2);
  CHECK(t.count(0) == 4);
  CHECK(t.count(1) == 6);
  CHECK(t.count(2) == 4);
  CHECK(complete_skeleton(5, 2).count(2) == 10);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int d = 0; d <= 3; ++d) {
      auto c = complete_skeleton(n, d);
      for (int j = 0; j <= d; ++j) CHECK(c.count(j) == binomial(n, j + 1));
    }
  CHECK(complete_skeleton(2, 3).count(3) == 0);
  CHECK_THROWS_AS(complete_skeleton(0, 1), PreconditionError);
}

TEST_CASE("union and intersection") {
  auto a = from_tuples({{1, 2}});
  auto b = from_tuples({{2, 3}});
  auto u = complex_union(a, b);
  auto i = complex_intersection(a, b);
  CHECK(u.count(1) == 2);
  CHECK(u.count(0) == 3);
  CHECK(i.count(0) == 1);
  CHECK(i.count(1) == 0);
}

TEST_CASE("sublevel complexes") {
  auto [k, wf] = k3();
  auto s = sublevel_complex(k, wf, 0.15);
  CHECK(s.count(0) == 3);
  CHECK(s.count(1) == 1);
  CHECK(sublevel_complex(k, wf, -1).empty());
  CHECK(sublevel_complex(k, wf, std::numeric_limits<double>::infinity()) == k);

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = acyclekit::testing::random_complex(rng, 6, 2, 0.5);
    auto w = WeightedFiltration::build(c, acyclekit::testing::random_monotone_weights(rng, c));
    SimplicialComplex prev;
    for (double t : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
      auto sub = sublevel_complex(c, w, t);
      for (const auto& f : prev.all_faces()) CHECK(sub.contains(f));
      prev = sub;
    }
  }
}

TEST_CASE("total order: ties go lexicographic by dimension then vertices") {
  auto k = complete_skeleton(3, 1);
  auto wf = total_order(k, {{0, 0, 0}, {0, 0, 0}});
  std::vector<Face> seen;
  for (const auto& r : wf.global_order()) seen.push_back(k.face(r));
  CHECK(seen == std::vector<Face>{Face{1}, Face{2}, Face{3}, Face{1, 2}, Face{1, 3}, Face{2, 3}});

  auto rev = total_order(k, {{0, 0, 0}, {0, 0, 0}}, TieBreak::reverse_lexicographic());
  CHECK(k.face(rev.global_order()[3]) == Face{2, 3});

  auto fav = total_order(k, {{0, 0, 0}, {0, 0, 0}}, TieBreak::favoring(Face{2, 3}));
  CHECK(k.face(fav.global_order()[3]) == Face{2, 3});
  CHECK(k.face(fav.global_order()[4]) == Face{1, 2});
}

TEST_CASE("total order sorts distinct weights") {
  auto [k, wf] = k3(0.3, 0.1, 0.2);
  CHECK(wf.order(1)[0] == 1);
  CHECK(wf.order(1)[1] == 2);
  CHECK(wf.order(1)[2] == 0);
  CHECK(wf.weight_at(wf.position(1, 2)) == 0.2);
}

TEST_CASE("total order rejects bad weights") {
  auto k = complete_skeleton(3, 1);
  CHECK_THROWS_AS(total_order(k, {{0, 0, 0.5}, {0.1, 0.2, 0.3}}), ValidationError);
  CHECK_THROWS_AS(total_order(k, {{0, 0, 0}, {0.1, 0.2}}), ValidationError);
  CHECK_THROWS_AS(total_order(k, {{0, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(total_order(k, {{0, 0, 0}, {0.1, std::nan(""), 0.3}}), ValidationError);
}

TEST_CASE("total order is strict and refines weights") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = acyclekit::testing::random_complex(rng, 7, 3, 0.35);
    if (k.total_count() > 200) continue;
    auto wf = total_order(k, acyclekit::testing::random_monotone_weights(rng, k, trial % 2 == 0));
    auto order = wf.global_order();
    REQUIRE(order.size() == k.total_count());
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b) {
        CHECK(wf.weight(order[a]) <= wf.weight(order[b]));
        CHECK_FALSE(order[a] == order[b]);
        if (k.face(order[b]).is_subface_of(k.face(order[a]))) CHECK(false);
      }
  }
}
