#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acyclekit/face.hpp"

namespace acyclekit {

/// Index of a face inside its dimension. Indices follow lexicographic
/// vertex order and double as row/column ids of boundary matrices.
using FaceIndex = std::uint32_t;

struct FaceRef {
  int dim;
  FaceIndex index;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// Finite abstract simplicial complex, immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given vertex tuples.
  static SimplicialComplex closure_of(std::span<const std::vector<Vertex>> tuples);
  static SimplicialComplex closure_of(std::span<const Face> faces);

  /// Takes a face family that must already be downward closed. Throws
  /// ValidationError naming the first missing sub-face otherwise.
  static SimplicialComplex from_closed_faces(std::vector<Face> faces);

  /// Top dimension, -1 for the empty complex.
  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return faces_.empty(); }

  /// f_d; zero outside [0, dim()].
  std::size_t count(int d) const;
  std::size_t total_count() const;

  const Face& face(int d, FaceIndex i) const { return faces_[d][i]; }
  const Face& face(FaceRef r) const { return faces_[r.dim][r.index]; }
  std::span<const Face> faces(int d) const;

  std::optional<FaceIndex> index_of(const Face& f) const;
  bool contains(const Face& f) const { return index_of(f).has_value(); }

  /// Indices (in dimension d-1) of the facets of face (d, i), in the
  /// lexicographic order of Face::facets(). Requires d >= 1.
  std::span<const FaceIndex> facets(int d, FaceIndex i) const;

  /// All faces of dimension <= k.
  SimplicialComplex skeleton(int k) const;

  /// Every face of the complex, ordered by (dim, vertices).
  std::vector<Face> all_faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  explicit SimplicialComplex(std::vector<std::vector<Face>> by_dim);
  void index_facets();

  std::vector<std::vector<Face>> faces_;
  // facets_[d] holds (d+1) entries per d-face; facets_[0] is empty.
  std::vector<std::vector<FaceIndex>> facets_;
};

/// Downward closure of a list of vertex tuples.
SimplicialComplex build_complex(std::span<const std::vector<Vertex>> tuples);

/// All faces of dimension <= d on the vertices 1..n.
SimplicialComplex complete_skeleton(std::size_t n, int d);

/// Union and intersection of two complexes over a common vertex set.
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Binomial coefficient as an unsigned 64-bit integer (no overflow checks
/// beyond the sizes used here).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace acyclekit
