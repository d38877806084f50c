#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace acyclekit {

using Vertex = std::uint32_t;

/// A simplex: a strictly increasing, non-empty tuple of vertex ids.
///
/// The one exception is the augmentation face (no vertices, dimension -1),
/// which only appears as the support of the boundary of a vertex.
class Face {
 public:
  /// Sorts the input. Throws MalformedFaceError on an empty tuple or a
  /// repeated vertex.
  explicit Face(std::vector<Vertex> vertices);
  Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

  static Face augmentation() { return Face(); }

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const Vertex> vertices() const { return vertices_; }
  bool is_augmentation() const { return vertices_.empty(); }

  /// The faces obtained by dropping one vertex, in lexicographic order.
  std::vector<Face> facets() const;
  bool is_subface_of(const Face& other) const;

  std::string to_string() const;

  /// Order by (dimension, vertex tuple).
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);
  friend bool operator==(const Face& a, const Face& b) = default;

 private:
  Face() = default;
  struct Unchecked {};
  Face(Unchecked, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}

  std::vector<Vertex> vertices_;
};

/// A GF(2) chain of fixed dimension, stored by its support.
class Chain {
 public:
  explicit Chain(int dim) : dim_(dim) {}
  Chain(int dim, std::set<Face> support);

  int dim() const { return dim_; }
  const std::set<Face>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  /// Toggle one face (GF(2) addition of an elementary chain).
  void toggle(const Face& f);

  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend bool operator==(const Chain& a, const Chain& b) = default;

 private:
  int dim_;
  std::set<Face> support_;
};

/// Boundary of a single face over GF(2). For a vertex this is the
/// augmentation chain in dimension -1.
Chain boundary_chain(const Face& face);

/// Boundary of a chain; the boundary of the augmentation chain is zero.
Chain boundary_chain(const Chain& chain);

}  // namespace acyclekit
