#include "acyclekit/complex.hpp"

#include <algorithm>
#include <set>

#include "acyclekit/error.hpp"

namespace acyclekit {

namespace {

std::vector<std::vector<Face>> bucket_by_dim(std::set<Face> faces) {
  std::vector<std::vector<Face>> by_dim;
  for (auto& f : faces) {
    if (static_cast<int>(by_dim.size()) <= f.dim()) by_dim.resize(f.dim() + 1);
    by_dim[f.dim()].push_back(f);
  }
  return by_dim;
}

void next_combination_into(std::vector<Vertex>& comb, std::size_t n) {
  // comb is a strictly increasing tuple over 1..n; advance lexicographically.
  std::size_t k = comb.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (comb[i] < n - (k - 1 - i)) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return;
    }
  }
  comb.clear();
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Face>> by_dim)
    : faces_(std::move(by_dim)) {
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
  index_facets();
}

void SimplicialComplex::index_facets() {
  facets_.assign(faces_.size(), {});
  for (std::size_t d = 1; d < faces_.size(); ++d) {
    auto& out = facets_[d];
    out.reserve(faces_[d].size() * (d + 1));
    for (const auto& f : faces_[d]) {
      for (const auto& facet : f.facets()) {
        auto idx = index_of(facet);
        if (!idx) throw ValidationError("missing sub-face " + facet.to_string() + " of " + f.to_string());
        out.push_back(*idx);
      }
    }
  }
}

SimplicialComplex SimplicialComplex::closure_of(std::span<const Face> faces) {
  std::set<Face> all;
  std::vector<Face> stack(faces.begin(), faces.end());
  while (!stack.empty()) {
    Face f = std::move(stack.back());
    stack.pop_back();
    if (!all.insert(f).second) continue;
    for (auto& g : f.facets())
      if (!all.count(g)) stack.push_back(std::move(g));
  }
  return SimplicialComplex(bucket_by_dim(std::move(all)));
}

SimplicialComplex SimplicialComplex::closure_of(std::span<const std::vector<Vertex>> tuples) {
  std::vector<Face> faces;
  faces.reserve(tuples.size());
  for (const auto& t : tuples) faces.emplace_back(t);
  return closure_of(std::span<const Face>(faces));
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<Face> faces) {
  std::set<Face> all(std::make_move_iterator(faces.begin()), std::make_move_iterator(faces.end()));
  // index_facets() rejects any face whose facet is absent.
  return SimplicialComplex(bucket_by_dim(std::move(all)));
}

std::size_t SimplicialComplex::count(int d) const {
  if (d < 0 || d > dim()) return 0;
  return faces_[d].size();
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& v : faces_) n += v.size();
  return n;
}

std::span<const Face> SimplicialComplex::faces(int d) const {
  if (d < 0 || d > dim()) return {};
  return faces_[d];
}

std::optional<FaceIndex> SimplicialComplex::index_of(const Face& f) const {
  int d = f.dim();
  if (d < 0 || d > dim()) return std::nullopt;
  const auto& v = faces_[d];
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it == v.end() || *it != f) return std::nullopt;
  return static_cast<FaceIndex>(it - v.begin());
}

std::span<const FaceIndex> SimplicialComplex::facets(int d, FaceIndex i) const {
  return std::span<const FaceIndex>(facets_[d]).subspan(static_cast<std::size_t>(i) * (d + 1), d + 1);
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
  std::vector<std::vector<Face>> by_dim;
  for (int d = 0; d <= std::min(k, dim()); ++d) by_dim.push_back(faces_[d]);
  return SimplicialComplex(std::move(by_dim));
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  out.reserve(total_count());
  for (const auto& v : faces_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

SimplicialComplex build_complex(std::span<const std::vector<Vertex>> tuples) {
  return SimplicialComplex::closure_of(tuples);
}

SimplicialComplex complete_skeleton(std::size_t n, int d) {
  if (n < 1 || d < 0) throw PreconditionError("complete_skeleton needs n >= 1 and d >= 0");
  std::vector<Face> faces;
  for (int k = 0; k <= d && static_cast<std::size_t>(k) < n; ++k) {
    std::vector<Vertex> comb(k + 1);
    for (int j = 0; j <= k; ++j) comb[j] = static_cast<Vertex>(j + 1);
    while (!comb.empty()) {
      faces.emplace_back(comb);
      next_combination_into(comb, n);
    }
  }
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto faces = a.all_faces();
  auto more = b.all_faces();
  faces.insert(faces.end(), more.begin(), more.end());
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> faces;
  for (const auto& f : a.all_faces())
    if (b.contains(f)) faces.push_back(f);
  return SimplicialComplex::from_closed_faces(std::move(faces));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace acyclekit
