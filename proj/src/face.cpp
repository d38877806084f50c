#include "acyclekit/face.hpp"

#include <algorithm>
#include <sstream>

#include "acyclekit/error.hpp"

namespace acyclekit {

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw MalformedFaceError("face must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw MalformedFaceError("repeated vertex in face " + to_string());
  }
}

std::vector<Face> Face::facets() const {
  std::vector<Face> out;
  if (vertices_.size() <= 1) return out;
  out.reserve(vertices_.size());
  // Dropping the last vertex first gives lexicographic order.
  for (std::size_t drop = vertices_.size(); drop-- > 0;) {
    std::vector<Vertex> v;
    v.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != drop) v.push_back(vertices_[i]);
    out.push_back(Face(Unchecked{}, std::move(v)));
  }
  return out;
}

bool Face::is_subface_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

Chain::Chain(int dim, std::set<Face> support) : dim_(dim), support_(std::move(support)) {
  for (const auto& f : support_)
    if (f.dim() != dim_) throw ValidationError("chain face " + f.to_string() + " has wrong dimension");
}

void Chain::toggle(const Face& f) {
  if (f.dim() != dim_) throw ValidationError("chain face " + f.to_string() + " has wrong dimension");
  if (auto it = support_.find(f); it != support_.end())
    support_.erase(it);
  else
    support_.insert(f);
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.dim_ != dim_) throw ValidationError("adding chains of different dimensions");
  for (const auto& f : other.support_) toggle(f);
  return *this;
}

Chain boundary_chain(const Face& face) {
  if (face.is_augmentation()) return Chain(-2);
  if (face.dim() == 0) return Chain(-1, {Face::augmentation()});
  Chain c(face.dim() - 1);
  for (auto& f : face.facets()) c.toggle(f);
  return c;
}

Chain boundary_chain(const Chain& chain) {
  Chain out(chain.dim() - 1);
  if (chain.dim() < 0) return out;
  for (const auto& f : chain.support()) out += boundary_chain(f);
  return out;
}

}  // namespace acyclekit
