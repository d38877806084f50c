#include "acyclekit/complex_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "acyclekit/error.hpp"

namespace acyclekit {

namespace {

std::string trim_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

template <typename T>
T parse_number(const std::string& tok, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ValidationError("line " + std::to_string(line_no) + ": bad number '" + tok + "'");
  return value;
}

}  // namespace

WeightedComplex read_complex(std::istream& in, const ComplexReadOptions& opts) {
  std::map<Face, double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(trim_comment(line));
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    int dim = parse_number<int>(tokens[0], line_no);
    if (dim < 0) throw ValidationError("line " + std::to_string(line_no) + ": negative dimension");
    if (tokens.size() != static_cast<std::size_t>(dim) + 3)
      throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim + 1) +
                            " vertices and a weight");
    std::vector<Vertex> verts;
    for (int i = 0; i <= dim; ++i) verts.push_back(parse_number<Vertex>(tokens[1 + i], line_no));
    double w = parse_number<double>(tokens.back(), line_no);
    if (!std::isfinite(w)) throw ValidationError("line " + std::to_string(line_no) + ": non-finite weight");
    Face f(std::move(verts));
    if (!weights.emplace(f, w).second)
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate face " + f.to_string());
  }

  std::vector<Face> faces;
  faces.reserve(weights.size());
  for (const auto& [f, w] : weights) faces.push_back(f);
  SimplicialComplex k;
  if (opts.auto_close_zero) {
    k = SimplicialComplex::closure_of(std::span<const Face>(faces));
  } else {
    k = SimplicialComplex::from_closed_faces(std::move(faces));
  }
  FaceWeights w(k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) {
    w[d].reserve(k.count(d));
    for (const auto& f : k.faces(d)) {
      auto it = weights.find(f);
      w[d].push_back(it == weights.end() ? 0.0 : it->second);
    }
  }
  auto wf = WeightedFiltration::build(k, std::move(w), opts.tie);
  return {std::move(k), std::move(wf)};
}

WeightedComplex read_complex_file(const std::filesystem::path& path, const ComplexReadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return read_complex(in, opts);
}

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_complex(std::ostream& out, const SimplicialComplex& k, const WeightedFiltration& wf) {
  for (int d = 0; d <= k.dim(); ++d) {
    for (FaceIndex i = 0; i < k.count(d); ++i) {
      out << d;
      for (Vertex v : k.face(d, i).vertices()) out << ' ' << v;
      out << ' ' << format_real(wf.weight(d, i)) << '\n';
    }
  }
}

std::string serialize_complex(const SimplicialComplex& k, const WeightedFiltration& wf) {
  std::ostringstream os;
  write_complex(os, k, wf);
  return os.str();
}

}  // namespace acyclekit
