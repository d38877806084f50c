#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "acyclekit/filtration.hpp"

namespace acyclekit {

struct ComplexReadOptions {
  /// Add missing sub-faces with weight 0 instead of rejecting the file.
  bool auto_close_zero = false;
  TieBreak tie = TieBreak::lexicographic();
};

/// Text format, one face per line: `dim v0 v1 ... vdim weight`.
/// Blank lines and anything after `#` are ignored.
WeightedComplex read_complex(std::istream& in, const ComplexReadOptions& opts = {});
WeightedComplex read_complex_file(const std::filesystem::path& path,
                                  const ComplexReadOptions& opts = {});

/// Faces by (dim, vertices); weights in shortest round-trip form.
void write_complex(std::ostream& out, const SimplicialComplex& k, const WeightedFiltration& wf);
std::string serialize_complex(const SimplicialComplex& k, const WeightedFiltration& wf);

/// Shortest decimal form that parses back to the same double.
std::string format_real(double x);

}  // namespace acyclekit
