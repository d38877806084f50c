#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace acyclekit {

struct HistogramSpec {
  double lo = -1.0;
  double hi = 5.0;
  std::size_t bins = 24;
  std::string title;
};

/// Static SVG of pooled scaled death times, normalised to an intensity
/// per trial, with the e^{-x} curve drawn over it.
void write_intensity_svg(std::ostream& out, const std::vector<double>& pooled, std::size_t trials,
                         const HistogramSpec& spec);

}  // namespace acyclekit
