// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace rootmult::cli {

struct Marker {
  double re = 0.0;
  double im = 0.0;
  long multiplicity = 1;
  bool origin = false;  // the zero-root marker gets its own fill
};

// Scatter of the spectrum in the complex plane, marker area proportional to
// multiplicity. Output is byte-deterministic for a fixed marker list.
std::string render_spectrum(std::vector<Marker> markers);

}  // namespace rootmult::cli
