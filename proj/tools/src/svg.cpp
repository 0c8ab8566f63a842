// SPDX-License-Identifier: Apache-2.0
#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rootmult::cli {

namespace {

constexpr double kSize = 640.0;
constexpr double kMaxMarker = 26.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_spectrum(std::vector<Marker> markers) {
  std::sort(markers.begin(), markers.end(), [](const Marker& a, const Marker& b) {
    if (a.re != b.re) return a.re < b.re;
    if (a.im != b.im) return a.im < b.im;
    return a.multiplicity < b.multiplicity;
  });

  double extent = 1.0;
  long mmax = 1;
  for (const Marker& m : markers) {
    extent = std::max({extent, std::abs(m.re), std::abs(m.im)});
    mmax = std::max(mmax, m.multiplicity);
  }
  const double scale = (kSize / 2.0 - kMaxMarker - 8.0) / extent;
  const double mid = kSize / 2.0;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
  out += "<line x1=\"0\" y1=\"" + num(mid) + "\" x2=\"640\" y2=\"" + num(mid) +
         "\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + num(mid) + "\" y1=\"0\" x2=\"" + num(mid) +
         "\" y2=\"640\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n";
  // unit circle for orientation
  out += "<circle cx=\"" + num(mid) + "\" cy=\"" + num(mid) + "\" r=\"" + num(scale) +
         "\" fill=\"none\" stroke=\"#e4e4e4\" stroke-width=\"1\"/>\n";

  for (const Marker& m : markers) {
    double cx = mid + m.re * scale;
    double cy = mid - m.im * scale;
    double r = kMaxMarker * std::sqrt(static_cast<double>(m.multiplicity) /
                                      static_cast<double>(mmax));
    r = std::max(r, 1.5);
    out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
           "\" fill=\"" + (m.origin ? "#c44e52" : "#4878a8") +
           "\" fill-opacity=\"0.55\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rootmult::cli
