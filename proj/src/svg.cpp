#include "wdsaw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wdsaw {
namespace {

constexpr int kUnit = 10;
constexpr int kMargin = 10;
constexpr double kZeroScale = 200.0;

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// one colour per k, cycled
const char* palette(std::size_t i) {
  static const char* colours[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  return colours[i % 6];
}

}  // namespace

std::string walk_svg(const Walk& w) {
  auto pts = w.vertices();
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (auto p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const int width = (xmax - xmin) * kUnit + 2 * kMargin;
  const int height = (ymax - ymin) * kUnit + 2 * kMargin;
  auto px = [&](Point p) { return std::make_pair((p.x - xmin) * kUnit + kMargin, (ymax - p.y) * kUnit + kMargin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  auto [ox, oy] = px({0, 0});
  out << "  <circle cx=\"" << ox << "\" cy=\"" << oy << "\" r=\"3\" fill=\"none\" stroke=\"red\"/>\n";
  out << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"M" << ox << ' ' << oy;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    auto [x, y] = px(pts[i]);
    out << " L" << x << ' ' << y;
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

std::string zeros_svg(const std::vector<ComplexRootSet>& roots, const BoundarySet& set) {
  // view [-2.6, 1.2] x [-1.6, 1.6]
  const double re0 = -2.6, re1 = 1.2, im0 = -1.6, im1 = 1.6;
  const double width = (re1 - re0) * kZeroScale, height = (im1 - im0) * kZeroScale;
  auto sx = [&](double re) { return fixed3((re - re0) * kZeroScale); };
  auto sy = [&](double im) { return fixed3((im1 - im) * kZeroScale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed3(width) << "\" height=\"" << fixed3(height)
      << "\" viewBox=\"0 0 " << fixed3(width) << ' ' << fixed3(height) << "\">\n";
  // axes
  out << "  <path fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.5\" d=\"M" << sx(re0) << ' ' << sy(0) << " L"
      << sx(re1) << ' ' << sy(0) << " M" << sx(0) << ' ' << sy(im0) << " L" << sx(0) << ' ' << sy(im1) << "\"/>\n";
  // curve: the even entries are the upper branch, the odd ones its mirror
  for (int branch = 0; branch < 2; ++branch) {
    out << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"";
    bool first = true;
    for (std::size_t i = static_cast<std::size_t>(branch); i < set.curve.size(); i += 2) {
      out << (first ? "M" : " L") << sx(set.curve[i].real()) << ' ' << sy(set.curve[i].imag());
      first = false;
    }
    out << "\"/>\n";
  }
  for (const auto& [a, b] : set.segments)
    out << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"M" << sx(a) << ' ' << sy(0) << " L" << sx(b)
        << ' ' << sy(0) << "\"/>\n";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out << "  <g fill=\"none\" stroke=\"" << palette(i) << "\" data-k=\"" << roots[i].k << "\">\n";
    for (auto z : roots[i].roots) {
      if (z.real() < re0 || z.real() > re1 || z.imag() < im0 || z.imag() > im1) continue;
      out << "    <circle cx=\"" << sx(z.real()) << "\" cy=\"" << sy(z.imag()) << "\" r=\"2\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wdsaw
