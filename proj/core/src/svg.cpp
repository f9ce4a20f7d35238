#include "horo/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace horo {

namespace {

std::string fmt(double v) {
  if (std::abs(v) < 5e-9) v = 0.0;  // avoid "-0" flapping in output
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  return buf;
}

struct Frame {
  double scale, offset;
  double x(double u) const { return offset + scale * u; }
  double y(double v) const { return offset - scale * v; }  // flip to SVG axes
};

// Geodesic between boundary points alpha, beta on the unit circle: the
// circular arc orthogonal to it, or a diameter when beta = -alpha.
void emit_geodesic(std::ostringstream& out, const Frame& fr, std::complex<double> a,
                   std::complex<double> b) {
  double denom = a.real() * b.imag() - a.imag() * b.real();  // Im(conj(a) b)
  double sum = 1.0 + a.real() * b.real() + a.imag() * b.imag();
  if (std::abs(denom) < 1e-12 * (1.0 + std::abs(sum))) {
    out << "<line x1=\"" << fmt(fr.x(a.real())) << "\" y1=\"" << fmt(fr.y(a.imag()))
        << "\" x2=\"" << fmt(fr.x(b.real())) << "\" y2=\"" << fmt(fr.y(b.imag())) << "\"/>\n";
    return;
  }
  // Solve Re(conj(a) c) = 1, Re(conj(b) c) = 1 for the center c.
  double cx = (b.imag() - a.imag()) / denom;
  double cy = (a.real() - b.real()) / denom;
  double r = std::sqrt(cx * cx + cy * cy - 1.0);
  // Sweep toward the inside of the disk; flipped y makes cross > 0 a
  // clockwise SVG sweep (flag 1).
  double cross = (a.real() - cx) * (b.imag() - cy) - (a.imag() - cy) * (b.real() - cx);
  int sweep = cross > 0 ? 1 : 0;
  out << "<path d=\"M " << fmt(fr.x(a.real())) << " " << fmt(fr.y(a.imag())) << " A "
      << fmt(fr.scale * r) << " " << fmt(fr.scale * r) << " 0 0 " << sweep << " "
      << fmt(fr.x(b.real())) << " " << fmt(fr.y(b.imag())) << "\"/>\n";
}

}  // namespace

std::string render_svg(const LambdaAssignment& l, int generation, const RenderOptions& opt) {
  if (generation > 12) fail(errc::depth_limit, "render depth capped at 12");
  Decoration d = build_decoration(l, generation);
  FareyComplex fc = enumerate_edges(generation);

  const double margin = 0.05;
  Frame fr{opt.width / (2.0 * (1.0 + margin)), opt.width / 2.0};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
      << opt.width << "\" viewBox=\"0 0 " << opt.width << " " << opt.width << "\">\n";
  out << "<circle cx=\"" << fmt(fr.offset) << "\" cy=\"" << fmt(fr.offset) << "\" r=\""
      << fmt(fr.scale) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Boundary positions of each decorated vertex come from the decoration
  // itself, so a deformed assignment draws a deformed tessellation.
  auto disk_center = [&](const Rational& v) {
    const LightConePoint& u = d.at(v);
    return std::complex<double>(u.v.x / u.v.z, u.v.y / u.v.z);
  };

  out << "<g fill=\"none\" stroke=\"#1a466b\" stroke-width=\"1\">\n";
  for (const Edge& e : fc.edges) emit_geodesic(out, fr, disk_center(e.lo), disk_center(e.hi));
  out << "</g>\n";

  if (opt.horocycles) {
    out << "<g fill=\"none\" stroke=\"#a03232\" stroke-width=\"0.8\">\n";
    for (const auto& [v, u] : d.points) {
      Horocycle h = duality_to_horocycle(u, Model::disk);
      double r = h.size() / 2.0;
      std::complex<double> w = h.center_disk();
      double cx = (1.0 - r) * w.real(), cy = (1.0 - r) * w.imag();
      out << "<circle cx=\"" << fmt(fr.x(cx)) << "\" cy=\"" << fmt(fr.y(cy)) << "\" r=\""
          << fmt(fr.scale * r) << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (opt.labels && generation <= 4) {
    out << "<g font-family=\"monospace\" font-size=\"10\" fill=\"#333333\">\n";
    for (const auto& [v, u] : d.points) {
      std::complex<double> w = disk_center(v);
      out << "<text x=\"" << fmt(fr.x(1.03 * w.real())) << "\" y=\"" << fmt(fr.y(1.03 * w.imag()))
          << "\">" << v.str() << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace horo
