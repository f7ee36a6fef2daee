#include "trop/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

namespace {

constexpr double kFrameLo = 80.0, kFrameHi = 560.0;

struct Mapper {
  Window w;
  double sx(const Rational& x) const {
    return kFrameLo + (x - w.x_lo).to_double() / (w.x_hi - w.x_lo).to_double() * (kFrameHi - kFrameLo);
  }
  double sy(const Rational& y) const {
    return kFrameHi - (y - w.y_lo).to_double() / (w.y_hi - w.y_lo).to_double() * (kFrameHi - kFrameLo);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

const char* palette(int i) {
  static const char* colors[] = {"#1b6ca8", "#b03a2e", "#1e8449", "#9a7d0a",
                                 "#6c3483", "#148f77", "#a04000", "#2e4053"};
  return colors[i % 8];
}

// exact clip of {p + s·d : s in [s_lo, s_hi]} against lo ≤ value ≤ hi along
// one coordinate; infinite bounds flagged by has_*
struct ParamRange {
  bool empty = false;
  bool has_lo = false, has_hi = false;
  Rational lo, hi;

  void cut(const Rational& p, const Rational& d, const Rational& bound_lo, const Rational& bound_hi) {
    if (d.is_zero()) {
      if (p < bound_lo || bound_hi < p) empty = true;
      return;
    }
    Rational a = (bound_lo - p) / d, b = (bound_hi - p) / d;
    if (d.sign() < 0) std::swap(a, b);
    if (!has_lo || lo < a) {
      lo = a;
      has_lo = true;
    }
    if (!has_hi || b < hi) {
      hi = b;
      has_hi = true;
    }
    if (has_lo && has_hi && hi < lo) empty = true;
  }
};

void draw_param_line(std::ostringstream& os, const Mapper& m, const Vec& p, const Vec& d,
                     std::optional<Rational> s_lo, std::optional<Rational> s_hi,
                     const char* color) {
  ParamRange r;
  if (s_lo) {
    r.has_lo = true;
    r.lo = *s_lo;
  }
  if (s_hi) {
    r.has_hi = true;
    r.hi = *s_hi;
  }
  r.cut(p(0), d(0), m.w.x_lo, m.w.x_hi);
  r.cut(p(1), d(1), m.w.y_lo, m.w.y_hi);
  if (r.empty || !r.has_lo || !r.has_hi || r.hi < r.lo) return;
  Vec a = p + d * r.lo, b = p + d * r.hi;
  os << "<line x1=\"" << fmt(m.sx(a(0))) << "\" y1=\"" << fmt(m.sy(a(1))) << "\" x2=\""
     << fmt(m.sx(b(0))) << "\" y2=\"" << fmt(m.sy(b(1))) << "\" stroke=\"" << color
     << "\" stroke-width=\"2\"/>\n";
}

void draw_cell(std::ostringstream& os, const Mapper& m, const Polyhedron& cell, const char* color) {
  auto verts = cell.vertices();
  auto rays = cell.recession_rays();
  const Mat& lin = cell.homog().lineality();
  if (cell.dim() == 0) {
    const Vec& v = verts.front();
    if (v(0) < m.w.x_lo || m.w.x_hi < v(0) || v(1) < m.w.y_lo || m.w.y_hi < v(1)) return;
    os << "<circle cx=\"" << fmt(m.sx(v(0))) << "\" cy=\"" << fmt(m.sy(v(1)))
       << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    return;
  }
  if (cell.dim() != 1) return;  // 2-cells are handled by the full-stratum wash
  if (verts.size() == 2) {
    draw_param_line(os, m, verts[0], Vec(verts[1] - verts[0]), Rational(0), Rational(1), color);
  } else if (verts.size() == 1 && rays.size() == 1) {
    draw_param_line(os, m, verts[0], rays[0], Rational(0), std::nullopt, color);
  } else if (verts.size() == 1 && lin.cols() == 1) {
    draw_param_line(os, m, verts[0], Vec(lin.col(0).head(2)), std::nullopt, std::nullopt, color);
  }
}

}  // namespace

std::string render_svg(const StratifiedTrop& st, const Window& window) {
  const Fan& fan = *st.fan;
  if (fan.rank() != 2) throw UnsupportedError("plotting is scoped to rank-2 fans");
  if (!(window.x_lo < window.x_hi) || !(window.y_lo < window.y_hi))
    throw DomainError("window must have positive extent");
  Mapper m{window};
  Rational cx = (window.x_lo + window.x_hi) / Rational(2);
  Rational cy = (window.y_lo + window.y_hi) / Rational(2);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"760\" "
        "viewBox=\"0 0 640 760\">\n";
  os << "<rect x=\"" << fmt(kFrameLo) << "\" y=\"" << fmt(kFrameLo) << "\" width=\""
     << fmt(kFrameHi - kFrameLo) << "\" height=\"" << fmt(kFrameHi - kFrameLo)
     << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";

  std::vector<std::string> legend;
  for (int i = 0; i < fan.num_cones(); ++i) {
    if (st.kinds[static_cast<size_t>(i)] == StratumKind::Empty) continue;
    const Cone& cone = fan.cone(i);
    const char* color = palette(i);
    std::ostringstream label;
    label << "stratum [";
    const auto& idxs = fan.ray_indices(i);
    for (size_t k = 0; k < idxs.size(); ++k) label << (k ? " " : "") << idxs[k];
    label << "] "
          << (st.kinds[static_cast<size_t>(i)] == StratumKind::Full ? "full" : "cells");

    if (cone.is_zero()) {
      // dense torus: cells inside the window
      if (st.kinds[static_cast<size_t>(i)] == StratumKind::Full) {
        os << "<rect x=\"" << fmt(kFrameLo) << "\" y=\"" << fmt(kFrameLo) << "\" width=\""
           << fmt(kFrameHi - kFrameLo) << "\" height=\"" << fmt(kFrameHi - kFrameLo)
           << "\" fill=\"" << color << "\" fill-opacity=\"0.15\"/>\n";
      } else {
        for (const auto& cell : st.complexes[static_cast<size_t>(i)].cells)
          draw_cell(os, m, cell, color);
      }
      legend.push_back(label.str() + " (interior)");
      continue;
    }

    // boundary stratum: anchored where the cone direction exits the frame
    Vec dir(2);
    dir(0) = dir(1) = Rational(0);
    for (Eigen::Index j = 0; j < cone.rays().cols(); ++j) dir += cone.rays().col(j);
    Rational sx = dir(0).is_zero()
                      ? Rational(0)
                      : (dir(0).sign() > 0 ? window.x_hi - cx : window.x_lo - cx) / dir(0);
    Rational sy = dir(1).is_zero()
                      ? Rational(0)
                      : (dir(1).sign() > 0 ? window.y_hi - cy : window.y_lo - cy) / dir(1);
    Rational s = dir(0).is_zero() ? sy : (dir(1).is_zero() ? sx : std::min(sx, sy));
    double ax = m.sx(cx + s * dir(0));
    double ay = m.sy(cy + s * dir(1));

    if (cone.dim() == 2) {
      // fixed point: a single square marker at the frame
      os << "<rect x=\"" << fmt(ax - 5) << "\" y=\"" << fmt(ay - 5)
         << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
      legend.push_back(label.str() + " (corner mark)");
      continue;
    }

    // ray stratum: slide along the frame tangent by the N(σ)-coordinate
    bool on_vertical_side = !dir(0).is_zero() && (dir(1).is_zero() || !(sy < sx));
    if (st.kinds[static_cast<size_t>(i)] == StratumKind::Full) {
      os << "<line x1=\"" << fmt(on_vertical_side ? ax : kFrameLo) << "\" y1=\""
         << fmt(on_vertical_side ? kFrameLo : ay) << "\" x2=\""
         << fmt(on_vertical_side ? ax : kFrameHi) << "\" y2=\""
         << fmt(on_vertical_side ? kFrameHi : ay) << "\" stroke=\"" << color
         << "\" stroke-width=\"6\" stroke-opacity=\"0.5\"/>\n";
    } else {
      for (const auto& cell : st.complexes[static_cast<size_t>(i)].cells) {
        for (const auto& v : cell.vertices()) {
          // the N(σ)-coordinate moves the mark along the frame side
          double off = (v(0) * Rational(static_cast<long long>(kFrameHi - kFrameLo)) /
                        (on_vertical_side ? (window.y_hi - window.y_lo)
                                          : (window.x_hi - window.x_lo)))
                           .to_double();
          double px = on_vertical_side ? ax : ax + off;
          double py = on_vertical_side ? ay - off : ay;
          px = std::min(std::max(px, kFrameLo), kFrameHi);
          py = std::min(std::max(py, kFrameLo), kFrameHi);
          os << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\"5\" fill=\""
             << color << "\" stroke=\"#000\" stroke-width=\"0.8\"/>\n";
        }
      }
    }
    legend.push_back(label.str() + " (frame mark)");
  }

  double ly = 600;
  os << "<text x=\"80\" y=\"585\" font-size=\"13\" fill=\"#000\">frame = strata at infinity</text>\n";
  for (size_t k = 0; k < legend.size(); ++k) {
    int cone_index = -1;
    // recover the palette color by re-walking the nonempty strata in order
    int seen = -1;
    for (int i = 0; i < fan.num_cones() && cone_index < 0; ++i) {
      if (st.kinds[static_cast<size_t>(i)] == StratumKind::Empty) continue;
      if (++seen == static_cast<int>(k)) cone_index = i;
    }
    os << "<rect x=\"80\" y=\"" << fmt(ly - 9) << "\" width=\"9\" height=\"9\" fill=\""
       << palette(cone_index) << "\"/>\n";
    os << "<text x=\"96\" y=\"" << fmt(ly) << "\" font-size=\"12\" fill=\"#000\">" << legend[k]
       << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace trop
