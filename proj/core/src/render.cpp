#include "thetakit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

std::string fmt(const char* spec, double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string g6(double v) { return fmt("%.6g", v); }
std::string g12(double v) { return fmt("%.12g", v); }

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
};

std::vector<Vec2> sample_segment(const CurveSegment& seg, int n) {
  const PlaneCurve& c = seg.curve();
  const Interval sr = seg.s_range();
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = i == n - 1 ? sr.hi : sr.lo + sr.length() * i / (n - 1);
    pts.push_back(c.position(c.t_of_s(s)));
  }
  return pts;
}

// 1, 2 or 5 times a power of ten, close to range / 5.
double nice_step(double range) {
  if (!(range > 0.0)) return 1.0;
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double f = raw / mag;
  const double nice = f < 1.5 ? 1.0 : (f < 3.5 ? 2.0 : (f < 7.5 ? 5.0 : 10.0));
  return nice * mag;
}

}  // namespace

std::string emit_svg_curve(std::span<const CurveSegment> segments,
                           std::span<const MarkerSet> markers, const SvgOptions& options) {
  if (segments.empty()) throw Error(ErrorCode::EmptyInput, "no curve segment to draw");
  const int n = std::max(2, options.polyline_samples);

  std::vector<std::vector<Vec2>> paths;
  Box box;
  for (const CurveSegment& seg : segments) {
    paths.push_back(sample_segment(seg, n));
    for (Vec2 p : paths.back()) box.add(p);
  }
  for (const MarkerSet& set : markers) {
    for (const Marker& m : set.markers) box.add(m.frame.position);
  }
  for (Vec2 p : options.highlights) box.add(p);

  double w = box.xmax - box.xmin;
  double h = box.ymax - box.ymin;
  if (!(w > 0.0)) w = h > 0.0 ? h : 1.0;
  if (!(h > 0.0)) h = w;
  const double pad_x = 0.05 * w, pad_y = 0.05 * h;
  const double vx = box.xmin - pad_x;
  const double vw = w + 2.0 * pad_x;
  const double vh = h + 2.0 * pad_y;
  // Flipped: the group maps y to -y, so the viewBox spans [-ymax, -ymin].
  const double vy = -(box.ymax + pad_y);
  const double diag = std::hypot(vw, vh);
  const double radius = options.marker_radius.value_or(0.008 * diag);
  const double stroke = 0.003 * diag;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         g6(options.pixel_width) + "\" height=\"" + g6(options.pixel_width * vh / vw) +
         "\" viewBox=\"" + g6(vx) + " " + g6(vy) + " " + g6(vw) + " " + g6(vh) + "\">\n";
  if (!options.title.empty()) out += "  <title>" + escape_xml(options.title) + "</title>\n";
  out += "  <g transform=\"scale(1,-1)\">\n";

  int prev_sign = 0;
  bool alt = false;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const int sign = segments[i].sign();
    alt = sign == prev_sign ? !alt : false;
    prev_sign = sign;
    const char* color = sign > 0 ? (alt ? palette::kPositiveAlt : palette::kPositive)
                                 : (alt ? palette::kNegativeAlt : palette::kNegative);
    std::string d;
    for (std::size_t j = 0; j < paths[i].size(); ++j) {
      d += j == 0 ? "M" : " L";
      d += g6(paths[i][j].x) + " " + g6(paths[i][j].y);
    }
    out += "    <path class=\"segment\" data-sign=\"" + std::string(sign > 0 ? "+" : "-") +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + g6(stroke) +
           "\" d=\"" + d + "\"/>\n";
  }
  for (const MarkerSet& set : markers) {
    for (const Marker& m : set.markers) {
      out += "    <circle class=\"marker\" cx=\"" + g6(m.frame.position.x) + "\" cy=\"" +
             g6(m.frame.position.y) + "\" r=\"" + g6(radius) + "\" fill=\"" + palette::kMarker +
             "\"/>\n";
    }
  }
  for (Vec2 p : options.highlights) {
    out += "    <circle class=\"highlight\" cx=\"" + g6(p.x) + "\" cy=\"" + g6(p.y) + "\" r=\"" +
           g6(1.8 * radius) + "\" fill=\"" + palette::kRidge + "\"/>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

std::string emit_svg_theta_plot(const CurveSegment& segment, int n_samples,
                                std::optional<double> delta_theta) {
  if (n_samples < 2) throw Error(ErrorCode::EmptyInput, "theta plot needs at least 2 samples");

  const Interval sr = segment.s_range();
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double s = i == n_samples - 1 ? sr.hi : sr.lo + sr.length() * i / (n_samples - 1);
    pts.push_back({s, segment.theta_of_s(s)});
  }
  const Interval tr = segment.theta_range();

  constexpr double kWidth = 640.0, kHeight = 400.0;
  constexpr double kLeft = 60.0, kRight = 20.0, kTop = 20.0, kBottom = 50.0;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const double th_span = tr.length() > 0.0 ? tr.length() : 1.0;
  const auto X = [&](double s) { return kLeft + (s - sr.lo) / sr.length() * pw; };
  const auto Y = [&](double th) { return kTop + (tr.hi - th) / th_span * ph; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
         "height=\"400\" viewBox=\"0 0 640 400\">\n";
  out += "  <title>theta(s) against arc length s</title>\n";

  // Grid lines at the marker angles.
  if (delta_theta && *delta_theta > 0.0) {
    out += "  <g class=\"theta-grid\" stroke=\"#BBBBBB\" stroke-width=\"0.5\">\n";
    const double lo = tr.lo + kThetaEndMargin, hi = tr.hi - kThetaEndMargin;
    for (long k = static_cast<long>(std::floor(lo / *delta_theta));
         static_cast<double>(k) * *delta_theta < hi; ++k) {
      const double th = static_cast<double>(k) * *delta_theta;
      if (!(th > lo)) continue;
      out += "    <line x1=\"" + g6(kLeft) + "\" y1=\"" + g6(Y(th)) + "\" x2=\"" +
             g6(kLeft + pw) + "\" y2=\"" + g6(Y(th)) + "\"/>\n";
    }
    out += "  </g>\n";
  }

  // Axes and ticks.
  out += "  <g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\" font-family=\"sans-serif\" "
         "font-size=\"11\">\n";
  out += "    <line x1=\"" + g6(kLeft) + "\" y1=\"" + g6(kTop + ph) + "\" x2=\"" +
         g6(kLeft + pw) + "\" y2=\"" + g6(kTop + ph) + "\"/>\n";
  out += "    <line x1=\"" + g6(kLeft) + "\" y1=\"" + g6(kTop) + "\" x2=\"" + g6(kLeft) +
         "\" y2=\"" + g6(kTop + ph) + "\"/>\n";
  const double sx = nice_step(sr.length());
  for (double v = std::ceil(sr.lo / sx) * sx; v <= sr.hi + 1e-12 * sx; v += sx) {
    out += "    <line x1=\"" + g6(X(v)) + "\" y1=\"" + g6(kTop + ph) + "\" x2=\"" + g6(X(v)) +
           "\" y2=\"" + g6(kTop + ph + 5.0) + "\"/>\n";
    out += "    <text stroke=\"none\" text-anchor=\"middle\" x=\"" + g6(X(v)) + "\" y=\"" +
           g6(kTop + ph + 18.0) + "\">" + g6(std::fabs(v) < 1e-12 * sx ? 0.0 : v) + "</text>\n";
  }
  const double sy = nice_step(th_span);
  for (double v = std::ceil(tr.lo / sy) * sy; v <= tr.hi + 1e-12 * sy; v += sy) {
    out += "    <line x1=\"" + g6(kLeft - 5.0) + "\" y1=\"" + g6(Y(v)) + "\" x2=\"" + g6(kLeft) +
           "\" y2=\"" + g6(Y(v)) + "\"/>\n";
    out += "    <text stroke=\"none\" text-anchor=\"end\" x=\"" + g6(kLeft - 8.0) + "\" y=\"" +
           g6(Y(v) + 4.0) + "\">" + g6(std::fabs(v) < 1e-12 * sy ? 0.0 : v) + "</text>\n";
  }
  out += "    <text stroke=\"none\" text-anchor=\"middle\" x=\"" + g6(kLeft + 0.5 * pw) +
         "\" y=\"" + g6(kHeight - 8.0) + "\">s</text>\n";
  out += "    <text stroke=\"none\" text-anchor=\"middle\" x=\"16\" y=\"" + g6(kTop + 0.5 * ph) +
         "\">theta</text>\n";
  out += "  </g>\n";

  std::string points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) points += ' ';
    points += g6(X(pts[i].x)) + "," + g6(Y(pts[i].y));
  }
  out += "  <polyline class=\"theta\" fill=\"none\" stroke=\"" +
         std::string(segment.sign() > 0 ? palette::kPositive : palette::kNegative) +
         "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  out += "</svg>\n";
  return out;
}

namespace {

void append_rows(std::string& out, const MarkerSet& set) {
  for (const Marker& m : set.markers) {
    out += std::to_string(m.k);
    out += ',' + g12(m.frame.theta.value_or(static_cast<double>(m.k) * set.delta_theta));
    out += ',' + g12(m.frame.s);
    out += ',' + g12(m.frame.position.x);
    out += ',' + g12(m.frame.position.y);
    out += ',' + g12(m.frame.kappa);
    out += ',' + g12(m.frame.dkappa_ds);
    out += '\n';
  }
}

constexpr const char* kCsvHeader = "k,theta,s,x,y,kappa,dkappa_ds\n";

}  // namespace

std::string emit_csv_markers(const MarkerSet& markers) {
  std::string out = kCsvHeader;
  append_rows(out, markers);
  return out;
}

std::string emit_csv_markers(std::span<const MarkerSet> sets) {
  std::vector<const MarkerSet*> ordered;
  for (const MarkerSet& s : sets) {
    if (!s.markers.empty()) ordered.push_back(&s);
  }
  std::stable_sort(ordered.begin(), ordered.end(), [](const MarkerSet* a, const MarkerSet* b) {
    return a->markers.front().frame.s < b->markers.front().frame.s;
  });
  std::string out = kCsvHeader;
  for (const MarkerSet* s : ordered) append_rows(out, *s);
  return out;
}

std::string emit_obj_mesh(const RevolutionMesh& mesh, bool include_faces) {
  if (mesh.vertices.empty()) throw Error(ErrorCode::EmptyInput, "mesh has no vertices");
  const auto f6 = [](double v) { return fmt("%.6f", std::fabs(v) < 5e-7 ? 0.0 : v); };

  std::string out;
  out += "# thetakit surface of revolution\n";
  out += "# vertices " + std::to_string(mesh.vertices.size()) + " rings " +
         std::to_string(mesh.rings.size()) + " meridians " +
         std::to_string(mesh.meridians.size()) + "\n";
  for (const Vec3& v : mesh.vertices) {
    out += "v " + f6(v.x) + " " + f6(v.y) + " " + f6(v.z) + "\n";
  }
  for (std::size_t k = 0; k < mesh.rings.size(); ++k) {
    const MeshRing& ring = mesh.rings[k];
    std::string feature = "none";
    if (ring.feature == (kFeatureParabolic | kFeatureRidge)) {
      feature = "parabolic+ridge";
    } else if (ring.feature & kFeatureParabolic) {
      feature = "parabolic";
    } else if (ring.feature & kFeatureRidge) {
      feature = "ridge";
    }
    out += "# ring " + std::to_string(k) + " s=" + g12(ring.s) +
           " theta=" + (ring.theta ? g12(*ring.theta) : std::string("none")) +
           " region=" + std::string(to_string(ring.region)) + " feature=" + feature + "\n";
    out += "l";
    for (std::size_t idx : ring.vertices) out += " " + std::to_string(idx + 1);
    out += " " + std::to_string(ring.vertices.front() + 1) + "\n";
  }
  out += "# meridians\n";
  for (const auto& m : mesh.meridians) {
    out += "l";
    for (std::size_t idx : m) out += " " + std::to_string(idx + 1);
    out += "\n";
  }
  if (include_faces && !mesh.faces.empty()) {
    out += "# faces\n";
    for (const auto& f : mesh.faces) {
      out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
             std::to_string(f[2] + 1) + " " + std::to_string(f[3] + 1) + "\n";
    }
  }
  return out;
}

}  // namespace thetakit
