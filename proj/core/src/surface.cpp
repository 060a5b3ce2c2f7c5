#include "thetakit/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thetakit/error.hpp"

namespace thetakit {

std::string_view to_string(Region r) noexcept {
  switch (r) {
    case Region::Elliptic: return "elliptic";
    case Region::Hyperbolic: return "hyperbolic";
    case Region::Parabolic: return "parabolic";
  }
  return "?";
}

std::string_view to_string(FeatureCause c) noexcept {
  switch (c) {
    case FeatureCause::ProfileInflection: return "profile_inflection";
    case FeatureCause::ParallelFlat: return "parallel_flat";
    case FeatureCause::ProfileVertex: return "profile_vertex";
  }
  return "?";
}

bool FeatureStation::has(FeatureCause c) const {
  return std::find(causes.begin(), causes.end(), c) != causes.end();
}

std::vector<std::size_t> RevolutionMesh::feature_rings() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (rings[i].feature != kFeatureNone) out.push_back(i);
  }
  return out;
}

SurfaceOfRevolution revolve(PlaneCurve profile, const SurfaceOptions& options) {
  const Interval dom = profile.domain();
  constexpr int kSamples = 2048;
  for (int i = 0; i < kSamples; ++i) {
    const double t = i == kSamples - 1 ? dom.hi : dom.lo + dom.length() * i / (kSamples - 1);
    const double radius = profile.position(t).x;
    if (!(radius > kMinRadius)) {
      throw Error(ErrorCode::AxisContact,
                  "profile radius " + std::to_string(radius) + " at t = " + std::to_string(t));
    }
  }
  std::vector<CurveSegment> segments = stratify(profile, options.tolerances, options.segments);
  return SurfaceOfRevolution(std::move(profile), std::move(segments), options);
}

Vec3 SurfaceOfRevolution::point(double s, double u) const {
  const Vec2 p = profile_.position(profile_.t_of_s(s));
  return {p.x * std::cos(u), p.x * std::sin(u), p.y};
}

SurfacePointSample SurfaceOfRevolution::sample(double s, double u) const {
  const FrameSample f = profile_.frame_at_s(s);
  const double sign = orientation();
  SurfacePointSample out;
  out.s = s;
  out.u = u;
  const double cu = std::cos(u), su = std::sin(u);
  out.position = {f.position.x * cu, f.position.x * su, f.position.y};
  out.normal = sign * Vec3{-f.tangent.y * cu, -f.tangent.y * su, f.tangent.x};
  out.kappa1 = sign * f.kappa;
  out.kappa2 = sign * f.tangent.y / f.position.x;
  out.gaussian = out.kappa1 * out.kappa2;
  out.region = std::fabs(out.gaussian) < kParabolicK
                   ? Region::Parabolic
                   : (out.gaussian > 0.0 ? Region::Elliptic : Region::Hyperbolic);
  return out;
}

PrincipalCurvatures principal_curvatures(const SurfaceOfRevolution& surface, double s) {
  const SurfacePointSample p = surface.sample(s);
  return {p.kappa1, p.kappa2};
}

double gaussian_curvature(const SurfaceOfRevolution& surface, double s) {
  return surface.sample(s).gaussian;
}

Region region_classification(const SurfaceOfRevolution& surface, double s) {
  return surface.sample(s).region;
}

namespace {

void add_stations(std::vector<FeatureStation>& out, const std::vector<double>& roots,
                  FeatureCause cause, double merge_tol) {
  for (double r : roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const FeatureStation& st) {
      return std::fabs(st.s - r) <= merge_tol;
    });
    if (it == out.end()) {
      out.push_back({r, {cause}});
    } else if (!it->has(cause)) {
      it->causes.push_back(cause);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FeatureStation& a, const FeatureStation& b) { return a.s < b.s; });
}

}  // namespace

FeatureCircles feature_circles(const SurfaceOfRevolution& surface, const ToleranceConfig& cfg) {
  const PlaneCurve& profile = surface.profile();
  const Interval sr = profile.s_range();
  const double merge_tol = 10.0 * cfg.root_tol;

  const auto kappa = [&](double s) { return profile.kappa_at_s(s); };
  const auto vertical_slope = [&](double s) {
    return profile.frame_at(profile.t_of_s(s)).tangent.y;
  };
  const auto dkappa = [&](double s) { return profile.dkappa_ds_at_s(s); };

  FeatureCircles out;
  add_stations(out.parabolic, find_roots(kappa, sr.lo, sr.hi, cfg),
               FeatureCause::ProfileInflection, merge_tol);
  add_stations(out.parabolic, find_roots(vertical_slope, sr.lo, sr.hi, cfg),
               FeatureCause::ParallelFlat, merge_tol);

  bool all_zero = true;
  for (int i = 0; i <= cfg.grid_n && all_zero; ++i) {
    const double s = i == cfg.grid_n ? sr.hi : sr.lo + sr.length() * i / cfg.grid_n;
    if (std::fabs(dkappa(s)) >= 1e-14) all_zero = false;
  }
  if (all_zero) {
    out.ridge_degenerate = true;
  } else {
    add_stations(out.ridge, find_roots(dkappa, sr.lo, sr.hi, cfg), FeatureCause::ProfileVertex,
                 merge_tol);
  }
  return out;
}

std::vector<RingStation> equal_theta_rings(const SurfaceOfRevolution& surface,
                                           double delta_theta) {
  std::vector<RingStation> out;
  const auto& segments = surface.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    MarkerSet set;
    try {
      set = equal_theta_markers(segments[i], delta_theta);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::StepTooLarge) continue;
      throw;
    }
    for (const Marker& m : set.markers) {
      out.push_back({m.frame.s, m.frame.theta, static_cast<int>(i)});
    }
  }
  if (out.empty()) {
    throw Error(ErrorCode::StepTooLarge, "no profile segment admits a ring at this theta step");
  }
  std::sort(out.begin(), out.end(),
            [](const RingStation& a, const RingStation& b) { return a.s < b.s; });
  return out;
}

Residual corollary_residual(const SurfaceOfRevolution& surface, double theta, int segment_id,
                            double h, double u) {
  const auto& segments = surface.segments();
  if (segment_id < 0 || static_cast<std::size_t>(segment_id) >= segments.size()) {
    throw Error(ErrorCode::OutOfRange, "segment id " + std::to_string(segment_id));
  }
  const CurveSegment& seg = segments[static_cast<std::size_t>(segment_id)];
  const Interval range = seg.theta_range();
  if (!(h > 0.0) || theta - h < range.lo || theta + h > range.hi) {
    throw RangeError(ErrorCode::OutOfRange, theta, range.lo + h, range.hi - h,
                     "theta (with step)");
  }
  const PlaneCurve& profile = surface.profile();
  const double cu = std::cos(u), su = std::sin(u);

  // |df/dtheta|^2 = |f_s|^2 (ds/dtheta)^2 along the meridian at angle u.
  const auto metric = [&](double th) {
    const FrameSample f = profile.frame_at_s(seg.s_of_theta(th));
    const Vec3 f_s{f.tangent.x * cu, f.tangent.x * su, f.tangent.y};
    return dot(f_s, f_s) / (f.kappa * f.kappa);
  };

  Residual r;
  r.lhs = (metric(theta + h) - metric(theta - h)) / (2.0 * h);
  const FrameSample f = profile.frame_at_s(seg.s_of_theta(theta));
  const double k2 = f.kappa * f.kappa;
  r.rhs = -2.0 / (k2 * k2) * f.dkappa_ds;
  r.residual = std::fabs(r.lhs - r.rhs);
  return r;
}

namespace {

struct Station {
  double s;
  std::optional<double> theta;
  std::optional<int> segment;
  std::uint8_t feature;
};

void locate_in_segment(const SurfaceOfRevolution& surface, Station& st) {
  const auto& segments = surface.segments();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Interval sr = segments[i].s_range();
    if (st.s > sr.lo && st.s < sr.hi) {
      st.segment = static_cast<int>(i);
      st.theta = segments[i].theta_of_s(st.s);
      return;
    }
  }
}

}  // namespace

RevolutionMesh build_mesh(const SurfaceOfRevolution& surface, std::span<const RingStation> rings,
                          int u_count, bool include_faces) {
  if (u_count < 3) throw Error(ErrorCode::InvalidArgument, "u_count must be at least 3");
  if (rings.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "a mesh needs at least two ring stations");
  }

  std::vector<Station> stations;
  stations.reserve(rings.size() + 4);
  for (const RingStation& r : rings) stations.push_back({r.s, r.theta, r.segment, kFeatureNone});

  constexpr double kMergeTol = 1e-9;
  const auto tag = [&](double s, std::uint8_t feature) {
    for (Station& st : stations) {
      if (std::fabs(st.s - s) <= kMergeTol) {
        st.feature |= feature;
        return;
      }
    }
    Station st{s, std::nullopt, std::nullopt, feature};
    locate_in_segment(surface, st);
    stations.push_back(st);
  };
  const FeatureCircles features = feature_circles(surface, surface.profile().tolerances());
  for (const FeatureStation& p : features.parabolic) tag(p.s, kFeatureParabolic);
  for (const FeatureStation& r : features.ridge) tag(r.s, kFeatureRidge);

  std::sort(stations.begin(), stations.end(),
            [](const Station& a, const Station& b) { return a.s < b.s; });

  RevolutionMesh mesh;
  mesh.u_count = static_cast<std::size_t>(u_count);
  const auto n_u = mesh.u_count;
  mesh.rings.reserve(stations.size());
  mesh.vertices.reserve(stations.size() * n_u);

  for (const Station& st : stations) {
    const SurfacePointSample p = surface.sample(st.s);
    MeshRing ring;
    ring.s = st.s;
    ring.theta = st.theta;
    ring.segment = st.segment;
    ring.radius = p.position.x;
    ring.height = p.position.z;
    ring.region = p.region;
    ring.feature = st.feature;
    for (std::size_t j = 0; j < n_u; ++j) {
      const double u = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_u);
      ring.vertices.push_back(mesh.vertices.size());
      mesh.vertices.push_back({ring.radius * std::cos(u), ring.radius * std::sin(u), ring.height});
      mesh.vertex_regions.push_back(ring.region);
    }
    mesh.rings.push_back(std::move(ring));
  }

  mesh.meridians.resize(n_u);
  for (std::size_t j = 0; j < n_u; ++j) {
    for (const MeshRing& ring : mesh.rings) mesh.meridians[j].push_back(ring.vertices[j]);
  }

  if (include_faces) {
    for (std::size_t r = 0; r + 1 < mesh.rings.size(); ++r) {
      const auto& a = mesh.rings[r].vertices;
      const auto& b = mesh.rings[r + 1].vertices;
      for (std::size_t j = 0; j < n_u; ++j) {
        const std::size_t jn = (j + 1) % n_u;
        mesh.faces.push_back({a[j], a[jn], b[jn], b[j]});
      }
    }
  }
  return mesh;
}

}  // namespace thetakit
