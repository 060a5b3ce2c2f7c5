#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace thetakit;
using namespace fixtures;

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("frame of the unit circle") {
  const PlaneCurve c = parametric("cos(t)", "sin(t)", {0, 2 * kPi});
  const FrameSample f = c.frame_at(0.0);
  CHECK(f.kappa == doctest::Approx(1.0));
  CHECK(f.tangent.x == doctest::Approx(0.0));
  CHECK(f.tangent.y == doctest::Approx(1.0));
  CHECK(f.normal.x == doctest::Approx(-1.0));
  CHECK(f.normal.y == doctest::Approx(0.0));
  CHECK(std::fabs(c.arc_length(0, kPi) - kPi) <= 1e-10);
}

TEST_CASE("gallery curvature spot values") {
  const PlaneCurve e = euler_spiral();
  CHECK(e.kappa_at_s(2.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(e.dkappa_ds_at_s(2.0) == doctest::Approx(1.0).epsilon(1e-7));
  const PlaneCurve el = elastica();
  // elastica is parametrized by x; kappa = 2x.
  CHECK(el.frame_at(0.5).kappa == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("elastica arc length against a midpoint-rule oracle") {
  const PlaneCurve el = elastica();
  const double x1 = 0.70711;
  const double oracle_s = oracle::midpoint_rule(
      [](double x) { return 1.0 / std::sqrt(1.0 - x * x * x * x); }, 0.0, x1, 10'000'000);
  CHECK(std::fabs(el.arc_length(0.0, x1) - oracle_s) <= 1e-9);
  CHECK(std::fabs(el.s_of_t(x1) - oracle_s) <= 1e-9);
}

TEST_CASE("arc-length models keep s == t") {
  const PlaneCurve v = vertex_curve();
  CHECK(v.s_range().lo == -2.0);
  CHECK(v.s_range().hi == 2.0);
  CHECK(std::fabs(v.arc_length(-0.5, 1.25) - 1.75) <= 1e-9);
  CHECK(v.t_of_s(0.3) == doctest::Approx(0.3));
}

TEST_CASE("singular and out-of-domain inputs") {
  CHECK_THROWS_AS(parametric("t^3", "t^2", {-1, 1}), Error);
  try {
    (void)parametric("t^3", "t^2", {-1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularPoint);
  }
  const PlaneCurve e = euler_spiral();
  try {
    (void)e.frame_at_s(4.0);
    FAIL("expected OutOfDomain");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("stratify gallery curves") {
  const auto segs = stratify(euler_spiral());
  REQUIRE(segs.size() == 2);
  CHECK(std::fabs(segs[0].s_range().lo + 3) <= 1e-12);
  CHECK(std::fabs(segs[0].s_range().hi) <= 1e-9);
  CHECK(segs[0].sign() == -1);
  CHECK(std::fabs(segs[1].s_range().lo) <= 1e-9);
  CHECK(segs[1].sign() == 1);

  const auto v = stratify(vertex_curve());
  REQUIRE(v.size() == 1);
  CHECK(v[0].sign() == 1);

  try {
    (void)stratify(parametric("t", "0*t", {0, 1}));
    FAIL("expected EverywhereFlat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EverywhereFlat);
  }
}

TEST_CASE("tangential-angle chart") {
  const auto segs = segments_based_at_zero(euler_spiral());
  const CurveSegment& pos = segs[1];
  CHECK(std::fabs(pos.theta_of_s(1.0) - 0.5) <= 1e-9);
  CHECK(std::fabs(pos.s_of_theta(0.5) - 1.0) <= 1e-9);
  CHECK(std::fabs(pos.theta_of_s(pos.base())) <= 1e-15);

  const auto v = segments_based_at_zero(vertex_curve());
  CHECK(std::fabs(v[0].theta_of_s(1.0) - 4.0 / 3.0) <= 1e-9);
  CHECK(std::fabs(v[0].s_of_theta(0.0)) <= 1e-12);

  // Elastica, c at the inflection: theta = arcsin(x^2).
  const auto el = segments_based_at_zero(elastica());
  REQUIRE(el.size() == 2);
  const double s = el[1].s_of_theta(kPi / 6);
  CHECK(std::fabs(el[1].curve().frame_at_s(s).position.x - std::sqrt(0.5)) <= 1e-9);

  try {
    (void)pos.s_of_theta(100.0);
    FAIL("expected OutOfRange");
  } catch (const RangeError& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
    CHECK(e.hi() == doctest::Approx(4.5).epsilon(1e-9));
  }
  try {
    (void)pos.theta_of_s(-1.0);
    FAIL("expected OutOfSegment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfSegment);
  }
}

TEST_CASE("chart consistency on random theta") {
  std::mt19937_64 g(1);
  for (const PlaneCurve& c : {euler_spiral(), elastica(), vertex_curve(), unit_circle()}) {
    for (const CurveSegment& seg : stratify(c)) {
      const Interval r = seg.theta_range();
      for (int i = 0; i < 100; ++i) {
        const double th = r.lo + r.length() * (0.001 + 0.998 * uniform(g));
        CHECK(std::fabs(seg.theta_of_s(seg.s_of_theta(th)) - th) <= 1e-9);
      }
    }
  }
}

TEST_CASE("default base point is the segment midpoint; explicit base is clamped") {
  const auto segs = stratify(euler_spiral());
  CHECK(segs[1].base() == doctest::Approx(1.5).epsilon(1e-9));
  const auto clamped = stratify(euler_spiral(), {}, {10.0});
  CHECK(clamped[0].base() == doctest::Approx(clamped[0].s_range().hi));
  CHECK(clamped[1].base() == doctest::Approx(3.0));
}

TEST_CASE("equal-theta markers") {
  SUBCASE("circle: 12 markers, equal arc gaps") {
    const auto segs = stratify(unit_circle(), {}, {kPi / 12});
    const MarkerSet m = equal_theta_markers(segs[0], kPi / 6);
    REQUIRE(m.markers.size() == 12);
    for (std::size_t i = 1; i < m.markers.size(); ++i) {
      CHECK(std::fabs(m.markers[i].frame.s - m.markers[i - 1].frame.s - kPi / 6) <= 1e-9);
    }
  }
  SUBCASE("Euler spiral: s = sqrt(2 theta) with shrinking gaps") {
    const auto segs = segments_based_at_zero(euler_spiral());
    const MarkerSet m = equal_theta_markers(segs[1], 0.5);
    REQUIRE(m.markers.size() >= 4);
    // theta = 0 sits on the inflection, outside the open range.
    CHECK(m.markers.front().k == 1);
    for (std::size_t i = 0; i < m.markers.size(); ++i) {
      const double k = static_cast<double>(m.markers[i].k);
      CHECK(std::fabs(m.markers[i].frame.s - std::sqrt(k)) <= 1e-9);
      if (i >= 2) {
        const double g1 = m.markers[i].frame.s - m.markers[i - 1].frame.s;
        const double g0 = m.markers[i - 1].frame.s - m.markers[i - 2].frame.s;
        CHECK(g1 < g0);
      }
    }
  }
  SUBCASE("kappa = 1 + s^2: the vertex pair is the extreme gap") {
    // Gaps are delta_theta / kappa to first order and kappa is smallest at
    // the vertex, so the pair straddling s = 0 is the widest one and the
    // gaps shrink monotonically on both sides.
    const auto segs = segments_based_at_zero(vertex_curve());
    for (double step : {0.25, 0.05}) {
      const MarkerSet m = equal_theta_markers(segs[0], step);
      std::size_t widest = 1;
      for (std::size_t i = 1; i < m.markers.size(); ++i) {
        const double gap = m.markers[i].frame.s - m.markers[i - 1].frame.s;
        if (gap > m.markers[widest].frame.s - m.markers[widest - 1].frame.s) widest = i;
        if (i >= 2) {
          const double prev = m.markers[i - 1].frame.s - m.markers[i - 2].frame.s;
          if (m.markers[i - 1].frame.s >= 1e-12) CHECK(gap < prev);
          if (m.markers[i - 1].frame.s <= -1e-12) CHECK(gap > prev);
        }
      }
      CHECK(m.markers[widest - 1].frame.s <= 1e-12);
      CHECK(m.markers[widest].frame.s >= -1e-12);
    }
  }
  SUBCASE("step too large") {
    const auto segs = stratify(euler_spiral(), {}, {0.0});
    CHECK_THROWS_AS(equal_theta_markers(segs[1], 10.0), Error);
  }
}

TEST_CASE("marker density law") {
  for (const PlaneCurve& c : {euler_spiral(), elastica(), vertex_curve(), unit_circle()}) {
    for (const CurveSegment& seg : stratify(c)) {
      const double step = 0.05;
      const MarkerSet m = equal_theta_markers(seg, step);
      for (std::size_t i = 1; i < m.markers.size(); ++i) {
        const double s0 = m.markers[i - 1].frame.s, s1 = m.markers[i].frame.s;
        const double k = std::fabs(c.kappa_at_s(0.5 * (s0 + s1)));
        CHECK(std::fabs((s1 - s0) * k - step) <= 0.05 * step);
      }
    }
  }
}

TEST_CASE("vertices") {
  const auto v = detect_vertices(stratify(vertex_curve())[0]);
  CHECK(v.status == VertexStatus::Found);
  REQUIRE(v.vertices.size() == 1);
  CHECK(std::fabs(v.vertices[0].s) <= 1e-9);

  for (const CurveSegment& seg : stratify(euler_spiral())) {
    const auto r = detect_vertices(seg);
    CHECK(r.status == VertexStatus::Found);
    CHECK(r.vertices.empty());
  }
  const auto circle = detect_vertices(stratify(unit_circle())[0]);
  CHECK(circle.status == VertexStatus::DegenerateAllVertices);
  CHECK(circle.vertices.empty());
}

TEST_CASE("speed with respect to theta and the theorem residual") {
  const auto e = segments_based_at_zero(euler_spiral());
  CHECK(speed_squared_wrt_theta(e[1], 0.5) == doctest::Approx(1.0).epsilon(1e-9));
  const auto circ = stratify(unit_circle());
  CHECK(speed_squared_wrt_theta(circ[0], 0.3) == doctest::Approx(1.0).epsilon(1e-12));
  const auto v = segments_based_at_zero(vertex_curve());
  CHECK(speed_squared_wrt_theta(v[0], 0.0) == doctest::Approx(1.0).epsilon(1e-12));

  const Residual r = theorem_residual(e[1], 0.5);
  CHECK(std::fabs(r.lhs + 2) <= 1e-4);
  CHECK(std::fabs(r.rhs + 2) <= 1e-9);
  const Residual rc = theorem_residual(circ[0], 0.3);
  CHECK(std::fabs(rc.lhs) <= 1e-9);
  CHECK(rc.rhs == 0.0);
  const Residual rv = theorem_residual(v[0], 0.0);
  CHECK(std::fabs(rv.rhs) <= 1e-12);
  CHECK(std::fabs(rv.lhs) <= 1e-6);
}

TEST_CASE("sign law: lhs has the sign of -dkappa/ds away from vertices") {
  std::mt19937_64 g(9);
  for (const PlaneCurve& c : {euler_spiral(), elastica(), vertex_curve()}) {
    for (const CurveSegment& seg : stratify(c)) {
      const Interval r = seg.theta_range();
      for (int i = 0; i < 50; ++i) {
        const double th = r.lo + r.length() * (0.1 + 0.8 * uniform(g));
        const double s = seg.s_of_theta(th);
        const double dk = c.dkappa_ds_at_s(s);
        if (std::fabs(dk) < 1e-6) continue;
        const Residual res = theorem_residual(seg, th);
        CHECK((res.lhs > 0) == (dk < 0));
      }
    }
  }
}

TEST_CASE("frame orthonormality and de/ds = kappa nu") {
  std::mt19937_64 g(4);
  for (const PlaneCurve& c : {euler_spiral(), elastica(), vertex_curve(), unit_circle()}) {
    const Interval sr = c.s_range();
    const double h = 1e-5;
    for (int i = 0; i < 100; ++i) {
      const double s = sr.lo + h + (sr.length() - 2 * h) * uniform(g);
      const FrameSample f = c.frame_at_s(s);
      CHECK(std::fabs(dot(f.tangent, f.tangent) - 1) <= 1e-12);
      CHECK(std::fabs(dot(f.tangent, f.normal)) <= 1e-12);
      const Vec2 de = (c.frame_at_s(s + h).tangent - c.frame_at_s(s - h).tangent) * (0.5 / h);
      const Vec2 want = f.normal * f.kappa;
      CHECK(norm(de - want) <= 1e-6 * (1 + std::fabs(f.kappa)));
    }
  }
}
