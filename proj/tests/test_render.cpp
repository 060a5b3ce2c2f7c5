#include <doctest.h>

#include <cmath>
#include <numbers>
#include <regex>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace thetakit;
using namespace fixtures;

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::vector<MarkerSet> markers_of(const std::vector<CurveSegment>& segs, double step) {
  std::vector<MarkerSet> out;
  for (const CurveSegment& s : segs) out.push_back(equal_theta_markers(s, step));
  return out;
}

}  // namespace

TEST_CASE("xml checker catches malformed documents") {
  CHECK(oracle::xml_problem("<a><b/></a>").empty());
  CHECK_FALSE(oracle::xml_problem("<a><b></a>").empty());
  CHECK_FALSE(oracle::xml_problem("<a x=1/>").empty());
  CHECK_FALSE(oracle::xml_problem("<a>&nope;</a>").empty());
  CHECK_FALSE(oracle::xml_problem("<a/><b/>").empty());
}

TEST_CASE("curve SVG: Euler spiral with two segments") {
  const auto segs = segments_based_at_zero(euler_spiral());
  const auto sets = markers_of(segs, 0.5);
  const std::string svg = emit_svg_curve(segs, sets);
  CHECK(oracle::xml_problem(svg).empty());
  CHECK(count(svg, "class=\"segment\"") == 2);
  CHECK(count(svg, palette::kNegative) == 1);
  CHECK(count(svg, palette::kPositive) == 1);
  CHECK(count(svg, "class=\"marker\"") == sets[0].markers.size() + sets[1].markers.size());
  CHECK(count(svg, "scale(1,-1)") == 1);
  CHECK(svg == emit_svg_curve(segs, sets));
}

TEST_CASE("curve SVG: circle with 12 markers, and no markers") {
  const auto segs = stratify(unit_circle(), {}, {kPi / 12});
  const auto sets = markers_of(segs, kPi / 6);
  const std::string svg = emit_svg_curve(segs, sets);
  CHECK(oracle::xml_problem(svg).empty());
  CHECK(count(svg, "<path") == 1);
  CHECK(count(svg, "<circle") == 12);

  const std::string bare = emit_svg_curve(segs, {});
  CHECK(oracle::xml_problem(bare).empty());
  CHECK(count(bare, "<path") == 1);
  CHECK(count(bare, "<circle") == 0);
  CHECK_THROWS_AS(emit_svg_curve({}, {}), Error);
}

TEST_CASE("curve SVG: highlights and escaped title") {
  const auto segs = stratify(vertex_curve());
  SvgOptions o;
  o.title = "kappa <1 + s^2> & friends";
  o.highlights.push_back(segs[0].curve().frame_at_s(0.0).position);
  const std::string svg = emit_svg_curve(segs, markers_of(segs, 0.25), o);
  CHECK(oracle::xml_problem(svg).empty());
  CHECK(count(svg, "class=\"highlight\"") == 1);
  CHECK(count(svg, palette::kRidge) >= 1);
  CHECK(count(svg, "&lt;1 + s^2&gt; &amp; friends") == 1);
}

TEST_CASE("theta plot SVG") {
  const auto segs = segments_based_at_zero(euler_spiral());
  const std::string svg = emit_svg_theta_plot(segs[1], 200, 0.5);
  CHECK(oracle::xml_problem(svg).empty());
  CHECK(count(svg, "<polyline") == 1);
  CHECK_THROWS_AS(emit_svg_theta_plot(segs[1], 1), Error);
  for (const CurveSegment& s : stratify(elastica())) {
    CHECK(oracle::xml_problem(emit_svg_theta_plot(s, 64)).empty());
  }
}

TEST_CASE("CSV markers") {
  SUBCASE("circle: 12 rows, equal s gaps") {
    const auto segs = stratify(unit_circle(), {}, {kPi / 12});
    std::vector<std::string> header;
    const auto rows = oracle::read_csv(emit_csv_markers(equal_theta_markers(segs[0], kPi / 6)), &header);
    CHECK(header == std::vector<std::string>{"k", "theta", "s", "x", "y", "kappa", "dkappa_ds"});
    REQUIRE(rows.size() == 12);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(std::fabs(rows[i].at("s") - rows[i - 1].at("s") - kPi / 6) <= 1e-9);
      CHECK(std::fabs(std::fabs(rows[i].at("theta") - rows[i - 1].at("theta")) - kPi / 6) <= 1e-9);
    }
  }
  SUBCASE("Euler spiral: s = sqrt(2 theta)") {
    const auto segs = segments_based_at_zero(euler_spiral());
    const auto rows = oracle::read_csv(emit_csv_markers(equal_theta_markers(segs[1], 0.5)));
    REQUIRE(rows.size() >= 4);
    const double want[] = {1.0, 1.414214, 1.732051, 2.0};
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(rows[i].at("s") - want[i]) <= 5e-7);
  }
  SUBCASE("empty set: header only") {
    const std::string csv = emit_csv_markers(MarkerSet{0.5, {}});
    CHECK(csv == "k,theta,s,x,y,kappa,dkappa_ds\n");
  }
  SUBCASE("several sets are ordered by s") {
    const auto segs = segments_based_at_zero(euler_spiral());
    const auto rows = oracle::read_csv(emit_csv_markers(markers_of(segs, 0.5)));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].at("s") > rows[i - 1].at("s"));
  }
}

TEST_CASE("OBJ mesh") {
  SUBCASE("sphere 12 x 24") {
    std::vector<RingStation> st;
    for (int i = 0; i < 12; ++i) st.push_back({-kPi / 2 + (i + 0.5) * kPi / 12, {}, {}});
    const RevolutionMesh mesh = build_mesh(unit_sphere(), st, 24, false);
    const std::string obj = emit_obj_mesh(mesh, false);
    const oracle::ObjModel m = oracle::read_obj(obj);
    CHECK(m.indices_valid);
    CHECK(m.vertices.size() == 288);
    REQUIRE(m.lines.size() == 12 + 24);
    for (int r = 0; r < 12; ++r) {
      CHECK(m.lines[r].size() == 25);
      CHECK(m.lines[r].front() == m.lines[r].back());
    }
    for (int j = 12; j < 36; ++j) {
      CHECK(m.lines[j].size() == 12);
      CHECK(m.lines[j].front() != m.lines[j].back());
    }
    CHECK(m.faces.empty());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      CHECK(std::fabs(m.vertices[i][0] - mesh.vertices[i].x) <= 5e-7);
      CHECK(std::fabs(m.vertices[i][2] - mesh.vertices[i].z) <= 5e-7);
    }
    const oracle::ObjModel faced = oracle::read_obj(emit_obj_mesh(build_mesh(unit_sphere(), st, 24, true), true));
    CHECK(faced.faces.size() == 11 * 24);
    CHECK(faced.indices_valid);
  }
  SUBCASE("feature ring comments") {
    const SurfaceOfRevolution e = euler_surface();
    const std::string eo = emit_obj_mesh(build_mesh(e, equal_theta_rings(e, 0.1), 16, false), false);
    CHECK(count(eo, "feature=parabolic\n") == 1);
    CHECK(count(eo, "feature=ridge") == 0);
    const SurfaceOfRevolution v = vertex_surface();
    const std::string vo = emit_obj_mesh(build_mesh(v, equal_theta_rings(v, 0.1), 16, false), false);
    CHECK(count(vo, "feature=ridge") == 1);
    CHECK(count(vo, "feature=parabolic+ridge") == 0);
    CHECK(eo == emit_obj_mesh(build_mesh(e, equal_theta_rings(e, 0.1), 16, false), false));
  }
  SUBCASE("empty mesh") { CHECK_THROWS_AS(emit_obj_mesh(RevolutionMesh{}, false), Error); }
}
