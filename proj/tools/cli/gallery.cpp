#include "cli/gallery.hpp"

#include <array>

#include "cli/config.hpp"
#include "gallery_data.hpp"

namespace thetakit::cli {

namespace {

struct Figure {
  std::string_view name;
  std::array<std::string_view, 2> configs;  // empty entries are unused
};

constexpr std::array<Figure, 6> kFigures{{
    {"fig2_elastica", {"fig2_elastica", ""}},
    {"fig3_euler", {"fig3_euler", ""}},
    {"fig4_vertex", {"fig4_vertex", ""}},
    {"fig6_surface_euler", {"fig6_surface_euler", ""}},
    {"fig7_surface_vertex", {"fig7_surface_vertex", ""}},
    {"fig8_wireframes", {"fig8_wireframes_euler", "fig8_wireframes_elastica"}},
}};

std::string_view embedded(std::string_view stem) {
  for (const auto& [name, text] : kGalleryData) {
    if (name == stem) return text;
  }
  throw ConfigError("gallery", "missing embedded config '" + std::string(stem) + "'");
}

}  // namespace

std::vector<std::string_view> gallery_names() {
  std::vector<std::string_view> out;
  for (const Figure& f : kFigures) out.push_back(f.name);
  return out;
}

std::vector<GalleryConfig> gallery_configs(std::string_view figure) {
  for (const Figure& f : kFigures) {
    if (f.name != figure) continue;
    std::vector<GalleryConfig> out;
    for (std::string_view stem : f.configs) {
      if (!stem.empty()) out.push_back({stem, embedded(stem)});
    }
    return out;
  }
  std::string known;
  for (const Figure& f : kFigures) known += (known.empty() ? "" : ", ") + std::string(f.name);
  throw ConfigError("gallery", "unknown figure '" + std::string(figure) + "' (known: " + known + ")");
}

}  // namespace thetakit::cli
