#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace thetakit::cli {

struct GalleryConfig {
  std::string_view name;  ///< file stem under configs/gallery
  std::string_view json;
};

/// Figure names accepted by `gallery`.
std::vector<std::string_view> gallery_names();

/// Configurations run for one figure, in order. Throws ConfigError for an
/// unknown name.
std::vector<GalleryConfig> gallery_configs(std::string_view figure);

}  // namespace thetakit::cli
