#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thetakit::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes to a sibling temp file, then renames over `path`. Parent
/// directories are created. Throws IoError.
void write_atomic(const std::string& path, std::string_view content);

}  // namespace thetakit::cli
