#pragma once

#include <filesystem>
#include <string_view>

namespace regseq {

/// Directory holding the bundled fixture files. Defaults to the build-time
/// data directory; the REGSEQ_DATA_DIR environment variable overrides it.
std::filesystem::path data_dir();

std::filesystem::path data_file(std::string_view name);

}  // namespace regseq
