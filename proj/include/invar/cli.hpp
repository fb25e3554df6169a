#pragma once

// Command-line front end: subcommand dispatch, JSON/text output, and
// on-disk caching of generator tables.
//
// Exit codes: 0 success, 1 domain error, 2 resource-limit error,
// 64 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace invar {

inline constexpr const char* kEngineVersion = "1.0.0";

struct RunOptions {
  std::string cache_dir;  // empty: $INVAR_CACHE_DIR, else ~/.cache/invar
  bool no_cache = false;
  std::string format = "json";  // json | text
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Resolved cache directory for the given options/environment.
std::string cache_directory(const RunOptions& opts);

}  // namespace invar
