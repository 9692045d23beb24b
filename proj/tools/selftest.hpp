#pragma once

#include <optional>
#include <string>

namespace gsft_cli {

struct SelfTestOptions {
  bool quick = false;
  std::optional<std::string> data_dir;  // override built-in fixtures with JSON files
};

/// Runs the built-in verification suite: the fixed worked examples, the
/// inertness/zeta cross-check battery, the constructive witness smoke tests
/// and the periodic-point checks. Prints one line per check and a summary;
/// returns the number of failures.
int run_selftest(const SelfTestOptions& options);

}  // namespace gsft_cli
