#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace corebound::cli {

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on validation or usage errors, 2 on internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory searched by `reproduce` when --fixtures is not given.
std::filesystem::path default_fixture_dir();

}  // namespace corebound::cli
