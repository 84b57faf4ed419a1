#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kstab::cli {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;  // verify-paper found a failing row
constexpr int kExitError = 2;     // kstab::Error during computation
constexpr int kExitUsage = 64;

/// Runs one command; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kstab::cli
