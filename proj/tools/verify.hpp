#pragma once

#include "kstab/intersect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kstab::cli {

struct CheckRow {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string anchor;
};

struct VerifyOptions {
    /// Replaces the bl_p3_quintic preset in the threefold rows.
    std::optional<intersect::ThreefoldModel> quintic;
};

/// Replays every printed computation in scope; one row per check. Errors
/// raised by a check are recorded in its row.
std::vector<CheckRow> verify_paper(const VerifyOptions& options = {});

}  // namespace kstab::cli
