#pragma once

#include "kstab/intersect.hpp"

#include <string>
#include <variant>

namespace kstab::cli {

using Model = std::variant<intersect::ThreefoldModel, intersect::SurfaceModel>;

constexpr const char* kModelHeader = "kstab-model v1";

/// Parses a model file. ParseError with a line number on malformed input;
/// DomainError when the parsed model fails validation.
Model parse_model(const std::string& text);
/// Canonical text form; parse_model(print_model(m)) reproduces m and printing
/// again is byte-identical.
std::string print_model(const Model& m);

const std::string& model_name(const Model& m);

}  // namespace kstab::cli
