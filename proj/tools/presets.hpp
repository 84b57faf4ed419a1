#pragma once

#include "model_file.hpp"

#include <string>
#include <vector>

namespace kstab::cli {

/// Registry names; sing_line is parametrized as sing_line(g,k).
const std::vector<std::string>& preset_names();
bool is_preset_name(const std::string& name);
/// DomainError for unknown names or bad sing_line parameters.
Model preset(const std::string& name);

/// A preset name, or a path to a model file. Loaded models may not reuse a
/// preset name.
Model resolve_model(const std::string& name_or_path);

intersect::ThreefoldModel as_threefold(const Model& m);
intersect::SurfaceModel as_surface(const Model& m);

}  // namespace kstab::cli
