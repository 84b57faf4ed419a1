#include "presets.hpp"

#include "kstab/errors.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace kstab::cli {

namespace {

const std::regex kSingLine(R"(sing_line\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"bl_p3_quintic", "bl_node_22", "bl_v4_conic",
                                                "sing_line(g,k)", "dp4", "quadric"};
    return names;
}

bool is_preset_name(const std::string& name) {
    if (std::regex_match(name, kSingLine) || name == "sing_line(g,k)") return true;
    const auto& n = preset_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

Model preset(const std::string& name) {
    if (name == "bl_p3_quintic") return intersect::bl_p3_quintic();
    if (name == "bl_node_22") return intersect::blowup_node(22);
    if (name == "bl_v4_conic") return intersect::blowup_v4_conic();
    if (name == "dp4") return intersect::dp4_surface();
    if (name == "quadric") return intersect::quadric_surface();
    std::smatch match;
    if (std::regex_match(name, match, kSingLine)) {
        return intersect::sing_line_model(std::stoi(match[1]), std::stoi(match[2]));
    }
    throw DomainError("unknown model '" + name + "'");
}

Model resolve_model(const std::string& name_or_path) {
    if (is_preset_name(name_or_path)) return preset(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw DomainError("unknown model '" + name_or_path + "' (neither a preset nor a readable file)");
    std::ostringstream buf;
    buf << in.rdbuf();
    Model m = parse_model(buf.str());
    if (is_preset_name(model_name(m))) {
        throw ParseError("model file name '" + model_name(m) + "' shadows a preset");
    }
    return m;
}

intersect::ThreefoldModel as_threefold(const Model& m) {
    if (const auto* t = std::get_if<intersect::ThreefoldModel>(&m)) return *t;
    throw DomainError("model '" + model_name(m) + "' is a surface, expected a threefold");
}

intersect::SurfaceModel as_surface(const Model& m) {
    if (const auto* s = std::get_if<intersect::SurfaceModel>(&m)) return *s;
    throw DomainError("model '" + model_name(m) + "' is a threefold, expected a surface");
}

}  // namespace kstab::cli
