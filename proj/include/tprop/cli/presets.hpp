#pragma once

#include <string>
#include <vector>

namespace tprop::cli {

struct Preset {
    std::string name;
    std::string description;
    std::string config_text;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace tprop::cli
