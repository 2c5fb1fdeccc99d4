#include "swm/model.hpp"

#include <algorithm>
#include <cctype>

namespace swm {

ModelProperties properties(ModelKind model) {
    switch (model) {
        case ModelKind::SWME: return {Hyperbolicity::Local, true, false, true};
        case ModelKind::HSWME: return {Hyperbolicity::Global, false, false, true};
        case ModelKind::SWLME: return {Hyperbolicity::Global, true, true, false};
        case ModelKind::MHSWME: return {Hyperbolicity::Local, true, false, true};
        case ModelKind::PHSWME: return {Hyperbolicity::Global, false, true, true};
        case ModelKind::PMHSWME: return {Hyperbolicity::Global, true, true, true};
    }
    return {};
}

std::string_view model_name(ModelKind model) {
    switch (model) {
        case ModelKind::SWME: return "SWME";
        case ModelKind::HSWME: return "HSWME";
        case ModelKind::SWLME: return "SWLME";
        case ModelKind::MHSWME: return "MHSWME";
        case ModelKind::PHSWME: return "PHSWME";
        case ModelKind::PMHSWME: return "PMHSWME";
    }
    return "?";
}

std::optional<ModelKind> parse_model(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (ModelKind m : kAllModels) {
        if (model_name(m) == upper) return m;
    }
    return std::nullopt;
}

std::string valid_model_list() {
    std::string out;
    for (ModelKind m : kAllModels) {
        if (!out.empty()) out += ", ";
        std::string lower(model_name(m));
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        out += lower;
    }
    return out;
}

}  // namespace swm
