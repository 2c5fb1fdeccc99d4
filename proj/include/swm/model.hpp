#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace swm {

enum class ModelKind { SWME, HSWME, SWLME, MHSWME, PHSWME, PMHSWME };

inline constexpr std::array<ModelKind, 6> kAllModels = {
    ModelKind::SWME,   ModelKind::HSWME,  ModelKind::SWLME,
    ModelKind::MHSWME, ModelKind::PHSWME, ModelKind::PMHSWME};

/// The five regularized models compared against SWME.
inline constexpr std::array<ModelKind, 5> kRegularizedModels = {
    ModelKind::HSWME, ModelKind::SWLME, ModelKind::MHSWME, ModelKind::PHSWME,
    ModelKind::PMHSWME};

enum class VariableSet { Primitive, Convective };

enum class Hyperbolicity { Global, Local };

/// Analytical properties of each model.
struct ModelProperties {
    Hyperbolicity hyperbolicity;
    bool unchanged_momentum;
    bool analytic_steady_states;
    bool nonlinear_moment_equations;
};

ModelProperties properties(ModelKind model);

/// Upper-case canonical name, e.g. "PMHSWME".
std::string_view model_name(ModelKind model);

/// Case-insensitive lookup; nullopt for unknown names.
std::optional<ModelKind> parse_model(std::string_view name);

/// "swme, hswme, swlme, mhswme, phswme, pmhswme"
std::string valid_model_list();

}  // namespace swm
