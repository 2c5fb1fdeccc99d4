#pragma once

#include "swm/basis.hpp"
#include "swm/field.hpp"
#include "swm/model.hpp"
#include "swm/state.hpp"

#include <optional>
#include <vector>

namespace swm {

/// Newtonian bottom friction with slip.
struct Friction {
    double viscosity = 0.1;
    double slip_length = 0.1;
};

enum class TimeStepMode { Fixed, Cfl };

struct SolverConfig {
    ModelKind model = ModelKind::SWME;
    int order = 1;
    double g = 1.0;
    double t_end = 0.2;
    TimeStepMode dt_mode = TimeStepMode::Cfl;
    double dt = 0.0;    // Fixed mode
    double cfl = 0.5;   // Cfl mode
    std::optional<Friction> friction;
    double h_min = kDefaultDryDepth;
    long max_steps = 10'000'000;
    /// |Im lambda| above this counts as a hyperbolicity warning in the monitor.
    double imag_warning = 1e-9;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
};

/// Interface fluctuations D^- (to the left cell) and D^+ (to the right cell).
struct Fluctuations {
    Vec minus;
    Vec plus;
    double speed = 0.0;
};

/// Straight-line path local Lax-Friedrichs:
///   D^{+-} = (A_c(U_mean) +- s I)(U_R - U_L) / 2,
/// s = max spectral radius at U_L, U_R and the mean state.
Fluctuations path_fluctuations(const ConvectiveState& left, const ConvectiveState& right, ModelKind model,
                               const CoefficientTensors& tensors, double g, double h_min = kDefaultDryDepth);

/// Friction source for the convective variables. With u_b = u_m + sum alpha_j
/// (the bottom velocity):
///   mass      0
///   momentum  -(nu / lambda) u_b
///   moment i  -(2i+1)(nu / lambda) u_b - (nu / h) sum_j D_ij alpha_j
Vec friction_source(const PrimitiveState& up, const Friction& friction, const CoefficientTensors& tensors);

/// Largest wave speed and imaginary part over all cells.
struct FieldSpeeds {
    double max_speed = 0.0;
    double max_imag = 0.0;
};
FieldSpeeds field_speeds(const Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors,
                         bool parallel = true);

/// CFL-limited (or fixed) step for the current field.
double time_step(const Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors);

/// One explicit Euler step:
///   U_i <- U_i - dt/dx (D^+_{i-1/2} + D^-_{i+1/2}) + dt S(U_i)
/// Interfaces and cells are updated in parallel. Throws DryStateError naming
/// the cell and `time` if a depth falls below h_min, NumericalFailure on NaN.
void step(Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors, double dt,
          double time = 0.0);

/// Single-threaded reference, bitwise identical to step().
void step_serial(Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors, double dt,
                 double time = 0.0);

struct StepDiagnostics {
    double time = 0.0;
    double dt = 0.0;
    double mass = 0.0;
    double momentum = 0.0;
    double max_imag = 0.0;
};

struct RunResult {
    Field1D field;
    std::vector<StepDiagnostics> diagnostics;
    long steps = 0;
    /// Steps that started from a state with |Im lambda| > imag_warning.
    long hyperbolicity_warnings = 0;
    double max_imag = 0.0;
};

/// Advances to t_end exactly (the last step is clipped).
RunResult run(Field1D field, const SolverConfig& config, bool parallel = true);

}  // namespace swm
