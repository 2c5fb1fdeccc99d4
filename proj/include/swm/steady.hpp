#pragma once

#include "swm/basis.hpp"
#include "swm/field.hpp"
#include "swm/model.hpp"
#include "swm/state.hpp"

#include <functional>
#include <vector>

namespace swm {

/// Dimensionless reference state of a steady flow. Only Fr^2 enters the
/// steady law, so the Froude number is stored as |Fr|.
struct ReferenceState {
    double froude = 0.0;
    /// Ma_i = alpha_{i,0} / u_{m,0}, i = 1..N (stored 0-based).
    std::vector<double> moment_numbers;

    /// From a dimensional state. Throws std::invalid_argument for u_m0 = 0
    /// (moment numbers undefined) or non-positive h0, g.
    static ReferenceState from_state(double h0, double um0, const std::vector<double>& alpha0,
                                     double g);

    double moment_number(int i) const {
        return i <= static_cast<int>(moment_numbers.size()) ? moment_numbers[static_cast<std::size_t>(i - 1)]
                                                           : 0.0;
    }
};

/// True for the models with analytic steady states: SWLME, PHSWME, PMHSWME.
bool has_steady_law(ModelKind model);

/// S in the steady law: Ma_1^2 / 3 (PHSWME), sum Ma_i^2 / (2i+1) otherwise.
/// Throws Unavailable for SWME, HSWME, MHSWME.
double steady_weight(ModelKind model, const ReferenceState& ref);

/// -Fr^2 + (x^2 + x)/2 + S Fr^2 (x^3 + x^2 + x) for the depth ratio x = h/h0 > 0.
double steady_residual(ModelKind model, double x, const ReferenceState& ref);

/// The residual at x = 1, i.e. -Fr^2 + 1 + 3 S Fr^2. Zero exactly when the
/// nontrivial branch touches the trivial one (critical flow).
double jump_condition(ModelKind model, const ReferenceState& ref);

struct ConjugateDepths {
    /// Positive roots of the nontrivial branch, ascending.
    std::vector<double> roots;
    /// The h = h0 branch is always a steady state.
    bool trivial_branch = true;
    /// The nontrivial branch also passes through x = 1 (double contact).
    bool touches_trivial = false;
    bool has_positive_root() const { return !roots.empty(); }
};

/// Nontrivial positive roots via the closed-form cubic, one Newton polish and
/// a bisection fallback on the monotone branch. No positive root is reported
/// through an empty list, not an exception.
ConjugateDepths conjugate_depths(ModelKind model, const ReferenceState& ref);

/// All real roots of a x^3 + b x^2 + c x + d (a may be zero), ascending.
std::vector<double> real_cubic_roots(double a, double b, double c, double d);

/// Invariant energy of the steady law: g h^2 / 2 + h u_m^2 + h S(alpha), with
/// S = alpha_1^2 / 3 for PHSWME and sum alpha_i^2 / (2i+1) otherwise.
double steady_energy(ModelKind model, const PrimitiveState& up, double g);

struct InvariantTable {
    /// Column names: "hu", "energy", "a1/h", then "a2".."aN" ("a2/h".. for SWLME).
    std::vector<std::string> columns;
    /// rows[cell][column]
    std::vector<std::vector<double>> rows;
    /// max - min of each column.
    std::vector<double> spreads() const;
    bool steady(double tol) const;
};

/// Per-cell steady invariants. Throws DryStateError for a dry cell.
InvariantTable steady_invariants(ModelKind model, const Field1D& field, double g);

/// Family of states that keeps every invariant except the energy fixed while h
/// varies: h u_m = h0 u_m0, alpha_1 / h fixed, alpha_i fixed for i >= 2
/// (alpha_i / h fixed for SWLME). Along a profile h(x) the quasilinear residual
/// vanishes in every row but the momentum row, where it is dE/dx / h.
struct SteadyFamily {
    ModelKind model = ModelKind::PHSWME;
    double h0 = 1.0;
    double um0 = 1.0;
    std::vector<double> alpha0;

    PrimitiveState at(double h) const;
    /// dU_p/dh along the family.
    Vec derivative(double h) const;
};

/// A_p(U(x)) (U(x+dx) - U(x-dx)) / (2 dx) for a profile U(x).
Vec quasilinear_residual(ModelKind model, const std::function<PrimitiveState(double)>& profile, double x,
                         double dx, const CoefficientTensors& tensors, double g);

}  // namespace swm
