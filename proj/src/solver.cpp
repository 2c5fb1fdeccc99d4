#include "swm/solver.hpp"

#include "swm/spectral.hpp"
#include "swm/system_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>

namespace swm {

namespace {

// Neighbouring cell across the left boundary of cell i (ghost for i = 0).
int left_neighbour(const Field1D& f, int i) {
    if (i > 0) return i - 1;
    return f.boundary() == Boundary::Periodic ? f.n_cells() - 1 : 0;
}

void advance(Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors, double dt,
             double time, bool parallel) {
    const int n = field.n_cells();
    const int nv = field.n_vars();
    const double ratio = dt / field.dx();

    // Interface i sits at the left edge of cell i. The right domain edge is a
    // zero jump for outflow and interface 0 again for periodic boundaries.
    std::vector<double> dminus(static_cast<std::size_t>(n) * nv);
    std::vector<double> dplus(static_cast<std::size_t>(n) * nv);
    std::vector<double> source(config.friction ? static_cast<std::size_t>(n) * nv : 0);

    // Exceptions may not leave an OpenMP region; keep the first and rethrow.
    std::exception_ptr failure;
#pragma omp parallel if (parallel)
    {
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) {
            try {
                const Fluctuations d = path_fluctuations(field.convective(left_neighbour(field, i)), field.convective(i),
                                                         config.model, tensors, config.g, config.h_min);
                for (int k = 0; k < nv; ++k) {
                    dminus[static_cast<std::size_t>(i) * nv + k] = d.minus[k];
                    dplus[static_cast<std::size_t>(i) * nv + k] = d.plus[k];
                }
                if (config.friction) {
                    const Vec s = friction_source(field.primitive(i, config.h_min), *config.friction, tensors);
                    for (int k = 0; k < nv; ++k) source[static_cast<std::size_t>(i) * nv + k] = s[k];
                }
            } catch (...) {
#pragma omp critical(swm_step_failure)
                if (!failure) failure = std::current_exception();
            }
        }

#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) {
            if (failure) continue;
            double* u = field.cell(i);
            const double* from_left = &dplus[static_cast<std::size_t>(i) * nv];
            const bool closed = i + 1 == n && field.boundary() == Boundary::Outflow;
            const int right = i + 1 == n ? 0 : i + 1;
            for (int k = 0; k < nv; ++k) {
                const double from_right = closed ? 0.0 : dminus[static_cast<std::size_t>(right) * nv + k];
                u[k] -= ratio * (from_left[k] + from_right);
                if (config.friction) u[k] += dt * source[static_cast<std::size_t>(i) * nv + k];
            }
        }
    }

    if (failure) std::rethrow_exception(failure);

    for (int i = 0; i < n; ++i) {
        const double h = field.cell(i)[0];
        for (int k = 0; k < nv; ++k) {
            if (!std::isfinite(field.cell(i)[k])) {
                std::ostringstream msg;
                msg << "non-finite value in cell " << i << " at t = " << time + dt;
                throw NumericalFailure(msg.str());
            }
        }
        if (!(h > config.h_min)) {
            std::ostringstream msg;
            msg << "cell " << i << " ran dry (h = " << h << ") at t = " << time + dt;
            throw DryStateError(msg.str());
        }
    }
}

}  // namespace

void SolverConfig::validate() const {
    check_order(order);
    if (!(g > 0.0)) throw std::invalid_argument("gravity must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (dt_mode == TimeStepMode::Fixed && !(dt > 0.0)) throw std::invalid_argument("fixed time step must be positive");
    if (dt_mode == TimeStepMode::Cfl && !(cfl > 0.0 && cfl <= 1.0)) {
        throw std::invalid_argument("CFL number must lie in (0, 1]");
    }
    if (friction && !(friction->viscosity > 0.0 && friction->slip_length > 0.0)) {
        throw std::invalid_argument("friction needs positive viscosity and slip length");
    }
    if (!(h_min >= 0.0)) throw std::invalid_argument("h_min must be non-negative");
}

Fluctuations path_fluctuations(const ConvectiveState& left, const ConvectiveState& right, ModelKind model,
                               const CoefficientTensors& tensors, double g, double h_min) {
    const PrimitiveState pl = to_primitive(left, h_min);
    const PrimitiveState pr = to_primitive(right, h_min);
    const Vec jump = right.vector() - left.vector();
    const ConvectiveState mean = ConvectiveState::from_vector(0.5 * (left.vector() + right.vector()));
    const PrimitiveState pm = to_primitive(mean, h_min);

    Fluctuations out;
    out.speed = std::max({wave_speed(model, pl, tensors, g).radius, wave_speed(model, pr, tensors, g).radius,
                          wave_speed(model, pm, tensors, g).radius});
    const Vec flux = build_system_matrix(model, VariableSet::Convective, pm, tensors, g).entries * jump;
    out.minus = 0.5 * (flux - out.speed * jump);
    out.plus = 0.5 * (flux + out.speed * jump);
    return out;
}

Vec friction_source(const PrimitiveState& up, const Friction& friction, const CoefficientTensors& tensors) {
    const int n = up.order();
    if (tensors.order() != n) throw OrderOutOfRange("coefficient tensors built for a different order");
    if (!(up.h() > 0.0)) throw DryStateError("friction requires h > 0");
    const double slip = friction.viscosity / friction.slip_length;
    double ub = up.um();
    for (int j = 1; j <= n; ++j) ub += up.alpha(j);

    Vec s = Vec::Zero(n + 2);
    s[1] = -slip * ub;
    for (int i = 1; i <= n; ++i) {
        double shear = 0.0;
        for (int j = 1; j <= n; ++j) shear += tensors.D(i, j) * up.alpha(j);
        s[1 + i] = -(2 * i + 1) * slip * ub - friction.viscosity / up.h() * shear;
    }
    return s;
}

FieldSpeeds field_speeds(const Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors,
                         bool parallel) {
    double speed = 0.0, imag = 0.0;
    std::exception_ptr failure;
#pragma omp parallel for if (parallel) reduction(max : speed, imag) schedule(static)
    for (int i = 0; i < field.n_cells(); ++i) {
        try {
            const WaveSpeed w = wave_speed(config.model, field.primitive(i, config.h_min), tensors, config.g);
            speed = std::max(speed, w.radius);
            imag = std::max(imag, w.max_imag);
        } catch (...) {
#pragma omp critical(swm_speed_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return {speed, imag};
}

double time_step(const Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors) {
    if (config.dt_mode == TimeStepMode::Fixed) return config.dt;
    const double s = field_speeds(field, config, tensors).max_speed;
    if (!(s > 0.0)) return config.t_end;
    return config.cfl * field.dx() / s;
}

void step(Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors, double dt, double time) {
    advance(field, config, tensors, dt, time, true);
}

void step_serial(Field1D& field, const SolverConfig& config, const CoefficientTensors& tensors, double dt,
                 double time) {
    advance(field, config, tensors, dt, time, false);
}

RunResult run(Field1D field, const SolverConfig& config, bool parallel) {
    config.validate();
    if (field.order() != config.order) throw OrderOutOfRange("field order does not match solver order");
    const CoefficientTensors tensors(config.order);

    RunResult result;
    double t = 0.0;
    while (t < config.t_end) {
        if (result.steps >= config.max_steps) {
            throw NumericalFailure("step limit reached before t_end");
        }
        const FieldSpeeds speeds = field_speeds(field, config, tensors, parallel);
        double dt = config.dt;
        if (config.dt_mode == TimeStepMode::Cfl) {
            if (!(speeds.max_speed > 0.0) || !std::isfinite(speeds.max_speed)) {
                dt = config.t_end - t;
            } else {
                dt = config.cfl * field.dx() / speeds.max_speed;
            }
        }
        // Clip the last step; also absorb a sliver that would otherwise remain.
        if (t + dt >= config.t_end || config.t_end - (t + dt) < 1e-12 * config.t_end) dt = config.t_end - t;

        if (speeds.max_imag > config.imag_warning) ++result.hyperbolicity_warnings;
        result.max_imag = std::max(result.max_imag, speeds.max_imag);

        advance(field, config, tensors, dt, t, parallel);
        t = dt == config.t_end - t ? config.t_end : t + dt;
        ++result.steps;
        result.diagnostics.push_back({t, dt, field.total_mass(), field.total_momentum(), speeds.max_imag});
    }
    result.field = std::move(field);
    return result;
}

}  // namespace swm
