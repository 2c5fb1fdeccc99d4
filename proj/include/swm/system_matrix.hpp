#pragma once

#include "swm/basis.hpp"
#include "swm/model.hpp"
#include "swm/state.hpp"
#include "swm/types.hpp"

namespace swm {

/// Quasilinear transport matrix A in dU/dt + A dU/dx = 0 for one state.
struct SystemMatrix {
    Mat entries;
    VariableSet variables = VariableSet::Convective;
    ModelKind model = ModelKind::SWME;
    int order = 0;

    double operator()(Eigen::Index r, Eigen::Index c) const { return entries(r, c); }
};

/// Sub-diagonal band coefficient a_i = (i-1)/(2i-1), i >= 2.
inline double lower_band(int i) { return static_cast<double>(i - 1) / (2 * i - 1); }
/// Super-diagonal band coefficient c_i = (i+1)/(2i+1), i >= 2.
inline double upper_band(int i) { return static_cast<double>(i + 1) / (2 * i + 1); }

/// Moment block of the convective SWME matrix:
///   block(i,l) = sum_j (B_ilj + 2 A_ijl) alpha_j + u_m delta_il
Mat lowering_block(const PrimitiveState& up, const CoefficientTensors& tensors);

/// u_m I + A_2 with the a_i / c_i bands scaled by alpha_1; the moment block
/// of every model regularized around linear profiles.
Mat linear_profile_block(int order, double um, double alpha1);

/// Builds the printed closed form for (model, variable set). Regularized models
/// are assembled from their band structure, never by evaluating SWME at a
/// modified state. `tensors` must match the state's order (only SWME reads them).
SystemMatrix build_system_matrix(ModelKind model, VariableSet variables,
                                 const PrimitiveState& up, const CoefficientTensors& tensors,
                                 double g);

/// A_p = J^{-1} A_c J and A_c = J A_p J^{-1}, with J = dT/dU_p at `up`.
Mat convective_to_primitive(const Mat& a_c, const PrimitiveState& up);
Mat primitive_to_convective(const Mat& a_p, const PrimitiveState& up);

/// Sum_{i=from}^{N} alpha_i^2 / (2i+1).
double weighted_moment_energy(const PrimitiveState& up, int from = 1);

}  // namespace swm
