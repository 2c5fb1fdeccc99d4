#pragma once

#include "swm/types.hpp"

#include <span>

namespace swm {

/// Depth floor below which a cell counts as dry.
inline constexpr double kDefaultDryDepth = 1e-8;

/// (h, u_m, alpha_1..alpha_N). Moments are indexed from 1.
class PrimitiveState {
public:
    PrimitiveState() = default;
    PrimitiveState(double h, double um, std::span<const double> alpha);
    static PrimitiveState from_vector(const Vec& v);

    int order() const { return static_cast<int>(v_.size()) - 2; }
    double h() const { return v_[0]; }
    double um() const { return v_[1]; }
    double alpha(int i) const { return v_[i + 1]; }
    void set_alpha(int i, double value) { v_[i + 1] = value; }
    const Vec& vector() const { return v_; }

    /// Same state with alpha_i = 0 for i >= 2 (linear velocity profile).
    PrimitiveState linearized() const;

private:
    Vec v_;
};

/// (h, h u_m, h alpha_1..h alpha_N).
class ConvectiveState {
public:
    ConvectiveState() = default;
    ConvectiveState(double h, double hu, std::span<const double> halpha);
    static ConvectiveState from_vector(const Vec& v);

    int order() const { return static_cast<int>(v_.size()) - 2; }
    double h() const { return v_[0]; }
    double hu() const { return v_[1]; }
    double halpha(int i) const { return v_[i + 1]; }
    const Vec& vector() const { return v_; }

private:
    Vec v_;
};

ConvectiveState to_convective(const PrimitiveState& up);

/// Throws DryStateError if h <= h_min.
PrimitiveState to_primitive(const ConvectiveState& uc, double h_min = kDefaultDryDepth);

/// dT/dU_p: lower triangular, first column (1, u_m, alpha), diagonal (1, h, ..., h).
Mat jacobian_T(const PrimitiveState& up);
/// Its inverse: first column (1, -u_m/h, -alpha/h), diagonal (1, 1/h, ..., 1/h).
Mat jacobian_T_inv(const PrimitiveState& up);

}  // namespace swm
