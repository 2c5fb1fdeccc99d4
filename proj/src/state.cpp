#include "swm/state.hpp"

#include <cmath>
#include <sstream>

namespace swm {

namespace {

void check_size(Eigen::Index n) {
    if (n < 3 || n > kMaxVars) {
        throw OrderOutOfRange("state must have between 3 and " + std::to_string(kMaxVars) +
                              " components");
    }
}

void require_wet(double h, double h_min) {
    if (!(h > h_min)) {
        std::ostringstream os;
        os << "dry state: h = " << h << " <= h_min = " << h_min;
        throw DryStateError(os.str());
    }
}

}  // namespace

PrimitiveState::PrimitiveState(double h, double um, std::span<const double> alpha) {
    check_size(static_cast<Eigen::Index>(alpha.size()) + 2);
    v_.resize(static_cast<Eigen::Index>(alpha.size()) + 2);
    v_[0] = h;
    v_[1] = um;
    for (std::size_t i = 0; i < alpha.size(); ++i) v_[static_cast<Eigen::Index>(i) + 2] = alpha[i];
}

PrimitiveState PrimitiveState::from_vector(const Vec& v) {
    check_size(v.size());
    PrimitiveState s;
    s.v_ = v;
    return s;
}

PrimitiveState PrimitiveState::linearized() const {
    PrimitiveState s = *this;
    for (Eigen::Index k = 3; k < s.v_.size(); ++k) s.v_[k] = 0.0;
    return s;
}

ConvectiveState::ConvectiveState(double h, double hu, std::span<const double> halpha) {
    check_size(static_cast<Eigen::Index>(halpha.size()) + 2);
    v_.resize(static_cast<Eigen::Index>(halpha.size()) + 2);
    v_[0] = h;
    v_[1] = hu;
    for (std::size_t i = 0; i < halpha.size(); ++i) v_[static_cast<Eigen::Index>(i) + 2] = halpha[i];
}

ConvectiveState ConvectiveState::from_vector(const Vec& v) {
    check_size(v.size());
    ConvectiveState s;
    s.v_ = v;
    return s;
}

ConvectiveState to_convective(const PrimitiveState& up) {
    Vec v = up.vector();
    for (Eigen::Index k = 1; k < v.size(); ++k) v[k] *= up.h();
    return ConvectiveState::from_vector(v);
}

PrimitiveState to_primitive(const ConvectiveState& uc, double h_min) {
    require_wet(uc.h(), h_min);
    Vec v = uc.vector();
    for (Eigen::Index k = 1; k < v.size(); ++k) v[k] /= uc.h();
    return PrimitiveState::from_vector(v);
}

Mat jacobian_T(const PrimitiveState& up) {
    require_wet(up.h(), 0.0);
    const Eigen::Index n = up.vector().size();
    Mat J = Mat::Zero(n, n);
    J(0, 0) = 1.0;
    for (Eigen::Index r = 1; r < n; ++r) {
        J(r, 0) = up.vector()[r];
        J(r, r) = up.h();
    }
    return J;
}

Mat jacobian_T_inv(const PrimitiveState& up) {
    require_wet(up.h(), 0.0);
    const Eigen::Index n = up.vector().size();
    const double inv_h = 1.0 / up.h();
    Mat Ji = Mat::Zero(n, n);
    Ji(0, 0) = 1.0;
    for (Eigen::Index r = 1; r < n; ++r) {
        Ji(r, 0) = -up.vector()[r] * inv_h;
        Ji(r, r) = inv_h;
    }
    return Ji;
}

}  // namespace swm
