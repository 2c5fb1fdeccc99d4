#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace swm {

/// Largest supported moment order N.
inline constexpr int kMaxOrder = 12;
/// Largest system size N+2.
inline constexpr int kMaxVars = kMaxOrder + 2;

/// Dense vectors and matrices sized for at most kMaxVars unknowns.
/// The fixed upper bound keeps them on the stack inside solver kernels.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVars, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                          kMaxVars, kMaxVars>;
using Complex = std::complex<double>;

/// A state with vanishing (or negative) depth was passed where h > h_min is required.
class DryStateError : public std::domain_error {
public:
    explicit DryStateError(const std::string& what) : std::domain_error(what) {}
};

/// Moment order or polynomial degree outside the supported range.
class OrderOutOfRange : public std::out_of_range {
public:
    explicit OrderOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// A closed form was requested for a model that has none (SWME).
class Unavailable : public std::logic_error {
public:
    explicit Unavailable(const std::string& what) : std::logic_error(what) {}
};

/// An iterative numerical routine failed (eigen solver, time stepping).
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

void check_order(int order);

}  // namespace swm
