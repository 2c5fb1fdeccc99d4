#pragma once

#include "swm/types.hpp"

#include <functional>
#include <vector>

namespace swm {

/// Gauss-Legendre rule mapped to [0,1]. Weights sum to one.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Highest polynomial degree integrated exactly (2n-1).
    int exact_degree() const { return 2 * static_cast<int>(nodes.size()) - 1; }

    template <class F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (std::size_t q = 0; q < nodes.size(); ++q) sum += weights[q] * f(nodes[q]);
        return sum;
    }
};

/// n-point Gauss-Legendre rule on [0,1], nodes by Newton iteration on P_n.
Quadrature gauss_legendre(int n_points);

/// Standard Legendre polynomial P_n(x) and its derivative on [-1,1], P_n(1) = 1.
struct LegendreValue {
    double value;
    double derivative;
};
LegendreValue legendre(int n, double x);

/// Scaled basis on [0,1]: phi_i(zeta) = P_i(1 - 2 zeta), so phi_i(0) = 1.
double phi(int i, double zeta);
double phi_prime(int i, double zeta);

/// int_0^zeta phi_j, in closed form via (P_{j-1} - P_{j+1}) / (2(2j+1)).
double phi_integral(int j, double zeta);

/// Closure coefficients for order N, indexed 1..N in every slot.
///
///   A_ijk = (2i+1) int phi_i phi_j phi_k
///   B_ijk = (2i+1) int phi_i' (int_0^zeta phi_j) phi_k
///   D_ij  = (2i+1) int phi_i' phi_j'          (bottom friction)
class CoefficientTensors {
public:
    explicit CoefficientTensors(int order);

    int order() const { return order_; }
    double A(int i, int j, int k) const { return a_[index(i, j, k)]; }
    double B(int i, int j, int k) const { return b_[index(i, j, k)]; }
    double D(int i, int j) const { return d_[static_cast<std::size_t>((i - 1) * order_ + (j - 1))]; }

private:
    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(((i - 1) * order_ + (j - 1)) * order_ + (k - 1));
    }

    int order_;
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<double> d_;
};

/// Throws OrderOutOfRange unless 1 <= N <= kMaxOrder.
CoefficientTensors coefficient_tensors(int order);

/// Mean velocity and moments of a vertical profile u(zeta).
struct ProjectedProfile {
    double um = 0.0;
    std::vector<double> alpha;
};

/// u_m = int u, alpha_i = (2i+1) int u phi_i. The default rule is exact for
/// polynomial profiles up to degree 2*64-1-N.
ProjectedProfile project_profile(const std::function<double(double)>& u, int order,
                                 int n_points = 64);

/// u_m + sum alpha_i phi_i(zeta).
double synthesize_profile(const ProjectedProfile& p, double zeta);

}  // namespace swm
