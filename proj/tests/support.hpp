#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls into the library's basis or spectral code.

#include "swm/state.hpp"
#include "swm/types.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace swm::test {

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// phi_n(z) = P_n(1 - 2z) = sum_k C(n,k) C(n+k,k) (-z)^k, its derivative and its
/// integral from 0, all from the explicit sum. The sum cancels heavily for
/// larger n, so it is accumulated in long double.
struct ExplicitLegendre {
    static double value(int n, double z) {
        long double s = 0.0L;
        for (int k = 0; k <= n; ++k) s += coeff(n, k) * std::pow(static_cast<long double>(-z), k);
        return static_cast<double>(s);
    }
    static double derivative(int n, double z) {
        long double s = 0.0L;
        for (int k = 1; k <= n; ++k) s += coeff(n, k) * k * std::pow(-1.0L, k) * std::pow(static_cast<long double>(z), k - 1);
        return static_cast<double>(s);
    }
    static double integral(int n, double z) {
        long double s = 0.0L;
        for (int k = 0; k <= n; ++k) s += coeff(n, k) * std::pow(-1.0L, k) * std::pow(static_cast<long double>(z), k + 1) / (k + 1);
        return static_cast<double>(s);
    }

private:
    static long double coeff(int n, int k) {
        return static_cast<long double>(binomial(n, k)) * static_cast<long double>(binomial(n + k, k));
    }
};

/// Gauss-Legendre on [0,1] by Golub-Welsch (eigenvalues of the Jacobi matrix).
struct GolubWelsch {
    std::vector<double> nodes, weights;
    explicit GolubWelsch(int n) {
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
        for (int k = 1; k < n; ++k) {
            const double b = k / std::sqrt(4.0 * k * k - 1.0);
            j(k, k - 1) = j(k - 1, k) = b;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
        for (int k = 0; k < n; ++k) {
            nodes.push_back(0.5 * (es.eigenvalues()[k] + 1.0));
            const double v = es.eigenvectors()(0, k);
            weights.push_back(v * v);  // weights on [-1,1] sum to 2; halved for [0,1]
        }
    }
    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t q = 0; q < nodes.size(); ++q) s += weights[q] * f(nodes[q]);
        return s;
    }
};

/// A_ijk = (2i+1) int phi_i phi_j phi_k and B_ijk = (2i+1) int phi_i' (int_0 phi_j) phi_k.
struct TensorOracle {
    GolubWelsch rule{40};
    double A(int i, int j, int k) const {
        return (2 * i + 1) * rule.integrate([&](double z) {
            return ExplicitLegendre::value(i, z) * ExplicitLegendre::value(j, z) * ExplicitLegendre::value(k, z);
        });
    }
    double B(int i, int j, int k) const {
        return (2 * i + 1) * rule.integrate([&](double z) {
            return ExplicitLegendre::derivative(i, z) * ExplicitLegendre::integral(j, z) * ExplicitLegendre::value(k, z);
        });
    }
    double D(int i, int j) const {
        return (2 * i + 1) * rule.integrate(
                                 [&](double z) { return ExplicitLegendre::derivative(i, z) * ExplicitLegendre::derivative(j, z); });
    }
};

/// det(A - lambda I) by partial-pivot LU.
inline double lu_det(const Mat& a, double lambda) {
    Eigen::MatrixXd m = a;
    m.diagonal().array() -= lambda;
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

/// Plain dense eigenvalues, sorted by (re, im).
inline std::vector<std::complex<double>> plain_eigenvalues(const Mat& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(a), false);
    std::vector<std::complex<double>> ev(es.eigenvalues().begin(), es.eigenvalues().end());
    std::sort(ev.begin(), ev.end(), [](auto x, auto y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
    return ev;
}

/// Fixed-seed generator of physically plausible states.
class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    PrimitiveState state(int order, double alpha_scale = 0.5) {
        std::vector<double> a(static_cast<std::size_t>(order));
        for (double& v : a) v = uniform(-alpha_scale, alpha_scale);
        return PrimitiveState(uniform(0.5, 2.0), uniform(-1.0, 1.0), a);
    }

private:
    std::mt19937_64 rng_;
};

/// Root of a continuous increasing function on [lo, hi] by bisection.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 1e-14) {
    for (int it = 0; it < 300 && hi - lo > tol * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Classical shallow water conjugate depth ratio.
inline double swe_conjugate_depth(double fr) { return (-1.0 + std::sqrt(1.0 + 8.0 * fr * fr)) / 2.0; }

}  // namespace swm::test
