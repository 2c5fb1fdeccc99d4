#include "swm/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace swm {

void check_order(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw OrderOutOfRange("moment order " + std::to_string(order) + " outside [1, " +
                              std::to_string(kMaxOrder) + "]");
    }
}

LegendreValue legendre(int n, double x) {
    if (n == 0) return {1.0, 0.0};
    double p_prev = 1.0, p = x;
    double dp_prev = 0.0, dp = 1.0;
    for (int k = 1; k < n; ++k) {
        const double p_next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
        // P'_{k+1} = P'_{k-1} + (2k+1) P_k
        const double dp_next = dp_prev + (2 * k + 1) * p;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    return {p, dp};
}

Quadrature gauss_legendre(int n_points) {
    if (n_points < 1) throw OrderOutOfRange("quadrature needs at least one node");
    Quadrature q;
    q.nodes.resize(static_cast<std::size_t>(n_points));
    q.weights.resize(static_cast<std::size_t>(n_points));
    const int half = (n_points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n_points + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(n_points, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(n_points, x).derivative;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1,1] -> [0,1]; ascending nodes
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n_points - 1 - i);
        q.nodes[lo] = 0.5 * (1.0 - x);
        q.nodes[hi] = 0.5 * (1.0 + x);
        q.weights[lo] = 0.5 * w;
        q.weights[hi] = 0.5 * w;
    }
    return q;
}

double phi(int i, double zeta) { return legendre(i, 1.0 - 2.0 * zeta).value; }

double phi_prime(int i, double zeta) { return -2.0 * legendre(i, 1.0 - 2.0 * zeta).derivative; }

double phi_integral(int j, double zeta) {
    if (j == 0) return zeta;
    return (phi(j - 1, zeta) - phi(j + 1, zeta)) / (2.0 * (2 * j + 1));
}

CoefficientTensors::CoefficientTensors(int order) : order_(order) {
    check_order(order);
    const auto n = static_cast<std::size_t>(order);
    a_.assign(n * n * n, 0.0);
    b_.assign(n * n * n, 0.0);
    d_.assign(n * n, 0.0);

    const Quadrature quad = gauss_legendre((3 * order + 3) / 2);
    const std::size_t nq = quad.nodes.size();

    // Tabulate basis data at the nodes once.
    std::vector<double> ph((n + 1) * nq), dph((n + 1) * nq), iph((n + 1) * nq);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t q = 0; q < nq; ++q) {
            const double z = quad.nodes[q];
            ph[i * nq + q] = phi(static_cast<int>(i), z);
            dph[i * nq + q] = phi_prime(static_cast<int>(i), z);
            iph[i * nq + q] = phi_integral(static_cast<int>(i), z);
        }
    }

    for (int i = 1; i <= order; ++i) {
        const double scale = 2 * i + 1;
        for (int j = 1; j <= order; ++j) {
            for (int k = 1; k <= order; ++k) {
                double sa = 0.0, sb = 0.0;
                for (std::size_t q = 0; q < nq; ++q) {
                    const double w = quad.weights[q];
                    sa += w * ph[i * nq + q] * ph[j * nq + q] * ph[k * nq + q];
                    sb += w * dph[i * nq + q] * iph[j * nq + q] * ph[k * nq + q];
                }
                a_[index(i, j, k)] = scale * sa;
                b_[index(i, j, k)] = scale * sb;
            }
            double sd = 0.0;
            for (std::size_t q = 0; q < nq; ++q) {
                sd += quad.weights[q] * dph[i * nq + q] * dph[j * nq + q];
            }
            d_[static_cast<std::size_t>((i - 1) * order + (j - 1))] = scale * sd;
        }
    }
    // A_ijk is symmetric in (j,k) analytically; copy so it also holds bitwise.
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            for (int k = j + 1; k <= order; ++k) a_[index(i, k, j)] = a_[index(i, j, k)];
}

CoefficientTensors coefficient_tensors(int order) { return CoefficientTensors(order); }

ProjectedProfile project_profile(const std::function<double(double)>& u, int order,
                                 int n_points) {
    check_order(order);
    const Quadrature quad = gauss_legendre(n_points);
    ProjectedProfile p;
    p.alpha.assign(static_cast<std::size_t>(order), 0.0);
    for (std::size_t q = 0; q < quad.nodes.size(); ++q) {
        const double z = quad.nodes[q];
        const double wu = quad.weights[q] * u(z);
        p.um += wu;
        for (int i = 1; i <= order; ++i) p.alpha[static_cast<std::size_t>(i - 1)] += wu * phi(i, z);
    }
    for (int i = 1; i <= order; ++i) p.alpha[static_cast<std::size_t>(i - 1)] *= (2 * i + 1);
    return p;
}

double synthesize_profile(const ProjectedProfile& p, double zeta) {
    double u = p.um;
    for (std::size_t i = 0; i < p.alpha.size(); ++i) u += p.alpha[i] * phi(static_cast<int>(i) + 1, zeta);
    return u;
}

}  // namespace swm
