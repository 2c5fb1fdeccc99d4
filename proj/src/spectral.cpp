#include "swm/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace swm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Number of eigenvalues below x of the symmetric tridiagonal matrix with zero
// diagonal and squared off-diagonals b2 (Sturm sequence).
int count_below(const std::vector<double>& b2, double x) {
    int count = 0;
    double q = -x;
    if (q < 0.0) ++count;
    for (double b : b2) {
        if (q == 0.0) q = 1e-300;
        q = -x - b / q;
        if (q < 0.0) ++count;
    }
    return count;
}

// Quadratic factor of the characteristic polynomial, in mu = lambda - u_m.
// Returns (mu^2 - radicand) via the radicand.
double outer_radicand(ModelKind model, const PrimitiveState& up, double g) {
    const double gh = g * up.h();
    const double a1 = up.alpha(1);
    switch (model) {
        case ModelKind::HSWME:
        case ModelKind::PHSWME: return gh + a1 * a1;
        case ModelKind::MHSWME: return gh + a1 * a1 - weighted_moment_energy(up, 2);
        case ModelKind::PMHSWME: return gh + a1 * a1 + weighted_moment_energy(up, 2);
        case ModelKind::SWLME: return gh + 3.0 * weighted_moment_energy(up, 1);
        case ModelKind::SWME: break;
    }
    throw Unavailable("SWME has no closed-form spectrum");
}

}  // namespace

std::vector<double> legendre_deriv_roots(int n) {
    if (n < 2 || n > kMaxOrder + 1) {
        throw OrderOutOfRange("legendre_deriv_roots: degree " + std::to_string(n) +
                              " outside [2, " + std::to_string(kMaxOrder + 1) + "]");
    }
    // P'_n is proportional to the Jacobi polynomial P^{(1,1)}_{n-1}; its roots are the
    // eigenvalues of the Jacobi matrix with zero diagonal and b_k^2 = k(k+2)/((2k+1)(2k+3)).
    const int m = n - 1;
    std::vector<double> b2;
    for (int k = 1; k < m; ++k) {
        b2.push_back(static_cast<double>(k) * (k + 2) / ((2.0 * k + 1) * (2.0 * k + 3)));
    }
    std::vector<double> roots(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        double lo = -1.0, hi = 1.0;
        while (hi - lo > 1e-15) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(b2, mid) > r) hi = mid;
            else lo = mid;
        }
        double x = 0.5 * (lo + hi);
        // Newton polish on P'_n, using P''_n = (2x P'_n - n(n+1) P_n) / (1 - x^2).
        for (int it = 0; it < 2; ++it) {
            const auto [p, dp] = legendre(n, x);
            const double ddp = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
            if (ddp == 0.0) break;
            const double step = dp / ddp;
            if (std::abs(step) > 1e-12) break;
            x -= step;
        }
        roots[static_cast<std::size_t>(r)] = x;
    }
    // exact parity
    for (int r = 0; r < m / 2; ++r) {
        const double s = 0.5 * (roots[static_cast<std::size_t>(m - 1 - r)] - roots[static_cast<std::size_t>(r)]);
        roots[static_cast<std::size_t>(r)] = -s;
        roots[static_cast<std::size_t>(m - 1 - r)] = s;
    }
    if (m % 2 == 1) roots[static_cast<std::size_t>(m / 2)] = 0.0;
    return roots;
}

double largest_interior_root(int order) {
    static const std::array<double, kMaxOrder + 1> table = [] {
        std::array<double, kMaxOrder + 1> t{};
        for (int n = 1; n <= kMaxOrder; ++n) t[static_cast<std::size_t>(n)] = legendre_deriv_roots(n + 1).back();
        return t;
    }();
    check_order(order);
    return table[static_cast<std::size_t>(order)];
}

double double_factorial_odd(int k) {
    double r = 1.0;
    for (int m = 3; m <= 2 * k + 1; m += 2) r *= m;
    return r;
}

double scaled_legendre_deriv(int n, double mu, double alpha) {
    if (n <= 0) return 0.0;
    if (n == 1) return 1.0;
    double q_prev = 1.0;    // Q_1
    double q = 3.0 * mu;    // Q_2
    const double a2 = alpha * alpha;
    for (int k = 3; k <= n; ++k) {
        const double q_next = ((2.0 * k - 1.0) * mu * q - k * a2 * q_prev) / (k - 1.0);
        q_prev = q;
        q = q_next;
    }
    return q;
}

void sort_spectrum(std::vector<Complex>& ev) {
    std::sort(ev.begin(), ev.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return kInf;
    sort_spectrum(a);
    sort_spectrum(b);
    double sorted_gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sorted_gap = std::max(sorted_gap, std::abs(a[i] - b[i]));

    // Canonical order is fragile when real parts tie up to rounding; greedy nearest
    // pairing covers that case.
    std::vector<bool> used(b.size(), false);
    double greedy_gap = 0.0;
    for (const Complex& x : a) {
        std::size_t best = 0;
        double best_d = kInf;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        greedy_gap = std::max(greedy_gap, best_d);
    }
    return std::min(sorted_gap, greedy_gap);
}

std::optional<std::vector<Complex>> analytic_eigenvalues(ModelKind model, const PrimitiveState& up,
                                                         double g) {
    if (model == ModelKind::SWME) return std::nullopt;
    const int n = up.order();
    check_order(n);
    const double um = up.um();
    std::vector<Complex> ev;
    ev.reserve(static_cast<std::size_t>(n + 2));
    if (model == ModelKind::SWLME) {
        for (int i = 0; i < n; ++i) ev.emplace_back(um, 0.0);
    } else {
        const double a1 = up.alpha(1);
        for (double r : legendre_deriv_roots(n + 1)) ev.emplace_back(um + a1 * r, 0.0);
    }
    const double rad = outer_radicand(model, up, g);
    if (rad >= 0.0) {
        const double s = std::sqrt(rad);
        ev.emplace_back(um - s, 0.0);
        ev.emplace_back(um + s, 0.0);
    } else {
        const double s = std::sqrt(-rad);
        ev.emplace_back(um, -s);
        ev.emplace_back(um, s);
    }
    sort_spectrum(ev);
    return ev;
}

double char_poly_eval(ModelKind model, double lambda, const PrimitiveState& up, double g) {
    if (model == ModelKind::SWME) throw Unavailable("SWME has no closed-form characteristic polynomial");
    const int n = up.order();
    check_order(n);
    const double mu = lambda - up.um();
    const double quadratic = mu * mu - outer_radicand(model, up, g);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (model == ModelKind::SWLME) return sign * std::pow(mu, n) * quadratic;
    // (-alpha_1)^N N!/(2N+1)!! P'_{N+1}(mu/alpha_1) = (-1)^N N!/(2N+1)!! Q_{N+1}(mu, alpha_1)
    double n_fact = 1.0;
    for (int k = 2; k <= n; ++k) n_fact *= k;
    const double lead = sign * n_fact / double_factorial_odd(n);
    return lead * scaled_legendre_deriv(n + 1, mu, up.alpha(1)) * quadratic;
}

SpectralReport numeric_spectrum(const SystemMatrix& a, const SpectralOptions& options) {
    const Eigen::Index n = a.entries.rows();
    const Eigen::MatrixXd m = a.entries;
    if (!m.allFinite()) throw NumericalFailure("numeric_spectrum: non-finite matrix entries");

    Eigen::EigenSolver<Eigen::MatrixXd> solver;
    solver.setMaxIterations(100 * n * n);
    solver.compute(m, options.compute_condition);
    if (solver.info() != Eigen::Success) {
        throw NumericalFailure("numeric_spectrum: QR iteration did not converge");
    }

    SpectralReport rep;
    const auto& values = solver.eigenvalues();
    for (Eigen::Index i = 0; i < n; ++i) {
        rep.eigenvalues.push_back(values[i]);
        rep.max_imag = std::max(rep.max_imag, std::abs(values[i].imag()));
        rep.spectral_radius = std::max(rep.spectral_radius, std::abs(values[i]));
    }
    sort_spectrum(rep.eigenvalues);

    const double scale = 1.0 + rep.spectral_radius;
    const bool real_spectrum = rep.max_imag <= options.imag_tol * scale;

    if (!options.compute_condition) {
        rep.eigenvector_condition = real_spectrum ? 1.0 : kInf;
    } else if (real_spectrum) {
        // Real diagonalizability: each cluster of (numerically) equal eigenvalues
        // must have a null space of A - lambda I with full dimension.
        const double cluster_tol = 1e-6 * scale;
        const double null_tol = 1e-8 * scale;
        Eigen::MatrixXd basis(n, n);
        Eigen::Index filled = 0;
        bool defective = false;
        std::size_t start = 0;
        while (start < rep.eigenvalues.size()) {
            std::size_t end = start + 1;
            while (end < rep.eigenvalues.size() &&
                   rep.eigenvalues[end].real() - rep.eigenvalues[end - 1].real() <= cluster_tol) {
                ++end;
            }
            const auto mult = static_cast<Eigen::Index>(end - start);
            double mean = 0.0;
            for (std::size_t k = start; k < end; ++k) mean += rep.eigenvalues[k].real();
            mean /= static_cast<double>(mult);

            const Eigen::MatrixXd shifted = m - mean * Eigen::MatrixXd::Identity(n, n);
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
            const auto& sv = svd.singularValues();
            Eigen::Index nullity = 0;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (sv[k] <= null_tol) ++nullity;
            }
            if (nullity < mult) defective = true;
            // Singular values are descending: the last `mult` columns of V span the
            // (approximate) eigenspace.
            basis.middleCols(filled, mult) = svd.matrixV().rightCols(mult);
            filled += mult;
            start = end;
        }
        if (defective) {
            rep.eigenvector_condition = kInf;
        } else {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis);
            const auto& sv = svd.singularValues();
            rep.eigenvector_condition = sv[n - 1] > 0.0 ? sv[0] / sv[n - 1] : kInf;
        }
    } else {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(solver.eigenvectors());
        const auto& sv = svd.singularValues();
        rep.eigenvector_condition = sv[n - 1] > 0.0 ? sv[0] / sv[n - 1] : kInf;
    }

    rep.hyperbolic = real_spectrum && rep.eigenvector_condition <= options.max_condition;
    if (rep.hyperbolic) {
        rep.status = HyperbolicityStatus::Hyperbolic;
    } else if (rep.max_imag <= options.marginal_tol * scale) {
        rep.status = HyperbolicityStatus::Marginal;
    } else {
        rep.status = HyperbolicityStatus::NonHyperbolic;
    }
    return rep;
}

SpectralReport spectral_report(ModelKind model, VariableSet vars, const PrimitiveState& up,
                               const CoefficientTensors& tensors, double g,
                               const SpectralOptions& options) {
    SpectralReport rep = numeric_spectrum(build_system_matrix(model, vars, up, tensors, g), options);
    if (auto analytic = analytic_eigenvalues(model, up, g)) {
        rep.analytic_available = true;
        rep.analytic_mismatch = spectrum_distance(*analytic, rep.eigenvalues);
    }
    return rep;
}

WaveSpeed wave_speed(ModelKind model, const PrimitiveState& up, const CoefficientTensors& tensors,
                     double g) {
    const int n = up.order();
    WaveSpeed w;
    if (model == ModelKind::SWME) {
        const Mat a = build_system_matrix(model, VariableSet::Primitive, up, tensors, g).entries;
        Eigen::EigenSolver<Mat> solver(a, false);
        if (solver.info() != Eigen::Success) throw NumericalFailure("wave_speed: QR iteration did not converge");
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const Complex ev = solver.eigenvalues()[i];
            w.radius = std::max(w.radius, std::abs(ev));
            w.max_imag = std::max(w.max_imag, std::abs(ev.imag()));
        }
        return w;
    }
    const double um = up.um();
    const double interior =
        model == ModelKind::SWLME ? std::abs(um) : std::abs(um) + std::abs(up.alpha(1)) * largest_interior_root(n);
    const double rad = outer_radicand(model, up, g);
    double outer;
    if (rad >= 0.0) {
        outer = std::abs(um) + std::sqrt(rad);
    } else {
        outer = std::sqrt(um * um - rad);
        w.max_imag = std::sqrt(-rad);
    }
    w.radius = std::max(interior, outer);
    return w;
}

}  // namespace swm
