#pragma once

#include "swm/basis.hpp"
#include "swm/model.hpp"
#include "swm/state.hpp"
#include "swm/system_matrix.hpp"

#include <optional>
#include <vector>

namespace swm {

/// Roots of P'_n on (-1,1), ascending. Valid for 2 <= n <= 13.
std::vector<double> legendre_deriv_roots(int n);

/// Largest root of P'_{N+1}, cached per order.
double largest_interior_root(int order);

/// (2k+1)!! = 1 * 3 * ... * (2k+1).
double double_factorial_odd(int k);

/// alpha^{n-1} P'_n(mu / alpha), evaluated without dividing by alpha so that
/// alpha = 0 gives the limit (leading coefficient of P'_n) * mu^{n-1}.
double scaled_legendre_deriv(int n, double mu, double alpha);

/// Ascending real part, ties broken by imaginary part.
void sort_spectrum(std::vector<Complex>& eigenvalues);

/// Max distance between two spectra after pairing; inf if sizes differ.
double spectrum_distance(std::vector<Complex> a, std::vector<Complex> b);

/// Closed-form eigenvalues (sorted), or nullopt for SWME. MHSWME outside its
/// hyperbolicity region yields a complex-conjugate outer pair.
std::optional<std::vector<Complex>> analytic_eigenvalues(ModelKind model, const PrimitiveState& up,
                                                         double g);

/// det(A - lambda I) from the closed-form characteristic polynomial.
/// Throws Unavailable for SWME.
double char_poly_eval(ModelKind model, double lambda, const PrimitiveState& up, double g);

enum class HyperbolicityStatus { NonHyperbolic = 0, Hyperbolic = 1, Marginal = 2 };

struct SpectralOptions {
    /// |Im lambda| <= imag_tol * (1 + spectral radius) counts as real.
    double imag_tol = 1e-9;
    /// Eigenvector matrices with condition number above this count as defective.
    double max_condition = 1e8;
    /// Non-hyperbolic states with |Im lambda| below this relative level are "marginal".
    double marginal_tol = 1e-6;
    bool compute_condition = true;
};

struct SpectralReport {
    std::vector<Complex> eigenvalues;
    bool hyperbolic = false;
    HyperbolicityStatus status = HyperbolicityStatus::NonHyperbolic;
    double max_imag = 0.0;
    double spectral_radius = 0.0;
    double eigenvector_condition = 0.0;
    bool analytic_available = false;
    double analytic_mismatch = 0.0;
};

/// Dense nonsymmetric eigendecomposition (Hessenberg + shifted QR) plus the
/// diagonalizability check. Throws NumericalFailure if QR does not converge
/// within 100 (N+2)^2 iterations.
SpectralReport numeric_spectrum(const SystemMatrix& a, const SpectralOptions& options = {});

/// numeric_spectrum of the model's matrix, compared against the closed form when one exists.
SpectralReport spectral_report(ModelKind model, VariableSet vars, const PrimitiveState& up,
                               const CoefficientTensors& tensors, double g,
                               const SpectralOptions& options = {});

/// Max |lambda| and max |Im lambda| for one state; closed form where
/// available, QR for SWME.
struct WaveSpeed {
    double radius = 0.0;
    double max_imag = 0.0;
};
WaveSpeed wave_speed(ModelKind model, const PrimitiveState& up, const CoefficientTensors& tensors,
                     double g);

}  // namespace swm
