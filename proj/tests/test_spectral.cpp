#include "doctest.h"
#include "support.hpp"

#include "swm/spectral.hpp"

#include <cmath>

using namespace swm;

namespace {

// Analytic models with states inside their hyperbolicity region.
constexpr std::array<ModelKind, 5> kClosedForm = kRegularizedModels;

PrimitiveState inside_state(test::StateSampler& s, ModelKind m, int n, double g) {
    for (;;) {
        const PrimitiveState up = s.state(n);
        if (m != ModelKind::MHSWME) return up;
        if (g * up.h() + up.alpha(1) * up.alpha(1) - weighted_moment_energy(up, 2) > 0.05) return up;
    }
}

double max_abs(const std::vector<Complex>& ev) {
    double r = 0.0;
    for (const auto& z : ev) r = std::max(r, std::abs(z));
    return r;
}

}  // namespace

TEST_CASE("roots of P'_n") {
    for (int n = 2; n <= 13; ++n) {
        const auto r = legendre_deriv_roots(n);
        REQUIRE(static_cast<int>(r.size()) == n - 1);
        for (std::size_t k = 0; k < r.size(); ++k) {
            // phi_n'(z) = -2 P_n'(1 - 2z), so P_n'(x) = 0 at z = (1 - x)/2.
            const double z = 0.5 * (1.0 - r[k]);
            CHECK(std::abs(test::ExplicitLegendre::derivative(n, z)) <= 1e-7 * test::binomial(2 * n, n));
            if (k > 0) CHECK(r[k] > r[k - 1]);
            CHECK(std::abs(r[k] + r[r.size() - 1 - k]) <= 1e-15);
        }
    }
    CHECK(std::abs(legendre_deriv_roots(3)[1] - 1.0 / std::sqrt(5.0)) <= 1e-15);
    CHECK_THROWS_AS(legendre_deriv_roots(14), OrderOutOfRange);
}

TEST_CASE("double factorial against the iterative product") {
    for (int k = 0; k <= 12; ++k) {
        long long p = 1;
        for (int m = 1; m <= 2 * k + 1; m += 2) p *= m;
        CHECK(double_factorial_odd(k) == static_cast<double>(p));
    }
}

TEST_CASE("scaled P'_n has the alpha -> 0 limit without dividing") {
    for (int n = 1; n <= 8; ++n) {
        const double mu = 0.37;
        const double small = scaled_legendre_deriv(n, mu, 1e-9);
        const double zero = scaled_legendre_deriv(n, mu, 0.0);
        CHECK(std::isfinite(zero));
        CHECK(std::abs(small - zero) <= 1e-12 * (1.0 + std::abs(zero)));
    }
}

TEST_CASE("characteristic polynomials equal det(A - lambda I)") {
    test::StateSampler s(31);
    for (ModelKind m : kClosedForm) {
        for (int trial = 0; trial < 200; ++trial) {
            const int n = s.integer(1, 6);
            const double g = s.uniform(0.5, 10.0);
            const PrimitiveState up = s.state(n);
            const CoefficientTensors t(n);
            const double lambda = s.uniform(-3.0, 3.0);
            for (VariableSet v : {VariableSet::Primitive, VariableSet::Convective}) {
                const Mat a = build_system_matrix(m, v, up, t, g).entries;
                const double det = test::lu_det(a, lambda);
                const double cp = char_poly_eval(m, lambda, up, g);
                const double scale = std::pow(a.norm() + std::abs(lambda), n + 2);
                INFO(model_name(m) << " N=" << n << " lambda=" << lambda);
                CHECK(std::abs(cp - det) <= 1e-8 * std::max(std::abs(det), 1e-6 * scale));
            }
        }
    }
    CHECK_THROWS_AS(char_poly_eval(ModelKind::SWME, 0.0, test::StateSampler(1).state(2), 1.0), Unavailable);
}

TEST_CASE("N = 1 closed forms reduce to (lambda - u)((lambda - u)^2 - gh - alpha^2)") {
    test::StateSampler s(32);
    for (ModelKind m : kClosedForm) {
        const PrimitiveState up = s.state(1);
        const double lambda = 0.7, mu = lambda - up.um();
        const double expect = -mu * (mu * mu - 2.0 * up.h() - up.alpha(1) * up.alpha(1));
        CHECK(char_poly_eval(m, lambda, up, 2.0) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("outer SWLME eigenvalues use the 2i+1 weights") {
    // The determinant decides between sum alpha_i^2/(2i+1) and sum alpha_i^2/(2N+1).
    const std::vector<double> a{0.4, -0.3, 0.5};
    const PrimitiveState up(1.3, 0.2, a);
    const CoefficientTensors t(3);
    const Mat m = build_system_matrix(ModelKind::SWLME, VariableSet::Convective, up, t, 1.0).entries;
    const double s_i = 0.16 / 3 + 0.09 / 5 + 0.25 / 7;
    const double s_n = (0.16 + 0.09 + 0.25) / 7;
    const double good = up.um() + std::sqrt(1.3 + 3.0 * s_i);
    const double bad = up.um() + std::sqrt(1.3 + 3.0 * s_n);
    CHECK(std::abs(test::lu_det(m, good)) <= 1e-12);
    CHECK(std::abs(test::lu_det(m, bad)) > 1e-4);
}

TEST_CASE("analytic eigenvalues agree with QR") {
    test::StateSampler s(33);
    for (ModelKind m : kClosedForm) {
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = s.integer(1, 6);
            const double g = s.uniform(0.5, 10.0);
            const PrimitiveState up = inside_state(s, m, n, g);
            const CoefficientTensors t(n);
            const auto analytic = analytic_eigenvalues(m, up, g);
            REQUIRE(analytic.has_value());
            const SpectralReport rep = spectral_report(m, VariableSet::Primitive, up, t, g);
            INFO(model_name(m) << " N=" << n);
            CHECK(rep.analytic_available);
            CHECK(spectrum_distance(*analytic, rep.eigenvalues) <= 1e-9 * (1.0 + max_abs(*analytic)));
            CHECK(rep.analytic_mismatch <= 1e-9 * (1.0 + max_abs(*analytic)));
        }
    }
    CHECK_FALSE(analytic_eigenvalues(ModelKind::SWME, test::StateSampler(2).state(2), 1.0).has_value());
}

TEST_CASE("globally hyperbolic models are hyperbolic at random states") {
    test::StateSampler s(34);
    for (ModelKind m : {ModelKind::HSWME, ModelKind::SWLME, ModelKind::PHSWME, ModelKind::PMHSWME}) {
        for (int trial = 0; trial < 200; ++trial) {
            const int n = s.integer(1, 6);
            const PrimitiveState up = s.state(n, 2.0);
            const SpectralReport rep = spectral_report(m, VariableSet::Convective, up, CoefficientTensors(n), 1.0);
            INFO(model_name(m) << " N=" << n);
            CHECK(rep.hyperbolic);
            CHECK(rep.status == HyperbolicityStatus::Hyperbolic);
        }
    }
}

TEST_CASE("Galilean shift moves every eigenvalue by the shift") {
    test::StateSampler s(35);
    for (ModelKind m : kAllModels) {
        for (int trial = 0; trial < 50; ++trial) {
            const int n = s.integer(1, 5);
            const PrimitiveState up = inside_state(s, m, n, 1.0);
            const double shift = s.uniform(-2.0, 2.0);
            Vec v = up.vector();
            v[1] += shift;
            const PrimitiveState moved = PrimitiveState::from_vector(v);
            const CoefficientTensors t(n);
            auto a = numeric_spectrum(build_system_matrix(m, VariableSet::Primitive, up, t, 1.0)).eigenvalues;
            const auto b = numeric_spectrum(build_system_matrix(m, VariableSet::Primitive, moved, t, 1.0)).eigenvalues;
            for (auto& z : a) z += shift;
            CHECK(spectrum_distance(a, b) <= 1e-10 * (1.0 + max_abs(b)));
            if (m != ModelKind::SWME) {
                auto ca = *analytic_eigenvalues(m, up, 1.0);
                for (auto& z : ca) z += shift;
                CHECK(spectrum_distance(ca, *analytic_eigenvalues(m, moved, 1.0)) <= 1e-14 * (1.0 + max_abs(ca)));
            }
        }
    }
}

TEST_CASE("interior eigenvalues scale linearly with alpha_1") {
    const std::vector<double> a{0.3, 0.1, -0.2};
    const std::vector<double> a2{0.6, 0.1, -0.2};
    for (ModelKind m : {ModelKind::HSWME, ModelKind::MHSWME, ModelKind::PHSWME, ModelKind::PMHSWME}) {
        const auto e1 = *analytic_eigenvalues(m, PrimitiveState(1.0, 0.0, a), 1.0);
        const auto e2 = *analytic_eigenvalues(m, PrimitiveState(1.0, 0.0, a2), 1.0);
        // Interior eigenvalues sit strictly between the outer pair.
        for (std::size_t k = 1; k + 1 < e1.size(); ++k) CHECK(std::abs(e2[k].real() - 2.0 * e1[k].real()) <= 1e-15);
    }
}

TEST_CASE("PHSWME spectrum ignores alpha_2..alpha_N") {
    test::StateSampler s(36);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = s.integer(2, 6);
        const PrimitiveState up = s.state(n);
        Vec v = up.vector();
        for (int i = 2; i <= n; ++i) v[1 + i] = s.uniform(-5.0, 5.0);
        const CoefficientTensors t(n);
        const auto a = numeric_spectrum(build_system_matrix(ModelKind::PHSWME, VariableSet::Primitive, up, t, 1.0)).eigenvalues;
        const auto b = numeric_spectrum(
                           build_system_matrix(ModelKind::PHSWME, VariableSet::Primitive, PrimitiveState::from_vector(v), t, 1.0))
                           .eigenvalues;
        CHECK(spectrum_distance(a, b) <= 1e-10);
    }
}

TEST_CASE("PHSWME is diagonalizable at alpha_1 = 0") {
    test::StateSampler s(37);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = s.integer(1, 6);
        Vec v = s.state(n, 2.0).vector();
        v[2] = 0.0;
        const PrimitiveState up = PrimitiveState::from_vector(v);
        const SpectralReport rep =
            spectral_report(ModelKind::PHSWME, VariableSet::Primitive, up, CoefficientTensors(n), 1.0);
        CHECK(rep.hyperbolic);
        CHECK(rep.eigenvector_condition <= 1e8);
    }
}

TEST_CASE("defective matrices are not hyperbolic") {
    // A Jordan block has real eigenvalues but no eigenvector basis.
    SystemMatrix j;
    j.entries = Mat::Zero(3, 3);
    j.entries(0, 1) = 1.0;
    j.entries(1, 2) = 1.0;
    const SpectralReport rep = numeric_spectrum(j);
    CHECK_FALSE(rep.hyperbolic);
}

TEST_CASE("equilibrium spectrum") {
    for (ModelKind m : kAllModels) {
        const std::vector<double> zero(3, 0.0);
        const PrimitiveState up(2.0, 0.3, zero);
        const auto ev = numeric_spectrum(build_system_matrix(m, VariableSet::Convective, up, CoefficientTensors(3), 1.0)).eigenvalues;
        REQUIRE(ev.size() == 5);
        CHECK(ev.front().real() == doctest::Approx(0.3 - std::sqrt(2.0)));
        CHECK(ev.back().real() == doctest::Approx(0.3 + std::sqrt(2.0)));
        for (std::size_t k = 1; k < 4; ++k) CHECK(ev[k].real() == doctest::Approx(0.3));
    }
}

TEST_CASE("SWME spectrum agrees with an independent eigen solve") {
    test::StateSampler s(38);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = s.integer(1, 6);
        const PrimitiveState up = s.state(n, 0.3);
        const Mat a = build_system_matrix(ModelKind::SWME, VariableSet::Convective, up, CoefficientTensors(n), 1.0).entries;
        const auto ours = numeric_spectrum(SystemMatrix{a, VariableSet::Convective, ModelKind::SWME, n}).eigenvalues;
        CHECK(spectrum_distance(ours, test::plain_eigenvalues(a)) <= 1e-9);
        // Every eigenvalue is a root of det(A - lambda I) (real ones checked).
        for (const auto& z : ours) {
            if (std::abs(z.imag()) < 1e-12) CHECK(std::abs(test::lu_det(a, z.real())) <= 1e-9 * std::pow(1.0 + a.norm(), n + 2));
        }
    }
}

TEST_CASE("wave speed matches the numeric spectral radius") {
    test::StateSampler s(39);
    for (ModelKind m : kAllModels) {
        for (int trial = 0; trial < 100; ++trial) {
            const int n = s.integer(1, 6);
            const PrimitiveState up = inside_state(s, m, n, 1.0);
            const CoefficientTensors t(n);
            const WaveSpeed w = wave_speed(m, up, t, 1.0);
            const SpectralReport rep = numeric_spectrum(build_system_matrix(m, VariableSet::Primitive, up, t, 1.0));
            INFO(model_name(m) << " N=" << n);
            CHECK(w.radius == doctest::Approx(rep.spectral_radius).epsilon(1e-9));
            CHECK(w.max_imag <= rep.max_imag + 1e-9);
        }
    }
}

TEST_CASE("MHSWME outside its region has a complex outer pair") {
    const std::vector<double> a{0.0, 3.0};
    const PrimitiveState up(1.0, 0.0, a);
    const auto ev = *analytic_eigenvalues(ModelKind::MHSWME, up, 1.0);
    double imag = 0.0;
    for (const auto& z : ev) imag = std::max(imag, std::abs(z.imag()));
    CHECK(imag == doctest::Approx(std::sqrt(9.0 / 5.0 - 1.0)));
    const SpectralReport rep = spectral_report(ModelKind::MHSWME, VariableSet::Primitive, up, CoefficientTensors(2), 1.0);
    CHECK_FALSE(rep.hyperbolic);
    CHECK(rep.max_imag == doctest::Approx(imag).epsilon(1e-9));
}
