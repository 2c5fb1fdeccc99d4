#include "doctest.h"
#include "support.hpp"

#include "swm/steady.hpp"
#include "swm/system_matrix.hpp"

#include <cmath>

using namespace swm;

namespace {

constexpr std::array<ModelKind, 3> kSteadyModels{ModelKind::SWLME, ModelKind::PHSWME, ModelKind::PMHSWME};

ReferenceState ref_of(double fr, std::vector<double> ma) { return ReferenceState{fr, std::move(ma)}; }

// Two-level field: h0 on the left half, x h0 on the right half, both on the family.
Field1D two_level_field(const SteadyFamily& fam, double x, int cells = 100) {
    Field1D f(-1.0, 1.0, cells, static_cast<int>(fam.alpha0.size()));
    for (int i = 0; i < cells; ++i) f.set(i, fam.at(i < cells / 2 ? fam.h0 : x * fam.h0));
    return f;
}

}  // namespace

TEST_CASE("reference state from a dimensional state") {
    const ReferenceState r = ReferenceState::from_state(2.0, -3.0, {0.6, -0.3}, 9.81);
    CHECK(r.froude == doctest::Approx(3.0 / std::sqrt(9.81 * 2.0)));
    CHECK(r.moment_number(1) == doctest::Approx(-0.2));
    CHECK(r.moment_number(2) == doctest::Approx(0.1));
    CHECK(r.moment_number(3) == 0.0);
    CHECK_THROWS_AS(ReferenceState::from_state(1.0, 0.0, {0.1}, 1.0), std::invalid_argument);
}

TEST_CASE("residual examples") {
    CHECK(steady_residual(ModelKind::PMHSWME, 1.0, ref_of(1.0, {0.0})) == 0.0);
    CHECK(jump_condition(ModelKind::PMHSWME, ref_of(1.0, {0.0})) == 0.0);
    const ReferenceState r = ref_of(1.5, {0.4, 0.2});
    CHECK(steady_residual(ModelKind::SWLME, 1.0, r) == doctest::Approx(jump_condition(ModelKind::SWLME, r)));
    CHECK_THROWS_AS(steady_residual(ModelKind::PHSWME, 0.0, r), std::invalid_argument);
    CHECK_THROWS_AS(steady_residual(ModelKind::HSWME, 1.0, r), Unavailable);
    CHECK_THROWS_AS(steady_weight(ModelKind::SWME, r), Unavailable);
}

TEST_CASE("Ma = 0 recovers the shallow water conjugate depth") {
    for (double fr : {0.1, 0.5, 0.9, 1.0, 1.3, 2.0, 3.7, 10.0}) {
        for (ModelKind m : kSteadyModels) {
            const ConjugateDepths d = conjugate_depths(m, ref_of(fr, {0.0, 0.0, 0.0}));
            REQUIRE(d.roots.size() == 1);
            CHECK(std::abs(d.roots[0] - test::swe_conjugate_depth(fr)) <= 1e-12);
            CHECK(d.trivial_branch);
        }
    }
    CHECK(std::abs(conjugate_depths(ModelKind::PHSWME, ref_of(2.0, {})).roots[0] - (-1.0 + std::sqrt(33.0)) / 2.0) <= 1e-12);
    const ConjugateDepths critical = conjugate_depths(ModelKind::PMHSWME, ref_of(1.0, {0.0}));
    CHECK(critical.touches_trivial);
    CHECK(critical.roots[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cubic root agrees with a bisection oracle") {
    test::StateSampler s(41);
    for (int trial = 0; trial < 300; ++trial) {
        const double fr = s.uniform(0.05, 5.0);
        std::vector<double> ma{s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0)};
        for (ModelKind m : kSteadyModels) {
            const ReferenceState r = ref_of(fr, ma);
            const ConjugateDepths d = conjugate_depths(m, r);
            REQUIRE(d.roots.size() == 1);
            const double oracle = test::bisect([&](double x) { return steady_residual(m, x, r); }, 1e-12, 10.0 + 2.0 * fr);
            CHECK(std::abs(d.roots[0] - oracle) <= 1e-10 * oracle);
        }
    }
    const double oracle = test::bisect([](double x) { return steady_residual(ModelKind::PMHSWME, x, ref_of(2.0, {0.5, 0.5})); },
                                       1e-12, 20.0);
    CHECK(std::abs(conjugate_depths(ModelKind::PMHSWME, ref_of(2.0, {0.5, 0.5})).roots[0] - oracle) <= 1e-10);
}

TEST_CASE("Fr = 0 has no positive nontrivial root") {
    const ConjugateDepths d = conjugate_depths(ModelKind::SWLME, ref_of(0.0, {0.3}));
    CHECK_FALSE(d.has_positive_root());
    CHECK(d.trivial_branch);
}

TEST_CASE("PMHSWME and SWLME share the steady law") {
    test::StateSampler s(42);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> ma(static_cast<std::size_t>(s.integer(1, 6)));
        for (double& m : ma) m = s.uniform(-1.5, 1.5);
        const ReferenceState r = ref_of(s.uniform(0.1, 4.0), ma);
        const auto a = conjugate_depths(ModelKind::PMHSWME, r).roots;
        const auto b = conjugate_depths(ModelKind::SWLME, r).roots;
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-13);
    }
}

TEST_CASE("PHSWME law depends on Ma_1 only") {
    const double base = steady_residual(ModelKind::PHSWME, 1.7, ref_of(1.4, {0.3}));
    CHECK(steady_residual(ModelKind::PHSWME, 1.7, ref_of(1.4, {0.3, 0.9, -2.0})) == base);
}

TEST_CASE("real cubic roots") {
    const auto three = real_cubic_roots(1.0, -6.0, 11.0, -6.0);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == doctest::Approx(1.0));
    CHECK(three[1] == doctest::Approx(2.0));
    CHECK(three[2] == doctest::Approx(3.0));
    const auto one = real_cubic_roots(1.0, 0.0, 1.0, -2.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(1.0));
    const auto quad = real_cubic_roots(0.0, 0.5, 0.5, -4.0);
    REQUIRE(quad.size() == 2);
    CHECK(quad[1] == doctest::Approx(test::swe_conjugate_depth(2.0)));
}

TEST_CASE("manufactured steady fields keep every invariant") {
    test::StateSampler s(43);
    for (ModelKind m : kSteadyModels) {
        for (int trial = 0; trial < 20; ++trial) {
            const int n = s.integer(1, 5);
            SteadyFamily fam;
            fam.model = m;
            fam.h0 = s.uniform(0.5, 2.0);
            fam.um0 = s.uniform(0.3, 2.0);
            fam.alpha0.assign(static_cast<std::size_t>(n), 0.0);
            fam.alpha0[0] = s.uniform(-0.5, 0.5) * fam.um0;
            // The cubic law for PMHSWME assumes Ma_i = 0 for i >= 2; SWLME takes all moments.
            if (m == ModelKind::SWLME) {
                for (int i = 1; i < n; ++i) fam.alpha0[static_cast<std::size_t>(i)] = s.uniform(-0.3, 0.3);
            }
            if (m == ModelKind::PHSWME) {
                for (int i = 1; i < n; ++i) fam.alpha0[static_cast<std::size_t>(i)] = s.uniform(-0.3, 0.3);
            }
            const double g = 1.0;
            const ReferenceState r = ReferenceState::from_state(fam.h0, fam.um0, fam.alpha0, g);
            const double x = conjugate_depths(m, r).roots.at(0);
            const InvariantTable t = steady_invariants(m, two_level_field(fam, x), g);
            INFO(model_name(m) << " N=" << n << " x=" << x);
            for (double spread : t.spreads()) CHECK(spread <= 1e-12);
            CHECK(t.steady(1e-12));
        }
    }
}

TEST_CASE("perturbed depth breaks the energy invariant") {
    SteadyFamily fam{ModelKind::PHSWME, 1.0, 2.0, {0.4, 0.1}};
    const ReferenceState r = ReferenceState::from_state(1.0, 2.0, fam.alpha0, 1.0);
    Field1D f = two_level_field(fam, conjugate_depths(ModelKind::PHSWME, r).roots[0]);
    PrimitiveState bumped = f.primitive(10);
    Vec v = bumped.vector();
    v[0] *= 1.01;
    f.set(10, PrimitiveState::from_vector(v));
    const InvariantTable t = steady_invariants(ModelKind::PHSWME, f, 1.0);
    CHECK(t.spreads()[1] > 1e-4);
    CHECK_FALSE(t.steady(1e-6));
}

TEST_CASE("invariant table columns") {
    const SteadyFamily fam{ModelKind::SWLME, 1.0, 1.0, {0.1, 0.2, 0.3}};
    const InvariantTable swlme = steady_invariants(ModelKind::SWLME, two_level_field(fam, 1.0, 4), 1.0);
    CHECK(swlme.columns == std::vector<std::string>{"hu", "energy", "a1/h", "a2/h", "a3/h"});
    const InvariantTable ph = steady_invariants(ModelKind::PHSWME, two_level_field(fam, 1.0, 4), 1.0);
    CHECK(ph.columns == std::vector<std::string>{"hu", "energy", "a1/h", "a2", "a3"});
    CHECK_THROWS_AS(steady_invariants(ModelKind::SWME, two_level_field(fam, 1.0, 4), 1.0), Unavailable);
}

TEST_CASE("quasilinear residual along the invariant family") {
    // Away from the two discrete depths the family is not steady: every row of
    // A_p dU/dx vanishes except momentum, which carries dE/dx / h. Central
    // differences converge to that at second order.
    for (ModelKind m : kSteadyModels) {
        SteadyFamily fam{m, 1.0, 1.5, {0.45, 0.0, 0.0}};
        if (m != ModelKind::PMHSWME) fam.alpha0 = {0.45, 0.2, -0.1};
        const int n = 3;
        const CoefficientTensors t(n);
        const auto depth = [](double x) { return 1.0 + 0.3 * std::sin(2.0 * x); };
        const auto depth_dx = [](double x) { return 0.6 * std::cos(2.0 * x); };
        const auto profile = [&](double x) { return fam.at(depth(x)); };

        const double x0 = 0.4;
        const PrimitiveState u0 = profile(x0);
        const Vec exact = build_system_matrix(m, VariableSet::Primitive, u0, t, 1.0).entries * fam.derivative(depth(x0)) *
                          depth_dx(x0);
        // dE/dx / h from a fine central difference of the energy itself.
        const double e_dx = (steady_energy(m, profile(x0 + 1e-5), 1.0) - steady_energy(m, profile(x0 - 1e-5), 1.0)) / 2e-5;
        INFO(model_name(m));
        for (int r = 0; r < n + 2; ++r) {
            if (r == 1) CHECK(exact[1] == doctest::Approx(e_dx / u0.h()).epsilon(1e-8));
            else CHECK(std::abs(exact[r]) <= 1e-13);
        }

        std::vector<double> err;
        for (int k = 0; k < 5; ++k) {
            const double dx = 0.1 / (1 << k);
            err.push_back((quasilinear_residual(m, profile, x0, dx, t, 1.0) - exact).cwiseAbs().maxCoeff());
        }
        for (std::size_t k = 0; k + 1 < err.size(); ++k) {
            const double order = std::log2(err[k] / err[k + 1]);
            CHECK(order >= 1.8);
            CHECK(order <= 2.2);
        }
    }
}
