#include "swm/steady.hpp"

#include "swm/system_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace swm {

namespace {

void require_steady_law(ModelKind model) {
    if (!has_steady_law(model)) {
        throw Unavailable(std::string(model_name(model)) + " has no analytic steady states");
    }
}

double poly(double a, double b, double c, double d, double x) { return ((a * x + b) * x + c) * x + d; }
double poly_deriv(double a, double b, double c, double x) { return (3.0 * a * x + 2.0 * b) * x + c; }

double newton_polish(double a, double b, double c, double d, double x) {
    const double fp = poly_deriv(a, b, c, x);
    if (fp == 0.0) return x;
    const double next = x - poly(a, b, c, d, x) / fp;
    return std::isfinite(next) ? next : x;
}

// alpha_i / h rather than alpha_i is the conserved quantity.
bool scales_with_depth(ModelKind model, int i) { return i == 1 || model == ModelKind::SWLME; }

}  // namespace

ReferenceState ReferenceState::from_state(double h0, double um0, const std::vector<double>& alpha0, double g) {
    if (!(h0 > 0.0) || !(g > 0.0)) throw std::invalid_argument("reference state needs h0 > 0 and g > 0");
    if (um0 == 0.0) throw std::invalid_argument("moment numbers are undefined for u_m0 = 0");
    ReferenceState r;
    r.froude = std::abs(um0) / std::sqrt(g * h0);
    for (double a : alpha0) r.moment_numbers.push_back(a / um0);
    return r;
}

bool has_steady_law(ModelKind model) {
    return model == ModelKind::SWLME || model == ModelKind::PHSWME || model == ModelKind::PMHSWME;
}

double steady_weight(ModelKind model, const ReferenceState& ref) {
    require_steady_law(model);
    if (model == ModelKind::PHSWME) {
        const double ma1 = ref.moment_number(1);
        return ma1 * ma1 / 3.0;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < ref.moment_numbers.size(); ++k) {
        const double ma = ref.moment_numbers[k];
        s += ma * ma / static_cast<double>(2 * k + 3);
    }
    return s;
}

double steady_residual(ModelKind model, double x, const ReferenceState& ref) {
    if (!(x > 0.0)) throw std::invalid_argument("depth ratio must be positive");
    const double fr2 = ref.froude * ref.froude;
    const double s = steady_weight(model, ref);
    return -fr2 + 0.5 * (x * x + x) + s * fr2 * ((x * x + x) * x + x);
}

double jump_condition(ModelKind model, const ReferenceState& ref) {
    const double fr2 = ref.froude * ref.froude;
    return -fr2 + 1.0 + 3.0 * steady_weight(model, ref) * fr2;
}

std::vector<double> real_cubic_roots(double a, double b, double c, double d) {
    std::vector<double> roots;
    if (a == 0.0) {
        if (b == 0.0) {
            if (c != 0.0) roots.push_back(-d / c);
            return roots;
        }
        const double disc = c * c - 4.0 * b * d;
        if (disc < 0.0) return roots;
        // Cancellation-free pair.
        const double q = -0.5 * (c + std::copysign(std::sqrt(disc), c));
        if (q != 0.0) {
            roots.push_back(q / b);
            roots.push_back(d / q);
        } else {
            roots.push_back(0.0);
            roots.push_back(0.0);
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // x = t - b / (3a) gives t^3 + p t + q = 0.
    const double bn = b / a, cn = c / a, dn = d / a;
    const double shift = bn / 3.0;
    const double p = cn - bn * bn / 3.0;
    const double q = 2.0 * bn * bn * bn / 27.0 - bn * cn / 3.0 + dn;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        const double t = std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq);
        roots.push_back(t - shift);
    } else if (p == 0.0) {
        roots.push_back(-shift);
    } else {
        // Three real roots (two coincide when disc = 0).
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift);
        }
    }
    for (double& r : roots) r = newton_polish(a, b, c, d, r);
    std::sort(roots.begin(), roots.end());
    return roots;
}

ConjugateDepths conjugate_depths(ModelKind model, const ReferenceState& ref) {
    const double fr2 = ref.froude * ref.froude;
    const double s = steady_weight(model, ref);
    const double a = s * fr2;
    const double b = 0.5 + s * fr2;
    const double c = 0.5 + s * fr2;
    const double d = -fr2;

    ConjugateDepths out;
    out.touches_trivial = std::abs(jump_condition(model, ref)) <= 1e-14 * (1.0 + fr2);
    if (fr2 == 0.0) return out;

    // All coefficients but d are positive, so there is exactly one positive root
    // and the residual is increasing on (0, inf).
    const auto f = [&](double x) { return poly(a, b, c, d, x); };
    const double scale = 1.0 + fr2;
    for (double r : real_cubic_roots(a, b, c, d)) {
        if (r > 0.0 && std::abs(f(r)) <= 1e-12 * scale) out.roots.push_back(r);
    }
    if (out.roots.empty()) {
        double lo = 0.0;
        double hi = std::max(1.0, std::sqrt(2.0 * fr2)) + 1.0;
        while (f(hi) < 0.0) hi *= 2.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        out.roots.push_back(0.5 * (lo + hi));
    }
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end(),
                                [](double u, double v) { return std::abs(u - v) <= 1e-12 * std::abs(v); }),
                    out.roots.end());
    return out;
}

double steady_energy(ModelKind model, const PrimitiveState& up, double g) {
    require_steady_law(model);
    const double h = up.h(), um = up.um();
    const double s = model == ModelKind::PHSWME ? up.alpha(1) * up.alpha(1) / 3.0 : weighted_moment_energy(up);
    return 0.5 * g * h * h + h * um * um + h * s;
}

std::vector<double> InvariantTable::spreads() const {
    std::vector<double> out(columns.size(), 0.0);
    if (rows.empty()) return out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        double lo = rows.front()[c], hi = lo;
        for (const auto& r : rows) {
            lo = std::min(lo, r[c]);
            hi = std::max(hi, r[c]);
        }
        out[c] = hi - lo;
    }
    return out;
}

bool InvariantTable::steady(double tol) const {
    const auto s = spreads();
    return std::all_of(s.begin(), s.end(), [tol](double v) { return v <= tol; });
}

InvariantTable steady_invariants(ModelKind model, const Field1D& field, double g) {
    require_steady_law(model);
    const int n = field.order();
    InvariantTable t;
    t.columns = {"hu", "energy"};
    for (int i = 1; i <= n; ++i) {
        t.columns.push_back("a" + std::to_string(i) + (scales_with_depth(model, i) ? "/h" : ""));
    }
    t.rows.reserve(static_cast<std::size_t>(field.n_cells()));
    for (int c = 0; c < field.n_cells(); ++c) {
        const PrimitiveState up = field.primitive(c);
        std::vector<double> row{up.h() * up.um(), steady_energy(model, up, g)};
        for (int i = 1; i <= n; ++i) {
            row.push_back(scales_with_depth(model, i) ? up.alpha(i) / up.h() : up.alpha(i));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

PrimitiveState SteadyFamily::at(double h) const {
    std::vector<double> alpha(alpha0.size());
    for (std::size_t k = 0; k < alpha0.size(); ++k) {
        alpha[k] = scales_with_depth(model, static_cast<int>(k) + 1) ? alpha0[k] * h / h0 : alpha0[k];
    }
    return PrimitiveState(h, h0 * um0 / h, alpha);
}

Vec SteadyFamily::derivative(double h) const {
    Vec d = Vec::Zero(static_cast<Eigen::Index>(alpha0.size()) + 2);
    d[0] = 1.0;
    d[1] = -h0 * um0 / (h * h);
    for (std::size_t k = 0; k < alpha0.size(); ++k) {
        if (scales_with_depth(model, static_cast<int>(k) + 1)) d[static_cast<Eigen::Index>(k) + 2] = alpha0[k] / h0;
    }
    return d;
}

Vec quasilinear_residual(ModelKind model, const std::function<PrimitiveState(double)>& profile, double x,
                         double dx, const CoefficientTensors& tensors, double g) {
    const PrimitiveState centre = profile(x);
    const Vec grad = (profile(x + dx).vector() - profile(x - dx).vector()) / (2.0 * dx);
    const SystemMatrix a = build_system_matrix(model, VariableSet::Primitive, centre, tensors, g);
    return a.entries * grad;
}

}  // namespace swm
