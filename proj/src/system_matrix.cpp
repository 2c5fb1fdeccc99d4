#include "swm/system_matrix.hpp"

namespace swm {

namespace {

// Row/column layout: 0 = h, 1 = momentum / u_m, 1+i = moment i (i = 1..N).

void mass_row(Mat& m, VariableSet vars, const PrimitiveState& up) {
    if (vars == VariableSet::Convective) {
        m(0, 1) = 1.0;
    } else {
        m(0, 0) = up.um();
        m(0, 1) = up.h();
    }
}

// Momentum row of SWME; shared by SWLME, MHSWME and PMHSWME.
void full_momentum_row(Mat& m, VariableSet vars, const PrimitiveState& up, double g) {
    const int n = up.order();
    const double h = up.h(), um = up.um();
    const double energy = weighted_moment_energy(up);
    if (vars == VariableSet::Convective) {
        m(1, 0) = -um * um + g * h - energy;
        m(1, 1) = 2.0 * um;
    } else {
        m(1, 0) = g + energy / h;
        m(1, 1) = um;
    }
    for (int j = 1; j <= n; ++j) m(1, 1 + j) = 2.0 * up.alpha(j) / (2 * j + 1);
}

// Momentum row with alpha_i = 0 for i >= 2 (HSWME, PHSWME).
void linear_momentum_row(Mat& m, VariableSet vars, const PrimitiveState& up, double g) {
    const double h = up.h(), um = up.um(), a1 = up.alpha(1);
    if (vars == VariableSet::Convective) {
        m(1, 0) = -um * um + g * h - a1 * a1 / 3.0;
        m(1, 1) = 2.0 * um;
    } else {
        m(1, 0) = g + a1 * a1 / (3.0 * h);
        m(1, 1) = um;
    }
    m(1, 2) = 2.0 * a1 / 3.0;
}

void place_block(Mat& m, const Mat& block) {
    m.bottomRightCorner(block.rows(), block.cols()) = block;
}

Mat swme(VariableSet vars, const PrimitiveState& up, const CoefficientTensors& t, double g) {
    const int n = up.order();
    const double h = up.h(), um = up.um();
    Mat m = Mat::Zero(n + 2, n + 2);
    mass_row(m, vars, up);
    full_momentum_row(m, vars, up, g);
    for (int i = 1; i <= n; ++i) {
        double quad = 0.0;
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
                const double coeff =
                    vars == VariableSet::Convective ? t.A(i, j, k) : t.B(i, j, k) + t.A(i, j, k);
                quad += coeff * up.alpha(j) * up.alpha(k);
            }
        }
        if (vars == VariableSet::Convective) {
            m(1 + i, 0) = -2.0 * um * up.alpha(i) - quad;
            m(1 + i, 1) = 2.0 * up.alpha(i);
        } else {
            m(1 + i, 0) = quad / h;
            m(1 + i, 1) = up.alpha(i);
        }
    }
    place_block(m, lowering_block(up, t));
    return m;
}

// Moment rows of HSWME (and MHSWME): the SWME rows with alpha_i = 0, i >= 2,
// substituted into the convective matrix.
void hswme_moment_rows(Mat& m, VariableSet vars, const PrimitiveState& up) {
    const int n = up.order();
    const double h = up.h(), um = up.um(), a1 = up.alpha(1);
    if (vars == VariableSet::Convective) {
        m(2, 0) = -2.0 * um * a1;
        m(2, 1) = 2.0 * a1;
        if (n >= 2) m(3, 0) = -2.0 / 3.0 * a1 * a1;
    } else {
        // J^{-1} A_c J: the alpha_i of the transformation reappear in the first two columns.
        for (int i = 1; i <= n; ++i) {
            double col0 = 0.0;
            if (i >= 2) col0 += lower_band(i) * a1 * up.alpha(i - 1);
            if (i < n) col0 += upper_band(i + 1) * a1 * up.alpha(i + 1);
            if (i == 2) col0 -= 2.0 / 3.0 * a1 * a1;
            m(1 + i, 0) = col0 / h;
            m(1 + i, 1) = (i == 1 ? 2.0 * a1 : 0.0) - up.alpha(i);
        }
    }
    place_block(m, linear_profile_block(n, um, a1));
}

// Moment rows of PHSWME (and PMHSWME): SWME primitive rows with alpha_i = 0, i >= 2.
void phswme_moment_rows(Mat& m, VariableSet vars, const PrimitiveState& up) {
    const int n = up.order();
    const double h = up.h(), um = up.um(), a1 = up.alpha(1);
    if (vars == VariableSet::Primitive) {
        m(2, 1) = a1;
        if (n >= 2) m(3, 0) = -a1 * a1 / (3.0 * h);
    } else {
        // J A_p J^{-1}
        for (int i = 1; i <= n; ++i) {
            double col0 = -um * up.alpha(i);
            if (i == 1) col0 -= um * a1;
            if (i >= 2) col0 -= lower_band(i) * a1 * up.alpha(i - 1);
            if (i < n) col0 -= upper_band(i + 1) * a1 * up.alpha(i + 1);
            if (i == 2) col0 -= a1 * a1 / 3.0;
            m(1 + i, 0) = col0;
            m(1 + i, 1) = up.alpha(i) + (i == 1 ? a1 : 0.0);
        }
    }
    place_block(m, linear_profile_block(n, um, a1));
}

void swlme_moment_rows(Mat& m, VariableSet vars, const PrimitiveState& up) {
    const int n = up.order();
    const double um = up.um();
    for (int i = 1; i <= n; ++i) {
        if (vars == VariableSet::Convective) {
            m(1 + i, 0) = -2.0 * um * up.alpha(i);
            m(1 + i, 1) = 2.0 * up.alpha(i);
        } else {
            m(1 + i, 1) = up.alpha(i);
        }
        m(1 + i, 1 + i) = um;
    }
}

}  // namespace

double weighted_moment_energy(const PrimitiveState& up, int from) {
    double s = 0.0;
    for (int j = from; j <= up.order(); ++j) s += up.alpha(j) * up.alpha(j) / (2 * j + 1);
    return s;
}

Mat lowering_block(const PrimitiveState& up, const CoefficientTensors& t) {
    const int n = up.order();
    if (t.order() != n) throw OrderOutOfRange("coefficient tensors built for a different order");
    Mat block = Mat::Zero(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int l = 1; l <= n; ++l) {
            double s = (i == l) ? up.um() : 0.0;
            for (int j = 1; j <= n; ++j) s += (t.B(i, l, j) + 2.0 * t.A(i, j, l)) * up.alpha(j);
            block(i - 1, l - 1) = s;
        }
    }
    return block;
}

Mat linear_profile_block(int order, double um, double alpha1) {
    Mat block = Mat::Zero(order, order);
    for (int r = 0; r < order; ++r) {
        block(r, r) = um;
        if (r + 1 < order) block(r, r + 1) = upper_band(r + 2) * alpha1;
        if (r > 0) block(r, r - 1) = lower_band(r + 1) * alpha1;
    }
    return block;
}

SystemMatrix build_system_matrix(ModelKind model, VariableSet vars, const PrimitiveState& up,
                                 const CoefficientTensors& tensors, double g) {
    const int n = up.order();
    check_order(n);
    if (!(up.h() > 0.0)) throw DryStateError("system matrix requires h > 0");

    SystemMatrix out;
    out.variables = vars;
    out.model = model;
    out.order = n;

    if (model == ModelKind::SWME) {
        if (tensors.order() != n) throw OrderOutOfRange("coefficient tensors built for a different order");
        out.entries = swme(vars, up, tensors, g);
        return out;
    }

    Mat m = Mat::Zero(n + 2, n + 2);
    mass_row(m, vars, up);
    switch (model) {
        case ModelKind::HSWME:
            linear_momentum_row(m, vars, up, g);
            hswme_moment_rows(m, vars, up);
            break;
        case ModelKind::MHSWME:
            full_momentum_row(m, vars, up, g);
            hswme_moment_rows(m, vars, up);
            break;
        case ModelKind::SWLME:
            full_momentum_row(m, vars, up, g);
            swlme_moment_rows(m, vars, up);
            break;
        case ModelKind::PHSWME:
            linear_momentum_row(m, vars, up, g);
            phswme_moment_rows(m, vars, up);
            break;
        case ModelKind::PMHSWME:
            full_momentum_row(m, vars, up, g);
            phswme_moment_rows(m, vars, up);
            break;
        case ModelKind::SWME: break;
    }
    out.entries = m;
    return out;
}

Mat convective_to_primitive(const Mat& a_c, const PrimitiveState& up) {
    return jacobian_T_inv(up) * a_c * jacobian_T(up);
}

Mat primitive_to_convective(const Mat& a_p, const PrimitiveState& up) {
    return jacobian_T(up) * a_p * jacobian_T_inv(up);
}

}  // namespace swm
