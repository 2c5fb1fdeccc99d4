#include "swm/field.hpp"

#include <span>
#include <string>

namespace swm {

Field1D::Field1D(double x_min, double x_max, int n_cells, int order, Boundary boundary)
    : x_min_(x_min), x_max_(x_max), n_cells_(n_cells), order_(order), boundary_(boundary) {
    check_order(order);
    if (n_cells < 1) throw std::invalid_argument("field needs at least one cell");
    if (!(x_max > x_min)) throw std::invalid_argument("field needs x_max > x_min");
    data_.assign(static_cast<std::size_t>(n_cells) * static_cast<std::size_t>(n_vars()), 0.0);
}

ConvectiveState Field1D::convective(int i) const {
    const double* c = cell(i);
    return ConvectiveState(c[0], c[1], std::span<const double>(c + 2, static_cast<std::size_t>(order_)));
}

PrimitiveState Field1D::primitive(int i, double h_min) const {
    if (!(cell(i)[0] > h_min)) {
        throw DryStateError("cell " + std::to_string(i) + " is dry (h = " + std::to_string(cell(i)[0]) + ")");
    }
    return to_primitive(convective(i), h_min);
}

void Field1D::set(int i, const ConvectiveState& uc) {
    if (uc.order() != order_) throw OrderOutOfRange("state order does not match field order");
    double* c = cell(i);
    for (int k = 0; k < n_vars(); ++k) c[k] = uc.vector()[k];
}

double Field1D::total_mass() const {
    double s = 0.0;
    for (int i = 0; i < n_cells_; ++i) s += cell(i)[0];
    return s * dx();
}

double Field1D::total_momentum() const {
    double s = 0.0;
    for (int i = 0; i < n_cells_; ++i) s += cell(i)[1];
    return s * dx();
}

}  // namespace swm
