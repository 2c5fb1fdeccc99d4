#pragma once

#include "swm/state.hpp"

#include <vector>

namespace swm {

enum class Boundary { Outflow, Periodic };

/// Uniform 1D grid of convective states, stored cell-major in one flat array.
class Field1D {
public:
    Field1D() = default;
    Field1D(double x_min, double x_max, int n_cells, int order, Boundary boundary = Boundary::Outflow);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    int n_cells() const { return n_cells_; }
    int order() const { return order_; }
    int n_vars() const { return order_ + 2; }
    Boundary boundary() const { return boundary_; }
    double dx() const { return (x_max_ - x_min_) / n_cells_; }
    /// Cell center.
    double x(int i) const { return x_min_ + (i + 0.5) * dx(); }

    double* cell(int i) { return data_.data() + static_cast<std::size_t>(i) * n_vars(); }
    const double* cell(int i) const { return data_.data() + static_cast<std::size_t>(i) * n_vars(); }

    ConvectiveState convective(int i) const;
    PrimitiveState primitive(int i, double h_min = kDefaultDryDepth) const;
    void set(int i, const ConvectiveState& uc);
    void set(int i, const PrimitiveState& up) { set(i, to_convective(up)); }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    /// Sum of h dx and h u_m dx over the grid.
    double total_mass() const;
    double total_momentum() const;

private:
    double x_min_ = 0.0;
    double x_max_ = 1.0;
    int n_cells_ = 0;
    int order_ = 1;
    Boundary boundary_ = Boundary::Outflow;
    std::vector<double> data_;
};

}  // namespace swm
