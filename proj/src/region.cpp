#include "swm/region.hpp"

#include "swm/io.hpp"

#include <algorithm>
#include <string>

namespace swm {

namespace {

RegionRaster make_raster(ModelKind model, int order, const std::vector<ScanAxis>& axes) {
    check_order(order);
    if (axes.empty()) throw std::invalid_argument("scan needs at least one axis");
    std::size_t total = 1;
    for (const ScanAxis& ax : axes) {
        if (ax.moment < 1 || ax.moment > order) {
            throw std::invalid_argument("scan axis moment " + std::to_string(ax.moment) +
                                        " outside [1, " + std::to_string(order) + "]");
        }
        if (ax.resolution < 1) throw std::invalid_argument("scan axis resolution must be >= 1");
        total *= static_cast<std::size_t>(ax.resolution);
    }
    RegionRaster r;
    r.model = model;
    r.order = order;
    r.axes = axes;
    r.status.assign(total, HyperbolicityStatus::NonHyperbolic);
    return r;
}

HyperbolicityStatus classify(const RegionRaster& r, std::size_t p, const CoefficientTensors& tensors,
                             const SpectralOptions& options) {
    std::vector<double> alpha(static_cast<std::size_t>(r.order), 0.0);
    const std::vector<double> coords = r.coordinates(p);
    for (std::size_t a = 0; a < r.axes.size(); ++a) {
        alpha[static_cast<std::size_t>(r.axes[a].moment - 1)] = coords[a];
    }
    // h = g = 1 makes alpha / sqrt(g h) = alpha.
    const PrimitiveState up(1.0, 0.0, alpha);
    return numeric_spectrum(build_system_matrix(r.model, VariableSet::Primitive, up, tensors, 1.0), options)
        .status;
}

}  // namespace

std::vector<int> RegionRaster::indices(std::size_t p) const {
    std::vector<int> idx(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
        const auto res = static_cast<std::size_t>(axes[a].resolution);
        idx[a] = static_cast<int>(p % res);
        p /= res;
    }
    return idx;
}

std::vector<double> RegionRaster::coordinates(std::size_t p) const {
    const std::vector<int> idx = indices(p);
    std::vector<double> c(axes.size());
    for (std::size_t a = 0; a < axes.size(); ++a) c[a] = axes[a].value(idx[a]);
    return c;
}

std::size_t RegionRaster::count(HyperbolicityStatus s) const {
    return static_cast<std::size_t>(std::count(status.begin(), status.end(), s));
}

RegionRaster scan_hyperbolicity_region(ModelKind model, int order, const std::vector<ScanAxis>& axes,
                                       const SpectralOptions& options) {
    RegionRaster r = make_raster(model, order, axes);
    const CoefficientTensors tensors(order);
    const auto total = static_cast<std::int64_t>(r.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t p = 0; p < total; ++p) {
        r.status[static_cast<std::size_t>(p)] = classify(r, static_cast<std::size_t>(p), tensors, options);
    }
    return r;
}

RegionRaster scan_hyperbolicity_region_serial(ModelKind model, int order,
                                              const std::vector<ScanAxis>& axes,
                                              const SpectralOptions& options) {
    RegionRaster r = make_raster(model, order, axes);
    const CoefficientTensors tensors(order);
    for (std::size_t p = 0; p < r.size(); ++p) r.status[p] = classify(r, p, tensors, options);
    return r;
}

void write_region_csv(std::ostream& os, const RegionRaster& raster) {
    CsvWriter csv(os);
    std::vector<std::string> header;
    for (const ScanAxis& ax : raster.axes) header.push_back("a" + std::to_string(ax.moment));
    header.emplace_back("hyperbolic");
    csv.header(header);
    for (std::size_t p = 0; p < raster.size(); ++p) {
        std::vector<double> row = raster.coordinates(p);
        csv.row_begin();
        for (double v : row) csv.field(v);
        csv.field(static_cast<int>(raster.status[p]));
        csv.row_end();
    }
}

}  // namespace swm
