#pragma once

#include "swm/model.hpp"
#include "swm/spectral.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace swm {

/// One scanned coordinate: alpha_{moment} / sqrt(g h) over [lo, hi] with
/// `resolution` equispaced samples (endpoints included).
struct ScanAxis {
    int moment = 1;
    double lo = -1.0;
    double hi = 1.0;
    int resolution = 2;

    double value(int k) const {
        return resolution == 1 ? lo : lo + (hi - lo) * k / (resolution - 1);
    }
    double spacing() const { return resolution > 1 ? (hi - lo) / (resolution - 1) : 0.0; }
};

/// Hyperbolicity status per grid point, row-major with the first axis varying slowest.
struct RegionRaster {
    ModelKind model = ModelKind::MHSWME;
    int order = 2;
    std::vector<ScanAxis> axes;
    std::vector<HyperbolicityStatus> status;

    std::size_t size() const { return status.size(); }
    /// Grid multi-index of flat point p.
    std::vector<int> indices(std::size_t p) const;
    /// Scaled coordinates of flat point p, one per axis.
    std::vector<double> coordinates(std::size_t p) const;
    std::size_t count(HyperbolicityStatus s) const;
};

/// Evaluates hyperbolicity at h = 1, u_m = 0, g = 1 with the scanned moments set
/// from the axes and all other moments zero. Points are independent, so the
/// loop is split across OpenMP threads.
RegionRaster scan_hyperbolicity_region(ModelKind model, int order, const std::vector<ScanAxis>& axes,
                                       const SpectralOptions& options = {});

/// Single-threaded reference of the same scan.
RegionRaster scan_hyperbolicity_region_serial(ModelKind model, int order,
                                              const std::vector<ScanAxis>& axes,
                                              const SpectralOptions& options = {});

/// CSV with columns a1..ak (named after the scanned moments) and `hyperbolic`
/// in {0, 1, 2 = marginal}.
void write_region_csv(std::ostream& os, const RegionRaster& raster);

}  // namespace swm
