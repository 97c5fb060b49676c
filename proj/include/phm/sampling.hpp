#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phm/series.hpp"

namespace phm {

/// Lattice on the distinguished boundary r T^n:
/// z_j = r exp(2 pi i k_j / angles_per_dim), angles_per_dim^n points.
class TorusGrid {
public:
    TorusGrid(std::size_t n, double radius, std::size_t angles_per_dim);

    /// Default lattice for dimension n at the given radius
    /// (512 angles for n = 1, 96 for n = 2, 24 for n = 3).
    static TorusGrid standard(std::size_t n, double radius = 0.999);

    std::size_t dim() const noexcept { return n_; }
    double radius() const noexcept { return r_; }
    std::size_t angles_per_dim() const noexcept { return angles_; }
    std::size_t size() const noexcept { return size_; }

    /// Angle index of axis j for flat point index i (axis 0 varies slowest).
    std::size_t angle_index(std::size_t i, std::size_t axis) const;
    std::vector<double> angles(std::size_t i) const;
    ComplexPoint point(std::size_t i) const;

private:
    std::size_t n_;
    double r_;
    std::size_t angles_;
    std::size_t size_;
};

std::size_t default_angles(std::size_t n);

/// Point at r_j exp(i theta_j) on each axis.
ComplexPoint polar_point(std::span<const double> radii, std::span<const double> angles);
ComplexPoint polar_point(double radius, std::span<const double> angles);

/// Cartesian side x side lattice on [-radius, radius]^2 keeping the points
/// with |z| <= radius (n = 1).
std::vector<ComplexPoint> disk_grid(std::size_t side = 61, double radius = 0.99);

/// Low-discrepancy points in the polydisk of the given radius. Each axis
/// uses two Halton coordinates (r = radius sqrt(u), theta = 2 pi v), shifted
/// by a seeded Cranley-Patterson rotation.
std::vector<ComplexPoint> halton_polydisk(std::size_t n, std::size_t count, double radius = 0.99,
                                          std::uint64_t seed = 1);

/// Default interior sample: disk_grid() for n = 1, 2000 Halton points
/// otherwise.
std::vector<ComplexPoint> default_polydisk_sample(std::size_t n, std::uint64_t seed = 1);

/// Tensor torus lattices at each radius, concatenated.
std::vector<ComplexPoint> radial_sweep(std::size_t n, std::span<const double> radii,
                                       std::size_t angles_per_dim);

/// `count` equally spaced unimodular numbers plus +-1 and +-i, without
/// duplicates, ordered by angle in [0, 2 pi).
std::vector<cplx> unimodular_sample(std::size_t count = 16);

} // namespace phm
