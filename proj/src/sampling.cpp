#include "phm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "phm/errors.hpp"

namespace phm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double radical_inverse(std::uint64_t index, unsigned base) {
    double inv_base = 1.0 / base;
    double f = inv_base;
    double result = 0.0;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f *= inv_base;
    }
    return result;
}

unsigned nth_prime(std::size_t k) {
    unsigned candidate = 1;
    std::size_t found = 0;
    while (found <= k) {
        ++candidate;
        bool prime = candidate >= 2;
        for (unsigned d = 2; d * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) ++found;
    }
    return candidate;
}

} // namespace

TorusGrid::TorusGrid(std::size_t n, double radius, std::size_t angles_per_dim)
    : n_(n), r_(radius), angles_(angles_per_dim), size_(1) {
    if (n == 0) throw UsageError("TorusGrid: dimension must be >= 1");
    if (!(radius > 0.0 && radius < 1.0)) throw UsageError("TorusGrid: radius must lie in (0, 1)");
    if (angles_per_dim == 0) throw UsageError("TorusGrid: angles_per_dim must be positive");
    for (std::size_t j = 0; j < n; ++j) {
        if (size_ > (std::size_t(1) << 40) / angles_per_dim) throw UsageError("TorusGrid: too many points");
        size_ *= angles_per_dim;
    }
}

std::size_t default_angles(std::size_t n) {
    switch (n) {
    case 1: return 512;
    case 2: return 96;
    case 3: return 24;
    default:
        // Keep roughly 2e4 lattice points in higher dimensions.
        return std::max<std::size_t>(4, static_cast<std::size_t>(std::pow(2.0e4, 1.0 / n)));
    }
}

TorusGrid TorusGrid::standard(std::size_t n, double radius) {
    return TorusGrid(n, radius, default_angles(n));
}

std::size_t TorusGrid::angle_index(std::size_t i, std::size_t axis) const {
    std::size_t stride = 1;
    for (std::size_t j = axis + 1; j < n_; ++j) stride *= angles_;
    return (i / stride) % angles_;
}

std::vector<double> TorusGrid::angles(std::size_t i) const {
    std::vector<double> th(n_);
    for (std::size_t j = 0; j < n_; ++j)
        th[j] = kTwoPi * static_cast<double>(angle_index(i, j)) / static_cast<double>(angles_);
    return th;
}

ComplexPoint TorusGrid::point(std::size_t i) const { return polar_point(r_, angles(i)); }

ComplexPoint polar_point(std::span<const double> radii, std::span<const double> angles) {
    if (radii.size() != angles.size()) throw UsageError("polar_point: size mismatch");
    std::vector<cplx> z(radii.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = std::polar(radii[j], angles[j]);
    return ComplexPoint(std::move(z));
}

ComplexPoint polar_point(double radius, std::span<const double> angles) {
    std::vector<cplx> z(angles.size());
    for (std::size_t j = 0; j < z.size(); ++j) z[j] = std::polar(radius, angles[j]);
    return ComplexPoint(std::move(z));
}

std::vector<ComplexPoint> disk_grid(std::size_t side, double radius) {
    if (side < 2) throw UsageError("disk_grid: side must be >= 2");
    std::vector<ComplexPoint> pts;
    const double step = 2.0 * radius / static_cast<double>(side - 1);
    for (std::size_t a = 0; a < side; ++a) {
        for (std::size_t b = 0; b < side; ++b) {
            const cplx z(-radius + step * a, -radius + step * b);
            if (std::abs(z) <= radius) pts.push_back(ComplexPoint{z});
        }
    }
    return pts;
}

std::vector<ComplexPoint> halton_polydisk(std::size_t n, std::size_t count, double radius,
                                          std::uint64_t seed) {
    if (n == 0) throw UsageError("halton_polydisk: dimension must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> shift(2 * n);
    for (auto& s : shift) s = unit(rng);
    std::vector<unsigned> bases(2 * n);
    for (std::size_t d = 0; d < 2 * n; ++d) bases[d] = nth_prime(d);

    std::vector<ComplexPoint> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<cplx> z(n);
        for (std::size_t j = 0; j < n; ++j) {
            double u = radical_inverse(i + 1, bases[2 * j]) + shift[2 * j];
            double v = radical_inverse(i + 1, bases[2 * j + 1]) + shift[2 * j + 1];
            u -= std::floor(u);
            v -= std::floor(v);
            z[j] = std::polar(radius * std::sqrt(u), kTwoPi * v);
        }
        pts.emplace_back(std::move(z));
    }
    return pts;
}

std::vector<ComplexPoint> default_polydisk_sample(std::size_t n, std::uint64_t seed) {
    if (n == 1) return disk_grid();
    return halton_polydisk(n, 2000, 0.99, seed);
}

std::vector<ComplexPoint> radial_sweep(std::size_t n, std::span<const double> radii,
                                       std::size_t angles_per_dim) {
    std::vector<ComplexPoint> pts;
    for (double r : radii) {
        const TorusGrid grid(n, r, angles_per_dim);
        for (std::size_t i = 0; i < grid.size(); ++i) pts.push_back(grid.point(i));
    }
    return pts;
}

std::vector<cplx> unimodular_sample(std::size_t count) {
    // Work with exact rational turns so that duplicates are detected exactly.
    std::vector<std::pair<std::size_t, std::size_t>> turns; // numerator / denominator
    for (std::size_t k = 0; k < count; ++k) turns.emplace_back(k, count);
    for (std::size_t k = 0; k < 4; ++k) turns.emplace_back(k, 4);
    auto less = [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; };
    auto same = [](const auto& a, const auto& b) { return a.first * b.second == b.first * a.second; };
    std::sort(turns.begin(), turns.end(), less);
    turns.erase(std::unique(turns.begin(), turns.end(), same), turns.end());

    std::vector<cplx> out;
    for (const auto& [num, den] : turns) {
        // Exact values at the quarter turns.
        if (num * 4 % den == 0) {
            static const cplx quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            out.push_back(quarter[num * 4 / den]);
        } else {
            out.push_back(std::polar(1.0, kTwoPi * static_cast<double>(num) / static_cast<double>(den)));
        }
    }
    return out;
}

} // namespace phm
