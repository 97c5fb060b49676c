#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "phm/multiindex.hpp"

namespace phm {

using cplx = std::complex<double>;

/// A point z in C^n.
class ComplexPoint {
public:
    ComplexPoint() = default;
    explicit ComplexPoint(std::vector<cplx> coords) : z_(std::move(coords)) {}
    ComplexPoint(std::initializer_list<cplx> coords) : z_(coords) {}

    std::size_t size() const noexcept { return z_.size(); }
    const cplx& operator[](std::size_t j) const { return z_[j]; }
    std::span<const cplx> coords() const noexcept { return z_; }

    /// max_j |z_j|
    double sup_norm() const;
    /// sum_j |z_j|
    double abs_sum() const;

    bool operator==(const ComplexPoint&) const = default;

private:
    std::vector<cplx> z_;
};

struct Term {
    MultiIndex alpha;
    cplx coeff;
};

/// Truncated holomorphic power series sum_alpha a_alpha z^alpha in n
/// variables with an explicit inclusive degree cap.
///
/// Storage is sparse and sorted in graded-lex order. A missing multi-index
/// means the coefficient is exactly zero; zero coefficients are never stored.
/// Instances are immutable once built.
class PolySeries {
public:
    /// The zero series.
    PolySeries(std::size_t n, unsigned degree_cap);
    /// Builds from a term list in any order. Throws UsageError on a wrong
    /// dimension, a degree above the cap, or a duplicated multi-index.
    PolySeries(std::size_t n, unsigned degree_cap, std::vector<Term> terms);

    std::size_t dim() const noexcept { return n_; }
    unsigned degree_cap() const noexcept { return cap_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of z^alpha (zero when absent).
    cplx coeff(const MultiIndex& alpha) const;
    /// Terms with |alpha| == m, as a contiguous view.
    std::span<const Term> homogeneous_part(unsigned m) const;

    /// Same coefficients under a different cap; throws DegreeCapError if a
    /// stored term would no longer fit.
    PolySeries with_cap(unsigned degree_cap) const;

    /// Coefficient-wise equality (exact).
    bool operator==(const PolySeries& other) const;

    /// sum of k-th series scaled by weights[k]; all must share (n, cap).
    static PolySeries linear_combination(std::span<const PolySeries> parts,
                                         std::span<const cplx> weights);

private:
    std::size_t n_;
    unsigned cap_;
    std::vector<Term> terms_;
};

/// The pluriharmonic map f = h + conj(g) stored as its (h, g) pair.
class PluriharmonicMap {
public:
    /// h and g must share dimension and degree cap.
    PluriharmonicMap(PolySeries h, PolySeries g);
    /// f = h (g identically zero).
    static PluriharmonicMap holomorphic(PolySeries h);

    const PolySeries& h() const noexcept { return h_; }
    const PolySeries& g() const noexcept { return g_; }
    std::size_t dim() const noexcept { return h_.dim(); }
    unsigned degree_cap() const noexcept { return h_.degree_cap(); }

    /// h(0) = g(0) = 0 and dh/dz_j(0) = 1 for every axis (class H_n).
    bool is_normalized(double tol = 1e-12) const;
    /// Additionally dg/dz_j(0) = 0 for every axis (class H_n^0).
    bool is_normalized_h0(double tol = 1e-12) const;

    bool operator==(const PluriharmonicMap&) const = default;

private:
    PolySeries h_;
    PolySeries g_;
};

/// sum_alpha a_alpha z^alpha, accumulated in graded-lex order.
/// Throws UsageError on dimension mismatch.
cplx evaluate(const PolySeries& s, const ComplexPoint& z);

/// Cached powers z_j^k, k <= max_degree, for evaluating many series at
/// the same point.
class PointPowers {
public:
    PointPowers(const ComplexPoint& z, unsigned max_degree);

    std::size_t dim() const noexcept { return n_; }
    unsigned max_degree() const noexcept { return max_degree_; }
    cplx monomial(const MultiIndex& alpha) const;

private:
    std::size_t n_;
    unsigned max_degree_;
    std::vector<cplx> table_; // row-major: axis * (max_degree + 1) + k
};

cplx evaluate(const PolySeries& s, const PointPowers& powers);

/// h(z) + conj(g(z)).
cplx evaluate_map(const PluriharmonicMap& f, const ComplexPoint& z);

/// Formal derivative d/dz_axis (axis is 0-based). Cap drops by one.
PolySeries partial(const PolySeries& s, std::size_t axis);

/// d^2/dz_j dz_k; symmetric in (j, k).
PolySeries second_partial(const PolySeries& s, std::size_t j, std::size_t k);

/// Exact product. Throws DegreeCapError if any product term exceeds
/// result_cap.
PolySeries multiply(const PolySeries& a, const PolySeries& b, unsigned result_cap);

/// Coefficient-wise convex combination of maps sharing (n, cap).
/// Weights must lie in [0, 1] and sum to 1 within 1e-12.
PluriharmonicMap convex_combine(std::span<const PluriharmonicMap> maps,
                                std::span<const double> weights);

/// sum_j z_j in n variables with the given cap (cap >= 1).
PolySeries identity_part(std::size_t n, unsigned degree_cap);

enum class SharpnessPart { Holomorphic, Antiholomorphic };

/// sum_j z_j + sum_{|alpha| = m} a z^alpha (or the conjugated tail),
/// a = M / (n^2 m (m - 1)). Cap is m.
PluriharmonicMap extremal_sharpness_map(std::size_t n, unsigned m, double M, SharpnessPart part);

/// h = sum_j z_j + sign * (M/2) (sum_j z_j)^2 expanded into monomials,
/// g = 0. Cap is 2.
PluriharmonicMap extremal_growth_map(std::size_t n, double M, int sign);

} // namespace phm
