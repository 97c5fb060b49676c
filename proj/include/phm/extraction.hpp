#pragma once

#include <cstddef>
#include <vector>

#include "phm/criteria.hpp"
#include "phm/series.hpp"

namespace phm {

/// Coefficient table in graded-lex order, one entry per |alpha| <= m_max.
using CoefficientTable = std::vector<Term>;

/// Recovers a_alpha, |alpha| <= m_max, from samples of s on the torus r T^n
/// via the discrete Cauchy integral
///
///   a_alpha ~ r^{-|alpha|} N^{-n} sum_grid s(z) exp(-i alpha . theta).
///
/// Exact up to rounding for polynomials when samples_per_dim > degree cap.
/// Throws UsageError unless 0 < r < 1 and samples_per_dim > m_max.
CoefficientTable dft_coefficients(const PolySeries& s, double r, std::size_t samples_per_dim,
                                  unsigned m_max);

/// Default sample count 2 (m_max + 1).
CoefficientTable dft_coefficients(const PolySeries& s, double r, unsigned m_max);

struct OrthogonalityReport {
    std::size_t n = 0;
    unsigned nu_max = 0;
    std::size_t samples_per_dim = 0;
    std::size_t frequencies_checked = 0;
    cplx zero_frequency_average;
    /// max |average| over nu != 0
    double max_nonzero_modulus = 0.0;
    std::vector<int> worst_nu;
    bool passed = false;
};

/// Grid average of exp(i nu . theta) over the N^n lattice for every nu with
/// |nu_j| <= nu_max, by direct summation. Passes when the nu = 0 average is
/// 1 and every other average is below 1e-12 in modulus.
/// Throws UsageError unless samples_per_dim > nu_max.
OrthogonalityReport orthogonality_selftest(std::size_t n, unsigned nu_max, std::size_t samples_per_dim);

/// Schwarz-lemma check for phi in B_n(M): |omega_jk(z)| <= ||z||_inf with
/// omega_jk = z_j d^2phi/dz_j dz_k / M, and for each k the aggregate
/// sum_j |z_j d^2phi/dz_j dz_k| <= n M ||z||_inf, on torus lattices at
/// each radius. INCONCLUSIVE when phi is not shown to be in B_n(M).
CriterionReport schwarz_check(const PolySeries& phi, double M, std::span<const double> radii,
                              std::size_t angles_per_dim);

/// Radii {0.25, 0.5, 0.75, 0.99} and the default angle count for n.
CriterionReport schwarz_check(const PolySeries& phi, double M);

/// Sum with a fixed pairwise (tree) order.
cplx pairwise_sum(std::span<const cplx> values);

} // namespace phm
