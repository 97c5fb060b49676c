#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phm/functionals.hpp"
#include "phm/sampling.hpp"
#include "phm/series.hpp"

namespace phm {

enum class Holds { Pass, Fail, Inconclusive };

std::string_view to_string(Holds h);

/// Evidence attached to a verdict: a sample point (when the criterion is
/// pointwise) plus named values.
struct Witness {
    std::optional<ComplexPoint> point;
    std::vector<std::pair<std::string, double>> values;

    /// Value by name; throws std::out_of_range if absent.
    double value(std::string_view name) const;
};

/// One row of a per-degree / per-axis / per-rotation table.
struct DetailRow {
    std::string label;
    double attained = 0.0;
    double bound = 0.0;

    /// attained / bound (0 when the bound is 0 and nothing was attained).
    double ratio() const;
};

/// Outcome of a criterion check. A FAIL always carries a witness.
struct CriterionReport {
    std::string name;
    Holds holds = Holds::Inconclusive;
    std::optional<Witness> witness;
    std::vector<DetailRow> details;
    std::vector<std::string> notes;

    const DetailRow* find_row(std::string_view label) const;
};

/// Pointwise test of Re(e^{i gamma} dh/dz_j) > |dg/dz_j| on every axis at
/// every sample point, with slack > 1e-12. PASS is evidence on the sample.
CriterionReport noshiro_warschawski(const PluriharmonicMap& f, double gamma,
                                    std::span<const ComplexPoint> points);

/// Sampled check that F_eps = h + eps g lies in B_n(M) for every eps.
/// Throws UsageError for a non-unimodular eps.
CriterionReport epsilon_family_check(const PluriharmonicMap& f, double M,
                                     std::span<const cplx> epsilons, const TorusGrid& grid,
                                     unsigned refine_steps = 3);

/// 1 - M < |dphi/dz_j(z)| < 1 + M on every axis at every sample point.
CriterionReport derivative_band(const PolySeries& phi, double M,
                                std::span<const ComplexPoint> points);

/// Per-degree comparison of sum_{|alpha| = m} |a_alpha| and |b_alpha|
/// against C(m+n-1, n-1) M / (n m (m-1)) for 2 <= m <= m_max.
/// Throws UsageError if m_max exceeds the degree cap.
CriterionReport coefficient_audit(const PluriharmonicMap& f, double M, unsigned m_max);

/// PASS iff f is H_n^0-normalized and the coefficient majorant is <= M,
/// which certifies membership in B_{H_n^0}(M).
CriterionReport sufficient_condition(const PluriharmonicMap& f, double M);

/// Two-sided growth envelope n|z| -+ (M n^2 / 2)|z|^2 (sup norm) on |f(z)|.
/// The envelope is only claimed for members, so a NOT_MEMBER input gives
/// INCONCLUSIVE. Upper and lower sides are reported as separate rows.
CriterionReport growth_check(const PluriharmonicMap& f, double M,
                             std::span<const ComplexPoint> samples, const TorusGrid& grid,
                             unsigned refine_steps = 3);

} // namespace phm
