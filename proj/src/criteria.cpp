#include "phm/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "phm/errors.hpp"

namespace phm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string axis_label(std::string_view prefix, std::size_t j) {
    return std::string(prefix) + " axis " + std::to_string(j + 1);
}

std::vector<PolySeries> gradient(const PolySeries& s) {
    std::vector<PolySeries> out;
    for (std::size_t j = 0; j < s.dim(); ++j) out.push_back(partial(s, j));
    return out;
}

void require_dim(std::span<const ComplexPoint> points, std::size_t n, const char* who) {
    for (const auto& z : points) {
        if (z.size() != n)
            throw UsageError(std::string(who) + ": sample point dimension differs from map");
    }
}

} // namespace

std::string_view to_string(Holds h) {
    switch (h) {
    case Holds::Pass: return "PASS";
    case Holds::Fail: return "FAIL";
    case Holds::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

double Witness::value(std::string_view name) const {
    for (const auto& [k, v] : values)
        if (k == name) return v;
    throw std::out_of_range("Witness::value: no entry named " + std::string(name));
}

double DetailRow::ratio() const {
    if (bound == 0.0) return attained == 0.0 ? 0.0 : kInf;
    return attained / bound;
}

const DetailRow* CriterionReport::find_row(std::string_view label) const {
    for (const auto& r : details)
        if (r.label == label) return &r;
    return nullptr;
}

// ------------------------------------------------------- noshiro_warschawski

CriterionReport noshiro_warschawski(const PluriharmonicMap& f, double gamma,
                                    std::span<const ComplexPoint> points) {
    require_dim(points, f.dim(), "noshiro_warschawski");
    const std::size_t n = f.dim();
    const auto dh = gradient(f.h());
    const auto dg = gradient(f.g());
    const cplx rot = std::polar(1.0, gamma);

    CriterionReport rep;
    rep.name = "noshiro_warschawski";
    std::vector<double> min_slack(n, kInf);
    for (const auto& z : points) {
        const PointPowers powers(z, f.degree_cap());
        for (std::size_t j = 0; j < n; ++j) {
            const double lhs = std::real(rot * evaluate(dh[j], powers));
            const double rhs = std::abs(evaluate(dg[j], powers));
            const double slack = lhs - rhs;
            min_slack[j] = std::min(min_slack[j], slack);
            if (slack <= tol::kAlgebraic && !rep.witness) {
                rep.witness = Witness{z,
                                      {{"axis", static_cast<double>(j + 1)},
                                       {"re_rotated_dh", lhs},
                                       {"abs_dg", rhs},
                                       {"slack", slack},
                                       {"sup_norm", z.sup_norm()}}};
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        rep.details.push_back({axis_label("min slack", j), min_slack[j], tol::kAlgebraic});
    rep.holds = rep.witness ? Holds::Fail : Holds::Pass;
    if (rep.holds == Holds::Pass) rep.notes.emplace_back("PASS is sampled evidence only");
    return rep;
}

// ------------------------------------------------------ epsilon_family_check

CriterionReport epsilon_family_check(const PluriharmonicMap& f, double M,
                                     std::span<const cplx> epsilons, const TorusGrid& grid,
                                     unsigned refine_steps) {
    if (!(M > 0.0)) throw UsageError("epsilon_family_check: M must be positive");
    for (const auto& eps : epsilons) {
        if (std::abs(std::abs(eps) - 1.0) > tol::kUnimodular)
            throw UsageError("epsilon_family_check: eps is not unimodular");
    }
    CriterionReport rep;
    rep.name = "epsilon_family_check";
    const bool degenerate = f.g().is_zero();
    if (degenerate) rep.notes.emplace_back("g = 0: the family reduces to a single check of h");

    double worst = -kInf;
    for (const auto& eps : epsilons) {
        const std::vector<PolySeries> parts{f.h(), f.g()};
        const std::vector<cplx> w{{1.0, 0.0}, eps};
        const PolySeries F = PolySeries::linear_combination(parts, w);
        const auto sup = sup_estimate(LambdaFunctional(F), grid, refine_steps);
        char label[64];
        std::snprintf(label, sizeof label, "eps arg=%.6f", std::arg(eps));
        rep.details.push_back({label, sup.value, M});
        if (sup.value > M + tol::kSampled && sup.value > worst) {
            worst = sup.value;
            rep.witness = Witness{sup.witness,
                                  {{"eps_re", eps.real()}, {"eps_im", eps.imag()}, {"sup", sup.value}}};
        }
        if (degenerate) break;
    }
    rep.holds = rep.witness ? Holds::Fail : Holds::Pass;
    rep.notes.emplace_back("suprema are sampled lower bounds");
    return rep;
}

// ----------------------------------------------------------- derivative_band

CriterionReport derivative_band(const PolySeries& phi, double M,
                                std::span<const ComplexPoint> points) {
    if (!(M > 0.0)) throw UsageError("derivative_band: M must be positive");
    require_dim(points, phi.dim(), "derivative_band");
    const std::size_t n = phi.dim();
    const auto grad = gradient(phi);

    CriterionReport rep;
    rep.name = "derivative_band";
    std::vector<double> lo(n, kInf), hi(n, -kInf);
    for (const auto& z : points) {
        const PointPowers powers(z, phi.degree_cap());
        for (std::size_t j = 0; j < n; ++j) {
            const double mod = std::abs(evaluate(grad[j], powers));
            lo[j] = std::min(lo[j], mod);
            hi[j] = std::max(hi[j], mod);
            if (!(mod > 1.0 - M && mod < 1.0 + M) && !rep.witness) {
                rep.witness = Witness{z,
                                      {{"axis", static_cast<double>(j + 1)},
                                       {"modulus", mod},
                                       {"lower", 1.0 - M},
                                       {"upper", 1.0 + M}}};
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        rep.details.push_back({axis_label("min |dphi|", j), lo[j], 1.0 - M});
        rep.details.push_back({axis_label("max |dphi|", j), hi[j], 1.0 + M});
    }
    if (rep.witness) {
        rep.holds = Holds::Fail;
    } else if (!PluriharmonicMap::holomorphic(phi).is_normalized()) {
        rep.holds = Holds::Inconclusive;
        rep.notes.emplace_back("phi is not normalized; the band is only claimed for B_n(M)");
    } else {
        rep.holds = Holds::Pass;
        rep.notes.emplace_back("PASS is sampled evidence only");
    }
    return rep;
}

// --------------------------------------------------------- coefficient_audit

CriterionReport coefficient_audit(const PluriharmonicMap& f, double M, unsigned m_max) {
    if (!(M > 0.0)) throw UsageError("coefficient_audit: M must be positive");
    if (m_max > f.degree_cap())
        throw UsageError("coefficient_audit: m_max " + std::to_string(m_max) +
                         " exceeds degree cap " + std::to_string(f.degree_cap()));
    const std::size_t n = f.dim();
    CriterionReport rep;
    rep.name = "coefficient_audit";
    for (unsigned m = 2; m <= m_max; ++m) {
        const double count = static_cast<double>(monomial_count(n, m));
        const double bound = count * M / (static_cast<double>(n) * m * (m - 1.0));
        double sum_a = 0.0, sum_b = 0.0;
        for (const auto& t : f.h().homogeneous_part(m)) sum_a += std::abs(t.coeff);
        for (const auto& t : f.g().homogeneous_part(m)) sum_b += std::abs(t.coeff);
        const std::string deg = "m=" + std::to_string(m);
        rep.details.push_back({deg + " sum|a|", sum_a, bound});
        rep.details.push_back({deg + " sum|b|", sum_b, bound});
        for (auto [part, sum] : {std::pair{0.0, sum_a}, std::pair{1.0, sum_b}}) {
            if (sum > bound + tol::kAlgebraic && !rep.witness)
                rep.witness = Witness{std::nullopt,
                                      {{"degree", static_cast<double>(m)},
                                       {"part", part},
                                       {"attained", sum},
                                       {"bound", bound}}};
        }
    }
    rep.holds = rep.witness ? Holds::Fail : Holds::Pass;
    return rep;
}

// ------------------------------------------------------ sufficient_condition

CriterionReport sufficient_condition(const PluriharmonicMap& f, double M) {
    if (!(M > 0.0)) throw UsageError("sufficient_condition: M must be positive");
    CriterionReport rep;
    rep.name = "sufficient_condition";
    const double from_h = certified_upper_bound(f.h());
    const double from_g = certified_upper_bound(f.g());
    const double total = from_h + from_g;
    rep.details.push_back({"majorant h", from_h, M});
    rep.details.push_back({"majorant g", from_g, M});
    rep.details.push_back({"majorant total", total, M});
    const bool normalized = f.is_normalized_h0();
    if (!normalized) rep.notes.emplace_back("map is not H_n^0-normalized");
    if (normalized && total <= M + tol::kAlgebraic) {
        rep.holds = Holds::Pass;
        rep.notes.emplace_back("implies CERTIFIED_MEMBER");
    } else {
        rep.holds = Holds::Fail;
        rep.witness = Witness{std::nullopt,
                              {{"majorant", total}, {"M", M}, {"normalized", normalized ? 1.0 : 0.0}}};
    }
    return rep;
}

// --------------------------------------------------------------- growth_check

CriterionReport growth_check(const PluriharmonicMap& f, double M,
                             std::span<const ComplexPoint> samples, const TorusGrid& grid,
                             unsigned refine_steps) {
    require_dim(samples, f.dim(), "growth_check");
    const auto member = membership(f, M, grid, refine_steps);
    CriterionReport rep;
    rep.name = "growth_check";
    rep.notes.push_back("membership: " + std::string(to_string(member.verdict)));

    const double n = static_cast<double>(f.dim());
    double upper_excess = -kInf, lower_deficit = -kInf;
    double upper_slack = kInf, lower_slack = kInf;
    for (const auto& z : samples) {
        const double s = z.sup_norm();
        const double mod = std::abs(evaluate_map(f, z));
        const double quad = M * n * n / 2.0 * s * s;
        const double up = n * s + quad;
        const double lo = n * s - quad;
        upper_excess = std::max(upper_excess, mod - up);
        lower_deficit = std::max(lower_deficit, lo - mod);
        upper_slack = std::min(upper_slack, up - mod);
        lower_slack = std::min(lower_slack, mod - lo);
        const bool up_bad = mod > up + tol::kSampled;
        const bool lo_bad = mod < lo - tol::kSampled;
        if ((up_bad || lo_bad) && !rep.witness) {
            rep.witness = Witness{z,
                                  {{"abs_f", mod},
                                   {"upper", up},
                                   {"lower", lo},
                                   {"sup_norm", s},
                                   {"side", up_bad ? 1.0 : -1.0}}};
        }
    }
    rep.details.push_back({"upper max excess", upper_excess, tol::kSampled});
    rep.details.push_back({"lower max deficit", lower_deficit, tol::kSampled});
    rep.details.push_back({"upper min slack", upper_slack, 0.0});
    rep.details.push_back({"lower min slack", lower_slack, 0.0});

    if (member.verdict == MembershipVerdict::NotMember) {
        rep.holds = Holds::Inconclusive;
        rep.notes.emplace_back("envelope is only claimed for members");
    } else {
        rep.holds = rep.witness ? Holds::Fail : Holds::Pass;
    }
    return rep;
}

} // namespace phm
