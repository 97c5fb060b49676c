#include "phm/functionals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phm/errors.hpp"

namespace phm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr unsigned kGoldenIterations = 60;

} // namespace

LambdaFunctional::LambdaFunctional(const PluriharmonicMap& f) : n_(f.dim()), cap_(f.degree_cap()) {
    cache(f.h(), h2_);
    cache(f.g(), g2_);
}

LambdaFunctional::LambdaFunctional(const PolySeries& phi) : n_(phi.dim()), cap_(phi.degree_cap()) {
    cache(phi, h2_);
}

void LambdaFunctional::cache(const PolySeries& s, std::vector<PolySeries>& out) {
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = j; k < n_; ++k) out.push_back(second_partial(s, j, k));
}

double LambdaFunctional::operator()(const ComplexPoint& z) const {
    if (z.size() != n_)
        throw UsageError("lambda_value: point has " + std::to_string(z.size()) +
                         " coordinates, map has dimension " + std::to_string(n_));
    const PointPowers powers(z, cap_);
    double inner = 0.0;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = j; k < n_; ++k, ++idx) {
            const double weight = (j == k) ? 1.0 : 2.0;
            double v = std::abs(evaluate(h2_[idx], powers));
            if (!g2_.empty()) v += std::abs(evaluate(g2_[idx], powers));
            inner += weight * v;
        }
    }
    return z.abs_sum() * inner;
}

double lambda_value(const PluriharmonicMap& f, const ComplexPoint& z) {
    return LambdaFunctional(f)(z);
}

double holo_lambda_value(const PolySeries& phi, const ComplexPoint& z) {
    return LambdaFunctional(phi)(z);
}

SupEstimate sup_estimate(const LambdaFunctional& functional, const TorusGrid& grid,
                         unsigned refine_steps) {
    if (grid.dim() != functional.dim())
        throw UsageError("sup_estimate: grid dimension " + std::to_string(grid.dim()) +
                         " differs from map dimension " + std::to_string(functional.dim()));

    SupEstimate best;
    best.value = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto th = grid.angles(i);
        const double v = functional(polar_point(grid.radius(), th));
        if (v > best.value) {
            best.value = v;
            best.witness_angles = std::move(th);
        }
    }

    // Coordinate-wise golden-section refinement around the lattice maximiser.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double half_width = kTwoPi / static_cast<double>(grid.angles_per_dim());
    auto th = best.witness_angles;
    for (unsigned round = 0; round < refine_steps; ++round) {
        for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
            auto eval_at = [&](double t) {
                th[axis] = t;
                return functional(polar_point(grid.radius(), th));
            };
            const double centre = best.witness_angles[axis];
            double a = centre - half_width;
            double b = centre + half_width;
            double c = b - inv_phi * (b - a);
            double d = a + inv_phi * (b - a);
            double fc = eval_at(c);
            double fd = eval_at(d);
            for (unsigned it = 0; it < kGoldenIterations; ++it) {
                if (fc > fd) {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - inv_phi * (b - a);
                    fc = eval_at(c);
                } else {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + inv_phi * (b - a);
                    fd = eval_at(d);
                }
            }
            const double t = fc > fd ? c : d;
            const double v = eval_at(t);
            if (v > best.value) {
                best.value = v;
                best.witness_angles[axis] = t;
            }
            th = best.witness_angles;
        }
        half_width *= 0.5;
    }
    for (auto& t : best.witness_angles) t = std::fmod(std::fmod(t, kTwoPi) + kTwoPi, kTwoPi);
    best.witness = polar_point(grid.radius(), best.witness_angles);
    return best;
}

SupEstimate sup_estimate(const PluriharmonicMap& f, const TorusGrid& grid, unsigned refine_steps) {
    return sup_estimate(LambdaFunctional(f), grid, refine_steps);
}

double certified_upper_bound(const PolySeries& phi) {
    const double n = static_cast<double>(phi.dim());
    double total = 0.0;
    for (const auto& t : phi.terms()) {
        const double m = t.alpha.degree();
        if (m < 2) continue;
        total += n * m * (m - 1.0) * std::abs(t.coeff);
    }
    return total;
}

double certified_upper_bound(const PluriharmonicMap& f) {
    return certified_upper_bound(f.h()) + certified_upper_bound(f.g());
}

std::string_view to_string(MembershipVerdict v) {
    switch (v) {
    case MembershipVerdict::CertifiedMember: return "CERTIFIED_MEMBER";
    case MembershipVerdict::LikelyMember: return "LIKELY_MEMBER";
    case MembershipVerdict::NotMember: return "NOT_MEMBER";
    }
    return "UNKNOWN";
}

namespace {

MembershipReport decide(const LambdaFunctional& functional, double certified, bool normalized,
                        double M, const TorusGrid& grid, unsigned refine_steps) {
    if (!(M > 0.0)) throw UsageError("membership: M must be positive");
    auto sup = sup_estimate(functional, grid, refine_steps);
    MembershipReport rep;
    rep.M = M;
    rep.sampled_sup = sup.value;
    rep.certified_upper = certified;
    rep.witness = std::move(sup.witness);
    rep.witness_angles = std::move(sup.witness_angles);
    rep.normalized = normalized;
    rep.margin = M - rep.sampled_sup;
    if (!normalized)
        rep.verdict = MembershipVerdict::NotMember;
    else if (certified <= M + tol::kAlgebraic)
        rep.verdict = MembershipVerdict::CertifiedMember;
    else if (rep.sampled_sup > M + tol::kSampled)
        rep.verdict = MembershipVerdict::NotMember;
    else
        rep.verdict = MembershipVerdict::LikelyMember;
    return rep;
}

} // namespace

MembershipReport membership(const PluriharmonicMap& f, double M, const TorusGrid& grid,
                            unsigned refine_steps) {
    return decide(LambdaFunctional(f), certified_upper_bound(f), f.is_normalized_h0(), M, grid,
                  refine_steps);
}

MembershipReport holo_membership(const PolySeries& phi, double M, const TorusGrid& grid,
                                 unsigned refine_steps) {
    const auto f = PluriharmonicMap::holomorphic(phi);
    return decide(LambdaFunctional(phi), certified_upper_bound(phi), f.is_normalized(), M, grid,
                  refine_steps);
}

} // namespace phm
