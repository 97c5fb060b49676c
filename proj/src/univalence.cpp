#include "phm/univalence.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

#include "phm/errors.hpp"

namespace phm {

namespace {

constexpr unsigned kNewtonIterations = 60;
constexpr std::size_t kNewtonStarts = 8;

double sup_distance(const ComplexPoint& a, const ComplexPoint& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

void require_unimodular(std::span<const cplx> values, const char* who) {
    for (const auto& v : values) {
        if (std::abs(std::abs(v) - 1.0) > tol::kUnimodular)
            throw UsageError(std::string(who) + ": rotation parameter is not unimodular");
    }
}

} // namespace

std::string_view to_string(InjectivityStatus s) {
    return s == InjectivityStatus::Collision ? "COLLISION" : "NO_COLLISION";
}

InjectivityVerdict injectivity_scan_values(std::span<const ComplexPoint> points,
                                           std::span<const cplx> values, double delta, double eta) {
    if (points.size() < 2) throw UsageError("injectivity_scan: need at least two points");
    if (points.size() != values.size()) throw UsageError("injectivity_scan: value count mismatch");
    if (!(delta > 0.0) || !(eta > 0.0))
        throw UsageError("injectivity_scan: delta and eta must be positive");

    InjectivityVerdict out;
    out.min_image_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (!(sup_distance(points[i], points[j]) > eta)) continue;
            ++out.pairs_tested;
            const double gap = std::abs(values[i] - values[j]);
            out.min_image_gap = std::min(out.min_image_gap, gap);
            if (gap < delta && !out.pair) {
                out.status = InjectivityStatus::Collision;
                out.pair = CollisionPair{i, j, points[i], points[j], gap};
            }
        }
    }
    return out;
}

InjectivityVerdict injectivity_scan(const PluriharmonicMap& f, std::span<const ComplexPoint> points,
                                    double delta, double eta) {
    std::vector<cplx> values;
    values.reserve(points.size());
    for (const auto& z : points) values.push_back(evaluate_map(f, z));
    return injectivity_scan_values(points, values, delta, eta);
}

bool StableScanReport::stable_pluriharmonic() const {
    return std::all_of(pluriharmonic.begin(), pluriharmonic.end(),
                       [](const auto& v) { return v.status == InjectivityStatus::NoCollision; });
}

bool StableScanReport::stable_holomorphic() const {
    return std::all_of(holomorphic.begin(), holomorphic.end(),
                       [](const auto& v) { return v.status == InjectivityStatus::NoCollision; });
}

StableScanReport stable_scan(const PluriharmonicMap& f, std::span<const cplx> lambdas,
                             std::span<const ComplexPoint> points, double delta, double eta) {
    require_unimodular(lambdas, "stable_scan");
    std::vector<cplx> hv, gv;
    for (const auto& z : points) {
        if (z.size() != f.dim()) throw UsageError("stable_scan: sample point dimension differs from map");
        const PointPowers powers(z, f.degree_cap());
        hv.push_back(evaluate(f.h(), powers));
        gv.push_back(evaluate(f.g(), powers));
    }
    StableScanReport rep;
    rep.lambdas.assign(lambdas.begin(), lambdas.end());
    std::vector<cplx> values(points.size());
    for (const auto& lam : lambdas) {
        for (std::size_t i = 0; i < points.size(); ++i) values[i] = hv[i] + lam * std::conj(gv[i]);
        rep.pluriharmonic.push_back(injectivity_scan_values(points, values, delta, eta));
        for (std::size_t i = 0; i < points.size(); ++i) values[i] = hv[i] + lam * gv[i];
        rep.holomorphic.push_back(injectivity_scan_values(points, values, delta, eta));
    }
    return rep;
}

CriterionReport local_nonvanishing(const PluriharmonicMap& f, std::span<const ComplexPoint> points) {
    const std::size_t n = f.dim();
    CriterionReport rep;
    rep.name = "local_nonvanishing";
    for (const auto& z : points) {
        if (z.size() != n) throw UsageError("local_nonvanishing: sample point dimension differs from map");
    }

    for (std::size_t j = 0; j < n && !rep.witness; ++j) {
        const PolySeries dj = partial(f.h(), j);
        std::vector<PolySeries> grad;
        for (std::size_t k = 0; k < n; ++k) grad.push_back(partial(dj, k));

        std::vector<std::pair<double, std::size_t>> moduli;
        double min_mod = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double mod = std::abs(evaluate(dj, points[i]));
            moduli.emplace_back(mod, i);
            min_mod = std::min(min_mod, mod);
            if (mod <= tol::kNonvanishing && !rep.witness) {
                rep.witness = Witness{points[i],
                                      {{"axis", static_cast<double>(j + 1)},
                                       {"modulus", mod},
                                       {"newton", 0.0}}};
            }
        }
        rep.details.push_back({"min |dh| axis " + std::to_string(j + 1), min_mod, tol::kNonvanishing});
        if (rep.witness) break;

        // Polish the smallest samples towards the zero set of dh/dz_j.
        const std::size_t starts = std::min(kNewtonStarts, moduli.size());
        std::partial_sort(moduli.begin(), moduli.begin() + static_cast<std::ptrdiff_t>(starts),
                          moduli.end());
        for (std::size_t s = 0; s < starts && !rep.witness; ++s) {
            std::vector<cplx> z(points[moduli[s].second].coords().begin(),
                                points[moduli[s].second].coords().end());
            for (unsigned it = 0; it < kNewtonIterations; ++it) {
                const ComplexPoint p(z);
                const cplx value = evaluate(dj, p);
                if (std::abs(value) <= 1e-15) break;
                double norm2 = 0.0;
                std::vector<cplx> gk(n);
                for (std::size_t k = 0; k < n; ++k) {
                    gk[k] = evaluate(grad[k], p);
                    norm2 += std::norm(gk[k]);
                }
                if (norm2 == 0.0) break;
                for (std::size_t k = 0; k < n; ++k) z[k] -= value * std::conj(gk[k]) / norm2;
                if (ComplexPoint(z).sup_norm() > 2.0) break;
            }
            const ComplexPoint root(z);
            const double mod = std::abs(evaluate(dj, root));
            if (mod <= tol::kNonvanishing && root.sup_norm() < 1.0 - tol::kSampled) {
                rep.witness = Witness{root,
                                      {{"axis", static_cast<double>(j + 1)},
                                       {"modulus", mod},
                                       {"newton", 1.0}}};
            }
        }
    }
    rep.holds = rep.witness ? Holds::Fail : Holds::Pass;
    if (rep.holds == Holds::Pass) rep.notes.emplace_back("PASS is sampled evidence only");
    return rep;
}

std::vector<ComplexPoint> symmetric_pairs(std::span<const cplx> centres,
                                          std::span<const double> offsets, std::size_t directions,
                                          double radius, double min_separation) {
    std::vector<ComplexPoint> pts;
    for (const auto& c : centres) {
        for (std::size_t d = 0; d < directions; ++d) {
            const double angle = std::numbers::pi * static_cast<double>(d) / static_cast<double>(directions);
            for (double r : offsets) {
                const cplx u = std::polar(r, angle);
                const cplx z = c + u, w = c - u;
                if (std::abs(z) < radius && std::abs(w) < radius && std::abs(z - w) > min_separation) {
                    pts.push_back(ComplexPoint{z});
                    pts.push_back(ComplexPoint{w});
                }
            }
        }
    }
    return pts;
}

} // namespace phm
