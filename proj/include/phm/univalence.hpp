#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "phm/criteria.hpp"
#include "phm/series.hpp"

namespace phm {

enum class InjectivityStatus { NoCollision, Collision };

std::string_view to_string(InjectivityStatus s);

struct CollisionPair {
    std::size_t i = 0;
    std::size_t j = 0;
    ComplexPoint z;
    ComplexPoint w;
    double image_gap = 0.0;
};

/// NO_COLLISION is evidence on the sample, not a proof of injectivity.
struct InjectivityVerdict {
    InjectivityStatus status = InjectivityStatus::NoCollision;
    std::optional<CollisionPair> pair;
    /// min |f(z) - f(w)| over tested pairs with ||z - w||_inf > eta.
    double min_image_gap = 0.0;
    std::size_t pairs_tested = 0;
};

/// Examines every unordered pair of sample points. COLLISION iff some pair
/// has ||z - w||_inf > eta and |f(z) - f(w)| < delta; the reported pair is
/// the first in scan order (i < j, lexicographic).
/// Throws UsageError for fewer than two points or non-positive delta, eta.
InjectivityVerdict injectivity_scan(const PluriharmonicMap& f, std::span<const ComplexPoint> points,
                                    double delta = 1e-9, double eta = 1e-3);

/// Same scan over precomputed values f(points[i]).
InjectivityVerdict injectivity_scan_values(std::span<const ComplexPoint> points,
                                           std::span<const cplx> values, double delta, double eta);

struct StableScanReport {
    std::vector<cplx> lambdas;
    /// Verdicts for f_lambda = h + lambda conj(g), one per lambda.
    std::vector<InjectivityVerdict> pluriharmonic;
    /// Verdicts for F_eps = h + eps g, eps running over the same set.
    std::vector<InjectivityVerdict> holomorphic;

    bool stable_pluriharmonic() const;
    bool stable_holomorphic() const;
    /// Whether "all f_lambda injective <=> all F_eps injective" holds on
    /// the sample.
    bool biconditional_holds() const { return stable_pluriharmonic() == stable_holomorphic(); }
};

/// Throws UsageError for a non-unimodular lambda.
StableScanReport stable_scan(const PluriharmonicMap& f, std::span<const cplx> lambdas,
                             std::span<const ComplexPoint> points, double delta = 1e-9,
                             double eta = 1e-3);

/// |dh/dz_j(z)| > 1e-12 on every axis at every sample point. Besides the
/// raw sample, a minimum-norm Newton iteration is started from the samples
/// of smallest modulus on each axis; a zero it reaches inside the open
/// polydisk is reported as the FAIL witness.
CriterionReport local_nonvanishing(const PluriharmonicMap& f, std::span<const ComplexPoint> points);

/// Pairs c +- u for each centre, u running over `offsets` moduli in
/// `directions` equally spaced directions, kept when both points lie in the
/// disk of the given radius and are more than `min_separation` apart (n = 1).
/// Sample points of this kind expose collisions z + w = 2c of z + c' z^2.
std::vector<ComplexPoint> symmetric_pairs(std::span<const cplx> centres,
                                          std::span<const double> offsets,
                                          std::size_t directions = 4, double radius = 0.99,
                                          double min_separation = 1e-3);

} // namespace phm
