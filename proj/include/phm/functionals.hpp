#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "phm/sampling.hpp"
#include "phm/series.hpp"

namespace phm {

/// Evaluates the class functional
///
///   Lambda_f(z) = sum_{l,j,k} ( |z_l d^2h/dz_j dz_k (z)| + |z_l d^2g/dz_j dz_k (z)| )
///
/// with the second partials of h and g computed once and cached.
/// Since |z_l w| = |z_l| |w|, the triple sum is evaluated as
/// (sum_l |z_l|) * sum_{j,k} (|h_jk(z)| + |g_jk(z)|).
class LambdaFunctional {
public:
    explicit LambdaFunctional(const PluriharmonicMap& f);
    /// Holomorphic variant (g = 0), the functional defining B_n(M).
    explicit LambdaFunctional(const PolySeries& phi);

    std::size_t dim() const noexcept { return n_; }
    double operator()(const ComplexPoint& z) const;

private:
    void cache(const PolySeries& s, std::vector<PolySeries>& out);

    std::size_t n_;
    unsigned cap_;
    // Upper triangle j <= k, row-major; off-diagonal entries count twice.
    std::vector<PolySeries> h2_;
    std::vector<PolySeries> g2_;
};

double lambda_value(const PluriharmonicMap& f, const ComplexPoint& z);
double holo_lambda_value(const PolySeries& phi, const ComplexPoint& z);

struct SupEstimate {
    double value = 0.0;
    ComplexPoint witness;
    std::vector<double> witness_angles;
};

/// Lower bound on sup Lambda over the polydisk of the grid radius: the
/// torus-lattice maximum improved by golden-section refinement of each
/// angle around the best lattice point. Lambda is a sum of moduli of
/// holomorphic functions, so its maximum over the closed polydisk of radius
/// r sits on the distinguished boundary and grows with r.
SupEstimate sup_estimate(const LambdaFunctional& functional, const TorusGrid& grid,
                         unsigned refine_steps = 3);
SupEstimate sup_estimate(const PluriharmonicMap& f, const TorusGrid& grid, unsigned refine_steps = 3);

/// sum_{m >= 2} sum_{|alpha| = m} n m (m - 1) (|a_alpha| + |b_alpha|),
/// a rigorous upper bound for sup Lambda on the open unit polydisk.
double certified_upper_bound(const PluriharmonicMap& f);
double certified_upper_bound(const PolySeries& phi);

enum class MembershipVerdict { CertifiedMember, LikelyMember, NotMember };

std::string_view to_string(MembershipVerdict v);

struct MembershipReport {
    double M = 0.0;
    double sampled_sup = 0.0;
    double certified_upper = 0.0;
    ComplexPoint witness;
    std::vector<double> witness_angles;
    bool normalized = true; // f lies in H_n^0
    MembershipVerdict verdict = MembershipVerdict::LikelyMember;
    double margin = 0.0; // M - sampled_sup
};

/// Membership of f in B_{H_n^0}(M). CERTIFIED_MEMBER when the coefficient
/// majorant is <= M; NOT_MEMBER when the sampled supremum exceeds M + 1e-9
/// or f is not H_n^0-normalized; LIKELY_MEMBER otherwise.
/// Throws UsageError if M <= 0 or the grid dimension differs from f.
MembershipReport membership(const PluriharmonicMap& f, double M, const TorusGrid& grid,
                            unsigned refine_steps = 3);

/// Same decision for a holomorphic phi in B_n(M) (normalization f(0) = 0,
/// grad f(0) = (1, ..., 1)).
MembershipReport holo_membership(const PolySeries& phi, double M, const TorusGrid& grid,
                                 unsigned refine_steps = 3);

} // namespace phm
