#include "phm/extraction.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "phm/errors.hpp"
#include "phm/functionals.hpp"
#include "phm/sampling.hpp"

namespace phm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// exp(sign * 2 pi i k / N) for k = 0..N-1.
std::vector<cplx> roots_of_unity(std::size_t N, double sign) {
    std::vector<cplx> w(N);
    for (std::size_t k = 0; k < N; ++k)
        w[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) / static_cast<double>(N));
    return w;
}

cplx pairwise_sum_range(const cplx* v, std::size_t count) {
    if (count <= 8) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < count; ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = count / 2;
    return pairwise_sum_range(v, half) + pairwise_sum_range(v + half, count - half);
}

std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

} // namespace

cplx pairwise_sum(std::span<const cplx> values) { return pairwise_sum_range(values.data(), values.size()); }

CoefficientTable dft_coefficients(const PolySeries& s, double r, std::size_t samples_per_dim,
                                  unsigned m_max) {
    if (!(r > 0.0 && r < 1.0)) throw UsageError("dft_coefficients: radius must lie in (0, 1)");
    if (samples_per_dim <= m_max)
        throw UsageError("dft_coefficients: samples_per_dim (" + std::to_string(samples_per_dim) +
                         ") must exceed m_max (" + std::to_string(m_max) + ")");
    const std::size_t n = s.dim();
    const std::size_t N = samples_per_dim;
    const std::size_t K = m_max + 1;

    // Samples on the torus, axis 0 slowest.
    const TorusGrid grid(n, r, N);
    std::vector<cplx> data(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) data[i] = evaluate(s, grid.point(i));

    // Separable transform: contract one axis at a time, keeping frequencies
    // 0..m_max on the axes already processed.
    const auto twiddle = roots_of_unity(N, -1.0);
    std::vector<std::size_t> dims(n, N);
    std::vector<cplx> column(N);
    for (std::size_t axis = 0; axis < n; ++axis) {
        std::size_t outer = 1, inner = 1;
        for (std::size_t a = 0; a < axis; ++a) outer *= dims[a];
        for (std::size_t a = axis + 1; a < n; ++a) inner *= dims[a];
        std::vector<cplx> next(outer * K * inner);
        for (std::size_t o = 0; o < outer; ++o) {
            for (std::size_t in = 0; in < inner; ++in) {
                for (std::size_t freq = 0; freq < K; ++freq) {
                    for (std::size_t k = 0; k < N; ++k)
                        column[k] = data[(o * N + k) * inner + in] * twiddle[(k * freq) % N];
                    next[(o * K + freq) * inner + in] =
                        pairwise_sum(column) / static_cast<double>(N);
                }
            }
        }
        data = std::move(next);
        dims[axis] = K;
    }

    CoefficientTable table;
    for (auto& alpha : enumerate_up_to(n, m_max)) {
        std::size_t flat = 0;
        for (std::size_t j = 0; j < n; ++j) flat = flat * K + alpha[j];
        const cplx c = data[flat] / std::pow(r, static_cast<double>(alpha.degree()));
        table.push_back({std::move(alpha), c});
    }
    return table;
}

CoefficientTable dft_coefficients(const PolySeries& s, double r, unsigned m_max) {
    return dft_coefficients(s, r, 2 * (static_cast<std::size_t>(m_max) + 1), m_max);
}

OrthogonalityReport orthogonality_selftest(std::size_t n, unsigned nu_max, std::size_t samples_per_dim) {
    if (n == 0) throw UsageError("orthogonality_selftest: dimension must be >= 1");
    if (samples_per_dim <= nu_max)
        throw UsageError("orthogonality_selftest: samples_per_dim must exceed nu_max");
    const std::size_t N = samples_per_dim;
    const auto roots = roots_of_unity(N, 1.0);
    const std::size_t points = ipow(N, n);
    const std::size_t span = 2 * nu_max + 1;

    OrthogonalityReport rep;
    rep.n = n;
    rep.nu_max = nu_max;
    rep.samples_per_dim = N;
    std::vector<cplx> terms(points);
    std::vector<int> nu(n);
    std::vector<std::size_t> k(n);
    for (std::size_t code = 0; code < ipow(span, n); ++code) {
        std::size_t c = code;
        bool zero = true;
        for (std::size_t j = n; j-- > 0;) {
            nu[j] = static_cast<int>(c % span) - static_cast<int>(nu_max);
            c /= span;
            zero = zero && nu[j] == 0;
        }
        for (std::size_t p = 0; p < points; ++p) {
            std::size_t q = p;
            long long phase = 0;
            for (std::size_t j = n; j-- > 0;) {
                phase += static_cast<long long>(nu[j]) * static_cast<long long>(q % N);
                q /= N;
            }
            const long long Nl = static_cast<long long>(N);
            terms[p] = roots[static_cast<std::size_t>(((phase % Nl) + Nl) % Nl)];
        }
        const cplx avg = pairwise_sum(terms) / static_cast<double>(points);
        ++rep.frequencies_checked;
        if (zero) {
            rep.zero_frequency_average = avg;
        } else if (std::abs(avg) >= rep.max_nonzero_modulus) {
            rep.max_nonzero_modulus = std::abs(avg);
            rep.worst_nu = nu;
        }
    }
    rep.passed = std::abs(rep.zero_frequency_average - 1.0) <= tol::kAlgebraic &&
                 rep.max_nonzero_modulus < tol::kAlgebraic;
    return rep;
}

CriterionReport schwarz_check(const PolySeries& phi, double M, std::span<const double> radii,
                              std::size_t angles_per_dim) {
    if (!(M > 0.0)) throw UsageError("schwarz_check: M must be positive");
    const std::size_t n = phi.dim();
    CriterionReport rep;
    rep.name = "schwarz_check";

    if (certified_upper_bound(phi) > M + tol::kAlgebraic) {
        const auto member = holo_membership(phi, M, TorusGrid::standard(n));
        if (member.verdict == MembershipVerdict::NotMember) {
            rep.holds = Holds::Inconclusive;
            rep.notes.emplace_back("phi is not in B_n(M) on the sample");
            return rep;
        }
        rep.notes.emplace_back("membership in B_n(M) is sampled, not certified");
    }

    std::vector<PolySeries> hess; // row-major j, k
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) hess.push_back(second_partial(phi, j, k));

    for (double r : radii) {
        const TorusGrid grid(n, r, angles_per_dim);
        double omega_ratio = 0.0, aggregate_ratio = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const ComplexPoint z = grid.point(i);
            const double norm = z.sup_norm();
            const PointPowers powers(z, phi.degree_cap());
            std::vector<double> column(n, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double term = std::abs(z[j] * evaluate(hess[j * n + k], powers));
                    const double omega = term / M;
                    column[k] += term;
                    omega_ratio = std::max(omega_ratio, omega / norm);
                    if (omega > norm + tol::kSampled && !rep.witness) {
                        rep.witness = Witness{z,
                                              {{"j", static_cast<double>(j + 1)},
                                               {"k", static_cast<double>(k + 1)},
                                               {"abs_omega", omega},
                                               {"sup_norm", norm}}};
                    }
                }
            }
            for (std::size_t k = 0; k < n; ++k) {
                const double cap = static_cast<double>(n) * M * norm;
                aggregate_ratio = std::max(aggregate_ratio, column[k] / cap);
                if (column[k] > cap + tol::kSampled && !rep.witness) {
                    rep.witness = Witness{z,
                                          {{"k", static_cast<double>(k + 1)},
                                           {"aggregate", column[k]},
                                           {"bound", cap}}};
                }
            }
        }
        char label[64];
        std::snprintf(label, sizeof label, "r=%.2f max |omega|/||z||", r);
        rep.details.push_back({label, omega_ratio, 1.0});
        std::snprintf(label, sizeof label, "r=%.2f max aggregate/(nM||z||)", r);
        rep.details.push_back({label, aggregate_ratio, 1.0});
    }
    rep.holds = rep.witness ? Holds::Fail : Holds::Pass;
    return rep;
}

CriterionReport schwarz_check(const PolySeries& phi, double M) {
    static constexpr double kRadii[] = {0.25, 0.5, 0.75, 0.99};
    return schwarz_check(phi, M, kRadii, default_angles(phi.dim()));
}

} // namespace phm
