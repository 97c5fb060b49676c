#pragma once

// Independent reference implementations and fixture generators for the
// tests. Nothing here calls the library's evaluation, differentiation or
// transform code; only the data types are shared.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "phm/phm.hpp"

namespace phm::test {

using Exps = std::vector<unsigned>;
using Dense = std::map<Exps, cplx>;

inline Dense to_dense(const PolySeries& s) {
    Dense d;
    for (const auto& t : s.terms()) d[t.alpha.exponents()] += t.coeff;
    return d;
}

// Nested Horner evaluation: p(z) = sum_e z_axis^e p_e(z_{axis+1}, ...).
inline cplx horner(const Dense& terms, std::size_t axis, const std::vector<cplx>& z) {
    if (terms.empty()) return {0.0, 0.0};
    if (axis == z.size()) {
        cplx acc{0.0, 0.0};
        for (const auto& [e, c] : terms) acc += c;
        return acc;
    }
    std::map<unsigned, Dense> groups;
    for (const auto& [e, c] : terms) groups[e[axis]][e] = c;
    const unsigned top = groups.rbegin()->first;
    cplx acc{0.0, 0.0};
    for (unsigned e = top + 1; e-- > 0;) {
        acc *= z[axis];
        if (auto it = groups.find(e); it != groups.end()) acc += horner(it->second, axis + 1, z);
    }
    return acc;
}

inline cplx horner(const PolySeries& s, const ComplexPoint& z) {
    return horner(to_dense(s), 0, std::vector<cplx>(z.coords().begin(), z.coords().end()));
}

// Naive term-by-term evaluation with std::pow.
inline cplx naive_eval(const Dense& terms, const std::vector<cplx>& z) {
    cplx acc{0.0, 0.0};
    for (const auto& [e, c] : terms) {
        cplx m = c;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (e[j]) m *= std::pow(z[j], static_cast<int>(e[j]));
        acc += m;
    }
    return acc;
}

// Central difference along the real direction of axis j (holomorphic s).
inline cplx central_difference(const PolySeries& s, const ComplexPoint& z, std::size_t j,
                               double step = 1e-5) {
    std::vector<cplx> plus(z.coords().begin(), z.coords().end()), minus = plus;
    plus[j] += step;
    minus[j] -= step;
    return (horner(s, ComplexPoint(plus)) - horner(s, ComplexPoint(minus))) / (2.0 * step);
}

// Second partial of the dense coefficient map.
inline Dense dense_second_partial(const Dense& d, std::size_t j, std::size_t k) {
    Dense out;
    for (const auto& [key, coeff] : d) {
        Exps e = key;
        cplx c = coeff;
        if (e[j] == 0) continue;
        c *= static_cast<double>(e[j]);
        --e[j];
        if (e[k] == 0) continue;
        c *= static_cast<double>(e[k]);
        --e[k];
        out[e] += c;
    }
    return out;
}

// Lambda by its literal triple sum over (l, j, k).
inline double lambda_oracle(const PolySeries& h, const PolySeries& g, const ComplexPoint& z) {
    const std::size_t n = z.size();
    const std::vector<cplx> zz(z.coords().begin(), z.coords().end());
    const Dense dh = to_dense(h), dg = to_dense(g);
    double total = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                total += std::abs(zz[l] * naive_eval(dense_second_partial(dh, j, k), zz));
                total += std::abs(zz[l] * naive_eval(dense_second_partial(dg, j, k), zz));
            }
        }
    }
    return total;
}

inline double lambda_oracle(const PluriharmonicMap& f, const ComplexPoint& z) {
    return lambda_oracle(f.h(), f.g(), z);
}

// sum_{|alpha| >= 2} n |alpha| (|alpha| - 1) |c_alpha|, written out directly.
inline double majorant_oracle(const PolySeries& s) {
    double total = 0.0;
    for (const auto& t : s.terms()) {
        const double m = t.alpha.degree();
        if (m >= 2) total += static_cast<double>(s.dim()) * m * (m - 1.0) * std::abs(t.coeff);
    }
    return total;
}

// Multi-indices of degree m in n variables by exhaustive search over
// [0, m]^n, in lexicographically descending order.
inline std::vector<Exps> brute_enumerate(std::size_t n, unsigned m) {
    std::vector<Exps> out;
    Exps e(n, 0);
    while (true) {
        unsigned sum = 0;
        for (auto x : e) sum += x;
        if (sum == m) out.push_back(e);
        std::size_t j = 0;
        while (j < n && e[j] == m) e[j++] = 0;
        if (j == n) break;
        ++e[j];
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// a_alpha by direct summation over the N^n torus lattice.
inline cplx direct_dft(const PolySeries& s, double r, std::size_t N, const Exps& alpha) {
    const std::size_t n = s.dim();
    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= N;
    const Dense d = to_dense(s);
    cplx acc{0.0, 0.0};
    for (std::size_t p = 0; p < total; ++p) {
        std::size_t q = p;
        std::vector<cplx> z(n);
        double phase = 0.0;
        for (std::size_t j = n; j-- > 0;) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(q % N) / static_cast<double>(N);
            q /= N;
            z[j] = std::polar(r, theta);
            phase += alpha[j] * theta;
        }
        acc += naive_eval(d, z) * std::polar(1.0, -phase);
    }
    unsigned deg = 0;
    for (auto a : alpha) deg += a;
    return acc / static_cast<double>(total) / std::pow(r, static_cast<double>(deg));
}

// First pair (i < j) with sup distance > eta and image gap < delta.
struct PairOracle {
    bool collision = false;
    std::size_t i = 0, j = 0;
    double min_gap = INFINITY;
};

inline PairOracle pairwise_oracle(const std::vector<ComplexPoint>& pts, const std::vector<cplx>& vals,
                                  double delta, double eta) {
    PairOracle out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double sep = 0.0;
            for (std::size_t k = 0; k < pts[i].size(); ++k)
                sep = std::max(sep, std::abs(pts[i][k] - pts[j][k]));
            if (sep <= eta) continue;
            const double gap = std::abs(vals[i] - vals[j]);
            out.min_gap = std::min(out.min_gap, gap);
            if (gap < delta && !out.collision) {
                out.collision = true;
                out.i = i;
                out.j = j;
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ generators

inline cplx random_unit_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline ComplexPoint random_point(std::size_t n, std::mt19937_64& rng, double radius = 0.95) {
    std::vector<cplx> z(n);
    for (auto& c : z) c = radius * random_unit_disk(rng);
    return ComplexPoint(std::move(z));
}

// Random series with each multi-index of degree lo..D present with
// probability `density`.
inline PolySeries random_series(std::size_t n, unsigned D, std::mt19937_64& rng, unsigned lo = 0,
                                double density = 0.6) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Term> terms;
    for (unsigned m = lo; m <= D; ++m) {
        for (auto& alpha : enumerate(n, m)) {
            if (u(rng) < density) terms.push_back({alpha, random_unit_disk(rng)});
        }
    }
    return PolySeries(n, D, std::move(terms));
}

inline PolySeries scaled(const PolySeries& s, double c) {
    std::vector<Term> terms(s.terms());
    for (auto& t : terms) t.coeff *= c;
    return PolySeries(s.dim(), s.degree_cap(), std::move(terms));
}

inline PolySeries plus(const PolySeries& a, const PolySeries& b) {
    const std::vector<PolySeries> parts{a, b};
    const std::vector<cplx> w{1.0, 1.0};
    return PolySeries::linear_combination(parts, w);
}

// H_n^0-normalized map with random tails of degree 2..D rescaled so the
// coefficient majorant equals `target` exactly (up to rounding).
inline PluriharmonicMap random_certified_map(std::size_t n, unsigned D, double target,
                                             std::mt19937_64& rng, bool with_g = true) {
    PolySeries th = random_series(n, D, rng, 2);
    PolySeries tg = with_g ? random_series(n, D, rng, 2) : PolySeries(n, D);
    if (th.is_zero() && tg.is_zero()) th = PolySeries(n, D, {{MultiIndex::zero(n).raised(0).raised(0), 1.0}});
    const double total = majorant_oracle(th) + majorant_oracle(tg);
    const double c = target / total;
    return PluriharmonicMap(plus(identity_part(n, D), scaled(th, c)), scaled(tg, c));
}

inline std::vector<double> random_weights(std::size_t k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> w(k);
    double sum = 0.0;
    for (auto& x : w) sum += (x = u(rng));
    double partial = 0.0;
    for (std::size_t i = 0; i + 1 < k; ++i) partial += (w[i] /= sum);
    w.back() = 1.0 - partial;
    return w;
}

inline PolySeries series_from(std::size_t n, unsigned D, std::vector<std::pair<Exps, cplx>> terms) {
    std::vector<Term> out;
    for (auto& [e, c] : terms) out.push_back({MultiIndex(std::move(e)), c});
    return PolySeries(n, D, std::move(out));
}

} // namespace phm::test
