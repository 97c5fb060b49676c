#include "phm/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "phm/errors.hpp"

namespace phm {

double ComplexPoint::sup_norm() const {
    double m = 0.0;
    for (const auto& c : z_) m = std::max(m, std::abs(c));
    return m;
}

double ComplexPoint::abs_sum() const {
    double s = 0.0;
    for (const auto& c : z_) s += std::abs(c);
    return s;
}

// ---------------------------------------------------------------- PolySeries

PolySeries::PolySeries(std::size_t n, unsigned degree_cap) : n_(n), cap_(degree_cap) {
    if (n == 0) throw UsageError("PolySeries: dimension must be >= 1");
}

PolySeries::PolySeries(std::size_t n, unsigned degree_cap, std::vector<Term> terms)
    : PolySeries(n, degree_cap) {
    for (const auto& t : terms) {
        if (t.alpha.size() != n)
            throw UsageError("PolySeries: multi-index " + t.alpha.to_string() +
                             " has wrong dimension (expected " + std::to_string(n) + ")");
        if (t.alpha.degree() > degree_cap)
            throw UsageError("PolySeries: multi-index " + t.alpha.to_string() +
                             " exceeds degree cap " + std::to_string(degree_cap));
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.alpha < b.alpha; });
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].alpha == terms[i - 1].alpha)
            throw UsageError("PolySeries: duplicate multi-index " + terms[i].alpha.to_string());
    }
    std::erase_if(terms, [](const Term& t) { return t.coeff == cplx{0.0, 0.0}; });
    terms_ = std::move(terms);
}

cplx PolySeries::coeff(const MultiIndex& alpha) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), alpha,
                               [](const Term& t, const MultiIndex& a) { return t.alpha < a; });
    if (it != terms_.end() && it->alpha == alpha) return it->coeff;
    return {0.0, 0.0};
}

std::span<const Term> PolySeries::homogeneous_part(unsigned m) const {
    auto lo = std::partition_point(terms_.begin(), terms_.end(),
                                   [m](const Term& t) { return t.alpha.degree() < m; });
    auto hi = std::partition_point(lo, terms_.end(),
                                   [m](const Term& t) { return t.alpha.degree() == m; });
    return {lo, hi};
}

PolySeries PolySeries::with_cap(unsigned degree_cap) const {
    if (!terms_.empty() && terms_.back().alpha.degree() > degree_cap)
        throw DegreeCapError("with_cap: stored term of degree " +
                             std::to_string(terms_.back().alpha.degree()) +
                             " does not fit cap " + std::to_string(degree_cap));
    PolySeries out(n_, degree_cap);
    out.terms_ = terms_;
    return out;
}

bool PolySeries::operator==(const PolySeries& other) const {
    if (n_ != other.n_ || cap_ != other.cap_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].alpha != other.terms_[i].alpha || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    }
    return true;
}

PolySeries PolySeries::linear_combination(std::span<const PolySeries> parts,
                                          std::span<const cplx> weights) {
    if (parts.empty()) throw UsageError("linear_combination: no series given");
    if (parts.size() != weights.size())
        throw UsageError("linear_combination: series and weight counts differ");
    const std::size_t n = parts.front().dim();
    const unsigned cap = parts.front().degree_cap();
    std::map<MultiIndex, cplx> acc;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        if (parts[s].dim() != n || parts[s].degree_cap() != cap)
            throw UsageError("linear_combination: series must share dimension and degree cap");
        for (const auto& t : parts[s].terms()) acc[t.alpha] += weights[s] * t.coeff;
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [alpha, c] : acc) terms.push_back({alpha, c});
    return PolySeries(n, cap, std::move(terms));
}

// ---------------------------------------------------------- PluriharmonicMap

PluriharmonicMap::PluriharmonicMap(PolySeries h, PolySeries g) : h_(std::move(h)), g_(std::move(g)) {
    if (h_.dim() != g_.dim() || h_.degree_cap() != g_.degree_cap())
        throw UsageError("PluriharmonicMap: h and g must share dimension and degree cap");
}

PluriharmonicMap PluriharmonicMap::holomorphic(PolySeries h) {
    PolySeries g(h.dim(), h.degree_cap());
    return PluriharmonicMap(std::move(h), std::move(g));
}

bool PluriharmonicMap::is_normalized(double tol) const {
    const std::size_t n = dim();
    const auto zero = MultiIndex::zero(n);
    if (std::abs(h_.coeff(zero)) > tol || std::abs(g_.coeff(zero)) > tol) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(h_.coeff(MultiIndex::unit(n, j)) - 1.0) > tol) return false;
    }
    return true;
}

bool PluriharmonicMap::is_normalized_h0(double tol) const {
    if (!is_normalized(tol)) return false;
    for (std::size_t j = 0; j < dim(); ++j) {
        if (std::abs(g_.coeff(MultiIndex::unit(dim(), j))) > tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------- evaluation

PointPowers::PointPowers(const ComplexPoint& z, unsigned max_degree)
    : n_(z.size()), max_degree_(max_degree), table_(z.size() * (max_degree + 1)) {
    for (std::size_t j = 0; j < n_; ++j) {
        cplx p{1.0, 0.0};
        for (unsigned k = 0; k <= max_degree; ++k) {
            table_[j * (max_degree + 1) + k] = p;
            p *= z[j];
        }
    }
}

cplx PointPowers::monomial(const MultiIndex& alpha) const {
    cplx p{1.0, 0.0};
    for (std::size_t j = 0; j < n_; ++j) {
        const unsigned e = alpha[j];
        if (e != 0) p *= table_[j * (max_degree_ + 1) + e];
    }
    return p;
}

cplx evaluate(const PolySeries& s, const PointPowers& powers) {
    if (powers.dim() != s.dim()) throw UsageError("evaluate: dimension mismatch");
    if (!s.terms().empty() && s.terms().back().alpha.degree() > powers.max_degree())
        throw UsageError("evaluate: power table too short for series");
    cplx acc{0.0, 0.0};
    for (const auto& t : s.terms()) acc += t.coeff * powers.monomial(t.alpha);
    return acc;
}

cplx evaluate(const PolySeries& s, const ComplexPoint& z) {
    if (z.size() != s.dim())
        throw UsageError("evaluate: point has " + std::to_string(z.size()) +
                         " coordinates, series has dimension " + std::to_string(s.dim()));
    return evaluate(s, PointPowers(z, s.degree_cap()));
}

cplx evaluate_map(const PluriharmonicMap& f, const ComplexPoint& z) {
    if (z.size() != f.dim()) throw UsageError("evaluate_map: dimension mismatch");
    const PointPowers powers(z, f.degree_cap());
    return evaluate(f.h(), powers) + std::conj(evaluate(f.g(), powers));
}

// ------------------------------------------------------------ differentiation

PolySeries partial(const PolySeries& s, std::size_t axis) {
    if (axis >= s.dim())
        throw UsageError("partial: axis " + std::to_string(axis) + " out of range for dimension " +
                         std::to_string(s.dim()));
    std::vector<Term> out;
    for (const auto& t : s.terms()) {
        const unsigned e = t.alpha[axis];
        if (e == 0) continue;
        out.push_back({t.alpha.lowered(axis), static_cast<double>(e) * t.coeff});
    }
    const unsigned cap = s.degree_cap() == 0 ? 0 : s.degree_cap() - 1;
    return PolySeries(s.dim(), cap, std::move(out));
}

PolySeries second_partial(const PolySeries& s, std::size_t j, std::size_t k) {
    if (j >= s.dim() || k >= s.dim()) throw UsageError("second_partial: axis out of range");
    // The integer factor alpha_j (alpha_k - [j == k]) is formed first so the
    // result is bitwise symmetric in (j, k).
    std::vector<Term> out;
    for (const auto& t : s.terms()) {
        const unsigned ej = t.alpha[j];
        const unsigned ek = t.alpha[k] - (j == k ? 1u : 0u);
        if (ej == 0 || t.alpha[k] == 0 || (j == k && ej < 2)) continue;
        const double factor = static_cast<double>(ej) * static_cast<double>(ek);
        out.push_back({t.alpha.lowered(j).lowered(k), factor * t.coeff});
    }
    const unsigned cap = s.degree_cap() < 2 ? 0 : s.degree_cap() - 2;
    return PolySeries(s.dim(), cap, std::move(out));
}

PolySeries multiply(const PolySeries& a, const PolySeries& b, unsigned result_cap) {
    if (a.dim() != b.dim()) throw UsageError("multiply: dimension mismatch");
    std::map<MultiIndex, cplx> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            MultiIndex alpha = ta.alpha + tb.alpha;
            if (alpha.degree() > result_cap)
                throw DegreeCapError("multiply: product term " + alpha.to_string() +
                                     " exceeds degree cap " + std::to_string(result_cap));
            acc[alpha] += ta.coeff * tb.coeff;
        }
    }
    std::vector<Term> terms;
    for (auto& [alpha, c] : acc) terms.push_back({alpha, c});
    return PolySeries(a.dim(), result_cap, std::move(terms));
}

// ---------------------------------------------------------------- combinations

PluriharmonicMap convex_combine(std::span<const PluriharmonicMap> maps,
                                std::span<const double> weights) {
    if (maps.empty()) throw UsageError("convex_combine: no maps given");
    if (maps.size() != weights.size())
        throw UsageError("convex_combine: map and weight counts differ");
    double total = 0.0;
    for (double t : weights) {
        if (!(t >= 0.0 && t <= 1.0)) throw UsageError("convex_combine: weight outside [0, 1]");
        total += t;
    }
    if (std::abs(total - 1.0) > tol::kWeightSum)
        throw UsageError("convex_combine: weights sum to " + std::to_string(total) + ", not 1");

    std::vector<PolySeries> hs, gs;
    std::vector<cplx> w;
    for (std::size_t s = 0; s < maps.size(); ++s) {
        hs.push_back(maps[s].h());
        gs.push_back(maps[s].g());
        w.emplace_back(weights[s], 0.0);
    }
    return PluriharmonicMap(PolySeries::linear_combination(hs, w),
                            PolySeries::linear_combination(gs, w));
}

// --------------------------------------------------------------- constructors

PolySeries identity_part(std::size_t n, unsigned degree_cap) {
    if (degree_cap < 1) throw UsageError("identity_part: degree cap must be >= 1");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back({MultiIndex::unit(n, j), {1.0, 0.0}});
    return PolySeries(n, degree_cap, std::move(terms));
}

PluriharmonicMap extremal_sharpness_map(std::size_t n, unsigned m, double M, SharpnessPart part) {
    if (n == 0) throw UsageError("extremal_sharpness_map: n must be >= 1");
    if (m < 2) throw UsageError("extremal_sharpness_map: m must be >= 2");
    if (!(M > 0.0)) throw UsageError("extremal_sharpness_map: M must be positive");
    const double nd = static_cast<double>(n);
    const double a = M / (nd * nd * m * (m - 1.0));
    std::vector<Term> tail;
    for (auto& alpha : enumerate(n, m)) tail.push_back({std::move(alpha), {a, 0.0}});

    PolySeries id = identity_part(n, m);
    if (part == SharpnessPart::Holomorphic) {
        std::vector<Term> terms = id.terms();
        terms.insert(terms.end(), tail.begin(), tail.end());
        return PluriharmonicMap::holomorphic(PolySeries(n, m, std::move(terms)));
    }
    return PluriharmonicMap(std::move(id), PolySeries(n, m, std::move(tail)));
}

PluriharmonicMap extremal_growth_map(std::size_t n, double M, int sign) {
    if (n == 0) throw UsageError("extremal_growth_map: n must be >= 1");
    if (!(M > 0.0)) throw UsageError("extremal_growth_map: M must be positive");
    if (sign != 1 && sign != -1) throw UsageError("extremal_growth_map: sign must be +1 or -1");
    const PolySeries linear = identity_part(n, 1);
    const PolySeries square = multiply(linear, linear, 2);
    const std::vector<PolySeries> parts{identity_part(n, 2), square};
    const std::vector<cplx> weights{{1.0, 0.0}, {sign * M / 2.0, 0.0}};
    return PluriharmonicMap::holomorphic(PolySeries::linear_combination(parts, weights));
}

} // namespace phm
