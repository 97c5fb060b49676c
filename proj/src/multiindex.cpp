#include "phm/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "phm/errors.hpp"

namespace phm {

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

MultiIndex::MultiIndex(std::initializer_list<unsigned> exponents)
    : MultiIndex(std::vector<unsigned>(exponents)) {}

MultiIndex MultiIndex::zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0u)); }

MultiIndex MultiIndex::unit(std::size_t n, std::size_t axis) {
    std::vector<unsigned> e(n, 0u);
    e.at(axis) = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::raised(std::size_t axis) const {
    auto e = exps_;
    ++e.at(axis);
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::lowered(std::size_t axis) const {
    auto e = exps_;
    if (e.at(axis) == 0) throw UsageError("MultiIndex::lowered: exponent already zero");
    --e[axis];
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (other.size() != size()) throw UsageError("MultiIndex: dimension mismatch");
    auto e = exps_;
    for (std::size_t j = 0; j < e.size(); ++j) e[j] += other.exps_[j];
    return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    if (auto c = exps_.size() <=> other.exps_.size(); c != 0) return c;
    // Within a degree the larger leading exponent sorts first.
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (exps_[j] != other.exps_[j])
            return exps_[j] > other.exps_[j] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < exps_.size(); ++j) os << (j ? "," : "") << exps_[j];
    os << ']';
    return os.str();
}

namespace {

void enumerate_rec(std::vector<unsigned>& cur, std::size_t pos, unsigned remaining,
                   std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        cur[pos] = k;
        enumerate_rec(cur, pos + 1, remaining - k, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate(std::size_t n, unsigned m) {
    if (n == 0) throw UsageError("enumerate: dimension must be >= 1");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(monomial_count(n, m)));
    std::vector<unsigned> cur(n, 0u);
    enumerate_rec(cur, 0, m, out);
    return out;
}

std::vector<MultiIndex> enumerate_up_to(std::size_t n, unsigned max_degree) {
    std::vector<MultiIndex> out;
    for (unsigned m = 0; m <= max_degree; ++m) {
        auto block = enumerate(n, m);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::uint64_t binomial(std::uint64_t top, std::uint64_t k) {
    if (k > top) return 0;
    k = std::min(k, top - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (top - k + i) / i is an integer; cancel the gcd first so
        // the only multiplication left is one that must fit.
        std::uint64_t num = top - k + i;
        std::uint64_t den = i;
        const std::uint64_t g1 = std::gcd(result, den);
        result /= g1;
        den /= g1;
        const std::uint64_t g2 = std::gcd(num, den);
        num /= g2;
        den /= g2;
        if (den != 1) throw std::logic_error("binomial: non-integral intermediate");
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(result, num, &next))
            throw std::overflow_error("binomial: result exceeds 64-bit range");
        result = next;
    }
    return result;
}

std::uint64_t monomial_count(std::size_t n, unsigned m) {
    if (n == 0) throw UsageError("monomial_count: dimension must be >= 1");
    std::uint64_t top = 0;
    if (__builtin_add_overflow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n - 1), &top))
        throw std::overflow_error("monomial_count: m + n - 1 exceeds 64-bit range");
    return binomial(top, n - 1);
}

} // namespace phm
