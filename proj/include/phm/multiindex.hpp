#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace phm {

/// Exponent vector alpha in N^n. The degree |alpha| is the entry sum.
///
/// Ordering is graded lexicographic: lower degree first; within one degree
/// the index with the larger leading exponent comes first, so for n = 2 the
/// degree-2 block reads (2,0), (1,1), (0,2). Every per-degree slice of a
/// sorted coefficient table is therefore a contiguous range.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents);
    MultiIndex(std::initializer_list<unsigned> exponents);

    /// The zero index of dimension n.
    static MultiIndex zero(std::size_t n);
    /// The unit index e_axis of dimension n (axis is 0-based).
    static MultiIndex unit(std::size_t n, std::size_t axis);

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t j) const { return exps_[j]; }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    /// alpha + e_axis.
    MultiIndex raised(std::size_t axis) const;
    /// alpha - e_axis; requires alpha[axis] > 0.
    MultiIndex lowered(std::size_t axis) const;

    MultiIndex operator+(const MultiIndex& other) const;

    bool operator==(const MultiIndex& other) const = default;
    std::strong_ordering operator<=>(const MultiIndex& other) const;

    /// Renders as an integer array, e.g. "[1,0,2]".
    std::string to_string() const;

private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// All multi-indices of dimension n and degree m, in increasing graded-lex
/// order. Requires n >= 1.
std::vector<MultiIndex> enumerate(std::size_t n, unsigned m);

/// All multi-indices of dimension n and degree <= max_degree, graded-lex.
std::vector<MultiIndex> enumerate_up_to(std::size_t n, unsigned max_degree);

/// Number of monomials of degree m in n variables, C(m+n-1, n-1).
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t monomial_count(std::size_t n, unsigned m);

/// Binomial coefficient C(top, k) with overflow checking.
std::uint64_t binomial(std::uint64_t top, std::uint64_t k);

} // namespace phm
