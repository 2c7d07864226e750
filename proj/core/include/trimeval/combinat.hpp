#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trimeval/error.hpp"

namespace trimeval {

using Count = std::uint64_t;

/// Counts at or above this bound are rejected.
inline constexpr Count kCountLimit = Count{1} << 63;

/// Memoized extended binomial coefficients.
///
/// exact(m, k) is the number of vectors in {0..d}^m summing to k, and
/// cumulative(m, k) the number summing to at most k. Both are filled via the
/// extended Pascal recurrence
///     exact(m, k) = sum_{j=0}^{d} exact(m-1, k-j)
/// for 0 <= m <= n_max. Budgets above m*d are clamped, budgets below zero give 0.
/// Construction throws CapacityError if any stored cumulative count reaches 2^63.
class EbcTable {
public:
    EbcTable(int n_max, int d, int k_max);

    int n_max() const noexcept { return n_max_; }
    int d() const noexcept { return d_; }
    int k_max() const noexcept { return k_max_; }

    Count exact(int m, int k) const;
    Count cumulative(int m, int k) const;

private:
    int clamp_budget(int m, int k) const;
    std::size_t cell(int m, int k) const noexcept {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(k_max_ + 1) +
               static_cast<std::size_t>(k);
    }

    int n_max_;
    int d_;
    int k_max_; // largest stored budget, min(requested, n_max * d)
    std::vector<Count> exact_;
    std::vector<Count> cumulative_;
};

/// Number of l in {0..d}^n with |l| == k.
Count ebc(int n, int k, int d);
/// Number of l in {0..d}^n with |l| <= budget; 0 for a negative budget.
Count ebc_cum(int n, int budget, int d);

/// Exponent vector l in {0..d}^n. Indexes both monomials X^l and grid points Z_l.
struct TrimmedIndex {
    std::vector<int> exponents;

    TrimmedIndex() = default;
    explicit TrimmedIndex(std::vector<int> e) : exponents(std::move(e)) {}

    int size() const noexcept { return static_cast<int>(exponents.size()); }
    int sum() const noexcept;
    int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

    friend bool operator==(const TrimmedIndex&, const TrimmedIndex&) = default;
};

/// Walks {l in {0..d}^n : |l| <= budget} in canonical order: lexicographic
/// with the last coordinate most significant. The order is independent of
/// the budget, so a smaller budget enumerates an order-preserving subsequence.
class TrimmedCursor {
public:
    TrimmedCursor(int n, int d, int budget);

    bool valid() const noexcept { return valid_; }
    std::span<const int> exponents() const noexcept { return exps_; }
    int sum() const noexcept { return sum_; }
    void next();

private:
    int d_;
    int budget_;
    int sum_ = 0;
    bool valid_;
    std::vector<int> exps_;
};

std::vector<TrimmedIndex> enumerate_trimmed(int n, int d, int budget);

/// Position of `index` in enumerate_trimmed(n, d, budget).
Count rank(const TrimmedIndex& index, int n, int d, int budget);
Count rank(const TrimmedIndex& index, int budget, const EbcTable& table);

/// Inverse of rank.
TrimmedIndex unrank(Count position, int n, int d, int budget);
TrimmedIndex unrank(Count position, int n, int budget, const EbcTable& table);

} // namespace trimeval
