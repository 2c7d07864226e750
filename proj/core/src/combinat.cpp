#include "trimeval/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace trimeval {

namespace {

Count checked_add(Count a, Count b) {
    Count s = 0;
    if (__builtin_add_overflow(a, b, &s) || s >= kCountLimit) {
        throw CapacityError("extended binomial count exceeds 2^63");
    }
    return s;
}

void require_params(int n, int d) {
    if (n < 0) throw UsageError("variable count must be non-negative, got " + std::to_string(n));
    if (d < 1) throw UsageError("individual degree must be at least 1, got " + std::to_string(d));
}

} // namespace

EbcTable::EbcTable(int n_max, int d, int k_max) : n_max_(n_max), d_(d) {
    require_params(n_max, d);
    k_max_ = std::clamp(k_max, 0, n_max * d);
    const std::size_t cells = static_cast<std::size_t>(n_max_ + 1) * static_cast<std::size_t>(k_max_ + 1);
    exact_.assign(cells, 0);
    cumulative_.assign(cells, 0);

    exact_[cell(0, 0)] = 1;
    for (int m = 1; m <= n_max_; ++m) {
        for (int k = 0; k <= k_max_; ++k) {
            Count s = 0;
            for (int j = 0; j <= d_ && j <= k; ++j) s = checked_add(s, exact_[cell(m - 1, k - j)]);
            exact_[cell(m, k)] = s;
        }
    }
    for (int m = 0; m <= n_max_; ++m) {
        Count run = 0;
        for (int k = 0; k <= k_max_; ++k) {
            run = checked_add(run, exact_[cell(m, k)]);
            cumulative_[cell(m, k)] = run;
        }
    }
}

int EbcTable::clamp_budget(int m, int k) const {
    if (m < 0 || m > n_max_) {
        throw UsageError("variable count " + std::to_string(m) + " outside table range [0, " +
                         std::to_string(n_max_) + "]");
    }
    k = std::min(k, m * d_);
    if (k > k_max_) {
        throw UsageError("budget " + std::to_string(k) + " outside table range");
    }
    return k;
}

Count EbcTable::exact(int m, int k) const {
    if (k < 0 || k > m * d_) {
        clamp_budget(m, 0);
        return 0;
    }
    return exact_[cell(m, clamp_budget(m, k))];
}

Count EbcTable::cumulative(int m, int k) const {
    if (k < 0) {
        clamp_budget(m, 0);
        return 0;
    }
    return cumulative_[cell(m, clamp_budget(m, k))];
}

Count ebc(int n, int k, int d) {
    require_params(n, d);
    if (k < 0 || k > n * d) return 0;
    return EbcTable(n, d, k).exact(n, k);
}

Count ebc_cum(int n, int budget, int d) {
    require_params(n, d);
    if (budget < 0) return 0;
    return EbcTable(n, d, budget).cumulative(n, budget);
}

int TrimmedIndex::sum() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

TrimmedCursor::TrimmedCursor(int n, int d, int budget)
    : d_(d), budget_(budget), valid_(budget >= 0), exps_(static_cast<std::size_t>(n), 0) {
    require_params(n, d);
}

void TrimmedCursor::next() {
    for (int& e : exps_) {
        if (e < d_ && sum_ < budget_) {
            ++e;
            ++sum_;
            return;
        }
        sum_ -= e;
        e = 0;
    }
    valid_ = false;
}

std::vector<TrimmedIndex> enumerate_trimmed(int n, int d, int budget) {
    std::vector<TrimmedIndex> out;
    if (budget >= 0) out.reserve(static_cast<std::size_t>(ebc_cum(n, budget, d)));
    for (TrimmedCursor c(n, d, budget); c.valid(); c.next()) {
        out.emplace_back(std::vector<int>(c.exponents().begin(), c.exponents().end()));
    }
    return out;
}

Count rank(const TrimmedIndex& index, int budget, const EbcTable& table) {
    const int n = index.size();
    const int d = table.d();
    for (int i = 0; i < n; ++i) {
        if (index[i] < 0 || index[i] > d) {
            throw UsageError("exponent " + std::to_string(index[i]) + " of variable " +
                             std::to_string(i + 1) + " outside [0, " + std::to_string(d) + "]");
        }
    }
    if (index.sum() > budget) {
        throw UsageError("index total degree " + std::to_string(index.sum()) + " exceeds budget " +
                         std::to_string(budget));
    }
    Count r = 0;
    for (int m = n; m >= 1; --m) {
        const int top = index[m - 1];
        for (int i = 0; i < top; ++i) r += table.cumulative(m - 1, budget - i);
        budget -= top;
    }
    return r;
}

Count rank(const TrimmedIndex& index, int n, int d, int budget) {
    if (index.size() != n) {
        throw UsageError("index has " + std::to_string(index.size()) + " coordinates, expected " +
                         std::to_string(n));
    }
    return rank(index, budget, EbcTable(n, d, std::max(budget, 0)));
}

TrimmedIndex unrank(Count position, int n, int budget, const EbcTable& table) {
    if (budget < 0 || position >= table.cumulative(n, budget)) {
        throw UsageError("position " + std::to_string(position) + " out of range");
    }
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int m = n; m >= 1; --m) {
        int j = 0;
        for (;;) {
            const Count block = table.cumulative(m - 1, budget - j);
            if (position < block) break;
            position -= block;
            ++j;
        }
        e[static_cast<std::size_t>(m - 1)] = j;
        budget -= j;
    }
    return TrimmedIndex(std::move(e));
}

TrimmedIndex unrank(Count position, int n, int d, int budget) {
    require_params(n, d);
    return unrank(position, n, budget, EbcTable(n, d, std::max(budget, 0)));
}

} // namespace trimeval
