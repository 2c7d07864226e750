#pragma once

// Block arithmetic on canonical-order coefficient and value vectors.
//
// For m variables and budget B the canonical layout of {l : |l| <= B} is
// d+1 consecutive blocks, block j holding the indices with l_m = j laid out
// recursively for m-1 variables and budget B-j.

#include <algorithm>
#include <span>

#include "trimeval/combinat.hpp"
#include "trimeval/field.hpp"

namespace trimeval::detail {

inline int effective_budget(int m, int d, int budget) noexcept { return std::min(budget, m * d); }

inline std::size_t block_size(const EbcTable& table, int m, int budget) {
    return static_cast<std::size_t>(table.cumulative(m, budget));
}

/// Calls f(dst[rank_dst(l)], src[rank_src(l)]) for every l in the source
/// layout (m variables, src_budget). Requires src_budget <= dst_budget.
template <typename Dst, typename Src, typename Fn>
void for_each_embedded(std::span<Dst> dst, int dst_budget, std::span<Src> src, int src_budget, int m,
                       const EbcTable& table, Fn&& f) {
    const int d = table.d();
    src_budget = effective_budget(m, d, src_budget);
    dst_budget = effective_budget(m, d, dst_budget);
    if (src_budget < 0) return;
    if (src_budget == dst_budget || m <= 1) {
        // identical layouts, or a univariate prefix
        for (std::size_t r = 0; r < src.size(); ++r) f(dst[r], src[r]);
        return;
    }
    std::size_t src_off = 0;
    std::size_t dst_off = 0;
    for (int j = 0; j <= std::min(d, src_budget); ++j) {
        const std::size_t s = block_size(table, m - 1, src_budget - j);
        const std::size_t t = block_size(table, m - 1, dst_budget - j);
        for_each_embedded(dst.subspan(dst_off, t), dst_budget - j, src.subspan(src_off, s), src_budget - j,
                          m - 1, table, f);
        src_off += s;
        dst_off += t;
    }
}

/// dst += c * src across layouts.
inline void embed_axpy(std::span<FieldElement> dst, int dst_budget, std::span<const FieldElement> src,
                       int src_budget, int m, const FieldElement& c, const EbcTable& table,
                       const FieldOps& ops) {
    for_each_embedded(dst, dst_budget, src, src_budget, m, table,
                      [&](FieldElement& y, const FieldElement& x) { ops.fma(y, c, x); });
}

} // namespace trimeval::detail
