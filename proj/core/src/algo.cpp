#include "trimeval/algo.hpp"

#include <algorithm>
#include <string>

#include "embed.hpp"
#include "trimeval/linalg.hpp"

namespace trimeval {

namespace {

void require_grid(int n, int d, PrimeModulus modulus, const Grid& grid) {
    if (grid.num_vars() != n || grid.individual_degree() != d || grid.modulus() != modulus) {
        throw UsageError("grid shape (n=" + std::to_string(grid.num_vars()) +
                         ", d=" + std::to_string(grid.individual_degree()) +
                         ", p=" + std::to_string(grid.modulus().value()) + ") does not match input (n=" +
                         std::to_string(n) + ", d=" + std::to_string(d) + ", p=" + std::to_string(modulus.value()) +
                         ")");
    }
}

struct ConstBlock {
    std::span<const FieldElement> data;
    int budget;
};

struct Block {
    std::span<FieldElement> data;
    int budget;
};

// State shared by every call of one recursive run. A call on m variables
// only touches the level-m scratch, and at most one call per level is live.
class LevelScratch {
public:
    LevelScratch(int n, int d, int top_budget, PrimeModulus modulus)
        : table(n, d, std::max(top_budget, 0)), d_(d) {
        const FieldElement zero = FieldElement::zero(modulus);
        first.resize(static_cast<std::size_t>(n) + 1);
        second.resize(static_cast<std::size_t>(n) + 1);
        offsets.resize(static_cast<std::size_t>(n) + 1);
        seen.resize(static_cast<std::size_t>(n) + 1);
        in_blocks.resize(static_cast<std::size_t>(n) + 1);
        out_blocks.resize(static_cast<std::size_t>(n) + 1);
        for (int m = 1; m <= n; ++m) {
            const auto len = static_cast<std::size_t>(table.cumulative(m, top_budget));
            first[static_cast<std::size_t>(m)].assign(len, zero);
            second[static_cast<std::size_t>(m)].assign(len, zero);
            offsets[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(d) + 2, 0);
            seen[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(d) + 1, 0);
        }
        gather.assign(static_cast<std::size_t>(d) + 1, zero);
        scatter.assign(static_cast<std::size_t>(d) + 1, zero);
    }

    // Block offsets of the layout (m variables, budget): block j starts at
    // offsets[j] and holds the (m-1, budget-j) layout. Returns min(d, budget).
    int layout(int m, int budget) {
        auto& off = offsets[static_cast<std::size_t>(m)];
        const int top = std::min(d_, budget);
        off[0] = 0;
        for (int j = 0; j <= top; ++j) {
            off[static_cast<std::size_t>(j) + 1] =
                off[static_cast<std::size_t>(j)] + static_cast<std::size_t>(table.cumulative(m - 1, budget - j));
        }
        return top;
    }

    std::span<FieldElement> block(std::vector<FieldElement>& buf, int m, int j) {
        const auto& off = offsets[static_cast<std::size_t>(m)];
        return std::span<FieldElement>(buf).subspan(off[static_cast<std::size_t>(j)],
                                                    off[static_cast<std::size_t>(j) + 1] - off[static_cast<std::size_t>(j)]);
    }

    EbcTable table;
    std::vector<std::vector<FieldElement>> first;
    std::vector<std::vector<FieldElement>> second;
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::vector<std::size_t>> seen; // per-block fill position during a sweep over l'
    std::vector<std::vector<ConstBlock>> in_blocks;
    std::vector<std::vector<Block>> out_blocks;
    std::vector<FieldElement> gather;
    std::vector<FieldElement> scatter;

private:
    int d_;
};

class Evaluator {
public:
    Evaluator(const Grid& grid, int top_budget, const FieldOps& ops)
        : ops_(ops), d_(grid.individual_degree()),
          scratch_(grid.num_vars(), grid.individual_degree(), top_budget, grid.modulus()) {
        for (int i = 0; i < grid.num_vars(); ++i) {
            factors_.push_back(lu_decompose(build_vandermonde(grid.row(i), ops_), ops_));
        }
    }

    void run(int m, int budget, std::span<const FieldElement> coeffs, std::span<FieldElement> out) {
        if (m == 0) {
            out[0] = coeffs[0];
            return;
        }
        const LUFactors& lu = factors_[static_cast<std::size_t>(m) - 1];
        const int top = scratch_.layout(m, budget);
        const auto& off = scratch_.offsets[static_cast<std::size_t>(m)];
        auto& mixed = scratch_.first[static_cast<std::size_t>(m)];
        auto& evals = scratch_.second[static_cast<std::size_t>(m)];

        // Q_j = sum_{i >= j} U(j, i) P_i, with P_i the coefficient blocks.
        std::fill_n(mixed.begin(), off[static_cast<std::size_t>(top) + 1], FieldElement::zero(lu.upper.modulus()));
        auto& parts = scratch_.in_blocks[static_cast<std::size_t>(m)];
        auto& qs = scratch_.out_blocks[static_cast<std::size_t>(m)];
        parts.clear();
        qs.clear();
        for (int j = 0; j <= top; ++j) {
            parts.push_back({coeffs.subspan(off[static_cast<std::size_t>(j)],
                                            off[static_cast<std::size_t>(j) + 1] - off[static_cast<std::size_t>(j)]),
                             budget - j});
            qs.push_back({scratch_.block(mixed, m, j), budget - j});
        }
        apply_upper_truncated(lu.upper, std::span<const ConstBlock>(parts), top, std::span<Block>(qs),
                              [this, m](Block& acc, const FieldElement& c, const ConstBlock& x) {
                                  detail::embed_axpy(acc.data, acc.budget, x.data, x.budget, m - 1, c,
                                                     scratch_.table, ops_);
                              });

        for (int j = 0; j <= top; ++j) {
            run(m - 1, budget - j, scratch_.block(mixed, m, j), scratch_.block(evals, m, j));
        }

        // P(Z_(l', j)) = sum_{i <= j} L(j, i) Q_i(Z_l') for j <= k = min(d, budget - |l'|).
        // Q_i(Z_l') sits in block i at the rank of l' under budget - i, which is
        // the number of earlier l' that also fit that budget.
        auto& seen = scratch_.seen[static_cast<std::size_t>(m)];
        std::fill(seen.begin(), seen.end(), 0);
        for (TrimmedCursor cur(m - 1, d_, budget); cur.valid(); cur.next()) {
            const int k = std::min(d_, budget - cur.sum());
            for (int i = 0; i <= k; ++i) {
                const auto si = static_cast<std::size_t>(i);
                scratch_.gather[si] = evals[off[si] + seen[si]];
            }
            apply_lower_truncated(lu.lower, std::span<const FieldElement>(scratch_.gather), k,
                                  std::span<FieldElement>(scratch_.scatter), ops_);
            for (int i = 0; i <= k; ++i) {
                const auto si = static_cast<std::size_t>(i);
                out[off[si] + seen[si]] = scratch_.scatter[si];
                ++seen[si];
            }
        }
    }

private:
    const FieldOps& ops_;
    int d_;
    LevelScratch scratch_;
    std::vector<LUFactors> factors_;
};

class Interpolator {
public:
    Interpolator(const Grid& grid, int top_budget, const FieldOps& ops)
        : ops_(ops), d_(grid.individual_degree()),
          scratch_(grid.num_vars(), grid.individual_degree(), top_budget, grid.modulus()) {
        for (int i = 0; i < grid.num_vars(); ++i) {
            const SquareMatrix inverse = invert(build_vandermonde(grid.row(i), ops_), ops_);
            factors_.push_back(ul_decompose(inverse, ops_));
        }
    }

    void run(int m, int budget, std::span<const FieldElement> values, std::span<FieldElement> out) {
        if (m == 0) {
            out[0] = values[0];
            return;
        }
        const ULFactors& ul = factors_[static_cast<std::size_t>(m) - 1];
        const int top = scratch_.layout(m, budget);
        const auto& off = scratch_.offsets[static_cast<std::size_t>(m)];
        auto& betas = scratch_.first[static_cast<std::size_t>(m)];
        auto& interpolated = scratch_.second[static_cast<std::size_t>(m)];

        // beta_(l', 0..k) = L * alpha_(l', 0..k), truncated at k = min(d, budget - |l'|).
        auto& seen = scratch_.seen[static_cast<std::size_t>(m)];
        std::fill(seen.begin(), seen.end(), 0);
        for (TrimmedCursor cur(m - 1, d_, budget); cur.valid(); cur.next()) {
            const int k = std::min(d_, budget - cur.sum());
            for (int h = 0; h <= k; ++h) {
                const auto sh = static_cast<std::size_t>(h);
                scratch_.gather[sh] = values[off[sh] + seen[sh]];
            }
            apply_lower_truncated(ul.lower, std::span<const FieldElement>(scratch_.gather), k,
                                  std::span<FieldElement>(scratch_.scatter), ops_);
            for (int h = 0; h <= k; ++h) {
                const auto sh = static_cast<std::size_t>(h);
                betas[off[sh] + seen[sh]] = scratch_.scatter[sh];
                ++seen[sh];
            }
        }

        for (int j = 0; j <= top; ++j) {
            run(m - 1, budget - j, scratch_.block(betas, m, j), scratch_.block(interpolated, m, j));
        }

        // P_i = sum_{j >= i} U(i, j) Q_j; Q_j has bound budget - j <= budget - i.
        std::fill_n(out.begin(), off[static_cast<std::size_t>(top) + 1], FieldElement::zero(ul.upper.modulus()));
        auto& qs = scratch_.in_blocks[static_cast<std::size_t>(m)];
        auto& parts = scratch_.out_blocks[static_cast<std::size_t>(m)];
        qs.clear();
        parts.clear();
        for (int j = 0; j <= top; ++j) {
            qs.push_back({scratch_.block(interpolated, m, j), budget - j});
            parts.push_back({out.subspan(off[static_cast<std::size_t>(j)],
                                         off[static_cast<std::size_t>(j) + 1] - off[static_cast<std::size_t>(j)]),
                             budget - j});
        }
        apply_upper_truncated(ul.upper, std::span<const ConstBlock>(qs), top, std::span<Block>(parts),
                              [this, m](Block& acc, const FieldElement& c, const ConstBlock& x) {
                                  detail::embed_axpy(acc.data, acc.budget, x.data, x.budget, m - 1, c,
                                                     scratch_.table, ops_);
                              });
    }

private:
    const FieldOps& ops_;
    int d_;
    LevelScratch scratch_;
    std::vector<ULFactors> factors_;
};

class Yates {
public:
    Yates(const Grid& grid, const FieldOps& ops) : grid_(grid), ops_(ops), d_(grid.individual_degree()) {
        const FieldElement zero = FieldElement::zero(grid.modulus());
        std::size_t len = 1;
        evals_.resize(static_cast<std::size_t>(grid.num_vars()) + 1);
        for (int m = 1; m <= grid.num_vars(); ++m) {
            len *= static_cast<std::size_t>(d_) + 1;
            evals_[static_cast<std::size_t>(m)].assign(len, zero);
        }
    }

    void run(int m, std::span<const FieldElement> coeffs, std::span<FieldElement> out) {
        if (m == 0) {
            out[0] = coeffs[0];
            return;
        }
        const std::size_t stride = coeffs.size() / (static_cast<std::size_t>(d_) + 1);
        std::span<FieldElement> evals(evals_[static_cast<std::size_t>(m)]);
        for (int i = 0; i <= d_; ++i) {
            const std::size_t at = static_cast<std::size_t>(i) * stride;
            run(m - 1, coeffs.subspan(at, stride), evals.subspan(at, stride));
        }
        const auto nodes = grid_.row(m - 1);
        for (std::size_t t = 0; t < stride; ++t) {
            for (int j = 0; j <= d_; ++j) {
                const FieldElement& z = nodes[static_cast<std::size_t>(j)];
                FieldElement acc = evals[static_cast<std::size_t>(d_) * stride + t];
                for (int i = d_ - 1; i >= 0; --i) {
                    acc = ops_.add(ops_.mul(acc, z), evals[static_cast<std::size_t>(i) * stride + t]);
                }
                out[static_cast<std::size_t>(j) * stride + t] = acc;
            }
        }
    }

private:
    const Grid& grid_;
    const FieldOps& ops_;
    int d_;
    std::vector<std::vector<FieldElement>> evals_;
};

} // namespace

EvalTable::EvalTable(int n, int d, int degree_bound, PrimeModulus modulus, std::vector<FieldElement> values)
    : n_(n), d_(d), degree_bound_(0), modulus_(modulus), values_(std::move(values)) {
    if (n < 0) throw UsageError("variable count must be non-negative");
    if (d < 1) throw UsageError("individual degree must be at least 1");
    degree_bound_ = std::min(degree_bound, n * d);
    const Count expected = ebc_cum(n_, degree_bound_, d_);
    if (values_.size() != expected) {
        throw ValidationError("evaluation table has " + std::to_string(values_.size()) + " values, expected " +
                              std::to_string(expected) + " for (n=" + std::to_string(n) + ", d=" +
                              std::to_string(d) + ", D=" + std::to_string(degree_bound_) + ")");
    }
    for (const auto& v : values_) {
        if (v.modulus() != modulus_) throw UsageError("evaluation over a different field");
    }
}

const FieldElement& EvalTable::at(const TrimmedIndex& index) const {
    return values_[static_cast<std::size_t>(rank(index, n_, d_, degree_bound_))];
}

EvalTable trimmed_eval(const TrimmedPoly& poly, const Grid& grid, const FieldOps& ops) {
    const int n = poly.num_vars();
    const int budget = poly.degree_bound();
    require_grid(n, poly.individual_degree(), poly.modulus(), grid);
    std::vector<FieldElement> out(poly.size(), FieldElement::zero(poly.modulus()));
    if (budget >= 0) {
        Evaluator eval(grid, budget, ops);
        eval.run(n, budget, poly.coeffs(), out);
    }
    return EvalTable(n, poly.individual_degree(), budget, poly.modulus(), std::move(out));
}

TrimmedPoly trimmed_interp(const EvalTable& table, const Grid& grid, const FieldOps& ops) {
    const int n = table.num_vars();
    const int budget = table.degree_bound();
    require_grid(n, table.individual_degree(), table.modulus(), grid);
    std::vector<FieldElement> out(table.size(), FieldElement::zero(table.modulus()));
    if (budget >= 0) {
        Interpolator interp(grid, budget, ops);
        interp.run(n, budget, table.values(), out);
    }
    return TrimmedPoly(n, table.individual_degree(), budget, table.modulus(), std::move(out));
}

EvalTable naive_trimmed_eval(const TrimmedPoly& poly, const Grid& grid, const FieldOps& ops) {
    const int n = poly.num_vars();
    require_grid(n, poly.individual_degree(), poly.modulus(), grid);
    std::vector<FieldElement> out;
    out.reserve(poly.size());
    for (const TrimmedIndex& index : enumerate_trimmed(n, poly.individual_degree(), poly.degree_bound())) {
        const auto point = grid.point(index);
        out.push_back(naive_eval_point(poly, point, ops));
    }
    return EvalTable(n, poly.individual_degree(), poly.degree_bound(), poly.modulus(), std::move(out));
}

std::vector<FieldElement> yates_eval(const TrimmedPoly& poly, const Grid& grid, const FieldOps& ops) {
    const int n = poly.num_vars();
    const int d = poly.individual_degree();
    require_grid(n, d, poly.modulus(), grid);
    if (poly.degree_bound() != n * d) {
        throw UsageError("yates_eval needs the full coefficient cube (D = n*d = " + std::to_string(n * d) +
                         "), got D = " + std::to_string(poly.degree_bound()));
    }
    std::vector<FieldElement> out(poly.size(), FieldElement::zero(poly.modulus()));
    Yates yates(grid, ops);
    yates.run(n, poly.coeffs(), out);
    return out;
}

std::size_t full_grid_position(const TrimmedIndex& index, int d) {
    std::size_t pos = 0;
    for (int i = index.size() - 1; i >= 0; --i) {
        if (index[i] < 0 || index[i] > d) throw UsageError("index exponent outside [0, d]");
        pos = pos * (static_cast<std::size_t>(d) + 1) + static_cast<std::size_t>(index[i]);
    }
    return pos;
}

} // namespace trimeval
