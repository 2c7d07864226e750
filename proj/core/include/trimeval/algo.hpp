#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "trimeval/combinat.hpp"
#include "trimeval/field.hpp"
#include "trimeval/grid.hpp"
#include "trimeval/poly.hpp"

namespace trimeval {

/// Values alpha_l on the trimmed grid, in the same canonical order as
/// TrimmedPoly coefficients.
class EvalTable {
public:
    EvalTable(int n, int d, int degree_bound, PrimeModulus modulus, std::vector<FieldElement> values);

    int num_vars() const noexcept { return n_; }
    int individual_degree() const noexcept { return d_; }
    int degree_bound() const noexcept { return degree_bound_; }
    PrimeModulus modulus() const noexcept { return modulus_; }

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const FieldElement> values() const noexcept { return values_; }
    std::span<FieldElement> values() noexcept { return values_; }

    const FieldElement& at(const TrimmedIndex& index) const;

    friend bool operator==(const EvalTable&, const EvalTable&) = default;

private:
    int n_;
    int d_;
    int degree_bound_;
    PrimeModulus modulus_;
    std::vector<FieldElement> values_;
};

/// P(Z_l) for every l with |l| <= D, in time O(N * n * poly(d)) where N is
/// the number of trimmed indices.
///
/// Recursive on the last variable: split P into P_0..P_d, mix them with the
/// upper LU factor of V(z_{n,.}) into Q_0..Q_d (Q_j keeps total degree
/// D - j), evaluate each Q_j on its own trimmed grid, and recover the values
/// of P from the lower factor, truncated at k = min(d, D - |l'|).
EvalTable trimmed_eval(const TrimmedPoly& poly, const Grid& grid, const FieldOps& ops = {});

/// The unique P with individual degree d and total degree D such that
/// P(Z_l) = alpha_l on the trimmed grid. Same recursion as trimmed_eval, run
/// backwards through the factorization V^{-1} = U * L: the lower factor is
/// applied to the values (truncated at k), the upper one to the
/// recursively interpolated polynomials.
TrimmedPoly trimmed_interp(const EvalTable& table, const Grid& grid, const FieldOps& ops = {});

/// naive_eval_point at every trimmed grid point. O(N^2 n).
EvalTable naive_trimmed_eval(const TrimmedPoly& poly, const Grid& grid, const FieldOps& ops = {});

/// Yates' Kronecker recursion over the full (d+1)^n grid. Requires D = n*d.
/// Value of Z_l is stored at full_grid_position(l, d).
std::vector<FieldElement> yates_eval(const TrimmedPoly& poly, const Grid& grid, const FieldOps& ops = {});

/// Mixed-radix position sum_i l_i (d+1)^{i-1}.
std::size_t full_grid_position(const TrimmedIndex& index, int d);

/// Runs task(ops) with a fresh counter attached and returns its result with
/// the tally. The task receives a `const FieldOps&`.
template <typename Task>
auto run_counted(Task&& task) {
    OpCounter counter;
    const FieldOps ops(&counter);
    if constexpr (std::is_void_v<std::invoke_result_t<Task, const FieldOps&>>) {
        std::forward<Task>(task)(ops);
        return counter;
    } else {
        auto result = std::forward<Task>(task)(ops);
        return std::pair<decltype(result), OpCounter>(std::move(result), counter);
    }
}

} // namespace trimeval
