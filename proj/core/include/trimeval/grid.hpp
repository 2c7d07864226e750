#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trimeval/combinat.hpp"
#include "trimeval/field.hpp"

namespace trimeval {

/// Node table z_{i,j} for variables i = 1..n and j = 0..d. The point of
/// index l is Z_l = (z_{1,l_1}, ..., z_{n,l_n}).
///
/// Nodes within one variable must be pairwise distinct, which needs p >= d+1.
/// Both are checked on construction (ValidationError).
class Grid {
public:
    Grid(PrimeModulus modulus, int d, std::vector<std::vector<FieldElement>> rows);

    /// z_{i,j} = j.
    static Grid sequential(int n, int d, PrimeModulus modulus);
    /// Distinct uniform nodes per variable, by rejection from a seeded mt19937_64.
    static Grid random(int n, int d, PrimeModulus modulus, std::uint64_t seed);

    int num_vars() const noexcept { return static_cast<int>(rows_.size()); }
    int individual_degree() const noexcept { return d_; }
    PrimeModulus modulus() const noexcept { return modulus_; }

    /// Nodes of variable `var` (0-based).
    std::span<const FieldElement> row(int var) const { return rows_.at(static_cast<std::size_t>(var)); }
    const FieldElement& node(int var, int j) const { return row(var)[static_cast<std::size_t>(j)]; }

    std::vector<FieldElement> point(const TrimmedIndex& index) const;

private:
    PrimeModulus modulus_;
    int d_;
    std::vector<std::vector<FieldElement>> rows_;
};

} // namespace trimeval
