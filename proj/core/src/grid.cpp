#include "trimeval/grid.hpp"

#include <random>
#include <string>
#include <unordered_set>

namespace trimeval {

Grid::Grid(PrimeModulus modulus, int d, std::vector<std::vector<FieldElement>> rows)
    : modulus_(modulus), d_(d), rows_(std::move(rows)) {
    if (d < 1) throw ValidationError("individual degree must be at least 1");
    if (modulus.value() < static_cast<std::uint64_t>(d) + 1) {
        throw ValidationError("prime " + std::to_string(modulus.value()) + " too small for d = " + std::to_string(d) +
                              ": need p >= d+1 distinct nodes");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        const std::string var = "variable " + std::to_string(i + 1);
        if (row.size() != static_cast<std::size_t>(d) + 1) {
            throw ValidationError(var + ": expected " + std::to_string(d + 1) + " nodes, got " +
                                  std::to_string(row.size()));
        }
        std::unordered_set<std::uint64_t> seen;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].modulus() != modulus) throw ValidationError(var + ": node over a different field");
            if (!seen.insert(row[j].value()).second) {
                throw ValidationError(var + ": duplicate node " + std::to_string(row[j].value()) + " at position " +
                                      std::to_string(j));
            }
        }
    }
}

Grid Grid::sequential(int n, int d, PrimeModulus modulus) {
    if (n < 0) throw UsageError("variable count must be non-negative");
    std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows)
        for (int j = 0; j <= d; ++j) row.emplace_back(static_cast<std::uint64_t>(j), modulus);
    return Grid(modulus, d, std::move(rows));
}

Grid Grid::random(int n, int d, PrimeModulus modulus, std::uint64_t seed) {
    if (n < 0) throw UsageError("variable count must be non-negative");
    if (d < 1 || modulus.value() < static_cast<std::uint64_t>(d) + 1) {
        // let the constructor produce the diagnostic
        return Grid(modulus, d, {});
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, modulus.value() - 1);
    std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
        std::unordered_set<std::uint64_t> used;
        while (row.size() < static_cast<std::size_t>(d) + 1) {
            const std::uint64_t z = dist(rng);
            if (used.insert(z).second) row.emplace_back(z, modulus);
        }
    }
    return Grid(modulus, d, std::move(rows));
}

std::vector<FieldElement> Grid::point(const TrimmedIndex& index) const {
    if (index.size() != num_vars()) throw UsageError("index dimension does not match grid");
    std::vector<FieldElement> x;
    x.reserve(rows_.size());
    for (int i = 0; i < num_vars(); ++i) {
        if (index[i] < 0 || index[i] > d_) throw UsageError("index exponent outside [0, d]");
        x.push_back(node(i, index[i]));
    }
    return x;
}

} // namespace trimeval
