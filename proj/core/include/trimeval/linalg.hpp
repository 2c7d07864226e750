#pragma once

#include <span>
#include <string>
#include <vector>

#include "trimeval/field.hpp"

namespace trimeval {

/// Dense row-major m x m matrix over F_p.
class SquareMatrix {
public:
    SquareMatrix(int size, PrimeModulus modulus); // zero matrix
    SquareMatrix(int size, PrimeModulus modulus, std::vector<FieldElement> entries);

    static SquareMatrix identity(int size, PrimeModulus modulus);

    int size() const noexcept { return size_; }
    PrimeModulus modulus() const noexcept { return modulus_; }
    std::span<const FieldElement> entries() const noexcept { return entries_; }

    const FieldElement& operator()(int i, int j) const { return entries_[index(i, j)]; }
    FieldElement& operator()(int i, int j) { return entries_[index(i, j)]; }

    bool is_lower_triangular() const noexcept;
    bool is_upper_triangular() const noexcept;

    /// Rows as a JSON-style array, for debug dumps.
    std::string to_string() const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j);
    }

    int size_;
    PrimeModulus modulus_;
    std::vector<FieldElement> entries_;
};

/// M = lower * upper; lower has a unit diagonal (Doolittle).
struct LUFactors {
    SquareMatrix lower;
    SquareMatrix upper;
};

/// M = upper * lower; upper has a unit diagonal.
struct ULFactors {
    SquareMatrix upper;
    SquareMatrix lower;
};

/// V(i, j) = nodes[i]^j.
SquareMatrix build_vandermonde(std::span<const FieldElement> nodes, const FieldOps& ops = {});

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b, const FieldOps& ops = {});

/// Gaussian elimination without pivoting. Throws SingularOrNonLUError on a
/// zero pivot, which for a Vandermonde matrix means a repeated node.
LUFactors lu_decompose(const SquareMatrix& m, const FieldOps& ops = {});

/// Pivot-free factorization from the bottom-right corner. Exists iff every
/// trailing principal minor is nonzero; for the inverse of a Vandermonde
/// matrix on distinct nodes it always does.
ULFactors ul_decompose(const SquareMatrix& m, const FieldOps& ops = {});

/// Gauss-Jordan with partial pivoting. Throws SingularOrNonLUError.
SquareMatrix invert(const SquareMatrix& m, const FieldOps& ops = {});

/// out[i] += sum_{j=i}^{k} U(i, j) * v[j] for 0 <= i <= k.
///
/// The entries may be scalars or whole coefficient blocks; `add_scaled(acc,
/// c, x)` performs acc += c * x for the entry kind. `out` must arrive zeroed.
template <typename In, typename Out, typename AddScaled>
void apply_upper_truncated(const SquareMatrix& upper, std::span<In> v, int k, std::span<Out> out,
                           AddScaled&& add_scaled) {
    if (k < 0 || k >= upper.size() || v.size() < static_cast<std::size_t>(k + 1) ||
        out.size() < static_cast<std::size_t>(k + 1)) {
        throw UsageError("apply_upper_truncated: shape mismatch");
    }
    for (int i = 0; i <= k; ++i) {
        for (int j = i; j <= k; ++j) {
            add_scaled(out[static_cast<std::size_t>(i)], upper(i, j), v[static_cast<std::size_t>(j)]);
        }
    }
}

/// out[i] += sum_{j=0}^{i} L(i, j) * v[j] for 0 <= i <= k.
template <typename In, typename Out, typename AddScaled>
void apply_lower_truncated(const SquareMatrix& lower, std::span<In> v, int k, std::span<Out> out,
                           AddScaled&& add_scaled) {
    if (k < 0 || k >= lower.size() || v.size() < static_cast<std::size_t>(k + 1) ||
        out.size() < static_cast<std::size_t>(k + 1)) {
        throw UsageError("apply_lower_truncated: shape mismatch");
    }
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j <= i; ++j) {
            add_scaled(out[static_cast<std::size_t>(i)], lower(i, j), v[static_cast<std::size_t>(j)]);
        }
    }
}

/// Scalar versions; the result has length k+1.
std::vector<FieldElement> apply_upper_truncated(const SquareMatrix& upper, std::span<const FieldElement> v, int k,
                                                const FieldOps& ops = {});
std::vector<FieldElement> apply_lower_truncated(const SquareMatrix& lower, std::span<const FieldElement> v, int k,
                                                const FieldOps& ops = {});

/// Allocation-free scalar versions; overwrite out[0..k].
void apply_upper_truncated(const SquareMatrix& upper, std::span<const FieldElement> v, int k,
                           std::span<FieldElement> out, const FieldOps& ops);
void apply_lower_truncated(const SquareMatrix& lower, std::span<const FieldElement> v, int k,
                           std::span<FieldElement> out, const FieldOps& ops);

} // namespace trimeval
