#include "trimeval/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace trimeval {

SquareMatrix::SquareMatrix(int size, PrimeModulus modulus)
    : size_(size), modulus_(modulus),
      entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), FieldElement::zero(modulus)) {
    if (size < 0) throw UsageError("matrix size must be non-negative");
}

SquareMatrix::SquareMatrix(int size, PrimeModulus modulus, std::vector<FieldElement> entries)
    : size_(size), modulus_(modulus), entries_(std::move(entries)) {
    if (size < 0 || entries_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
        throw UsageError("matrix entry count does not match size " + std::to_string(size));
    }
    for (const auto& e : entries_) {
        if (e.modulus() != modulus_) throw UsageError("matrix entry over a different field");
    }
}

SquareMatrix SquareMatrix::identity(int size, PrimeModulus modulus) {
    SquareMatrix m(size, modulus);
    for (int i = 0; i < size; ++i) m(i, i) = FieldElement::one(modulus);
    return m;
}

bool SquareMatrix::is_lower_triangular() const noexcept {
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool SquareMatrix::is_upper_triangular() const noexcept {
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < i; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

std::string SquareMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < size_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < size_; ++j) os << (j ? "," : "") << (*this)(i, j).value();
        os << ']';
    }
    os << ']';
    return os.str();
}

SquareMatrix build_vandermonde(std::span<const FieldElement> nodes, const FieldOps& ops) {
    if (nodes.empty()) throw UsageError("Vandermonde matrix needs at least one node");
    const int m = static_cast<int>(nodes.size());
    const PrimeModulus p = nodes.front().modulus();
    SquareMatrix v(m, p);
    for (int i = 0; i < m; ++i) {
        FieldElement power = FieldElement::one(p);
        for (int j = 0; j < m; ++j) {
            v(i, j) = power;
            if (j + 1 < m) power = ops.mul(power, nodes[static_cast<std::size_t>(i)]);
        }
    }
    return v;
}

SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b, const FieldOps& ops) {
    if (a.size() != b.size() || a.modulus() != b.modulus()) throw UsageError("multiply: shape mismatch");
    const int m = a.size();
    SquareMatrix c(m, a.modulus());
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < m; ++j) ops.fma(c(i, j), a(i, k), b(k, j));
    return c;
}

LUFactors lu_decompose(const SquareMatrix& m, const FieldOps& ops) {
    const int n = m.size();
    const PrimeModulus p = m.modulus();
    SquareMatrix lower = SquareMatrix::identity(n, p);
    SquareMatrix upper = m;
    for (int c = 0; c < n; ++c) {
        if (upper(c, c).is_zero()) {
            throw SingularOrNonLUError("zero pivot at position " + std::to_string(c) +
                                       " (leading principal minor vanishes)");
        }
        const FieldElement pivot_inv = ops.inv(upper(c, c));
        for (int r = c + 1; r < n; ++r) {
            if (upper(r, c).is_zero()) continue;
            const FieldElement factor = ops.mul(upper(r, c), pivot_inv);
            lower(r, c) = factor;
            upper(r, c) = FieldElement::zero(p);
            for (int j = c + 1; j < n; ++j) upper(r, j) = ops.sub(upper(r, j), ops.mul(factor, upper(c, j)));
        }
    }
    return {std::move(lower), std::move(upper)};
}

ULFactors ul_decompose(const SquareMatrix& m, const FieldOps& ops) {
    // With J the exchange matrix, J M J = L' U' gives M = (J L' J)(J U' J),
    // an upper factor with unit diagonal times a lower factor.
    const int n = m.size();
    const PrimeModulus p = m.modulus();
    auto flip = [n, p](const SquareMatrix& a) {
        SquareMatrix out(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out(i, j) = a(n - 1 - i, n - 1 - j);
        return out;
    };
    LUFactors lu = [&] {
        try {
            return lu_decompose(flip(m), ops);
        } catch (const SingularOrNonLUError&) {
            throw SingularOrNonLUError("UL factorization does not exist (trailing principal minor vanishes)");
        }
    }();
    return {flip(lu.lower), flip(lu.upper)};
}

SquareMatrix invert(const SquareMatrix& m, const FieldOps& ops) {
    const int n = m.size();
    const PrimeModulus p = m.modulus();
    SquareMatrix a = m;
    SquareMatrix inv = SquareMatrix::identity(n, p);
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        while (pivot < n && a(pivot, c).is_zero()) ++pivot;
        if (pivot == n) throw SingularOrNonLUError("matrix is singular");
        if (pivot != c) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(c, j), a(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }
        }
        const FieldElement scale = ops.inv(a(c, c));
        for (int j = 0; j < n; ++j) {
            a(c, j) = ops.mul(a(c, j), scale);
            inv(c, j) = ops.mul(inv(c, j), scale);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a(r, c).is_zero()) continue;
            const FieldElement factor = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) = ops.sub(a(r, j), ops.mul(factor, a(c, j)));
                inv(r, j) = ops.sub(inv(r, j), ops.mul(factor, inv(c, j)));
            }
        }
    }
    return inv;
}

void apply_upper_truncated(const SquareMatrix& upper, std::span<const FieldElement> v, int k,
                           std::span<FieldElement> out, const FieldOps& ops) {
    if (k >= 0 && out.size() > static_cast<std::size_t>(k)) {
        std::fill_n(out.begin(), k + 1, FieldElement::zero(upper.modulus()));
    }
    apply_upper_truncated(upper, v, k, out,
                          [&ops](FieldElement& acc, const FieldElement& c, const FieldElement& x) { ops.fma(acc, c, x); });
}

void apply_lower_truncated(const SquareMatrix& lower, std::span<const FieldElement> v, int k,
                           std::span<FieldElement> out, const FieldOps& ops) {
    if (k >= 0 && out.size() > static_cast<std::size_t>(k)) {
        std::fill_n(out.begin(), k + 1, FieldElement::zero(lower.modulus()));
    }
    apply_lower_truncated(lower, v, k, out,
                          [&ops](FieldElement& acc, const FieldElement& c, const FieldElement& x) { ops.fma(acc, c, x); });
}

std::vector<FieldElement> apply_upper_truncated(const SquareMatrix& upper, std::span<const FieldElement> v, int k,
                                                const FieldOps& ops) {
    std::vector<FieldElement> out(static_cast<std::size_t>(std::max(k + 1, 0)), FieldElement::zero(upper.modulus()));
    apply_upper_truncated(upper, v, k, std::span<FieldElement>(out), ops);
    return out;
}

std::vector<FieldElement> apply_lower_truncated(const SquareMatrix& lower, std::span<const FieldElement> v, int k,
                                                const FieldOps& ops) {
    std::vector<FieldElement> out(static_cast<std::size_t>(std::max(k + 1, 0)), FieldElement::zero(lower.modulus()));
    apply_lower_truncated(lower, v, k, std::span<FieldElement>(out), ops);
    return out;
}

} // namespace trimeval
