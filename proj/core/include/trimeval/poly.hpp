#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trimeval/combinat.hpp"
#include "trimeval/field.hpp"

namespace trimeval {

/// Dense n-variate polynomial with individual degree <= d and total degree
/// <= D over F_p. Coefficient r belongs to the monomial X^{unrank(r)}.
///
/// D is normalized to min(D, n*d). A negative D is kept as is and denotes
/// the zero polynomial with an empty coefficient vector.
class TrimmedPoly {
public:
    /// Zero polynomial.
    TrimmedPoly(int n, int d, int degree_bound, PrimeModulus modulus);
    TrimmedPoly(int n, int d, int degree_bound, PrimeModulus modulus, std::vector<FieldElement> coeffs);

    int num_vars() const noexcept { return n_; }
    int individual_degree() const noexcept { return d_; }
    int degree_bound() const noexcept { return degree_bound_; }
    PrimeModulus modulus() const noexcept { return modulus_; }

    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
    std::span<FieldElement> coeffs() noexcept { return coeffs_; }

    const FieldElement& coeff(const TrimmedIndex& index) const;
    void set_coeff(const TrimmedIndex& index, FieldElement value);

    bool is_zero() const noexcept;

    friend bool operator==(const TrimmedPoly&, const TrimmedPoly&) = default;

private:
    int n_;
    int d_;
    int degree_bound_;
    PrimeModulus modulus_;
    std::vector<FieldElement> coeffs_;
};

/// Human-facing form: explicit (exponent, coefficient) terms, zeros omitted.
struct SparsePoly {
    struct Term {
        TrimmedIndex exponents;
        FieldElement coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    int n = 0;
    int d = 1;
    int degree_bound = 0;
    PrimeModulus modulus;
    std::vector<Term> terms;
};

/// Throws ValidationError naming the first offending term (exponent out of
/// range, total degree above D, duplicate index, foreign modulus).
TrimmedPoly from_sparse(const SparsePoly& sparse);
/// Terms in canonical order, zeros dropped.
SparsePoly to_sparse(const TrimmedPoly& poly);

/// P = sum_i P_i * X_n^i. Part i has n-1 variables and bound D - i; under the
/// canonical order it is the i-th contiguous coefficient block of P.
std::vector<TrimmedPoly> split_top(const TrimmedPoly& poly);
/// Inverse of split_top. D is recovered from the parts' bounds.
TrimmedPoly join_top(std::span<const TrimmedPoly> parts);

/// The same polynomial re-laid out under a larger total-degree bound.
TrimmedPoly with_degree_bound(const TrimmedPoly& poly, int degree_bound);

/// acc += c * x, where x may have a smaller total-degree bound than acc.
void add_scaled(TrimmedPoly& acc, const FieldElement& c, const TrimmedPoly& x, const FieldOps& ops = {});

/// Term-by-term evaluation with explicit powers. Serves as the oracle for
/// the fast algorithms; zero coefficients are skipped.
FieldElement naive_eval_point(const TrimmedPoly& poly, std::span<const FieldElement> point,
                              const FieldOps& ops = {});

/// Coefficients i.i.d. uniform in F_p from a seeded mt19937_64.
TrimmedPoly random_poly(int n, int d, int degree_bound, PrimeModulus modulus, std::uint64_t seed);

} // namespace trimeval
