#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "trimeval/error.hpp"

namespace trimeval {

/// A prime p with 2 <= p < 2^62. Primality is checked on construction.
class PrimeModulus {
public:
    static constexpr std::uint64_t kMax = std::uint64_t{1} << 62;

    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

private:
    friend class FieldElement;
    struct Trusted {};
    PrimeModulus(Trusted, std::uint64_t p) noexcept : p_(p) {}
    static PrimeModulus trusted(std::uint64_t p) noexcept { return {Trusted{}, p}; }

    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

namespace detail {

__extension__ typedef unsigned __int128 uint128;

inline std::uint64_t mul_reduce(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

} // namespace detail

/// Canonical residue in [0, p) tagged with its modulus.
class FieldElement {
public:
    /// Reduces `value` mod p.
    FieldElement(std::uint64_t value, PrimeModulus modulus) noexcept
        : value_(value % modulus.value()), p_(modulus.value()) {}

    static FieldElement zero(PrimeModulus m) noexcept { return {0, m}; }
    static FieldElement one(PrimeModulus m) noexcept { return {1, m}; }

    std::uint64_t value() const noexcept { return value_; }
    PrimeModulus modulus() const noexcept { return PrimeModulus::trusted(p_); }
    std::uint64_t prime() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    friend class FieldOps;
    struct Raw {};
    FieldElement(Raw, std::uint64_t value, std::uint64_t p) noexcept : value_(value), p_(p) {}

    std::uint64_t value_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Tally of field operations; subtraction and negation count as additions.
struct OpCounter {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    std::uint64_t inv = 0;

    void reset() noexcept { *this = {}; }
    std::uint64_t total() const noexcept { return mul + add + inv; }

    OpCounter& operator+=(const OpCounter& o) noexcept {
        mul += o.mul;
        add += o.add;
        inv += o.inv;
        return *this;
    }
    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Field-operation handle. Every arithmetic step of the algorithms goes
/// through one of these, so attaching a counter instruments the whole run.
class FieldOps {
public:
    FieldOps() noexcept = default;
    explicit FieldOps(OpCounter* counter) noexcept : counter_(counter) {}

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        require_same(a, b);
        if (counter_) ++counter_->add;
        std::uint64_t s = a.value_ + b.value_;
        if (s >= a.p_) s -= a.p_;
        return {FieldElement::Raw{}, s, a.p_};
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        require_same(a, b);
        if (counter_) ++counter_->add;
        const std::uint64_t s = a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.p_ - b.value_);
        return {FieldElement::Raw{}, s, a.p_};
    }
    FieldElement neg(const FieldElement& a) const {
        if (counter_) ++counter_->add;
        return {FieldElement::Raw{}, a.value_ == 0 ? 0 : a.p_ - a.value_, a.p_};
    }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        require_same(a, b);
        if (counter_) ++counter_->mul;
        return {FieldElement::Raw{}, detail::mul_reduce(a.value_, b.value_, a.p_), a.p_};
    }
    /// Throws DivisionByZeroError for a == 0.
    FieldElement inv(const FieldElement& a) const;
    /// Square-and-multiply; a^0 == 1 for every a, including 0.
    FieldElement pow(const FieldElement& a, std::uint64_t e) const {
        FieldElement result{FieldElement::Raw{}, 1 % a.p_, a.p_};
        FieldElement base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return result;
    }

    /// acc += c * x
    void fma(FieldElement& acc, const FieldElement& c, const FieldElement& x) const { acc = add(acc, mul(c, x)); }

    OpCounter* counter() const noexcept { return counter_; }

private:
    static void require_same(const FieldElement& a, const FieldElement& b) {
        if (a.p_ != b.p_) [[unlikely]] throw_mismatch(a.p_, b.p_);
    }
    [[noreturn]] static void throw_mismatch(std::uint64_t p, std::uint64_t q);

    OpCounter* counter_ = nullptr;
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_inv(const FieldElement& a);
FieldElement ff_pow(const FieldElement& a, std::uint64_t e);

} // namespace trimeval
