#include "trimeval/field.hpp"

#include <array>
#include <ostream>
#include <string>

namespace trimeval {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t q : bases) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t odd = n - 1;
    int twos = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++twos;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = powmod(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < twos; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= kMax) {
        throw UsageError("modulus " + std::to_string(p) + " outside [2, 2^62)");
    }
    if (!is_prime(p)) {
        throw UsageError("modulus " + std::to_string(p) + " is not prime");
    }
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << x.value();
}

void FieldOps::throw_mismatch(std::uint64_t p, std::uint64_t q) {
    throw UsageError("field modulus mismatch: " + std::to_string(p) + " vs " + std::to_string(q));
}

FieldElement FieldOps::inv(const FieldElement& a) const {
    if (a.value_ == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(a.p_));
    if (counter_) ++counter_->inv;
    // Extended Euclid on (p, a); p < 2^62 keeps the signed coefficients in range.
    std::int64_t r0 = static_cast<std::int64_t>(a.p_), r1 = static_cast<std::int64_t>(a.value_);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += static_cast<std::int64_t>(a.p_);
    return {FieldElement::Raw{}, static_cast<std::uint64_t>(t0), a.p_};
}

FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return FieldOps{}.add(a, b); }
FieldElement ff_sub(const FieldElement& a, const FieldElement& b) { return FieldOps{}.sub(a, b); }
FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return FieldOps{}.mul(a, b); }
FieldElement ff_inv(const FieldElement& a) { return FieldOps{}.inv(a); }
FieldElement ff_pow(const FieldElement& a, std::uint64_t e) { return FieldOps{}.pow(a, e); }

} // namespace trimeval
