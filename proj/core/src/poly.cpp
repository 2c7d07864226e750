#include "trimeval/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "embed.hpp"

namespace trimeval {

namespace {

std::string describe(const TrimmedIndex& index) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
    os << ')';
    return os.str();
}

int normalize_bound(int n, int d, int degree_bound) {
    if (n < 0) throw UsageError("variable count must be non-negative");
    if (d < 1) throw UsageError("individual degree must be at least 1");
    return std::min(degree_bound, n * d);
}

EbcTable table_for(int n, int d, int degree_bound) { return EbcTable(n, d, std::max(degree_bound, 0)); }

} // namespace

TrimmedPoly::TrimmedPoly(int n, int d, int degree_bound, PrimeModulus modulus)
    : n_(n), d_(d), degree_bound_(normalize_bound(n, d, degree_bound)), modulus_(modulus) {
    coeffs_.assign(static_cast<std::size_t>(ebc_cum(n_, degree_bound_, d_)), FieldElement::zero(modulus_));
}

TrimmedPoly::TrimmedPoly(int n, int d, int degree_bound, PrimeModulus modulus, std::vector<FieldElement> coeffs)
    : n_(n), d_(d), degree_bound_(normalize_bound(n, d, degree_bound)), modulus_(modulus),
      coeffs_(std::move(coeffs)) {
    const Count expected = ebc_cum(n_, degree_bound_, d_);
    if (coeffs_.size() != expected) {
        throw UsageError("coefficient vector has length " + std::to_string(coeffs_.size()) + ", expected " +
                         std::to_string(expected));
    }
    for (const FieldElement& c : coeffs_) {
        if (c.modulus() != modulus_) throw UsageError("coefficient over a different field");
    }
}

const FieldElement& TrimmedPoly::coeff(const TrimmedIndex& index) const {
    return coeffs_[static_cast<std::size_t>(rank(index, n_, d_, degree_bound_))];
}

void TrimmedPoly::set_coeff(const TrimmedIndex& index, FieldElement value) {
    if (value.modulus() != modulus_) throw UsageError("coefficient over a different field");
    coeffs_[static_cast<std::size_t>(rank(index, n_, d_, degree_bound_))] = value;
}

bool TrimmedPoly::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

TrimmedPoly from_sparse(const SparsePoly& sparse) {
    TrimmedPoly poly(sparse.n, sparse.d, sparse.degree_bound, sparse.modulus);
    const int bound = poly.degree_bound();
    const EbcTable table = table_for(sparse.n, sparse.d, bound);
    std::vector<bool> seen(poly.size(), false);
    for (std::size_t t = 0; t < sparse.terms.size(); ++t) {
        const auto& term = sparse.terms[t];
        const std::string where = "term " + std::to_string(t) + " " + describe(term.exponents);
        if (term.exponents.size() != sparse.n) {
            throw ValidationError(where + ": expected " + std::to_string(sparse.n) + " exponents");
        }
        for (int i = 0; i < sparse.n; ++i) {
            if (term.exponents[i] < 0 || term.exponents[i] > sparse.d) {
                throw ValidationError(where + ": exponent of X" + std::to_string(i + 1) + " outside [0, " +
                                      std::to_string(sparse.d) + "]");
            }
        }
        if (term.exponents.sum() > bound) {
            throw ValidationError(where + ": total degree " + std::to_string(term.exponents.sum()) +
                                  " exceeds " + std::to_string(bound));
        }
        if (term.coeff.modulus() != sparse.modulus) {
            throw ValidationError(where + ": coefficient over a different field");
        }
        const auto r = static_cast<std::size_t>(rank(term.exponents, bound, table));
        if (seen[r]) throw ValidationError(where + ": duplicate monomial");
        seen[r] = true;
        poly.coeffs()[r] = term.coeff;
    }
    return poly;
}

SparsePoly to_sparse(const TrimmedPoly& poly) {
    SparsePoly out{poly.num_vars(), poly.individual_degree(), poly.degree_bound(), poly.modulus(), {}};
    std::size_t r = 0;
    for (TrimmedCursor c(poly.num_vars(), poly.individual_degree(), poly.degree_bound()); c.valid(); c.next(), ++r) {
        const FieldElement& coeff = poly.coeffs()[r];
        if (coeff.is_zero()) continue;
        out.terms.push_back({TrimmedIndex(std::vector<int>(c.exponents().begin(), c.exponents().end())), coeff});
    }
    return out;
}

std::vector<TrimmedPoly> split_top(const TrimmedPoly& poly) {
    const int n = poly.num_vars();
    const int d = poly.individual_degree();
    const int bound = poly.degree_bound();
    if (n == 0) throw UsageError("split_top needs at least one variable");
    const EbcTable table = table_for(n, d, bound);
    std::vector<TrimmedPoly> parts;
    parts.reserve(static_cast<std::size_t>(d + 1));
    std::size_t off = 0;
    for (int i = 0; i <= d; ++i) {
        const std::size_t len = detail::block_size(table, n - 1, bound - i);
        auto block = poly.coeffs().subspan(off, len);
        parts.emplace_back(n - 1, d, bound - i, poly.modulus(), std::vector<FieldElement>(block.begin(), block.end()));
        off += len;
    }
    return parts;
}

TrimmedPoly join_top(std::span<const TrimmedPoly> parts) {
    if (parts.empty()) throw UsageError("join_top needs d+1 parts");
    const int d = parts.front().individual_degree();
    const int m = parts.front().num_vars();
    const PrimeModulus modulus = parts.front().modulus();
    if (parts.size() != static_cast<std::size_t>(d + 1)) {
        throw UsageError("join_top got " + std::to_string(parts.size()) + " parts, expected " +
                         std::to_string(d + 1));
    }
    // Parts with a clamped (full) bound say nothing about D; the first
    // unclamped one pins it.
    int bound = (m + 1) * d;
    for (int i = 0; i <= d; ++i) {
        if (parts[static_cast<std::size_t>(i)].degree_bound() < m * d) {
            bound = parts[static_cast<std::size_t>(i)].degree_bound() + i;
            break;
        }
    }
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= d; ++i) {
        const TrimmedPoly& part = parts[static_cast<std::size_t>(i)];
        const int want = std::min(bound - i, m * d);
        if (part.num_vars() != m || part.individual_degree() != d || part.modulus() != modulus ||
            part.degree_bound() != want) {
            throw UsageError("join_top part " + std::to_string(i) + " has shape (n=" +
                             std::to_string(part.num_vars()) + ", D=" + std::to_string(part.degree_bound()) +
                             "), expected (n=" + std::to_string(m) + ", D=" + std::to_string(want) + ")");
        }
        coeffs.insert(coeffs.end(), part.coeffs().begin(), part.coeffs().end());
    }
    return TrimmedPoly(m + 1, d, bound, modulus, std::move(coeffs));
}

TrimmedPoly with_degree_bound(const TrimmedPoly& poly, int degree_bound) {
    TrimmedPoly out(poly.num_vars(), poly.individual_degree(), degree_bound, poly.modulus());
    if (out.degree_bound() < poly.degree_bound()) {
        throw UsageError("with_degree_bound can only enlarge the bound");
    }
    const EbcTable table = table_for(poly.num_vars(), poly.individual_degree(), out.degree_bound());
    detail::for_each_embedded(out.coeffs(), out.degree_bound(), poly.coeffs(), poly.degree_bound(),
                              poly.num_vars(), table,
                              [](FieldElement& y, const FieldElement& x) { y = x; });
    return out;
}

void add_scaled(TrimmedPoly& acc, const FieldElement& c, const TrimmedPoly& x, const FieldOps& ops) {
    if (acc.num_vars() != x.num_vars() || acc.individual_degree() != x.individual_degree() ||
        acc.modulus() != x.modulus()) {
        throw UsageError("add_scaled on polynomials of different shape");
    }
    if (x.degree_bound() > acc.degree_bound()) {
        throw UsageError("add_scaled: addend bound " + std::to_string(x.degree_bound()) + " exceeds " +
                         std::to_string(acc.degree_bound()));
    }
    const EbcTable table = table_for(acc.num_vars(), acc.individual_degree(), acc.degree_bound());
    detail::embed_axpy(acc.coeffs(), acc.degree_bound(), x.coeffs(), x.degree_bound(), acc.num_vars(), c, table, ops);
}

FieldElement naive_eval_point(const TrimmedPoly& poly, std::span<const FieldElement> point, const FieldOps& ops) {
    const int n = poly.num_vars();
    if (point.size() != static_cast<std::size_t>(n)) {
        throw UsageError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(n));
    }
    for (const FieldElement& x : point) {
        if (x.modulus() != poly.modulus()) throw UsageError("point over a different field");
    }
    FieldElement acc = FieldElement::zero(poly.modulus());
    std::size_t r = 0;
    for (TrimmedCursor c(n, poly.individual_degree(), poly.degree_bound()); c.valid(); c.next(), ++r) {
        const FieldElement& coeff = poly.coeffs()[r];
        if (coeff.is_zero()) continue;
        FieldElement term = coeff;
        for (int i = 0; i < n; ++i) {
            term = ops.mul(term, ops.pow(point[static_cast<std::size_t>(i)],
                                         static_cast<std::uint64_t>(c.exponents()[static_cast<std::size_t>(i)])));
        }
        acc = ops.add(acc, term);
    }
    return acc;
}

TrimmedPoly random_poly(int n, int d, int degree_bound, PrimeModulus modulus, std::uint64_t seed) {
    TrimmedPoly poly(n, d, degree_bound, modulus);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, modulus.value() - 1);
    for (FieldElement& c : poly.coeffs()) c = FieldElement(dist(rng), modulus);
    return poly;
}

} // namespace trimeval
