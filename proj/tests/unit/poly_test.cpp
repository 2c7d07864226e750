#include <gtest/gtest.h>

#include "trimeval/poly.hpp"

using namespace trimeval;

namespace {

const PrimeModulus kP5(5);

FieldElement f5(std::uint64_t v) { return FieldElement(v, kP5); }

SparsePoly worked_sparse() {
    // 2 + 3 X1 + 4 X2 over F5, n=2, d=1, D=1
    return SparsePoly{2, 1, 1, kP5,
                      {{TrimmedIndex({0, 0}), f5(2)}, {TrimmedIndex({1, 0}), f5(3)}, {TrimmedIndex({0, 1}), f5(4)}}};
}

} // namespace

TEST(poly, from_sparse_orders_coefficients_canonically) {
    const TrimmedPoly p = from_sparse(worked_sparse());
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.coeffs()[0], f5(2));
    EXPECT_EQ(p.coeffs()[1], f5(3));
    EXPECT_EQ(p.coeffs()[2], f5(4));
    EXPECT_EQ(p.coeff(TrimmedIndex({0, 1})), f5(4));
}

TEST(poly, from_sparse_rejects_out_of_shape_terms) {
    SparsePoly over_degree = worked_sparse();
    over_degree.terms.push_back({TrimmedIndex({2, 0}), f5(1)});
    EXPECT_THROW(from_sparse(over_degree), ValidationError);

    SparsePoly over_bound = worked_sparse();
    over_bound.terms.push_back({TrimmedIndex({1, 1}), f5(1)});
    EXPECT_THROW(from_sparse(over_bound), ValidationError);

    SparsePoly wrong_arity = worked_sparse();
    wrong_arity.terms.push_back({TrimmedIndex({1}), f5(1)});
    EXPECT_THROW(from_sparse(wrong_arity), ValidationError);

    SparsePoly wrong_field = worked_sparse();
    wrong_field.terms.push_back({TrimmedIndex({0, 0}), FieldElement(1, PrimeModulus(7))});
    EXPECT_THROW(from_sparse(wrong_field), ValidationError);
}

TEST(poly, sparse_round_trip_drops_zero_terms) {
    const TrimmedPoly p = random_poly(3, 2, 4, PrimeModulus(7), 11);
    const SparsePoly s = to_sparse(p);
    for (const auto& t : s.terms) EXPECT_FALSE(t.coeff.is_zero());
    EXPECT_EQ(from_sparse(s), p);
}

TEST(poly, degree_bound_is_normalized) {
    const TrimmedPoly p(3, 2, 100, kP5);
    EXPECT_EQ(p.degree_bound(), 6);
    EXPECT_EQ(p.size(), 27u);
    EXPECT_EQ(TrimmedPoly(3, 2, -1, kP5).size(), 0u);
    EXPECT_EQ(TrimmedPoly(0, 2, 0, kP5).size(), 1u);
}

TEST(poly, constructor_rejects_wrong_coefficient_count) {
    EXPECT_THROW(TrimmedPoly(2, 1, 1, kP5, {f5(1), f5(2)}), Error);
}

TEST(poly, split_and_join_are_inverse) {
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int bound = 0; bound <= n * d; ++bound) {
                const TrimmedPoly p = random_poly(n, d, bound, PrimeModulus(65537), 100 * n + 10 * d + bound);
                const auto parts = split_top(p);
                ASSERT_EQ(parts.size(), static_cast<std::size_t>(d + 1));
                for (int i = 0; i <= d; ++i) {
                    EXPECT_EQ(parts[static_cast<std::size_t>(i)].num_vars(), n - 1);
                    EXPECT_EQ(parts[static_cast<std::size_t>(i)].degree_bound(),
                              std::min(bound - i, (n - 1) * d));
                }
                EXPECT_EQ(join_top(parts), p);
            }
}

TEST(poly, split_parts_are_top_variable_slices) {
    const TrimmedPoly p = random_poly(3, 2, 3, PrimeModulus(101), 5);
    const auto parts = split_top(p);
    for (int i = 0; i <= 2; ++i) {
        const TrimmedPoly& part = parts[static_cast<std::size_t>(i)];
        for (TrimmedCursor c(2, 2, part.degree_bound()); c.valid(); c.next()) {
            std::vector<int> rest(c.exponents().begin(), c.exponents().end());
            std::vector<int> full = rest;
            full.push_back(i);
            EXPECT_EQ(part.coeff(TrimmedIndex(rest)), p.coeff(TrimmedIndex(full)));
        }
    }
}

TEST(poly, with_degree_bound_embeds_and_keeps_values) {
    const PrimeModulus p(97);
    const TrimmedPoly small = random_poly(3, 2, 2, p, 3);
    const TrimmedPoly big = with_degree_bound(small, 5);
    EXPECT_EQ(big.degree_bound(), 5);
    for (TrimmedCursor c(3, 2, 5); c.valid(); c.next()) {
        const TrimmedIndex idx(std::vector<int>(c.exponents().begin(), c.exponents().end()));
        EXPECT_EQ(big.coeff(idx), c.sum() <= 2 ? small.coeff(idx) : FieldElement::zero(p));
    }
    EXPECT_THROW(with_degree_bound(big, 2), UsageError);
}

TEST(poly, add_scaled_matches_coefficientwise_sum) {
    const PrimeModulus p(13);
    TrimmedPoly acc = random_poly(2, 3, 5, p, 1);
    const TrimmedPoly before = acc;
    const TrimmedPoly x = random_poly(2, 3, 3, p, 2);
    const FieldElement c(4, p);
    add_scaled(acc, c, x);
    for (TrimmedCursor cur(2, 3, 5); cur.valid(); cur.next()) {
        const TrimmedIndex idx(std::vector<int>(cur.exponents().begin(), cur.exponents().end()));
        const FieldElement xi = cur.sum() <= 3 ? x.coeff(idx) : FieldElement::zero(p);
        EXPECT_EQ(acc.coeff(idx), ff_add(before.coeff(idx), ff_mul(c, xi)));
    }
    TrimmedPoly narrow = random_poly(2, 3, 1, p, 3);
    EXPECT_THROW(add_scaled(narrow, c, x), UsageError);
}

TEST(poly, naive_eval_point_examples) {
    const TrimmedPoly p = from_sparse(worked_sparse());
    const std::vector<FieldElement> origin{f5(0), f5(0)};
    const std::vector<FieldElement> e1{f5(1), f5(0)};
    const std::vector<FieldElement> e2{f5(0), f5(1)};
    EXPECT_EQ(naive_eval_point(p, origin), f5(2));
    EXPECT_EQ(naive_eval_point(p, e1), f5(0));
    EXPECT_EQ(naive_eval_point(p, e2), f5(1));
    const std::vector<FieldElement> short_point{f5(1)};
    EXPECT_THROW(naive_eval_point(p, short_point), UsageError);
}

TEST(poly, random_poly_is_deterministic_in_seed) {
    const PrimeModulus p(65537);
    EXPECT_EQ(random_poly(4, 2, 5, p, 42), random_poly(4, 2, 5, p, 42));
    EXPECT_NE(random_poly(4, 2, 5, p, 42), random_poly(4, 2, 5, p, 43));
    const TrimmedPoly poly = random_poly(4, 2, 5, p, 42);
    for (const auto& c : poly.coeffs()) EXPECT_LT(c.value(), p.value());
}
