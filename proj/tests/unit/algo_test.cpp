#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "trimeval/algo.hpp"
#include "trimeval/linalg.hpp"

using namespace trimeval;

namespace {

struct Shape {
    int n, d, bound;
    std::uint64_t prime;
};

// Random shapes with n <= 5, d <= 3, every budget from empty-ish to full.
std::vector<Shape> random_shapes(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint64_t primes[] = {5, 7, 101, 65537, 2147483647};
    std::vector<Shape> out;
    while (static_cast<int>(out.size()) < count) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        const int d = std::uniform_int_distribution<int>(1, 3)(rng);
        const int bound = std::uniform_int_distribution<int>(0, n * d)(rng);
        const std::uint64_t p = primes[std::uniform_int_distribution<int>(0, 4)(rng)];
        if (p < static_cast<std::uint64_t>(d) + 1) continue;
        out.push_back({n, d, bound, p});
    }
    return out;
}

TrimmedPoly worked_poly() {
    const PrimeModulus p(5);
    return TrimmedPoly(2, 1, 1, p, {FieldElement(2, p), FieldElement(3, p), FieldElement(4, p)});
}

} // namespace

TEST(trimmed_eval, worked_example) {
    const TrimmedPoly poly = worked_poly();
    const Grid grid = Grid::sequential(2, 1, poly.modulus());
    const EvalTable table = trimmed_eval(poly, grid);
    ASSERT_EQ(table.size(), 3u);
    EXPECT_EQ(table.values()[0].value(), 2u);
    EXPECT_EQ(table.values()[1].value(), 0u);
    EXPECT_EQ(table.values()[2].value(), 1u);
    EXPECT_EQ(trimmed_interp(table, grid), poly);
}

TEST(trimmed_eval, matches_naive_on_random_instances) {
    std::uint64_t seed = 0;
    for (const Shape& s : random_shapes(200, 1)) {
        ++seed;
        const PrimeModulus p(s.prime);
        const TrimmedPoly poly = random_poly(s.n, s.d, s.bound, p, seed);
        const Grid grid = Grid::random(s.n, s.d, p, seed);
        ASSERT_EQ(trimmed_eval(poly, grid), naive_trimmed_eval(poly, grid))
            << "n=" << s.n << " d=" << s.d << " D=" << s.bound << " p=" << s.prime << " seed=" << seed;
    }
}

TEST(trimmed_eval, every_shape_on_small_field) {
    const PrimeModulus p(7);
    for (int n = 0; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int bound = 0; bound <= n * d; ++bound) {
                const std::uint64_t seed = static_cast<std::uint64_t>(100 * n + 10 * d + bound);
                const TrimmedPoly poly = random_poly(n, d, bound, p, seed);
                const Grid grid = Grid::random(n, d, p, seed);
                ASSERT_EQ(trimmed_eval(poly, grid), naive_trimmed_eval(poly, grid))
                    << "n=" << n << " d=" << d << " D=" << bound;
            }
}

TEST(trimmed_eval, grid_with_zero_node_first_and_last) {
    const PrimeModulus p(11);
    std::vector<std::vector<FieldElement>> rows;
    for (std::uint64_t first : {0, 5, 3}) {
        rows.push_back({FieldElement(first, p), FieldElement(first + 1, p), FieldElement(first == 0 ? 10 : 0, p)});
    }
    const Grid grid(p, 2, rows);
    for (int bound = 0; bound <= 6; ++bound) {
        const TrimmedPoly poly = random_poly(3, 2, bound, p, static_cast<std::uint64_t>(bound));
        EXPECT_EQ(trimmed_eval(poly, grid), naive_trimmed_eval(poly, grid)) << "D=" << bound;
        EXPECT_EQ(trimmed_interp(trimmed_eval(poly, grid), grid), poly) << "D=" << bound;
    }
}

TEST(trimmed_interp, round_trips_both_ways) {
    std::uint64_t seed = 1000;
    for (const Shape& s : random_shapes(200, 2)) {
        ++seed;
        const PrimeModulus p(s.prime);
        const Grid grid = Grid::random(s.n, s.d, p, seed);
        const TrimmedPoly poly = random_poly(s.n, s.d, s.bound, p, seed);
        ASSERT_EQ(trimmed_interp(trimmed_eval(poly, grid), grid), poly) << "seed=" << seed;

        // random table -> interpolate -> evaluate
        const TrimmedPoly noise = random_poly(s.n, s.d, s.bound, p, seed ^ 0xabcdefULL);
        const EvalTable table(s.n, s.d, s.bound, p,
                              std::vector<FieldElement>(noise.coeffs().begin(), noise.coeffs().end()));
        ASSERT_EQ(trimmed_eval(trimmed_interp(table, grid), grid), table) << "seed=" << seed;
    }
}

TEST(trimmed_interp, recovers_polynomial_from_naive_table) {
    const PrimeModulus p(65537);
    for (int bound = 0; bound <= 8; ++bound) {
        const TrimmedPoly poly = random_poly(4, 2, bound, p, static_cast<std::uint64_t>(bound) + 7);
        const Grid grid = Grid::random(4, 2, p, 3);
        EXPECT_EQ(trimmed_interp(naive_trimmed_eval(poly, grid), grid), poly);
    }
}

TEST(yates, agrees_with_trimmed_on_full_cube) {
    const PrimeModulus p(101);
    for (int n = 0; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            const TrimmedPoly poly = random_poly(n, d, n * d, p, static_cast<std::uint64_t>(n * 10 + d));
            const Grid grid = Grid::random(n, d, p, static_cast<std::uint64_t>(d));
            const auto cube = yates_eval(poly, grid);
            const EvalTable table = trimmed_eval(poly, grid);
            ASSERT_EQ(cube.size(), table.size());
            for (TrimmedCursor c(n, d, n * d); c.valid(); c.next()) {
                const TrimmedIndex idx(std::vector<int>(c.exponents().begin(), c.exponents().end()));
                EXPECT_EQ(cube[full_grid_position(idx, d)], table.at(idx));
            }
        }
}

TEST(yates, rejects_trimmed_input) {
    const PrimeModulus p(7);
    const TrimmedPoly poly = random_poly(3, 2, 4, p, 1);
    EXPECT_THROW(yates_eval(poly, Grid::sequential(3, 2, p)), UsageError);
}

TEST(full_grid_position, first_coordinate_is_least_significant) {
    EXPECT_EQ(full_grid_position(TrimmedIndex({1, 0}), 2), 1u);
    EXPECT_EQ(full_grid_position(TrimmedIndex({0, 1}), 2), 3u);
    EXPECT_EQ(full_grid_position(TrimmedIndex({2, 2}), 2), 8u);
    EXPECT_EQ(full_grid_position(TrimmedIndex(), 2), 0u);
}

// The factorization behind the recursion: with V = L U for the last
// variable's nodes and Q_i = sum_{j >= i} U(i, j) P_j, every grid value is
// P(z', z_k) = sum_{i <= k} L(k, i) Q_i(z'), and Q_i only needs budget D - i.
TEST(decomposition, telescopes_through_lu_factors) {
    const PrimeModulus p(101);
    const int n = 3, d = 2, bound = 4;
    const Grid grid = Grid::random(n, d, p, 5);
    const TrimmedPoly poly = random_poly(n, d, bound, p, 6);
    const auto lu = lu_decompose(build_vandermonde(grid.row(n - 1)));
    const auto parts = split_top(poly);

    std::vector<TrimmedPoly> q;
    for (int i = 0; i <= d; ++i) {
        TrimmedPoly qi(n - 1, d, bound - i, p);
        for (int j = i; j <= d; ++j) add_scaled(qi, lu.upper(i, j), parts[static_cast<std::size_t>(j)]);
        q.push_back(std::move(qi));
    }
    const Grid rest(p, d, {std::vector<FieldElement>(grid.row(0).begin(), grid.row(0).end()),
                           std::vector<FieldElement>(grid.row(1).begin(), grid.row(1).end())});
    const EvalTable expected = naive_trimmed_eval(poly, grid);
    for (TrimmedCursor c(n, d, bound); c.valid(); c.next()) {
        const TrimmedIndex idx(std::vector<int>(c.exponents().begin(), c.exponents().end()));
        const int k = idx[n - 1];
        const std::vector<FieldElement> head = rest.point(TrimmedIndex({idx[0], idx[1]}));
        FieldElement acc = FieldElement::zero(p);
        for (int i = 0; i <= k; ++i) acc = ff_add(acc, ff_mul(lu.lower(k, i), naive_eval_point(q[static_cast<std::size_t>(i)], head)));
        EXPECT_EQ(acc, expected.at(idx));
    }
}

TEST(run_counted, naive_single_term) {
    const PrimeModulus p(65537);
    TrimmedPoly poly(2, 3, 5, p);
    poly.set_coeff(TrimmedIndex({3, 2}), FieldElement(9, p));
    const std::vector<FieldElement> point{FieldElement(2, p), FieldElement(3, p)};
    auto [value, ops] = run_counted([&](const FieldOps& f) { return naive_eval_point(poly, point, f); });
    EXPECT_EQ(value.value(), 9u * 8u * 9u);
    EXPECT_EQ(ops.mul, 7u); // x^3 costs 3, y^2 costs 2, two multiplications into the term
    EXPECT_EQ(ops.add, 1u);
    EXPECT_EQ(ops.inv, 0u);
}

TEST(run_counted, zero_variables_costs_no_multiplications) {
    const PrimeModulus p(7);
    const TrimmedPoly poly(0, 2, 0, p, {FieldElement(4, p)});
    const Grid grid = Grid::sequential(0, 2, p);
    auto [table, ops] = run_counted([&](const FieldOps& f) { return trimmed_eval(poly, grid, f); });
    ASSERT_EQ(table.size(), 1u);
    EXPECT_EQ(table.values()[0].value(), 4u);
    EXPECT_EQ(ops.mul, 0u);
}

TEST(run_counted, deterministic_and_void_tasks) {
    const PrimeModulus p(65537);
    const TrimmedPoly poly = random_poly(5, 2, 5, p, 1);
    const Grid grid = Grid::random(5, 2, p, 1);
    const OpCounter first = run_counted([&](const FieldOps& f) { (void)trimmed_eval(poly, grid, f); });
    const OpCounter second = run_counted([&](const FieldOps& f) { (void)trimmed_eval(poly, grid, f); });
    EXPECT_EQ(first, second);
    EXPECT_GT(first.mul, 0u);
    EXPECT_LE(first.inv, 5u * 3u); // only the per-variable factorizations invert, one pivot each
}

TEST(grid, validation) {
    const PrimeModulus p(7);
    EXPECT_THROW(Grid(p, 1, {{FieldElement(3, p), FieldElement(3, p)}}), ValidationError);
    EXPECT_THROW(Grid(p, 2, {{FieldElement(1, p), FieldElement(2, p)}}), ValidationError);
    EXPECT_THROW(Grid::sequential(2, 3, PrimeModulus(3)), ValidationError);
    EXPECT_THROW(Grid::random(2, 2, PrimeModulus(2), 0), ValidationError);
    try {
        Grid(p, 1, {{FieldElement(0, p), FieldElement(1, p)}, {FieldElement(3, p), FieldElement(3, p)}});
        FAIL() << "duplicate accepted";
    } catch (const ValidationError& e) {
        EXPECT_STREQ(e.what(), "variable 2: duplicate node 3 at position 1");
    }
}

TEST(grid, random_is_deterministic_and_distinct) {
    const PrimeModulus p(11);
    const Grid a = Grid::random(4, 3, p, 9);
    const Grid b = Grid::random(4, 3, p, 9);
    for (int i = 0; i < 4; ++i) {
        EXPECT_TRUE(std::equal(a.row(i).begin(), a.row(i).end(), b.row(i).begin()));
    }
}

TEST(eval_table, length_and_shape_checks) {
    const PrimeModulus p(5);
    EXPECT_THROW(EvalTable(2, 1, 1, p, {FieldElement(1, p)}), ValidationError);
    const TrimmedPoly poly = worked_poly();
    EXPECT_THROW(trimmed_eval(poly, Grid::sequential(3, 1, p)), Error);
    EXPECT_THROW(trimmed_eval(poly, Grid::sequential(2, 1, PrimeModulus(7))), Error);
}
