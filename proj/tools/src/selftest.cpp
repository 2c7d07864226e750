#include "trimeval_tools/selftest.hpp"

#include <functional>
#include <sstream>

#include "trimeval/algo.hpp"
#include "trimeval/linalg.hpp"

namespace trimeval::selftest {

namespace {

// Each check returns an empty string on success, else a description of the
// first failure.
using Check = std::function<std::string()>;

std::string extended_pascal() {
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 5; ++d)
            for (int k = 0; k <= n * d; ++k) {
                Count window = 0;
                for (int j = 0; j <= d; ++j) window += ebc(n - 1, k - j, d);
                if (window != ebc(n, k, d)) {
                    std::ostringstream os;
                    os << "n=" << n << " d=" << d << " k=" << k;
                    return os.str();
                }
            }
    return {};
}

std::string recursion_size() {
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 5; ++d)
            for (int bound = 0; bound <= n * d; ++bound) {
                Count sum = 0;
                for (int j = 0; j <= d; ++j) sum += ebc_cum(n - 1, bound - j, d);
                if (sum != ebc_cum(n, bound, d)) {
                    std::ostringstream os;
                    os << "n=" << n << " d=" << d << " D=" << bound;
                    return os.str();
                }
            }
    return {};
}

std::string rank_unrank() {
    for (int n = 0; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int bound = 0; bound <= n * d; ++bound) {
                const Count total = ebc_cum(n, bound, d);
                for (Count r = 0; r < total; ++r) {
                    if (rank(unrank(r, n, d, bound), n, d, bound) != r) {
                        std::ostringstream os;
                        os << "n=" << n << " d=" << d << " D=" << bound << " r=" << r;
                        return os.str();
                    }
                }
            }
    return {};
}

std::string lu_reconstruction() {
    const PrimeModulus p(65537);
    for (int d = 1; d <= 8; ++d) {
        const Grid grid = Grid::random(1, d, p, static_cast<std::uint64_t>(d));
        const SquareMatrix v = build_vandermonde(grid.row(0));
        const LUFactors lu = lu_decompose(v);
        if (multiply(lu.lower, lu.upper) != v) return "d=" + std::to_string(d);
    }
    return {};
}

std::string eval_oracle() {
    const PrimeModulus p(65537);
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int bound : {0, (n * d + 1) / 2, n * d}) {
                const std::uint64_t seed = static_cast<std::uint64_t>(100 * n + 10 * d + bound);
                const TrimmedPoly poly = random_poly(n, d, bound, p, seed);
                const Grid grid = Grid::random(n, d, p, seed);
                if (trimmed_eval(poly, grid) != naive_trimmed_eval(poly, grid)) {
                    std::ostringstream os;
                    os << "n=" << n << " d=" << d << " D=" << bound;
                    return os.str();
                }
            }
    return {};
}

std::string interp_roundtrip() {
    const PrimeModulus p(65537);
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int bound : {0, (n * d + 1) / 2, n * d}) {
                const std::uint64_t seed = static_cast<std::uint64_t>(100 * n + 10 * d + bound);
                const TrimmedPoly poly = random_poly(n, d, bound, p, seed);
                const Grid grid = Grid::random(n, d, p, seed + 1);
                if (trimmed_interp(trimmed_eval(poly, grid), grid) != poly) {
                    std::ostringstream os;
                    os << "n=" << n << " d=" << d << " D=" << bound;
                    return os.str();
                }
            }
    return {};
}

std::string yates_consistency() {
    const PrimeModulus p(65537);
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            const TrimmedPoly poly = random_poly(n, d, n * d, p, 7);
            const Grid grid = Grid::random(n, d, p, 7);
            const EvalTable fast = trimmed_eval(poly, grid);
            const auto full = yates_eval(poly, grid);
            const auto indices = enumerate_trimmed(n, d, n * d);
            for (std::size_t r = 0; r < indices.size(); ++r) {
                if (fast.values()[r] != full[full_grid_position(indices[r], d)]) {
                    return "n=" + std::to_string(n) + " d=" + std::to_string(d);
                }
            }
        }
    return {};
}

const std::vector<std::pair<std::string, Check>>& suites() {
    static const std::vector<std::pair<std::string, Check>> all{
        {"extended-pascal", extended_pascal},     {"recursion-size", recursion_size},
        {"rank-unrank", rank_unrank},             {"lu-reconstruction", lu_reconstruction},
        {"eval-oracle", eval_oracle},             {"interp-roundtrip", interp_roundtrip},
        {"yates-consistency", yates_consistency},
    };
    return all;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, check] : suites()) names.push_back(name);
    return names;
}

std::vector<SuiteResult> run_all() {
    std::vector<SuiteResult> results;
    for (const auto& [name, check] : suites()) {
        SuiteResult r{name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace trimeval::selftest
