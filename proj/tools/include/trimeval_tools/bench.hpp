#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trimeval/combinat.hpp"
#include "trimeval/field.hpp"

namespace trimeval::bench {

enum class Algo { trimmed, naive, yates };

std::string_view to_string(Algo algo) noexcept;
/// Comma-separated list of algorithm tags. Throws UsageError on an unknown
/// tag or an empty list.
std::vector<Algo> parse_algos(std::string_view list);

/// One entry of the D axis: either an absolute bound or ceil(n*d*num/den).
struct DegreeChoice {
    int num = 1;
    int den = 1;
    bool absolute = false;

    int resolve(int n, int d) const noexcept;
};

/// Instance sweep, written as `key=value` pairs joined by ';':
///
///     n=2..10;d=1,2,3;D=1/4,1/2,1/1;p=65537;seed=0
///
/// n and d take lists and inclusive ranges. D entries `a/b` are fractions of
/// n*d (rounded up); a bare integer is an absolute bound.
struct SweepSpec {
    std::vector<int> ns;
    std::vector<int> ds;
    std::vector<DegreeChoice> degrees{{1, 4, false}, {1, 2, false}, {1, 1, false}};
    std::uint64_t prime = 65537;
    std::uint64_t seed = 0;
};

SweepSpec parse_sweep(std::string_view spec);

struct Limits {
    Count max_points = Count{1} << 25;       // memory guard, any algorithm
    Count naive_max_points = 4096;           // naive is O(N^2 n)
    Count yates_max_points = Count{1} << 24; // Yates touches (d+1)^n points
};

struct BenchRecord {
    std::string algo;
    int n = 0;
    int d = 0;
    int degree_bound = 0;
    std::uint64_t prime = 0;
    std::optional<Count> points; // N; empty when it overflows the count guard
    std::int64_t wall_time_ns = 0;
    OpCounter ops;
    bool skipped = false;

    /// mul / (N * n), or 0 when undefined.
    double mul_per_point_var() const noexcept;
};

/// Distinct (n, d, D) instances of a sweep, in sweep order.
struct Instance {
    int n;
    int d;
    int degree_bound;
};
std::vector<Instance> expand(const SweepSpec& spec);

BenchRecord run_one(const Instance& inst, Algo algo, std::uint64_t prime, std::uint64_t seed,
                    const Limits& limits = {});
std::vector<BenchRecord> run_sweep(const SweepSpec& spec, std::span<const Algo> algos, const Limits& limits = {});

inline constexpr std::string_view kCsvHeader = "algo,n,d,D,p,N,wall_time_ns,mul,add,inv,mul_per_Nn";

/// Skipped records keep algo and shape and put "skipped" in the last column.
void write_csv(std::ostream& os, std::span<const BenchRecord> records);

} // namespace trimeval::bench
