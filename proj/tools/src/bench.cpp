#include "trimeval_tools/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "trimeval/algo.hpp"

namespace trimeval::bench {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("sweep: bad " + std::string(what) + " value '" + std::string(s) + "'");
    }
    return v;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
    std::vector<int> out;
    for (std::string_view item : split(s, ',')) {
        const std::size_t dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_number<int>(item, what));
            continue;
        }
        const int lo = parse_number<int>(trim(item.substr(0, dots)), what);
        const int hi = parse_number<int>(trim(item.substr(dots + 2)), what);
        if (hi < lo) throw UsageError("sweep: empty range " + std::string(item));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

} // namespace

std::string_view to_string(Algo algo) noexcept {
    switch (algo) {
    case Algo::trimmed:
        return "trimmed";
    case Algo::naive:
        return "naive";
    case Algo::yates:
        return "yates";
    }
    return "?";
}

std::vector<Algo> parse_algos(std::string_view list) {
    std::vector<Algo> out;
    if (trim(list).empty()) throw UsageError("empty algorithm list");
    for (std::string_view tag : split(list, ',')) {
        if (tag == "trimmed") {
            out.push_back(Algo::trimmed);
        } else if (tag == "naive") {
            out.push_back(Algo::naive);
        } else if (tag == "yates") {
            out.push_back(Algo::yates);
        } else {
            throw UsageError("unknown algorithm '" + std::string(tag) + "' (expected trimmed, naive or yates)");
        }
    }
    return out;
}

int DegreeChoice::resolve(int n, int d) const noexcept {
    if (absolute) return num;
    const long long scaled = static_cast<long long>(n) * d * num;
    return static_cast<int>((scaled + den - 1) / den);
}

SweepSpec parse_sweep(std::string_view text) {
    SweepSpec spec;
    for (std::string_view field : split(text, ';')) {
        if (field.empty()) continue;
        const std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) throw UsageError("sweep: expected key=value, got '" + std::string(field) + "'");
        const std::string_view key = trim(field.substr(0, eq));
        const std::string_view value = trim(field.substr(eq + 1));
        if (key == "n") {
            spec.ns = parse_int_list(value, "n");
        } else if (key == "d") {
            spec.ds = parse_int_list(value, "d");
        } else if (key == "D") {
            spec.degrees.clear();
            for (std::string_view item : split(value, ',')) {
                const std::size_t slash = item.find('/');
                if (slash == std::string_view::npos) {
                    spec.degrees.push_back({parse_number<int>(item, "D"), 1, true});
                } else {
                    const int num = parse_number<int>(trim(item.substr(0, slash)), "D");
                    const int den = parse_number<int>(trim(item.substr(slash + 1)), "D");
                    if (num < 0 || den <= 0) throw UsageError("sweep: bad D fraction '" + std::string(item) + "'");
                    spec.degrees.push_back({num, den, false});
                }
            }
        } else if (key == "p") {
            spec.prime = PrimeModulus(parse_number<std::uint64_t>(value, "p")).value();
        } else if (key == "seed") {
            spec.seed = parse_number<std::uint64_t>(value, "seed");
        } else {
            throw UsageError("sweep: unknown key '" + std::string(key) + "'");
        }
    }
    if (spec.ns.empty() || spec.ds.empty()) throw UsageError("sweep: n and d are required");
    if (spec.degrees.empty()) throw UsageError("sweep: D list is empty");
    for (int n : spec.ns)
        if (n < 0) throw UsageError("sweep: n must be non-negative");
    for (int d : spec.ds)
        if (d < 1) throw UsageError("sweep: d must be at least 1");
    return spec;
}

std::vector<Instance> expand(const SweepSpec& spec) {
    std::vector<Instance> out;
    for (int d : spec.ds) {
        for (int n : spec.ns) {
            for (const DegreeChoice& choice : spec.degrees) {
                const Instance inst{n, d, std::min(choice.resolve(n, d), n * d)};
                const bool dup = std::any_of(out.begin(), out.end(), [&](const Instance& o) {
                    return o.n == inst.n && o.d == inst.d && o.degree_bound == inst.degree_bound;
                });
                if (!dup) out.push_back(inst);
            }
        }
    }
    return out;
}

double BenchRecord::mul_per_point_var() const noexcept {
    if (!points || *points == 0 || n == 0) return 0.0;
    return static_cast<double>(ops.mul) / (static_cast<double>(*points) * n);
}

BenchRecord run_one(const Instance& inst, Algo algo, std::uint64_t prime, std::uint64_t seed, const Limits& limits) {
    BenchRecord rec;
    rec.algo = std::string(to_string(algo));
    rec.n = inst.n;
    rec.d = inst.d;
    rec.degree_bound = inst.degree_bound;
    rec.prime = prime;
    try {
        rec.points = ebc_cum(inst.n, inst.degree_bound, inst.d);
    } catch (const CapacityError&) {
        rec.skipped = true;
        return rec;
    }
    Count cube = 1;
    for (int i = 0; i < inst.n && cube <= limits.yates_max_points; ++i) cube *= static_cast<Count>(inst.d) + 1;
    if (*rec.points > limits.max_points || (algo == Algo::naive && *rec.points > limits.naive_max_points) ||
        (algo == Algo::yates && cube > limits.yates_max_points)) {
        rec.skipped = true;
        return rec;
    }

    const PrimeModulus p(prime);
    const TrimmedPoly poly = random_poly(inst.n, inst.d, inst.degree_bound, p, seed);
    const Grid grid = Grid::random(inst.n, inst.d, p, seed);
    const TrimmedPoly full = algo == Algo::yates ? with_degree_bound(poly, inst.n * inst.d) : poly;

    const auto start = std::chrono::steady_clock::now();
    rec.ops = run_counted([&](const FieldOps& ops) {
        switch (algo) {
        case Algo::trimmed:
            (void)trimmed_eval(poly, grid, ops);
            break;
        case Algo::naive:
            (void)naive_trimmed_eval(poly, grid, ops);
            break;
        case Algo::yates:
            (void)yates_eval(full, grid, ops);
            break;
        }
    });
    const auto stop = std::chrono::steady_clock::now();
    rec.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return rec;
}

std::vector<BenchRecord> run_sweep(const SweepSpec& spec, std::span<const Algo> algos, const Limits& limits) {
    if (algos.empty()) throw UsageError("empty algorithm list");
    std::vector<BenchRecord> out;
    for (const Instance& inst : expand(spec)) {
        for (Algo algo : algos) out.push_back(run_one(inst, algo, spec.prime, spec.seed, limits));
    }
    return out;
}

void write_csv(std::ostream& os, std::span<const BenchRecord> records) {
    os << kCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        os << r.algo << ',' << r.n << ',' << r.d << ',' << r.degree_bound << ',' << r.prime << ',';
        if (r.points) os << *r.points;
        if (r.skipped) {
            os << ",,,,,skipped\n";
            continue;
        }
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6f", r.mul_per_point_var());
        os << ',' << r.wall_time_ns << ',' << r.ops.mul << ',' << r.ops.add << ',' << r.ops.inv << ',' << ratio
           << '\n';
    }
}

} // namespace trimeval::bench
