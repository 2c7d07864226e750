#include "trimeval_tools/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "trimeval/algo.hpp"
#include "trimeval_tools/bench.hpp"
#include "trimeval_tools/io.hpp"
#include "trimeval_tools/selftest.hpp"

namespace trimeval::cli {

namespace {

struct GridSource {
    std::string file;
    std::string mode; // seq | rand
    std::uint64_t seed = 0;

    void add_to(CLI::App* cmd) {
        auto* f = cmd->add_option("--grid", file, "Grid JSON file");
        auto* g = cmd->add_option("--grid-gen", mode, "Generate the grid instead: seq or rand")
                      ->check(CLI::IsMember({"seq", "rand"}));
        f->excludes(g);
        cmd->add_option("--seed", seed, "Seed for --grid-gen rand")->capture_default_str();
    }

    Grid resolve(int n, int d, PrimeModulus p) const {
        if (!file.empty()) return io::grid_from_json(io::read_json_file(file));
        if (mode == "seq") return Grid::sequential(n, d, p);
        if (mode == "rand") return Grid::random(n, d, p, seed);
        throw UsageError("one of --grid or --grid-gen is required");
    }
};

int cmd_eval(const std::string& poly_file, const GridSource& grid_src, const std::string& out_path, std::ostream& out) {
    const TrimmedPoly poly = from_sparse(io::sparse_poly_from_json(io::read_json_file(poly_file)));
    const Grid grid = grid_src.resolve(poly.num_vars(), poly.individual_degree(), poly.modulus());
    io::write_json(io::to_json(trimmed_eval(poly, grid)), out_path, out);
    return kSuccess;
}

int cmd_interp(const std::string& evals_file, const GridSource& grid_src, const std::string& out_path,
               std::ostream& out) {
    const EvalTable table = io::eval_table_from_json(io::read_json_file(evals_file));
    const Grid grid = grid_src.resolve(table.num_vars(), table.individual_degree(), table.modulus());
    io::write_json(io::to_json(to_sparse(trimmed_interp(table, grid))), out_path, out);
    return kSuccess;
}

struct RoundtripArgs {
    int n = 2;
    int d = 1;
    int degree_bound = 1;
    std::uint64_t prime = 65537;
    std::uint64_t seed = 0;
    int trials = 10;
    std::string grid_mode = "rand";
    bool corrupt = false;
};

int cmd_roundtrip(const RoundtripArgs& a, std::ostream& out, std::ostream& err) {
    const PrimeModulus p(a.prime);
    int failures = 0;
    for (int t = 0; t < a.trials; ++t) {
        const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(t);
        const TrimmedPoly poly = random_poly(a.n, a.d, a.degree_bound, p, seed);
        const Grid grid = a.grid_mode == "seq" ? Grid::sequential(a.n, a.d, p) : Grid::random(a.n, a.d, p, seed);
        EvalTable table = trimmed_eval(poly, grid);
        std::string problem;
        if (table != naive_trimmed_eval(poly, grid)) problem = "evaluation disagrees with the naive oracle";
        if (a.corrupt && table.size() > 0) {
            FieldElement& v = table.values()[0];
            v = ff_add(v, FieldElement::one(p));
        }
        if (problem.empty() && trimmed_interp(table, grid) != poly) problem = "interp(eval(P)) != P";
        if (problem.empty()) {
            out << "trial " << t << " seed=" << seed << ": ok\n";
        } else {
            ++failures;
            out << "trial " << t << " seed=" << seed << ": FAIL\n";
            err << "roundtrip failure: " << problem << " (n=" << a.n << " d=" << a.d << " D=" << a.degree_bound
                << " p=" << a.prime << " seed=" << seed << ")\n";
        }
    }
    return failures == 0 ? kSuccess : kProperty;
}

int cmd_bench(const std::string& sweep, const std::string& algos, const std::string& out_path,
              const bench::Limits& limits, std::ostream& out) {
    const auto tags = bench::parse_algos(algos);
    const auto spec = bench::parse_sweep(sweep);
    const auto records = bench::run_sweep(spec, tags, limits);
    if (out_path == "-") {
        bench::write_csv(out, records);
    } else {
        std::ofstream file(out_path);
        if (!file) throw ValidationError("cannot write " + out_path);
        bench::write_csv(file, records);
    }
    return kSuccess;
}

int cmd_selftest(bool as_json, std::ostream& out, std::ostream& err) {
    const auto results = selftest::run_all();
    bool ok = true;
    io::json doc = io::json::object();
    for (const auto& r : results) {
        ok = ok && r.passed;
        doc[r.name] = r.passed;
        if (!as_json) out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
        if (!r.passed) err << "suite " << r.name << " failed: " << r.detail << '\n';
    }
    if (as_json) out << doc.dump(2) << '\n';
    return ok ? kSuccess : kProperty;
}

int cmd_gen_poly(int n, int d, int degree_bound, std::uint64_t prime, std::uint64_t seed, const std::string& path,
                 std::ostream& out) {
    io::write_json(io::to_json(to_sparse(random_poly(n, d, degree_bound, PrimeModulus(prime), seed))), path, out);
    return kSuccess;
}

int cmd_gen_grid(int n, int d, std::uint64_t prime, const std::string& mode, std::uint64_t seed,
                 const std::string& path, std::ostream& out) {
    const PrimeModulus p(prime);
    const Grid grid = mode == "seq" ? Grid::sequential(n, d, p) : Grid::random(n, d, p, seed);
    io::write_json(io::to_json(grid), path, out);
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trimmed multipoint evaluation and interpolation over prime fields", "trimeval"};
    app.require_subcommand(1);

    std::string out_path = "-";

    std::string poly_file;
    GridSource eval_grid;
    auto* eval = app.add_subcommand("eval", "Evaluate a polynomial on its trimmed grid");
    eval->add_option("--poly", poly_file, "Polynomial JSON file")->required();
    eval_grid.add_to(eval);
    eval->add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();

    std::string evals_file;
    GridSource interp_grid;
    auto* interp = app.add_subcommand("interp", "Interpolate a polynomial from trimmed-grid values");
    interp->add_option("--evals", evals_file, "Evaluation table JSON file")->required();
    interp_grid.add_to(interp);
    interp->add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();

    RoundtripArgs rt;
    auto* roundtrip = app.add_subcommand("roundtrip", "Check interp(eval(P)) = P and eval against the naive oracle");
    roundtrip->add_option("--n", rt.n)->required();
    roundtrip->add_option("--d", rt.d)->required();
    roundtrip->add_option("--D", rt.degree_bound)->required();
    roundtrip->add_option("--prime", rt.prime)->capture_default_str();
    roundtrip->add_option("--seed", rt.seed)->capture_default_str();
    roundtrip->add_option("--trials", rt.trials)->capture_default_str()->check(CLI::NonNegativeNumber);
    roundtrip->add_option("--grid-gen", rt.grid_mode)->capture_default_str()->check(CLI::IsMember({"seq", "rand"}));
    roundtrip->add_flag("--corrupt", rt.corrupt, "Perturb one value before interpolating (harness self-test)");

    std::string sweep = "n=2..8;d=2;D=1/2";
    std::string algos = "trimmed";
    bench::Limits limits;
    auto* bench_cmd = app.add_subcommand("bench", "Run a scaling sweep and write CSV records");
    bench_cmd->add_option("--sweep", sweep, "e.g. n=2..10;d=1..3;D=1/4,1/2,1/1;p=65537;seed=0")
        ->capture_default_str();
    bench_cmd->add_option("--algos", algos, "Comma-separated: trimmed,naive,yates")->capture_default_str();
    bench_cmd->add_option("--out", out_path, "CSV file, - for stdout")->capture_default_str();
    bench_cmd->add_option("--max-N", limits.max_points, "Skip instances with more points")->capture_default_str();
    bench_cmd->add_option("--naive-max-N", limits.naive_max_points, "Skip naive runs above this many points")
        ->capture_default_str();

    bool as_json = false;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded invariant suites");
    selftest_cmd->add_flag("--json", as_json, "Print a JSON pass/fail map");

    int gn = 2, gd = 1, gD = 1;
    std::uint64_t gprime = 65537, gseed = 0;
    std::string gmode = "rand";
    auto* gen_poly = app.add_subcommand("gen-poly", "Write a random polynomial");
    gen_poly->add_option("--n", gn)->required();
    gen_poly->add_option("--d", gd)->required();
    gen_poly->add_option("--D", gD)->required();
    gen_poly->add_option("--prime", gprime)->capture_default_str();
    gen_poly->add_option("--seed", gseed)->capture_default_str();
    gen_poly->add_option("--out", out_path)->capture_default_str();
    auto* gen_grid = app.add_subcommand("gen-grid", "Write a grid");
    gen_grid->add_option("--n", gn)->required();
    gen_grid->add_option("--d", gd)->required();
    gen_grid->add_option("--prime", gprime)->capture_default_str();
    gen_grid->add_option("--mode", gmode)->capture_default_str()->check(CLI::IsMember({"seq", "rand"}));
    gen_grid->add_option("--seed", gseed)->capture_default_str();
    gen_grid->add_option("--out", out_path)->capture_default_str();

    std::vector<std::string> argv_store{"trimeval"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*eval) return cmd_eval(poly_file, eval_grid, out_path, out);
        if (*interp) return cmd_interp(evals_file, interp_grid, out_path, out);
        if (*roundtrip) return cmd_roundtrip(rt, out, err);
        if (*bench_cmd) return cmd_bench(sweep, algos, out_path, limits, out);
        if (*selftest_cmd) return cmd_selftest(as_json, out, err);
        if (*gen_poly) return cmd_gen_poly(gn, gd, gD, gprime, gseed, out_path, out);
        if (*gen_grid) return cmd_gen_grid(gn, gd, gprime, gmode, gseed, out_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace trimeval::cli
