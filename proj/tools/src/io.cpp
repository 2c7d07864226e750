#include "trimeval_tools/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

namespace trimeval::io {

namespace {

std::string decimal(std::uint64_t v) { return std::to_string(v); }

std::uint64_t parse_u64(const json& v, const std::string& what) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::uint64_t out = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw ValidationError(what + ": '" + s + "' is not a non-negative decimal integer");
        }
        return out;
    }
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
    throw ValidationError(what + ": expected a non-negative integer or decimal string");
}

int parse_int(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw ValidationError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

const json& require_array(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
        throw ValidationError(std::string("field \"") + key + "\" must be an array");
    }
    return doc.at(key);
}

PrimeModulus parse_modulus(const json& doc) {
    if (!doc.is_object()) throw ValidationError("document must be a JSON object");
    if (!doc.contains("p")) throw ValidationError("missing field \"p\"");
    const std::uint64_t p = parse_u64(doc.at("p"), "field \"p\"");
    try {
        return PrimeModulus(p);
    } catch (const UsageError& e) {
        throw ValidationError(std::string("field \"p\": ") + e.what());
    }
}

FieldElement parse_element(const json& v, PrimeModulus modulus, const std::string& what) {
    const std::uint64_t x = parse_u64(v, what);
    if (x >= modulus.value()) {
        throw ValidationError(what + ": " + std::to_string(x) + " is not a residue mod " +
                              std::to_string(modulus.value()));
    }
    return FieldElement(x, modulus);
}

void check_shape(int n, int d) {
    if (n < 0) throw ValidationError("field \"n\" must be non-negative");
    if (d < 1) throw ValidationError("field \"d\" must be at least 1");
}

} // namespace

json to_json(const SparsePoly& poly) {
    json terms = json::array();
    for (const auto& t : poly.terms) {
        terms.push_back({{"exp", t.exponents.exponents}, {"coeff", decimal(t.coeff.value())}});
    }
    return {{"p", decimal(poly.modulus.value())},
            {"n", poly.n},
            {"d", poly.d},
            {"D", poly.degree_bound},
            {"terms", std::move(terms)}};
}

json to_json(const Grid& grid) {
    json nodes = json::array();
    for (int i = 0; i < grid.num_vars(); ++i) {
        json row = json::array();
        for (const auto& z : grid.row(i)) row.push_back(decimal(z.value()));
        nodes.push_back(std::move(row));
    }
    return {{"p", decimal(grid.modulus().value())},
            {"n", grid.num_vars()},
            {"d", grid.individual_degree()},
            {"nodes", std::move(nodes)}};
}

json to_json(const EvalTable& table) {
    json values = json::array();
    for (const auto& v : table.values()) values.push_back(decimal(v.value()));
    return {{"p", decimal(table.modulus().value())},
            {"n", table.num_vars()},
            {"d", table.individual_degree()},
            {"D", table.degree_bound()},
            {"values", std::move(values)}};
}

SparsePoly sparse_poly_from_json(const json& doc) {
    const PrimeModulus p = parse_modulus(doc);
    const int n = parse_int(doc, "n");
    const int d = parse_int(doc, "d");
    const int bound = parse_int(doc, "D");
    check_shape(n, d);
    SparsePoly poly{n, d, bound, p, {}};
    const json& terms = require_array(doc, "terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string where = "term " + std::to_string(t);
        const json& term = terms[t];
        if (!term.is_object() || !term.contains("exp") || !term.contains("coeff") || !term.at("exp").is_array()) {
            throw ValidationError(where + ": expected {\"exp\": [...], \"coeff\": \"...\"}");
        }
        std::vector<int> exps;
        for (const json& e : term.at("exp")) {
            if (!e.is_number_integer()) throw ValidationError(where + ": exponents must be integers");
            exps.push_back(e.get<int>());
        }
        const FieldElement c = parse_element(term.at("coeff"), p, where + " coefficient");
        poly.terms.push_back({TrimmedIndex(std::move(exps)), c});
    }
    return poly;
}

Grid grid_from_json(const json& doc) {
    const PrimeModulus p = parse_modulus(doc);
    const int n = parse_int(doc, "n");
    const int d = parse_int(doc, "d");
    check_shape(n, d);
    const json& nodes = require_array(doc, "nodes");
    if (nodes.size() != static_cast<std::size_t>(n)) {
        throw ValidationError("grid lists " + std::to_string(nodes.size()) + " node rows, expected n = " +
                              std::to_string(n));
    }
    std::vector<std::vector<FieldElement>> rows;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string where = "variable " + std::to_string(i + 1);
        if (!nodes[i].is_array()) throw ValidationError(where + ": node row must be an array");
        std::vector<FieldElement> row;
        for (const json& z : nodes[i]) row.push_back(parse_element(z, p, where + " node"));
        rows.push_back(std::move(row));
    }
    return Grid(p, d, std::move(rows));
}

EvalTable eval_table_from_json(const json& doc) {
    const PrimeModulus p = parse_modulus(doc);
    const int n = parse_int(doc, "n");
    const int d = parse_int(doc, "d");
    const int bound = parse_int(doc, "D");
    check_shape(n, d);
    const json& values = require_array(doc, "values");
    std::vector<FieldElement> out;
    out.reserve(values.size());
    for (std::size_t r = 0; r < values.size(); ++r) {
        out.push_back(parse_element(values[r], p, "value " + std::to_string(r)));
    }
    return EvalTable(n, d, bound, p, std::move(out));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_json(const json& doc, const std::string& path, std::ostream& stdout_stream) {
    if (path == "-") {
        stdout_stream << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << doc.dump(2) << '\n';
}

} // namespace trimeval::io
