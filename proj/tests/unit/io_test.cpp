#include <algorithm>
#include <gtest/gtest.h>

#include "trimeval_tools/io.hpp"

using namespace trimeval;
using io::json;

namespace {

std::string data(const char* name) { return std::string(TRIMEVAL_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST(io, reads_worked_example_files) {
    const SparsePoly poly = io::sparse_poly_from_json(io::read_json_file(data("worked_poly.json")));
    EXPECT_EQ(poly.n, 2);
    EXPECT_EQ(poly.d, 1);
    EXPECT_EQ(poly.degree_bound, 1);
    EXPECT_EQ(poly.modulus.value(), 5u);
    ASSERT_EQ(poly.terms.size(), 3u);
    EXPECT_EQ(poly.terms[1].exponents.exponents, (std::vector<int>{1, 0}));
    EXPECT_EQ(poly.terms[1].coeff.value(), 3u);

    const Grid grid = io::grid_from_json(io::read_json_file(data("worked_grid.json")));
    EXPECT_EQ(grid.num_vars(), 2);
    EXPECT_EQ(grid.node(1, 1).value(), 1u);

    const EvalTable table = io::eval_table_from_json(io::read_json_file(data("worked_evals.json")));
    EXPECT_EQ(table, trimmed_eval(from_sparse(poly), grid));
}

TEST(io, duplicate_grid_file_is_rejected_with_location) {
    try {
        io::grid_from_json(io::read_json_file(data("duplicate_grid.json")));
        FAIL() << "duplicate accepted";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("variable 2"), std::string::npos) << e.what();
    }
}

TEST(io, json_round_trips) {
    const PrimeModulus p(65537);
    const SparsePoly poly = to_sparse(random_poly(3, 2, 4, p, 3));
    const SparsePoly back = io::sparse_poly_from_json(io::to_json(poly));
    EXPECT_EQ(from_sparse(back), from_sparse(poly));
    EXPECT_EQ(back.terms, poly.terms);

    const Grid grid = Grid::random(3, 2, p, 4);
    const Grid grid_back = io::grid_from_json(io::to_json(grid));
    for (int i = 0; i < 3; ++i)
        EXPECT_TRUE(std::equal(grid.row(i).begin(), grid.row(i).end(), grid_back.row(i).begin()));

    const EvalTable table = trimmed_eval(from_sparse(poly), grid);
    EXPECT_EQ(io::eval_table_from_json(io::to_json(table)), table);
}

TEST(io, elements_are_decimal_strings) {
    const PrimeModulus p(4611686018427387847ULL);
    const EvalTable table(1, 1, 1, p, {FieldElement(4611686018427387846ULL, p), FieldElement(0, p)});
    const json doc = io::to_json(table);
    EXPECT_EQ(doc.at("p"), "4611686018427387847");
    EXPECT_EQ(doc.at("values")[0], "4611686018427387846");
}

TEST(io, accepts_integer_residues) {
    const json doc = {{"p", 7}, {"n", 1}, {"d", 1}, {"D", 1}, {"values", {3, "4"}}};
    const EvalTable table = io::eval_table_from_json(doc);
    EXPECT_EQ(table.values()[0].value(), 3u);
    EXPECT_EQ(table.values()[1].value(), 4u);
}

TEST(io, keeps_explicit_zero_terms) {
    const json doc = {{"p", "7"}, {"n", 1}, {"d", 2}, {"D", 2},
                      {"terms", {{{"exp", {1}}, {"coeff", "0"}}, {{"exp", {2}}, {"coeff", "5"}}}}};
    EXPECT_EQ(io::sparse_poly_from_json(doc).terms.size(), 2u);
}

TEST(io, strict_validation) {
    const json good = {{"p", "7"}, {"n", 1}, {"d", 1}, {"D", 1}, {"values", {"1", "2"}}};
    EXPECT_NO_THROW(io::eval_table_from_json(good));

    auto broken = [&](auto&& mutate) {
        json doc = good;
        mutate(doc);
        return doc;
    };
    EXPECT_THROW(io::eval_table_from_json(json::array()), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d.erase("p"); })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["p"] = "8"; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["p"] = "-7"; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["p"] = "7x"; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["n"] = "1"; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["d"] = 0; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["values"][1] = "7"; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["values"][1] = -1; })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["values"].push_back("1"); })), ValidationError);
    EXPECT_THROW(io::eval_table_from_json(broken([](json& d) { d["values"] = "12"; })), ValidationError);

    const json poly = {{"p", "7"}, {"n", 2}, {"d", 1}, {"D", 1}, {"terms", {{{"exp", {1, 1}}, {"coeff", "1"}}}}};
    EXPECT_THROW(from_sparse(io::sparse_poly_from_json(poly)), ValidationError);
    const json bad_term = {{"p", "7"}, {"n", 1}, {"d", 1}, {"D", 1}, {"terms", {{{"exp", {1}}}}}};
    EXPECT_THROW(io::sparse_poly_from_json(bad_term), ValidationError);

    const json short_grid = {{"p", "7"}, {"n", 2}, {"d", 1}, {"nodes", {{"0", "1"}}}};
    EXPECT_THROW(io::grid_from_json(short_grid), ValidationError);
}

TEST(io, unreadable_files) {
    EXPECT_THROW(io::read_json_file(data("does_not_exist.json")), ValidationError);
    EXPECT_THROW(io::read_json_file(data("../CMakeLists.txt")), ValidationError);
}
