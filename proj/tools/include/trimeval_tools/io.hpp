#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "trimeval/algo.hpp"
#include "trimeval/grid.hpp"
#include "trimeval/poly.hpp"

// JSON documents exchanged by the command-line tool. Field elements and the
// modulus are decimal strings; exponent vectors are integer arrays.
//
//   polynomial: {"p": "65537", "n": 3, "d": 2, "D": 4,
//                "terms": [{"exp": [1,0,2], "coeff": "7"}, ...]}
//   grid:       {"p": "65537", "n": 3, "d": 2, "nodes": [["0","1","2"], ...]}
//   table:      {"p": "65537", "n": 3, "d": 2, "D": 4, "values": ["5", ...]}
//
// Parsing is strict and throws trimeval::ValidationError with a message
// naming the offending field.

namespace trimeval::io {

using nlohmann::json;

json to_json(const SparsePoly& poly);
json to_json(const Grid& grid);
json to_json(const EvalTable& table);

SparsePoly sparse_poly_from_json(const json& doc);
Grid grid_from_json(const json& doc);
EvalTable eval_table_from_json(const json& doc);

json read_json_file(const std::string& path);
/// Writes `doc` to `path`, or to `stdout_stream` when path is "-".
void write_json(const json& doc, const std::string& path, std::ostream& stdout_stream);

} // namespace trimeval::io
