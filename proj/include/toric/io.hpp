#pragma once

#include "toric/configuration.hpp"
#include "toric/verdict.hpp"

#include <json.hpp>

namespace toric::io {

using Json = nlohmann::ordered_json;

/// JSON {"rows", "cols", "entries"} or whitespace-separated rows, one per
/// line. Blank lines and lines starting with '#' are ignored.
IntMatrix parse_matrix(const std::string &text);
IntMatrix read_matrix_file(const std::string &path);

/// "0,2,5" or "0 2 5".
IndexSet parse_index_list(const std::string &text);
std::vector<long> parse_long_list(const std::string &text);
/// Rows separated by ';', entries by spaces or commas.
IntMatrix parse_inline_matrix(const std::string &text);

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const Integer &x);
/// Integers as numbers, other values as "p/q".
Json to_json(const Rational &x);
Json to_json(const IntVector &v);
Json to_json(const RatVector &v);
Json to_json(const IndexSet &s);
Json to_json(const IntMatrix &m);
Json to_json(const LineClass &l);
Json to_json(const DecompositionReport &r);
Json to_json(const witness::Payload &w);
Json to_json(const Verdict &v);

} // namespace toric::io
