#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric::io {

namespace {

Integer json_integer(const Json &x) {
  if (x.is_number_integer())
    return Integer(std::to_string(x.get<long long>()));
  if (x.is_string()) {
    try {
      return Integer(x.get<std::string>());
    } catch (const std::invalid_argument &) {
    }
  }
  throw InvalidInput("matrix entry is not an integer: " + x.dump());
}

IntMatrix parse_json_matrix(const std::string &text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries"))
    throw InvalidInput("matrix JSON needs an \"entries\" array");
  const Json &entries = doc["entries"];
  if (!entries.is_array())
    throw InvalidInput("\"entries\" must be an array of rows");
  std::size_t rows = entries.size();
  std::size_t cols = rows ? entries[0].size() : 0;
  if (doc.contains("rows") && doc["rows"].get<std::size_t>() != rows)
    throw InvalidInput("\"rows\" does not match the entries");
  if (doc.contains("cols")) {
    std::size_t declared = doc["cols"].get<std::size_t>();
    if (rows && declared != cols)
      throw InvalidInput("\"cols\" does not match the entries");
    cols = declared;
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw InvalidInput("row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = json_integer(entries[i][j]);
  }
  return m;
}

std::vector<std::string> tokens(const std::string &line) {
  std::string s = line;
  for (auto &ch : s)
    if (ch == ',')
      ch = ' ';
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;)
    out.push_back(t);
  return out;
}

Integer token_integer(const std::string &t) {
  try {
    return Integer(t);
  } catch (const std::invalid_argument &) {
    throw InvalidInput("not an integer: \"" + t + "\"");
  }
}

IntMatrix matrix_from_lines(const std::vector<std::string> &lines) {
  std::vector<IntVector> rows;
  for (const auto &line : lines) {
    auto ts = tokens(line);
    if (ts.empty() || ts[0][0] == '#')
      continue;
    IntVector row;
    for (const auto &t : ts)
      row.push_back(token_integer(t));
    if (!rows.empty() && row.size() != rows[0].size())
      throw InvalidInput("rows of different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw InvalidInput("empty matrix");
  return IntMatrix::from_rows(rows, rows[0].size());
}

} // namespace

IntMatrix parse_matrix(const std::string &text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw InvalidInput("empty matrix input");
  if (text[first] == '{')
    return parse_json_matrix(text);
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);)
    lines.push_back(line);
  return matrix_from_lines(lines);
}

IntMatrix read_matrix_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

IndexSet parse_index_list(const std::string &text) {
  IndexSet out;
  for (const auto &t : tokens(text)) {
    Integer x = token_integer(t);
    if (x < 0 || !x.fits_ulong_p())
      throw InvalidInput("bad index: " + t);
    out.push_back(x.get_ui());
  }
  return out;
}

std::vector<long> parse_long_list(const std::string &text) {
  std::vector<long> out;
  for (const auto &t : tokens(text)) {
    Integer x = token_integer(t);
    if (!x.fits_slong_p())
      throw InvalidInput("value out of range: " + t);
    out.push_back(x.get_si());
  }
  return out;
}

IntMatrix parse_inline_matrix(const std::string &text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == ';') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  lines.push_back(cur);
  return matrix_from_lines(lines);
}

Json to_json(const Integer &x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

Json to_json(const Rational &x) {
  Rational q = x;
  q.canonicalize();
  if (q.get_den() == 1)
    return to_json(Integer(q.get_num()));
  return q.get_str();
}

Json to_json(const IntVector &v) {
  Json out = Json::array();
  for (const auto &x : v)
    out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector &v) {
  Json out = Json::array();
  for (const auto &x : v)
    out.push_back(to_json(x));
  return out;
}

Json to_json(const IndexSet &s) {
  Json out = Json::array();
  for (auto i : s)
    out.push_back(i);
  return out;
}

Json to_json(const IntMatrix &m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    entries.push_back(to_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const LineClass &l) {
  return Json{{"direction", to_json(l.direction)},
              {"members", to_json(l.members)},
              {"sum", to_json(l.sum)}};
}

Json to_json(const DecompositionReport &r) {
  return Json{{"repeat_codim", r.repeat_codim},
              {"apex_indices", to_json(r.apex_indices)},
              {"core_indices", to_json(r.core_indices)},
              {"pyramid_order", r.pyramid_order()},
              {"splitting_valid", r.splitting_valid},
              {"splitting_failure", r.splitting_failure},
              {"join_shape",
               {{"k", r.join_shape.k},
                {"apex", r.join_shape.apex},
                {"core", r.join_shape.core}}}};
}

namespace {

Json lines_json(const std::vector<LineClass> &ls) {
  Json out = Json::array();
  for (const auto &l : ls)
    out.push_back(to_json(l));
  return out;
}

struct WitnessJson {
  Json operator()(const witness::None &) const {
    return Json{{"type", "none"}};
  }
  Json operator()(const witness::ViolatingLine &w) const {
    return Json{{"type", "violating_line"}, {"line", to_json(w.line)}};
  }
  Json operator()(const witness::BalancedLines &w) const {
    return Json{{"type", "balanced_lines"}, {"lines", lines_json(w.lines)}};
  }
  Json operator()(const witness::PositiveRelation &w) const {
    return Json{{"type", "positive_relation"},
                {"indices", to_json(w.indices)},
                {"coefficients", to_json(w.coefficients)}};
  }
  Json operator()(const witness::GaleSeparation &w) const {
    return Json{{"type", "gale_separation"},
                {"indices", to_json(w.indices)},
                {"direction", to_json(w.direction)}};
  }
  Json operator()(const witness::Functional &w) const {
    return Json{{"type", "functional"},
                {"constant", to_json(w.constant)},
                {"linear", to_json(w.linear)}};
  }
  Json operator()(const witness::ClassFunctionals &w) const {
    Json classes = Json::array(), fs = Json::array();
    for (const auto &c : w.classes)
      classes.push_back(to_json(c));
    for (const auto &f : w.functionals)
      fs.push_back(to_json(f));
    return Json{{"type", "class_functionals"},
                {"classes", classes},
                {"functionals", fs}};
  }
  Json operator()(const witness::ParitySubset &w) const {
    return Json{{"type", "parity_subset"}, {"rows", to_json(w.rows)}};
  }
  Json operator()(const witness::BinomialProducts &w) const {
    return Json{{"type", "binomial_products"},
                {"basis", to_json(w.basis)},
                {"positive_side", to_json(w.positive_side)},
                {"negative_side", to_json(w.negative_side)},
                {"failing_column", w.failing_column}};
  }
  Json operator()(const witness::SmoothnessCertificate &w) const {
    Json vs = Json::array();
    for (const auto &v : w.vertices) {
      Json edges = Json::array();
      for (const auto &e : v.edge_vectors)
        edges.push_back(to_json(e));
      vs.push_back(Json{{"vertex", v.vertex},
                        {"edge_targets", to_json(v.edge_targets)},
                        {"edge_vectors", edges},
                        {"lattice_index", to_json(v.lattice_index)}});
    }
    return Json{{"type", "smoothness_certificate"},
                {"vertices", vs},
                {"failing_vertex", w.failing_vertex},
                {"reason", w.reason}};
  }
  Json operator()(const DecompositionReport &r) const {
    Json out = Json{{"type", "decomposition"}};
    out.update(to_json(r));
    return out;
  }
};

} // namespace

Json to_json(const witness::Payload &w) { return std::visit(WitnessJson{}, w); }

Json to_json(const Verdict &v) {
  return Json{{"verdict", v.value},
              {"criterion", v.criterion},
              {"witness", to_json(v.witness)},
              {"notes", v.notes}};
}

} // namespace toric::io
