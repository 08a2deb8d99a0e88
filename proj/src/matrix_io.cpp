#include "matbeta/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "matbeta/errors.hpp"

namespace matbeta {

namespace {

Mat parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (blank) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(field, &pos);
      } catch (const std::exception&) {
        throw InvalidInput("matrix csv: cannot parse field '" + field + "'");
      }
      while (pos < field.size() &&
             std::isspace(static_cast<unsigned char>(field[pos])))
        ++pos;
      if (pos != field.size())
        throw InvalidInput("matrix csv: trailing junk in field '" + field +
                           "'");
      row.push_back(v);
    }
    if (row.empty()) throw InvalidInput("matrix csv: empty row");
    if (!rows.empty() && row.size() != rows.front().size())
      throw InvalidInput("matrix csv: rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInput("matrix csv: no data");
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Mat parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matrix json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("data"))
    throw InvalidInput("matrix json: need an object with 'dim' and 'data'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw InvalidInput("matrix json: 'dim' must be a positive integer");
  const int n = j["dim"].get<int>();
  const auto& data = j["data"];
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw InvalidInput("matrix json: 'data' must hold dim*dim numbers");
  Mat m(n, n);
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (!data[k].is_number())
      throw InvalidInput("matrix json: 'data' must hold dim*dim numbers");
    m.a[k] = data[k].get<double>();
  }
  return m;
}

}  // namespace

Mat parse_matrix_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_csv(text);
  }
  throw InvalidInput("matrix file: empty input");
}

Mat read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix_text(buf.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

SymMatrix sym_from_mat_checked(const Mat& m, double rel_tol) {
  if (m.rows != m.cols)
    throw InvalidInput("matrix must be square, got " + std::to_string(m.rows) +
                       "x" + std::to_string(m.cols));
  double scale = 0.0;
  for (double v : m.a) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > rel_tol * scale)
        throw InvalidInput("matrix is not symmetric at (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
  return SymMatrix(m);
}

SymMatrix read_sym_matrix_file(const std::string& path) {
  Mat m = read_matrix_file(path);
  try {
    return sym_from_mat_checked(m);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace matbeta
