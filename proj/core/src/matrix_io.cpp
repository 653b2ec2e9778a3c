#include "ckron/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ckron/errors.hpp"

namespace ckron {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& detail) {
  throw ParseError(source + ": " + detail);
}

std::size_t read_dimension(const json& doc, const char* field, const std::string& source) {
  const auto it = doc.find(field);
  if (it == doc.end()) fail(source, std::string("missing field \"") + field + "\"");
  if (!it->is_number_integer() || it->get<long long>() <= 0) {
    fail(source, std::string("field \"") + field + "\" must be a positive integer");
  }
  return static_cast<std::size_t>(it->get<long long>());
}

}  // namespace

CMatrix read_matrix(std::istream& in, const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(source_name, e.what());
  }
  if (!doc.is_object()) fail(source_name, "top-level value must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "rows" && key != "cols" && key != "data") {
      fail(source_name, "unexpected field \"" + key + "\"");
    }
  }

  const std::size_t rows = read_dimension(doc, "rows", source_name);
  const std::size_t cols = read_dimension(doc, "cols", source_name);

  const auto data_it = doc.find("data");
  if (data_it == doc.end()) fail(source_name, "missing field \"data\"");
  if (!data_it->is_array()) fail(source_name, "field \"data\" must be an array");
  if (data_it->size() != rows * cols) {
    fail(source_name, "expected " + std::to_string(rows * cols) + " entries in \"data\", got " +
                          std::to_string(data_it->size()));
  }

  std::vector<cdouble> entries;
  entries.reserve(rows * cols);
  std::size_t index = 0;
  for (const auto& pair : *data_it) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      fail(source_name,
           "entry " + std::to_string(index) + " must be a [re, im] pair of numbers");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      fail(source_name, "entry " + std::to_string(index) + " is not finite");
    }
    entries.emplace_back(re, im);
    ++index;
  }
  return CMatrix(rows, cols, std::move(entries));
}

CMatrix read_matrix(const std::string& text, const std::string& source_name) {
  std::istringstream in(text);
  return read_matrix(in, source_name);
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_matrix(in, path);
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string matrix_to_json(const CMatrix& m) {
  std::string out = "{\"rows\":" + std::to_string(m.rows()) +
                    ",\"cols\":" + std::to_string(m.cols()) + ",\"data\":[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out += ',';
      const cdouble v = m(i, j);
      out += '[';
      out += format_double(v.real());
      out += ',';
      out += format_double(v.imag());
      out += ']';
    }
  }
  out += "]}";
  return out;
}

void write_matrix(std::ostream& out, const CMatrix& m) { out << matrix_to_json(m) << '\n'; }

void write_matrix_file(const std::string& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  write_matrix(out, m);
}

}  // namespace ckron
