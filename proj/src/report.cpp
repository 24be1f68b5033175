#include "extshift/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "extshift/errors.hpp"

namespace extshift {

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Eigen::VectorXd& v) {
  Json values = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) values.push_back(v(i));
  return values;
}

Json zeros_to_json(const std::vector<Zero>& zeros) {
  Json list = Json::array();
  for (const Zero& z : zeros) {
    list.push_back(Json{{"re", z.alpha.real()}, {"im", z.alpha.imag()}, {"multiplicity", z.multiplicity}});
  }
  return Json{{"zeros", std::move(list)}};
}

namespace {

double number_field(const Json& entry, const char* name, std::size_t position) {
  const auto it = entry.find(name);
  if (it == entry.end() || !it->is_number()) {
    throw Error(ErrorKind::InvalidInput,
                "zero " + std::to_string(position) + " needs a numeric field '" + name + "'");
  }
  return it->get<double>();
}

}  // namespace

std::vector<Zero> zeros_from_json(const Json& document) {
  const Json* list = &document;
  if (document.is_object()) {
    const auto it = document.find("zeros");
    if (it == document.end()) throw Error(ErrorKind::InvalidInput, "missing field 'zeros'");
    list = &*it;
  }
  if (!list->is_array()) throw Error(ErrorKind::InvalidInput, "'zeros' must be an array");

  std::vector<Zero> zeros;
  std::size_t position = 1;
  for (const Json& entry : *list) {
    if (!entry.is_object()) {
      throw Error(ErrorKind::InvalidInput, "zero " + std::to_string(position) + " must be an object");
    }
    const double re = number_field(entry, "re", position);
    const double im = number_field(entry, "im", position);
    const auto mult = entry.find("multiplicity");
    if (mult == entry.end() || !mult->is_number_integer()) {
      throw Error(ErrorKind::InvalidInput,
                  "zero " + std::to_string(position) + " needs an integer field 'multiplicity'");
    }
    zeros.push_back({{re, im}, mult->get<int>()});
    ++position;
  }
  return zeros;
}

namespace {

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  if (value == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void emit(const Json& node, std::ostringstream& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (node.type()) {
    case Json::value_t::object: {
      if (node.empty()) {
        out << "{}";
        return;
      }
      if (node.size() == 2 && node.contains("re") && node.contains("im")) {
        out << "{\"re\": ";
        emit(node["re"], out, depth);
        out << ", \"im\": ";
        emit(node["im"], out, depth);
        out << "}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : node.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        emit(value, out, depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (node.empty()) {
        out << "[]";
        return;
      }
      if (std::all_of(node.begin(), node.end(), [](const Json& v) { return v.is_primitive(); })) {
        out << "[";
        bool first_scalar = true;
        for (const auto& value : node) {
          if (!first_scalar) out << ", ";
          first_scalar = false;
          emit(value, out, depth + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& value : node) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        emit(value, out, depth + 1);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      out << format_double(node.get<double>());
      return;
    default:
      out << node.dump();
      return;
  }
}

}  // namespace

std::string dump(const Json& document) {
  std::ostringstream out;
  emit(document, out, 0);
  out << "\n";
  return out.str();
}

}  // namespace extshift
