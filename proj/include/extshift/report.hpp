#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "extshift/blaschke.hpp"
#include "extshift/linalg.hpp"

namespace extshift {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "extshift";
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(Complex z);
Json to_json(const Matrix& m);  // row-major: array of rows of {re, im}
Json to_json(const Eigen::VectorXd& v);

Json zeros_to_json(const std::vector<Zero>& zeros);

// Reads {"zeros": [{"re", "im", "multiplicity"}, ...]} or the bare array.
// Throws Error(InvalidInput) on schema violations.
std::vector<Zero> zeros_from_json(const Json& document);

// Serializes with two-space indentation, keys in insertion order, and every
// floating-point value printed with 17 significant digits.
std::string dump(const Json& document);

}  // namespace extshift
