#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace extshift {

// Every threshold used by the library, resolved in one place so reports can
// embed the exact set a result was computed under.
struct Tolerances {
  double merge = 1e-12;             // two input zeros closer than this are duplicates
  double ratio = 1e-12;             // relative tolerance for grouping ratios alpha_m / alpha_n
  double nullspace = 1e-9;          // relative singular-value cutoff of the intertwining map
  double rank = 1e-10;              // relative singular-value cutoff for kernel dimensions and spans
  double ambiguity_factor = 100.0;  // singular values this close to a cutoff are ambiguous
  double condition_cap = 1e12;      // largest accepted Gram condition number
  double angle = 1e-7;              // largest principal angle (radians) accepted as a match
  double residual = 1e-9;           // relative intertwining residual of closed-form generators
  double inclusion = 1e-10;         // |alpha_i - lambda alpha_j| cutoff for the spectral inclusion
  double max_dimension = 32;        // largest N accepted by the Kronecker oracle

  // Throws Error(InvalidInput) for unknown names or nonpositive values.
  void set(std::string_view name, double value);

  // Parses "NAME=VALUE".
  void set_from_string(std::string_view assignment);

  std::vector<std::pair<std::string, double>> entries() const;
};

}  // namespace extshift
