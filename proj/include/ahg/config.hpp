#pragma once

#include "ahg/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ahg {

struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Problem input: the matrix A, parameter beta, weight w, an optional
/// lattice basis, and the bounding knobs. Parsed from a versioned config
/// document ("ahg-config 1" header line followed by a JSON body).
struct ProblemConfig {
  IMat A;                       // d x n
  QVec beta;                    // length d
  QVec w;                       // length n
  std::optional<IMat> basis;    // n x h, columns are basis vectors
  int radius = 12;
  Rat weight_cap = Rat(8);
  int degree_cap = 8;

  int d() const { return static_cast<int>(A.rows()); }
  int n() const { return static_cast<int>(A.cols()); }

  bool operator==(const ProblemConfig& o) const;
};

/// Parses a config document; throws config_error on malformed input or
/// inconsistent dimensions.
ProblemConfig parse_config(const std::string& text);

/// Serializes a config; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ProblemConfig& c);

/// Reads and parses a config file; throws config_error when unreadable.
ProblemConfig load_config(const std::string& path);

}  // namespace ahg
