#pragma once

// Plain-text network files.
//
//   # comment
//   n_states  = 5
//   n_inputs  = 2
//   n_outputs = 2
//   L_cols = 1 4 3 5 4 2 3 3 4 4
//   H_cols = 1 1 2 1 2
//
// One `key = value` per line; blank lines and lines starting with '#' are
// ignored. All indices are 1-based. L_cols holds N*M entries in input-major
// order: position (j-1)*N + i is the successor of state i under input j.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "recon/bcn.hpp"

namespace recon {

class ParseError : public std::runtime_error {
 public:
  /// `line` is 1-based, 0 when the error is not tied to a line (missing key).
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Bcn parse_network(std::string_view text);
std::string serialize_network(const Bcn& bcn);

}  // namespace recon
