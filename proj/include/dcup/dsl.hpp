#ifndef DCUP_DSL_HPP
#define DCUP_DSL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "dcup/diagram.hpp"

namespace dcup {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t position, std::string expected);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Parses `k: arc;arc;...` without validating the arcs.
RawArcs parse_raw(const std::string& text);

/// Parses and validates; throws SyntaxError or ValidationError.
CupDiagram parse_dsl(const std::string& text);

}  // namespace dcup

#endif
