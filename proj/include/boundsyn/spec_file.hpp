#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "boundsyn/common.hpp"
#include "boundsyn/ltl.hpp"

namespace boundsyn {

class SpecError : public Error {
 public:
  using Error::Error;
};

/// A synthesis problem as read from a JSON specification file.
struct Specification {
  Semantics semantics = Semantics::Mealy;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<ltl::Formula> assumptions;
  std::vector<ltl::Formula> guarantees;

  ltl::Formula formula() const { return ltl::assemble_spec(assumptions, guarantees); }
};

/// Parses and validates the JSON text (disjoint alphabets, every atom declared).
Specification parse_specification(std::string_view json_text);

Specification load_specification(const std::filesystem::path& path);

}  // namespace boundsyn
