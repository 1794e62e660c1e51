#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boundsyn {

enum class Semantics { Mealy, Moore };

/// Bitmask over an ordered list of atoms (bit j set <=> atom j true).
using Valuation = std::uint64_t;

inline constexpr int kMaxAtoms = 62;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configured size guard (expansion copies, conflict budget) trips.
class ResourceError : public Error {
 public:
  using Error::Error;
};

inline std::string_view to_string(Semantics s) { return s == Semantics::Mealy ? "mealy" : "moore"; }

inline Semantics dual(Semantics s) { return s == Semantics::Mealy ? Semantics::Moore : Semantics::Mealy; }

inline int ceil_log2(std::uint64_t x) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

}  // namespace boundsyn
