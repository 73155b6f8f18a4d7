#pragma once

#include "bolalg/algebra.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Algebra file format (JSON):
//
//   {
//     "label": "V-(0,0,1)",
//     "dim": 3,
//     "bilinear":  [ {"i": 2, "j": 3, "k": 3, "c": "-1"} ],
//     "trilinear": [ {"i": 2, "j": 3, "k": 2, "l": 1, "c": "1"} ]
//   }
//
// Indices are 1-based. Coefficients are strings "p" or "p/q". "label",
// "bilinear" and "trilinear" are optional; any other key is an error, and so
// is a repeated index tuple.

namespace bolalg {

struct BilinearEntry {
  int i = 1, j = 1, k = 1;
  Rational c = 0;
  bool operator==(const BilinearEntry&) const = default;
};

struct TrilinearEntry {
  int i = 1, j = 1, k = 1, l = 1;
  Rational c = 0;
  bool operator==(const TrilinearEntry&) const = default;
};

struct AlgebraFile {
  std::string label;
  int dim = 0;
  std::vector<BilinearEntry> bilinear;
  std::vector<TrilinearEntry> trilinear;
  bool operator==(const AlgebraFile&) const = default;
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws SpecError with "line L, column C" for syntax errors and a JSON
/// pointer (e.g. /bilinear/2/k) for everything else.
AlgebraFile parse_algebra_file(std::string_view text);
std::string emit_algebra_file(const AlgebraFile& file);

Algebra to_algebra(const AlgebraFile& file);
/// Entries in index order; zero coefficients are omitted.
AlgebraFile to_file(const Algebra& alg);

inline Algebra parse_algebra(std::string_view text) { return to_algebra(parse_algebra_file(text)); }

}  // namespace bolalg
