#pragma once

#include "bolalg/algebra.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bolalg {

/// Type V- (upper sign, [e3,e4] = -e2) or Type V+ ([e3,e4] = +e2).
enum class Sign { minus, plus };

/// +1 for minus, -1 for plus: the upper/lower choice of the family's signs.
inline int sigma(Sign s) { return s == Sign::minus ? 1 : -1; }
inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
std::string to_string(Sign s);
Sign parse_sign(std::string_view text);

/// h = <e4 + x e1 + y e2 + z e3> inside g4(sign).
struct SubalgebraParams {
  Sign sign = Sign::minus;
  Rational x, y, z;

  bool operator==(const SubalgebraParams&) const = default;
};

/// G = B + h with B spanned by basis vectors of G and h spanned by h_basis.
/// Aggregate so that malformed pairs can still be inspected by check_enveloping;
/// use envelope() to build a validated one.
struct EnvelopingPair {
  LieAlgebra G;
  std::vector<int> b_indices;
  std::vector<VecQ> h_basis;
};

/// Raised when [[B,B],B] leaves B or the decomposition is not direct.
class EnvelopingError : public std::invalid_argument {
 public:
  EnvelopingError(const std::string& what, std::array<int, 3> triple = {-1, -1, -1})
      : std::invalid_argument(what), triple_(triple) {}
  std::array<int, 3> triple() const { return triple_; }

 private:
  std::array<int, 3> triple_;
};

struct EnvelopingReport {
  bool direct_sum = false;
  bool h_subalgebra = false;
  bool bol_condition = false;  // [[B,B],B] inside B
  std::vector<std::array<int, 3>> violations;  // basis triples (of G) leaving B
  bool ok() const { return direct_sum && h_subalgebra && bol_condition; }
};

LieAlgebra g4(Sign sign);
VecQ h_direction(const SubalgebraParams& s);

EnvelopingPair envelope(LieAlgebra g, std::vector<int> b_indices, std::vector<VecQ> h_basis);
EnvelopingPair subalgebra_pair(const SubalgebraParams& s);

EnvelopingReport check_enveloping(const EnvelopingPair& pair);

/// Component in B of v = b + h (G coordinates in, G coordinates out).
VecQ project_B(const EnvelopingPair& pair, const VecQ& v);

/// Coordinates along b_indices <-> G coordinates.
VecQ embed_B(const EnvelopingPair& pair, const VecQ& b);
VecQ restrict_B(const EnvelopingPair& pair, const VecQ& v);

/// xi.eta = [xi,eta]_B and (xi,eta,zeta) = [[xi,eta],zeta] on B.
Algebra induced_bol(const EnvelopingPair& pair);

/// -1/2 [[xi,eta],chi] + 1/2 [[xi,eta]_B, chi]_B for xi, eta, chi given in B coordinates.
VecQ sabinin_triple(const EnvelopingPair& pair, const VecQ& xi, const VecQ& eta, const VecQ& chi);

/// The three-dimensional family  e2.e3 = -x e1 - y e2 - z e3,
/// (e2,e3,e2) = e1, (e2,e3,e3) = +-e2, written down directly.
Algebra family_bol(const SubalgebraParams& s);

/// dim [B,B] inside G.
int derived_dimension(const EnvelopingPair& pair);

std::string family_label(const SubalgebraParams& s);

}  // namespace bolalg
