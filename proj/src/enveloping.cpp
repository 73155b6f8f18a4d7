#include "bolalg/enveloping.hpp"

#include <algorithm>

namespace bolalg {

std::string to_string(Sign s) { return s == Sign::minus ? "minus" : "plus"; }

Sign parse_sign(std::string_view text) {
  if (text == "minus" || text == "-") return Sign::minus;
  if (text == "plus" || text == "+") return Sign::plus;
  throw std::invalid_argument("sign must be 'minus' or 'plus', got '" + std::string(text) + "'");
}

LieAlgebra g4(Sign sign) {
  LieAlgebra g(4, sign == Sign::minus ? "g4-" : "g4+");
  auto put = [&g](int i, int j, int k, const Rational& c) {
    g.bracket.set({i, j, k}, c);
    g.bracket.set({j, i, k}, -c);
  };
  put(1, 2, 3, 1);              // [e2,e3] = e4
  put(1, 3, 0, -1);             // [e2,e4] = -e1
  put(2, 3, 1, -sigma(sign));   // [e3,e4] = -+e2
  return g;
}

VecQ h_direction(const SubalgebraParams& s) {
  VecQ h(4);
  h << s.x, s.y, s.z, 1;
  return h;
}

namespace {

MatQ decomposition_matrix(const EnvelopingPair& pair) {
  const int n = pair.G.dim;
  MatQ m = MatQ::Zero(n, static_cast<Eigen::Index>(pair.b_indices.size() + pair.h_basis.size()));
  Eigen::Index col = 0;
  for (int i : pair.b_indices) m(i, col++) = 1;
  for (const VecQ& h : pair.h_basis) m.col(col++) = h;
  return m;
}

bool in_B(const EnvelopingPair& pair, const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i)) && std::find(pair.b_indices.begin(), pair.b_indices.end(), i) ==
                              pair.b_indices.end())
      return false;
  return true;
}

bool in_span(const std::vector<VecQ>& basis, const VecQ& v) {
  if (all_zero(v)) return true;
  MatQ m(v.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = basis[i];
  MatQ aug(v.size(), m.cols() + 1);
  aug << m, v;
  return rank(aug) == rank(m);
}

}  // namespace

EnvelopingReport check_enveloping(const EnvelopingPair& pair) {
  EnvelopingReport r;
  const int n = pair.G.dim;
  for (int i : pair.b_indices)
    if (i < 0 || i >= n) throw std::out_of_range("B index outside the Lie algebra");

  const MatQ m = decomposition_matrix(pair);
  r.direct_sum = m.cols() == n && rank(m) == n;

  r.h_subalgebra = true;
  for (const VecQ& a : pair.h_basis)
    for (const VecQ& b : pair.h_basis)
      if (!in_span(pair.h_basis, bracket(pair.G, a, b))) r.h_subalgebra = false;

  r.bol_condition = true;
  for (int i : pair.b_indices)
    for (int j : pair.b_indices)
      for (int k : pair.b_indices) {
        const VecQ v = bracket(pair.G, bracket(pair.G, unit<Rational>(n, i), unit<Rational>(n, j)),
                               unit<Rational>(n, k));
        if (!in_B(pair, v)) {
          r.bol_condition = false;
          r.violations.push_back({i, j, k});
        }
      }
  return r;
}

EnvelopingPair envelope(LieAlgebra g, std::vector<int> b_indices, std::vector<VecQ> h_basis) {
  EnvelopingPair pair{std::move(g), std::move(b_indices), std::move(h_basis)};
  const EnvelopingReport r = check_enveloping(pair);
  if (!r.direct_sum) throw EnvelopingError("B and h do not form a direct sum decomposition");
  if (!r.h_subalgebra) throw EnvelopingError("h is not closed under the bracket");
  if (!r.bol_condition) {
    const auto t = r.violations.front();
    throw EnvelopingError("[[e" + std::to_string(t[0] + 1) + ",e" + std::to_string(t[1] + 1) +
                              "],e" + std::to_string(t[2] + 1) + "] leaves B",
                          t);
  }
  return pair;
}

EnvelopingPair subalgebra_pair(const SubalgebraParams& s) {
  return envelope(g4(s.sign), {0, 1, 2}, {h_direction(s)});
}

VecQ project_B(const EnvelopingPair& pair, const VecQ& v) {
  const MatQ m = decomposition_matrix(pair);
  if (m.rows() != m.cols()) throw EnvelopingError("B and h do not form a direct sum decomposition");
  const auto coeffs = solve_linear<Rational>(m, v);
  if (!coeffs) throw EnvelopingError("B and h do not form a direct sum decomposition");
  VecQ out = VecQ::Zero(pair.G.dim);
  for (std::size_t i = 0; i < pair.b_indices.size(); ++i)
    out(pair.b_indices[i]) = (*coeffs)(static_cast<Eigen::Index>(i));
  return out;
}

VecQ embed_B(const EnvelopingPair& pair, const VecQ& b) {
  VecQ out = VecQ::Zero(pair.G.dim);
  for (std::size_t i = 0; i < pair.b_indices.size(); ++i)
    out(pair.b_indices[i]) = b(static_cast<Eigen::Index>(i));
  return out;
}

VecQ restrict_B(const EnvelopingPair& pair, const VecQ& v) {
  if (!in_B(pair, v)) throw std::invalid_argument("restrict_B: vector has a component off B");
  VecQ out(static_cast<Eigen::Index>(pair.b_indices.size()));
  for (std::size_t i = 0; i < pair.b_indices.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = v(pair.b_indices[i]);
  return out;
}

Algebra induced_bol(const EnvelopingPair& pair) {
  const EnvelopingReport r = check_enveloping(pair);
  if (!r.direct_sum) throw EnvelopingError("B and h do not form a direct sum decomposition");
  if (!r.bol_condition) {
    const auto t = r.violations.front();
    throw EnvelopingError("[[B,B],B] leaves B", t);
  }
  const int n = static_cast<int>(pair.b_indices.size());
  const int gdim = pair.G.dim;
  Algebra alg(n, pair.G.label + " induced");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const VecQ ei = unit<Rational>(gdim, pair.b_indices[i]);
      const VecQ ej = unit<Rational>(gdim, pair.b_indices[j]);
      const VecQ br = bracket(pair.G, ei, ej);
      const VecQ prod = restrict_B(pair, project_B(pair, br));
      for (int k = 0; k < n; ++k) alg.bilinear.set({i, j, k}, prod(k));
      for (int k = 0; k < n; ++k) {
        const VecQ ek = unit<Rational>(gdim, pair.b_indices[k]);
        const VecQ tri = restrict_B(pair, bracket(pair.G, br, ek));
        for (int l = 0; l < n; ++l) alg.trilinear.set({i, j, k, l}, tri(l));
      }
    }
  return alg;
}

VecQ sabinin_triple(const EnvelopingPair& pair, const VecQ& xi, const VecQ& eta,
                    const VecQ& chi) {
  const VecQ a = embed_B(pair, xi), b = embed_B(pair, eta), c = embed_B(pair, chi);
  const VecQ ab = bracket(pair.G, a, b);
  const VecQ full = bracket(pair.G, ab, c);
  const VecQ projected = project_B(pair, bracket(pair.G, project_B(pair, ab), c));
  const Rational half(1, 2);
  return restrict_B(pair, project_B(pair, VecQ(-half * full + half * projected)));
}

Algebra family_bol(const SubalgebraParams& s) {
  Algebra alg(3, family_label(s));
  auto put2 = [&alg](int i, int j, int k, const Rational& c) {
    alg.bilinear.set({i, j, k}, c);
    alg.bilinear.set({j, i, k}, -c);
  };
  auto put3 = [&alg](int i, int j, int k, int l, const Rational& c) {
    alg.trilinear.set({i, j, k, l}, c);
    alg.trilinear.set({j, i, k, l}, -c);
  };
  put2(1, 2, 0, -s.x);
  put2(1, 2, 1, -s.y);
  put2(1, 2, 2, -s.z);
  put3(1, 2, 1, 0, 1);
  put3(1, 2, 2, 1, sigma(s.sign));
  return alg;
}

int derived_dimension(const EnvelopingPair& pair) {
  const int n = pair.G.dim;
  std::vector<VecQ> cols;
  for (int i : pair.b_indices)
    for (int j : pair.b_indices)
      cols.push_back(bracket(pair.G, unit<Rational>(n, i), unit<Rational>(n, j)));
  MatQ m(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return rank(m);
}

std::string family_label(const SubalgebraParams& s) {
  return std::string(s.sign == Sign::minus ? "V-" : "V+") + "(" + format_rational(s.x) + "," +
         format_rational(s.y) + "," + format_rational(s.z) + ")";
}

}  // namespace bolalg
