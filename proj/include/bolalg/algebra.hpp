#pragma once

#include "bolalg/linalg.hpp"
#include "bolalg/scalar.hpp"
#include "bolalg/tensor.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bolalg {

/// A vector space with a bilinear product  e_i . e_j = sum_k c(i,j,k) e_k
/// and a trilinear product  (e_i, e_j, e_k) = sum_l d(i,j,k,l) e_l.
template <class Scalar>
struct AlgebraSpec {
  AlgebraSpec() = default;
  explicit AlgebraSpec(int n, std::string name = {})
      : dim(n), bilinear(n), trilinear(n), label(std::move(name)) {}

  int dim = 0;
  Tensor3<Scalar> bilinear;
  Tensor4<Scalar> trilinear;
  std::string label;

  bool operator==(const AlgebraSpec& o) const {
    return dim == o.dim && bilinear == o.bilinear && trilinear == o.trilinear;
  }
};

template <class Scalar>
struct LieAlgebraSpec {
  LieAlgebraSpec() = default;
  explicit LieAlgebraSpec(int n, std::string name = {})
      : dim(n), bracket(n), label(std::move(name)) {}

  int dim = 0;
  Tensor3<Scalar> bracket;
  std::string label;
};

using Algebra = AlgebraSpec<Rational>;
using LieAlgebra = LieAlgebraSpec<Rational>;

/// One violated identity on one tuple of basis indices (0-based).
struct AxiomFailure {
  std::string identity;
  std::vector<int> indices;
};

struct LieReport {
  bool antisymmetry = true;
  bool jacobi = true;
  std::vector<AxiomFailure> failures;
  bool ok() const { return antisymmetry && jacobi; }
};

struct LtsReport {
  bool skew12 = true;
  bool cyclic = true;
  bool derivation = true;
  std::vector<AxiomFailure> failures;
  bool ok() const { return skew12 && cyclic && derivation; }
};

struct BolReport {
  LtsReport lts;
  bool bilinear_skew = true;  // xi . xi = 0
  bool identity2 = true;
  std::vector<AxiomFailure> failures;
  bool ok() const { return lts.ok() && bilinear_skew && identity2; }
};

/// Pi_{xi,eta} = (xi, eta, .) together with its companion xi . eta.
template <class Scalar>
struct PseudoDerivationWitness {
  std::pair<int, int> pair;
  Vec<Scalar> companion;
  Mat<Scalar> op;
};

template <class Scalar>
struct PseudoDerivationReport {
  bool bilinear_skew = true;
  bool pseudo_derivation = true;
  bool derivation = true;
  std::vector<AxiomFailure> failures;
  std::vector<PseudoDerivationWitness<Scalar>> witnesses;  // filled only when ok()
  bool ok() const { return bilinear_skew && pseudo_derivation && derivation; }
};

// ---------------------------------------------------------------------------
// evaluation

template <class Scalar>
Vec<Scalar> contract(const Tensor3<Scalar>& t, const Vec<Scalar>& a, const Vec<Scalar>& b) {
  Vec<Scalar> out = Vec<Scalar>::Zero(t.dim());
  for (const auto& [idx, c] : t.entries()) {
    const Scalar& ai = a(idx[0]);
    if (is_zero(ai)) continue;
    const Scalar& bj = b(idx[1]);
    if (is_zero(bj)) continue;
    out(idx[2]) += c * ai * bj;
  }
  return out;
}

template <class Scalar>
Vec<Scalar> contract(const Tensor4<Scalar>& t, const Vec<Scalar>& a, const Vec<Scalar>& b,
                     const Vec<Scalar>& c) {
  Vec<Scalar> out = Vec<Scalar>::Zero(t.dim());
  for (const auto& [idx, d] : t.entries()) {
    const Scalar& ai = a(idx[0]);
    if (is_zero(ai)) continue;
    const Scalar& bj = b(idx[1]);
    if (is_zero(bj)) continue;
    const Scalar& ck = c(idx[2]);
    if (is_zero(ck)) continue;
    out(idx[3]) += d * ai * bj * ck;
  }
  return out;
}

namespace detail {
inline void require_dim(Eigen::Index got, int want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + ": vector of length " + std::to_string(got) +
                                " for dimension " + std::to_string(want));
}
}  // namespace detail

template <class Scalar>
Vec<Scalar> bilinear_eval(const AlgebraSpec<Scalar>& alg, const Vec<Scalar>& a,
                          const Vec<Scalar>& b) {
  detail::require_dim(a.size(), alg.dim, "bilinear_eval");
  detail::require_dim(b.size(), alg.dim, "bilinear_eval");
  return contract(alg.bilinear, a, b);
}

template <class Scalar>
Vec<Scalar> trilinear_eval(const AlgebraSpec<Scalar>& alg, const Vec<Scalar>& a,
                           const Vec<Scalar>& b, const Vec<Scalar>& c) {
  detail::require_dim(a.size(), alg.dim, "trilinear_eval");
  detail::require_dim(b.size(), alg.dim, "trilinear_eval");
  detail::require_dim(c.size(), alg.dim, "trilinear_eval");
  return contract(alg.trilinear, a, b, c);
}

template <class Scalar>
Vec<Scalar> bracket(const LieAlgebraSpec<Scalar>& g, const Vec<Scalar>& a, const Vec<Scalar>& b) {
  detail::require_dim(a.size(), g.dim, "bracket");
  detail::require_dim(b.size(), g.dim, "bracket");
  return contract(g.bracket, a, b);
}

// ---------------------------------------------------------------------------
// axiom checks, all over basis tuples

template <class Scalar>
LieReport check_lie(const LieAlgebraSpec<Scalar>& g) {
  LieReport r;
  const int n = g.dim;
  std::vector<Vec<Scalar>> e;
  for (int i = 0; i < n; ++i) e.push_back(unit<Scalar>(n, i));

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!all_zero(Vec<Scalar>(bracket(g, e[i], e[j]) + bracket(g, e[j], e[i])))) {
        r.antisymmetry = false;
        r.failures.push_back({"antisymmetry", {i, j}});
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec<Scalar> sum = bracket(g, e[i], bracket(g, e[j], e[k])) +
                                bracket(g, e[j], bracket(g, e[k], e[i])) +
                                bracket(g, e[k], bracket(g, e[i], e[j]));
        if (!all_zero(sum)) {
          r.jacobi = false;
          r.failures.push_back({"jacobi", {i, j, k}});
        }
      }
  return r;
}

namespace detail {

template <class Scalar>
bool skew12_holds(const AlgebraSpec<Scalar>& alg, std::vector<AxiomFailure>& failures) {
  const int n = alg.dim;
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (alg.trilinear(i, j, k, l) + alg.trilinear(j, i, k, l) != Scalar(0)) {
            ok = false;
            failures.push_back({"skew12", {i, j, k}});
            break;
          }
  return ok;
}

template <class Scalar>
bool cyclic_holds(const AlgebraSpec<Scalar>& alg, std::vector<AxiomFailure>& failures) {
  const int n = alg.dim;
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (alg.trilinear(i, j, k, l) + alg.trilinear(j, k, i, l) + alg.trilinear(k, i, j, l) !=
              Scalar(0)) {
            ok = false;
            failures.push_back({"cyclic", {i, j, k}});
            break;
          }
  return ok;
}

// (a,b,.) acting as a derivation of the trilinear product, over basis 5-tuples.
template <class Scalar>
bool derivation_holds(const AlgebraSpec<Scalar>& alg, std::vector<AxiomFailure>& failures) {
  const int n = alg.dim;
  std::vector<Vec<Scalar>> e;
  for (int i = 0; i < n; ++i) e.push_back(unit<Scalar>(n, i));
  auto tri = [&](const Vec<Scalar>& a, const Vec<Scalar>& b, const Vec<Scalar>& c) {
    return contract(alg.trilinear, a, b, c);
  };
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            const Vec<Scalar> lhs = tri(e[i], e[j], tri(e[k], e[l], e[m]));
            const Vec<Scalar> rhs = tri(tri(e[i], e[j], e[k]), e[l], e[m]) +
                                    tri(e[k], tri(e[i], e[j], e[l]), e[m]) +
                                    tri(e[k], e[l], tri(e[i], e[j], e[m]));
            if (lhs != rhs) {
              ok = false;
              failures.push_back({"derivation", {i, j, k, l, m}});
            }
          }
  return ok;
}

template <class Scalar>
bool bilinear_skew_holds(const AlgebraSpec<Scalar>& alg, std::vector<AxiomFailure>& failures) {
  const int n = alg.dim;
  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (alg.bilinear(i, j, k) + alg.bilinear(j, i, k) != Scalar(0)) {
          ok = false;
          failures.push_back({"bilinear_skew", {i, j}});
          break;
        }
  return ok;
}

}  // namespace detail

template <class Scalar>
LtsReport check_lts(const AlgebraSpec<Scalar>& alg) {
  LtsReport r;
  r.skew12 = detail::skew12_holds(alg, r.failures);
  r.cyclic = detail::cyclic_holds(alg, r.failures);
  r.derivation = detail::derivation_holds(alg, r.failures);
  return r;
}

template <class Scalar>
BolReport check_bol(const AlgebraSpec<Scalar>& alg) {
  BolReport r;
  r.lts = check_lts(alg);
  r.bilinear_skew = detail::bilinear_skew_holds(alg, r.failures);

  const int n = alg.dim;
  std::vector<Vec<Scalar>> e;
  for (int i = 0; i < n; ++i) e.push_back(unit<Scalar>(n, i));
  auto mul = [&](const Vec<Scalar>& a, const Vec<Scalar>& b) {
    return contract(alg.bilinear, a, b);
  };
  auto tri = [&](const Vec<Scalar>& a, const Vec<Scalar>& b, const Vec<Scalar>& c) {
    return contract(alg.trilinear, a, b, c);
  };
  // (x,y,z)w - (x,y,w)z + (z,w,xy) - (x,y,zw) + xy.zw = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> xy = mul(e[i], e[j]);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Vec<Scalar> zw = mul(e[k], e[l]);
          const Vec<Scalar> sum = mul(tri(e[i], e[j], e[k]), e[l]) -
                                  mul(tri(e[i], e[j], e[l]), e[k]) + tri(e[k], e[l], xy) -
                                  tri(e[i], e[j], zw) + mul(xy, zw);
          if (!all_zero(sum)) {
            r.identity2 = false;
            r.failures.push_back({"identity2", {i, j, k, l}});
          }
        }
    }
  r.failures.insert(r.failures.begin(), r.lts.failures.begin(), r.lts.failures.end());
  return r;
}

/// Operator form of the axioms: Pi_{ij} = (e_i, e_j, .) must be a pseudo-derivation
/// of the product with companion e_i . e_j and a derivation of the trilinear product.
template <class Scalar>
PseudoDerivationReport<Scalar> check_pseudo_derivation(const AlgebraSpec<Scalar>& alg) {
  PseudoDerivationReport<Scalar> r;
  r.bilinear_skew = detail::bilinear_skew_holds(alg, r.failures);
  r.derivation = detail::derivation_holds(alg, r.failures);

  const int n = alg.dim;
  std::vector<Vec<Scalar>> e;
  for (int i = 0; i < n; ++i) e.push_back(unit<Scalar>(n, i));
  auto mul = [&](const Vec<Scalar>& a, const Vec<Scalar>& b) {
    return contract(alg.bilinear, a, b);
  };
  auto tri = [&](const Vec<Scalar>& a, const Vec<Scalar>& b, const Vec<Scalar>& c) {
    return contract(alg.trilinear, a, b, c);
  };

  std::vector<PseudoDerivationWitness<Scalar>> witnesses;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<Scalar> pi(n, n);
      for (int c = 0; c < n; ++c) pi.col(c) = tri(e[i], e[j], e[c]);
      const Vec<Scalar> companion = mul(e[i], e[j]);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // Pi(k.l) = Pi(k).l + k.Pi(l) + (k,l,companion) - (k.l).companion
          const Vec<Scalar> kl = mul(e[k], e[l]);
          const Vec<Scalar> lhs = pi * kl;
          const Vec<Scalar> rhs = mul(pi * e[k], e[l]) + mul(e[k], pi * e[l]) +
                                  tri(e[k], e[l], companion) - mul(kl, companion);
          if (lhs != rhs) {
            r.pseudo_derivation = false;
            r.failures.push_back({"pseudo_derivation", {i, j, k, l}});
          }
        }
      if (i < j) witnesses.push_back({{i, j}, companion, pi});
    }
  if (r.ok()) r.witnesses = std::move(witnesses);
  return r;
}

/// alpha(xi) eta - alpha(eta) xi  and  beta(xi,zeta) eta - beta(eta,zeta) xi.
template <class Scalar>
AlgebraSpec<Scalar> make_isocline(int dim, const Vec<Scalar>& alpha, const Mat<Scalar>& beta) {
  detail::require_dim(alpha.size(), dim, "make_isocline");
  if (beta.rows() != dim || beta.cols() != dim)
    throw std::invalid_argument("make_isocline: beta has the wrong shape");
  if (beta != beta.transpose()) throw std::invalid_argument("make_isocline: beta not symmetric");

  AlgebraSpec<Scalar> alg(dim, "isocline");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      alg.bilinear.add({i, j, j}, alpha(i));
      alg.bilinear.add({i, j, i}, -alpha(j));
      for (int k = 0; k < dim; ++k) {
        alg.trilinear.add({i, j, k, j}, beta(i, k));
        alg.trilinear.add({i, j, k, i}, -beta(j, k));
      }
    }
  return alg;
}

/// True iff a is invertible and carries both products of src onto those of dst.
template <class Scalar>
bool is_morphism(const Mat<Scalar>& a, const AlgebraSpec<Scalar>& src,
                 const AlgebraSpec<Scalar>& dst) {
  const int n = src.dim;
  if (dst.dim != n || a.rows() != n || a.cols() != n) return false;
  if (rank(a) != n) return false;
  std::vector<Vec<Scalar>> e, ae;
  for (int i = 0; i < n; ++i) {
    e.push_back(unit<Scalar>(n, i));
    ae.push_back(a.col(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a * contract(src.bilinear, e[i], e[j]) != contract(dst.bilinear, ae[i], ae[j]))
        return false;
      for (int k = 0; k < n; ++k)
        if (a * contract(src.trilinear, e[i], e[j], e[k]) !=
            contract(dst.trilinear, ae[i], ae[j], ae[k]))
          return false;
    }
  return true;
}

/// Lie algebra homomorphism test on basis pairs, plus invertibility.
template <class Scalar>
bool is_lie_morphism(const Mat<Scalar>& a, const LieAlgebraSpec<Scalar>& src,
                     const LieAlgebraSpec<Scalar>& dst) {
  const int n = src.dim;
  if (dst.dim != n || a.rows() != n || a.cols() != n) return false;
  if (rank(a) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec<Scalar> lhs = a * contract(src.bracket, unit<Scalar>(n, i), unit<Scalar>(n, j));
      const Vec<Scalar> rhs =
          contract(dst.bracket, Vec<Scalar>(a.col(i)), Vec<Scalar>(a.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace bolalg
