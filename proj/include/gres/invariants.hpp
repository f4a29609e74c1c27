// Determinantal and discriminant invariants: generic minors of polynomial
// matrices, binary-form discriminants via Sylvester resultants, the
// boundary-format 2x3x2 hyperdeterminant and the 4x4 Pfaffian discriminant,
// realized in the case rings of differentials.hpp.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gres/differentials.hpp"

namespace gres {

// ---------------------------------------------------------------------------
// Generic polynomial-matrix determinants and minors.
// ---------------------------------------------------------------------------

using PolyGrid = std::vector<std::vector<Polynomial>>;

// Determinant by cofactor expansion along the first row (small sizes only).
inline Polynomial poly_det(const PolyGrid& m) {
  if (m.empty()) throw std::invalid_argument("poly_det: empty matrix");
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("poly_det: matrix is not square");
  if (n == 1) return m[0][0];
  Polynomial out(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyGrid sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * poly_det(sub);
    if (c % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

namespace invariant_detail {

inline void subsets(std::size_t n, std::size_t k,
                    std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace invariant_detail

// All size x size minors of a rectangular grid, ordered by (row subset,
// column subset) in lexicographic order of index subsets.
inline std::vector<Polynomial> minors_ideal(const PolyGrid& m,
                                            std::size_t size) {
  if (m.empty()) throw std::invalid_argument("minors_ideal: empty matrix");
  std::size_t nr = m.size(), nc = m[0].size();
  if (size == 0 || size > nr || size > nc)
    throw std::invalid_argument("minors_ideal: size out of range");
  std::vector<std::vector<std::size_t>> rsets, csets;
  invariant_detail::subsets(nr, size, rsets);
  invariant_detail::subsets(nc, size, csets);
  std::vector<Polynomial> out;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      PolyGrid sub;
      for (std::size_t r : rs) {
        std::vector<Polynomial> row;
        for (std::size_t c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      out.push_back(poly_det(sub));
    }
  return out;
}

// Substitute a polynomial value for every variable of p; values live in a
// common ring, which is the ring of the result.
inline Polynomial substitute(const Polynomial& p,
                             const std::vector<Polynomial>& values) {
  if (values.size() != p.ring()->nvars())
    throw std::invalid_argument("substitute: one value per variable required");
  const RingPtr& out_ring = values.empty() ? p.ring() : values.front().ring();
  Polynomial out(out_ring);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(out_ring, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) term = term * values[v].pow(m[v]);
    out += term;
  }
  return out;
}

// Scale to integer coefficients of content one, keeping the sign.
inline Polynomial content_normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  Z den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) {
    den = ::lcm(den, c.get_den());
    num = ::gcd(num, c.get_num());
  }
  Q scale = Q(den) / Q(num);
  if (sgn(scale) < 0) scale = -scale;
  return p * scale;
}

// ---------------------------------------------------------------------------
// Discriminants of binary forms with polynomial coefficients.
// ---------------------------------------------------------------------------

namespace invariant_detail {

// The discriminant of c0 u^3 + c1 u^2 v + c2 u v^2 + c3 v^3 as a polynomial
// in generic coefficients c0..c3, computed as -Res_u(f, df/du) / c0 from the
// 5x5 Sylvester determinant.
inline const Polynomial& generic_cubic_disc() {
  static const Polynomial disc = [] {
    RingPtr g = build_case_ring({{"C", 4, PowerKind::Sym, 1}});
    auto v = [&](int i) { return Polynomial::variable(g, (std::size_t)i); };
    Polynomial zero(g);
    PolyGrid syl = {
        {v(0), v(1), v(2), v(3), zero},
        {zero, v(0), v(1), v(2), v(3)},
        {v(0) * Q(3), v(1) * Q(2), v(2), zero, zero},
        {zero, v(0) * Q(3), v(1) * Q(2), v(2), zero},
        {zero, zero, v(0) * Q(3), v(1) * Q(2), v(2)}};
    Polynomial res = poly_det(syl);
    // res = -c0 * disc: every term carries a factor of c0
    Polynomial out(g);
    for (const auto& [m, c] : res.terms()) {
      if (m[0] < 1)
        throw std::logic_error("cubic resultant not divisible by c0");
      Monomial d = m;
      d[0] -= 1;
      out.add_term(d, -c);
    }
    return out;
  }();
  return disc;
}

}  // namespace invariant_detail

// Discriminant of the binary cubic with coefficient polynomials a[t]
// (coefficient of u^(3-t) v^t), via the resultant of the form and its
// u-derivative, normalized to primitive integer coefficients.
inline Polynomial discriminant_cubic(const std::vector<Polynomial>& a) {
  if (a.size() != 4)
    throw std::invalid_argument("discriminant_cubic: need 4 coefficients");
  return content_normalized(
      substitute(invariant_detail::generic_cubic_disc(), a));
}

// Discriminant of the binary quadric a0 u^2 + a1 u v + a2 v^2, in the form
// 4 a0 a2 - a1^2.
inline Polynomial discriminant_quadric(const std::vector<Polynomial>& a) {
  if (a.size() != 3)
    throw std::invalid_argument("discriminant_quadric: need 3 coefficients");
  return a[0] * a[2] * Q(4) - a[1] * a[1];
}

// ---------------------------------------------------------------------------
// (F4, alpha2): the symmetric pencil delta and its discriminant.
// ---------------------------------------------------------------------------
namespace f4a2 {

// variable index of x_{i;jk} (j <= k after sorting)
inline std::size_t var_index(int i, int j, int k) {
  if (j > k) std::swap(j, k);
  static const int pair_index[4][4] = {{0, 0, 0, 0},
                                       {0, 0, 1, 2},
                                       {0, 0, 3, 4},
                                       {0, 0, 0, 5}};
  return static_cast<std::size_t>((i - 1) * 6 + pair_index[j][k]);
}

// the symmetric 3x3 pencil delta[j][k] = u x_{1;jk} + v x_{2;jk};
// coefficients of det(delta): entry t is the coefficient of u^(3-t) v^t
inline const std::vector<Polynomial>& delta_coeffs() {
  static const std::vector<Polynomial> coeffs = [] {
    std::vector<Polynomial> a(4, Polynomial(ring()));
    const int perm[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2},
                            {1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
    const int sgn[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p)
      for (int mask = 0; mask < 8; ++mask) {
        int t = 0;
        Monomial mono(12, 0);
        for (int j = 1; j <= 3; ++j) {
          int i = (mask >> (j - 1)) & 1 ? 2 : 1;
          if (i == 2) ++t;
          mono[var_index(i, j, perm[p][j - 1])] += 1;
        }
        a[t].add_term(mono, Q(sgn[p]));
      }
    return a;
  }();
  return coeffs;
}

// the degree-12 invariant disc(det(delta))
inline const Polynomial& disc_delta() {
  static const Polynomial d = discriminant_cubic(delta_coeffs());
  return d;
}

// 3x6 flattening N[k][(i,j)] = x_{i;jk}; its 3x3 minors generate I(O4-bar)
inline PolyGrid o4_minors_matrix() {
  PolyGrid m(3);
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 3; ++j)
        m[k - 1].push_back(Polynomial::variable(ring(), var_index(i, j, k)));
  return m;
}

}  // namespace f4a2

// ---------------------------------------------------------------------------
// (E6, alpha3): Pfaffian discriminant of the upper-left 4x4 block of the
// skew pencil M[j][k] = u x_{1;jk} + v x_{2;jk}.
// ---------------------------------------------------------------------------
namespace e6a3 {

// variable index of x_{a;jk} for the exterior pair j < k of 1..5
inline std::size_t var_index(int a, int j, int k) {
  if (j >= k) throw std::invalid_argument("var_index: need j < k");
  int idx = 0, pos = 0;
  for (int p = 1; p <= 5 && idx == 0; ++p)
    for (int q = p + 1; q <= 5; ++q) {
      if (p == j && q == k) idx = pos;
      ++pos;
    }
  return static_cast<std::size_t>((a - 1) * 10 + idx);
}

// the degree-4 invariant disc(Pf) of the 4x4 block on rows/columns 1..4
inline const Polynomial& pfaffian_disc() {
  static const Polynomial d = [] {
    auto entry = [&](int a, int j, int k) {
      return Polynomial::variable(ring(), var_index(a, j, k));
    };
    // Pf(u,v) = m12 m34 - m13 m24 + m14 m23, a binary quadric
    std::vector<Polynomial> coeff(3, Polynomial(ring()));
    const int pairs[3][4] = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}};
    const int sign[3] = {1, -1, 1};
    for (int p = 0; p < 3; ++p) {
      int j1 = pairs[p][0], k1 = pairs[p][1], j2 = pairs[p][2],
          k2 = pairs[p][3];
      Q s(sign[p]);
      coeff[0] += entry(1, j1, k1) * entry(1, j2, k2) * s;
      coeff[1] += (entry(1, j1, k1) * entry(2, j2, k2) +
                   entry(2, j1, k1) * entry(1, j2, k2)) *
                  s;
      coeff[2] += entry(2, j1, k1) * entry(2, j2, k2) * s;
    }
    return discriminant_quadric(coeff);
  }();
  return d;
}

}  // namespace e6a3

// ---------------------------------------------------------------------------
// (E6, alpha4): hyperdeterminant, pencil discriminants, and the minors
// matrices of the flattenings.
// ---------------------------------------------------------------------------
namespace e6a4 {

// the degree-12 invariant disc(det(delta))
inline const Polynomial& disc_delta() {
  static const Polynomial d = discriminant_cubic(delta_coeffs());
  return d;
}

// the degree-4 discriminant of the upper-left 2x2 minor pencil of delta
inline const Polynomial& quadric_disc() {
  static const Polynomial d =
      content_normalized(discriminant_quadric(minor_coeffs(1, 2, 1, 2)));
  return d;
}

// 6x3 flattening M[(i,k)][j] = x_{ijk} of the slice map F -> E* (x) H*;
// rows ordered (i,k) = (1,1),(1,2),(1,3),(2,1),(2,2),(2,3)
inline PolyGrid flattening_by_F() {
  PolyGrid m(6);
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 3; ++k)
      for (int j = 1; j <= 3; ++j)
        m[(i - 1) * 3 + (k - 1)].push_back(
            Polynomial::variable(ring(), vidx(i, j, k)));
  return m;
}

// 9x2 flattening M[(j,k)][i] = x_{ijk} of the map E -> F* (x) H*;
// rows ordered (j,k) row-major
inline PolyGrid flattening_by_E() {
  PolyGrid m(9);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      for (int i = 1; i <= 2; ++i)
        m[(j - 1) * 3 + (k - 1)].push_back(
            Polynomial::variable(ring(), vidx(i, j, k)));
  return m;
}

// the 20 cubic generators of I(O11-bar): 3x3 minors of flattening_by_F
inline std::vector<Polynomial> o11_minors() {
  return minors_ideal(flattening_by_F(), 3);
}

// the 36 quadric generators of I(O6-bar): 2x2 minors of flattening_by_E
inline std::vector<Polynomial> o6_minors() {
  return minors_ideal(flattening_by_E(), 2);
}

// the 45 quadric generators of I(O3-bar): 2x2 minors of flattening_by_F
inline std::vector<Polynomial> o3_minors() {
  return minors_ideal(flattening_by_F(), 2);
}

}  // namespace e6a4

// ---------------------------------------------------------------------------
// Spec-level free functions.
// ---------------------------------------------------------------------------

// det(delta) coefficient vector of the named case ("e6a4" or "f4a2")
inline const std::vector<Polynomial>& generic_det_delta(
    const std::string& case_id) {
  if (case_id == "e6a4") return e6a4::delta_coeffs();
  if (case_id == "f4a2") return f4a2::delta_coeffs();
  throw std::invalid_argument("generic_det_delta: unknown case " + case_id);
}

// Hyperdeterminant of the boundary format 2x3x2, on the slice of the
// (E6, alpha4) ring using only the first two H-indices.  Realized as the
// 6x6 determinant of the multiplication map
//   {u_a g_j} -> bidegree (2,1) forms,   g_j = sum_{i,k} x_{ijk} u_i w_k,
// whose vanishing detects a common zero of the three bilinear forms g_j.
inline const Polynomial& hyperdet_232() {
  static const Polynomial h = [] {
    const RingPtr& r = e6a4::ring();
    Polynomial zero(r);
    // bidegree (2,1) monomial order: u1^2 w1, u1^2 w2, u1u2 w1, u1u2 w2,
    // u2^2 w1, u2^2 w2; row (a,j) holds the coefficients of u_a g_j
    auto mono_index = [](int i1, int i2, int k) {
      // i1 <= i2 are the u-indices, k the w-index
      int pair = (i1 == 1) ? (i2 == 1 ? 0 : 1) : 2;
      return pair * 2 + (k - 1);
    };
    PolyGrid m(6, std::vector<Polynomial>(6, zero));
    for (int a = 1; a <= 2; ++a)
      for (int j = 1; j <= 3; ++j) {
        int row = (a - 1) * 3 + (j - 1);
        for (int i = 1; i <= 2; ++i)
          for (int k = 1; k <= 2; ++k) {
            int col = mono_index(std::min(a, i), std::max(a, i), k);
            m[row][col] += Polynomial::variable(r, e6a4::vidx(i, j, k));
          }
      }
    return content_normalized(poly_det(m));
  }();
  return h;
}

// the degree-4 Pfaffian discriminant in the (E6, alpha3) ring
inline const Polynomial& pfaffian_disc_4x4() { return e6a3::pfaffian_disc(); }

// the degree-4 invariant of the (E6, alpha2) ring
inline Polynomial quartic_wedge3_invariant() {
  return e6a2::quartic_invariant();
}

}  // namespace gres
