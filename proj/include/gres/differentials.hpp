// Bridge from based equivariant maps to polynomial matrices, plus the
// registry of explicitly constructed differentials for each case.
//
// A case ring is Sym(W*) for W a tensor product of symmetric/exterior
// powers; its degree-one part is identified with the based dual space so
// composed map chains can be converted into matrices of forms.
#ifndef GRES_DIFFERENTIALS_HPP
#define GRES_DIFFERENTIALS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gres/module.hpp"
#include "gres/polyring.hpp"
#include "gres/tensor.hpp"

namespace gres {

// One tensor factor of the representation W (so the ring is Sym(W*)).
struct CaseFactor {
  std::string id;  // space name, e.g. "E"
  int dim = 0;
  PowerKind kind = PowerKind::Sym;
  int power = 1;
};

namespace diff_detail {

inline std::string tuple_digits(const IndexTuple& t) {
  std::string s;
  for (int x : t) s += std::to_string(x);
  return s;
}

inline FactorKind to_factor_kind(PowerKind k) {
  return k == PowerKind::Ext ? FactorKind::Exterior : FactorKind::Symmetric;
}

inline long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// product of multiplicity factorials of a multiset tuple
inline long multiplicity_factor(const IndexTuple& t) {
  long r = 1;
  int run = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] == t[i - 1])
      ++run;
    else {
      r *= factorial(run);
      run = 1;
    }
  }
  r *= factorial(run);
  return r;
}

}  // namespace diff_detail

// Coordinate ring Sym(W*): one variable per basis element of W*, named by
// concatenating the per-factor index tuples ("x111", "x12;3", ...).
inline RingPtr build_case_ring(const std::vector<CaseFactor>& factors,
                               const std::string& var_prefix = "x",
                               bool separate_factors = false) {
  std::vector<std::vector<IndexTuple>> bases;
  for (const auto& f : factors)
    bases.push_back(power_basis(f.dim, f.power, f.kind));
  std::vector<VariableSpec> vars;
  std::vector<std::size_t> pos(factors.size(), 0);
  while (true) {
    std::string name = var_prefix;
    std::vector<Slot> slots;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f && separate_factors) name += ";";
      name += diff_detail::tuple_digits(bases[f][pos[f]]);
      for (int idx : bases[f][pos[f]]) slots.push_back({factors[f].id, idx});
    }
    vars.push_back({name, vars.size(), "", slots});
    // row-major increment, last factor fastest (matches TensorSpace order)
    std::size_t f = factors.size();
    while (f-- > 0) {
      if (++pos[f] < bases[f].size()) break;
      pos[f] = 0;
      if (f == 0) {
        std::vector<FactorSpec> fs;
        for (const auto& cf : factors)
          fs.push_back({cf.id, cf.dim, diff_detail::to_factor_kind(cf.kind)});
        return PolynomialRing::create(std::move(vars), std::move(fs));
      }
    }
  }
}

// The based dual space W* matching the variable order of build_case_ring.
inline TensorSpace case_dual_space(const std::vector<CaseFactor>& factors) {
  std::vector<TensorFactor> tf;
  std::map<std::string, int> dims;
  for (const auto& f : factors) {
    tf.push_back({f.id, true, f.kind, f.power});
    dims[f.id] = f.dim;
  }
  return TensorSpace(tf, dims);
}

// Linear identification of a based space with the degree-one part of the
// ring.  `images[i]` is the polynomial for the i-th basis element.
struct RingEmbedding {
  RingPtr ring;
  TensorSpace domain;
  std::vector<Polynomial> images;
};

// W* -> A_1, with the multiplicity factorials the pairing of symmetric
// monomials with coordinates produces (wedge pairings contribute 1).
inline RingEmbedding degree_one_embedding(const RingPtr& ring,
                                          const std::vector<CaseFactor>& factors) {
  TensorSpace sp = case_dual_space(factors);
  if (sp.dim() != ring->nvars())
    throw std::invalid_argument("degree_one_embedding: dimension mismatch");
  RingEmbedding em{ring, sp, {}};
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    auto pos = sp.unflatten(i);
    long coeff = 1;
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (factors[f].kind == PowerKind::Sym)
        coeff *= diff_detail::multiplicity_factor(sp.bases()[f][pos[f]]);
    Polynomial p(ring);
    Monomial mono(ring->nvars(), 0);
    mono[i] = 1;
    p.add_term(mono, Q(coeff));
    em.images.push_back(p);
  }
  return em;
}

// Convert an equivariant map into a matrix of forms.  The first
// `free_count` codomain factors index the target free module's rows; the
// remaining factors are consumed, in order, by the listed embeddings (each
// embedding eats one copy of its domain's factors) and the resulting
// polynomials are multiplied.  All domain factors index the columns.
inline PolyMatrix to_poly_matrix(const EquivariantMap& m, std::size_t free_count,
                                 const std::vector<RingEmbedding>& ems,
                                 int target_twist, int source_twist) {
  if (ems.empty()) throw std::invalid_argument("to_poly_matrix: no embeddings");
  const RingPtr& ring = ems.front().ring;
  const auto& cf = m.codomain.factors();
  if (free_count > cf.size())
    throw std::invalid_argument("to_poly_matrix: bad free factor count");
  std::size_t at = free_count;
  std::vector<std::size_t> group_dim;
  for (const auto& em : ems) {
    if (em.ring != ring)
      throw std::invalid_argument("to_poly_matrix: mixed rings");
    std::size_t d = 1;
    for (const auto& f : em.domain.factors()) {
      if (at >= cf.size() || !(cf[at] == f))
        throw std::invalid_argument(
            "to_poly_matrix: codomain tail does not match the embeddings");
      d *= m.codomain.bases()[at].size();
      ++at;
    }
    group_dim.push_back(d);
  }
  if (at != cf.size())
    throw std::invalid_argument("to_poly_matrix: leftover codomain factors");

  std::size_t free_dim = 1;
  for (std::size_t f = 0; f < free_count; ++f)
    free_dim *= m.codomain.bases()[f].size();
  std::size_t emb_dim = 1;
  for (auto d : group_dim) emb_dim *= d;

  GradedFreeModule target(ring, std::vector<int>(free_dim, target_twist));
  GradedFreeModule source(ring, std::vector<int>(m.domain.dim(), source_twist));
  PolyMatrix out(target, source);
  for (std::size_t col = 0; col < m.domain.dim(); ++col) {
    for (const auto& [row, v] : m.matrix.column(col)) {
      std::size_t fr = row / emb_dim;
      std::size_t ei = row % emb_dim;
      // decompose the embedded part into groups (row-major, last fastest)
      std::vector<std::size_t> gi(ems.size());
      for (std::size_t g = ems.size(); g-- > 0;) {
        gi[g] = ei % group_dim[g];
        ei /= group_dim[g];
      }
      Polynomial p = Polynomial::constant(ring, v);
      for (std::size_t g = 0; g < ems.size(); ++g)
        p = p * ems[g].images[gi[g]];
      out.at(fr, col) = out.at(fr, col) + p;
    }
  }
  if (!out.is_homogeneous())
    throw std::logic_error("to_poly_matrix: result not homogeneous");
  return out;
}

// Single-embedding convenience: the embedding is repeated over however many
// copies of its domain the codomain tail holds.
inline PolyMatrix to_poly_matrix(const EquivariantMap& m, std::size_t free_count,
                                 const RingEmbedding& em, int target_twist,
                                 int source_twist) {
  std::size_t nemb = em.domain.factors().size();
  std::size_t trailing = m.codomain.factors().size() - free_count;
  if (nemb == 0 || trailing % nemb != 0)
    throw std::invalid_argument("to_poly_matrix: embedded factors mismatch");
  std::vector<RingEmbedding> ems(trailing / nemb, em);
  return to_poly_matrix(m, free_count, ems, target_twist, source_twist);
}

// Scale a matrix of forms so all coefficients are integers of content one
// (the overall sign of each matrix is left as constructed).
inline PolyMatrix normalize_content(const PolyMatrix& m) {
  Z num_gcd = 0, den_lcm = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& [mono, q] : m.at(r, c).terms()) {
        num_gcd = gcd(num_gcd, Z(q.get_num()));
        den_lcm = lcm(den_lcm, Z(q.get_den()));
      }
  if (num_gcd == 0) return m;
  Q scale = Q(den_lcm) / Q(num_gcd);
  PolyMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = m.at(r, c) * Polynomial::constant(m.ring(), scale);
  return out;
}

// Stack matrices vertically (same source module, concatenated targets).
inline PolyMatrix concat_rows(const std::vector<PolyMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("concat_rows: empty");
  std::vector<int> twists;
  for (const auto& b : blocks) {
    if (!(b.source() == blocks.front().source()))
      throw std::invalid_argument("concat_rows: source mismatch");
    twists.insert(twists.end(), b.target().twists.begin(),
                  b.target().twists.end());
  }
  GradedFreeModule target(blocks.front().ring(), std::move(twists));
  PolyMatrix out(target, blocks.front().source());
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.at(r0 + r, c) = b.at(r, c);
    r0 += b.rows();
  }
  return out;
}

// ---------------------------------------------------------------------------
// (G2, alpha2): W = Sym3(E), E = C^2; ring Q[x_ijk].  The free module
// written (a,b) is S_(a,b)E* (x) A(-(a+b)/3), realized with the rank-one
// factor Ext2(E*) split off: S_(a,b)E* = (Ext2 E*)^(x)b (x) S_(a-b)E*.
// ---------------------------------------------------------------------------
namespace g2a2 {

inline const std::vector<CaseFactor>& case_factors() {
  static const std::vector<CaseFactor> f = {{"E", 2, PowerKind::Sym, 3}};
  return f;
}
inline const RingPtr& ring() {
  static const RingPtr r = build_case_ring(case_factors());
  return r;
}
inline const RingEmbedding& embedding() {
  static const RingEmbedding e = degree_one_embedding(ring(), case_factors());
  return e;
}

// block (4,2) -> (2,1) of the first differential of the normalization
inline PolyMatrix o2_block_a() {
  TensorSpace dom({Ext(2, "E", true), Sym(2, "E", true)}, {{"E", 2}});
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 1);
  auto m = multiply_at(s1.codomain, {1, 2, 3}, PowerKind::Sym);
  return normalize_content(
      to_poly_matrix(compose({s0, s1, m}), 1, embedding(), 1, 2));
}

// block (4,2) -> A; also the first differential of the O1 resolution
inline PolyMatrix o2_block_b() {
  TensorSpace dom({Ext(2, "E", true), Ext(2, "E", true), Sym(2, "E", true)},
                  {{"E", 2}});
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 1);
  auto s2 = diagonal_at(s1.codomain, 4, 1, 1);
  auto m135 = multiply_at(s2.codomain, {0, 2, 4}, PowerKind::Sym);
  auto m246 = multiply_at(m135.codomain, {1, 2, 3}, PowerKind::Sym);
  return normalize_content(
      to_poly_matrix(compose({s0, s1, s2, m135, m246}), 0, embedding(), 0, 2));
}

// d2 : (5,4) -> (4,2) of the O1 resolution
inline PolyMatrix o1_d2() {
  TensorSpace dom({Ext(2, "E", true), Ext(2, "E", true), Vec("E", true)},
                  {{"E", 2}});
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 1);
  auto m23 = multiply_at(s1.codomain, {1, 2}, PowerKind::Sym);
  auto m145 = multiply_at(m23.codomain, {0, 2, 3}, PowerKind::Sym);
  auto swap = permute_factors(m145.codomain, {1, 0});
  return normalize_content(
      to_poly_matrix(compose({s0, s1, m23, m145, swap}), 1, embedding(), 2, 3));
}

// first differential A (+) (2,1) <- (4,2) of the normalization of O2-bar
inline PolyMatrix o2_d1() { return concat_rows({o2_block_b(), o2_block_a()}); }

}  // namespace g2a2

// ---------------------------------------------------------------------------
// Symplectic machinery on F = C^6 with form w(e_i, e_{i+3}) = 1:
// Ext3(F) = F (+) V with V = ker(contraction) of dimension 14, projection
// phi and section psi with phi o psi = id, and the duality delta: F -> F*.
// ---------------------------------------------------------------------------
struct SymplecticKit {
  int n = 6;
  QMatrix form;           // form(i,j) = w(e_{i+1}, e_{j+1})
  QMatrix delta;          // column i = coordinates of delta(e_{i+1}) in F*
  EquivariantMap contraction;  // Ext3 F -> F by the form
  EquivariantMap psi;          // V -> Ext3 F, weight-adapted basis of V
  EquivariantMap phi;          // Ext3 F -> V, projection along w ^ F
};

inline const SymplecticKit& symplectic_kit() {
  static const SymplecticKit kit = [] {
    SymplecticKit k;
    k.form = QMatrix(6, 6);
    for (int i = 0; i < 3; ++i) {
      k.form(i, i + 3) = 1;
      k.form(i + 3, i) = -1;
    }
    // delta(v) = w(v, .): row j of delta is w(., e_{j+1})
    k.delta = QMatrix(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) k.delta(j, i) = k.form(i, j);

    std::map<std::string, int> dims = {{"F", 6}};
    TensorSpace ext3 = single_space(Ext(3, "F"), 6);
    TensorSpace f({Vec("F")}, dims);
    k.contraction = EquivariantMap(ext3, f);
    auto w = [&](int a, int b) { return k.form(a - 1, b - 1); };
    const auto& basis = ext3.bases()[0];
    for (std::size_t col = 0; col < basis.size(); ++col) {
      int a = basis[col][0], b = basis[col][1], c = basis[col][2];
      k.contraction.matrix.add(c - 1, col, w(a, b));
      k.contraction.matrix.add(b - 1, col, -w(a, c));
      k.contraction.matrix.add(a - 1, col, w(b, c));
    }

    // weight-adapted basis of V, ordered to match the variable list of the
    // (F4, alpha1) ring; entries are triples with signs
    using Term = std::pair<IndexTuple, int>;
    const std::vector<std::vector<Term>> vbasis = {
        {{{1, 2, 3}, 1}},                    // e1+e2+e3
        {{{1, 2, 6}, 1}},                    // e1+e2-e3
        {{{1, 2, 5}, 1}, {{1, 3, 6}, -1}},   // e1
        {{{1, 2, 4}, 1}, {{2, 3, 6}, 1}},    // e2
        {{{1, 3, 5}, 1}},                    // e1-e2+e3
        {{{1, 3, 4}, 1}, {{2, 3, 5}, -1}},   // e3
        {{{1, 5, 6}, 1}},                    // e1-e2-e3
        {{{2, 3, 4}, 1}},                    // -e1+e2+e3
        {{{1, 4, 6}, 1}, {{2, 5, 6}, -1}},   // -e3
        {{{2, 4, 6}, 1}},                    // -e1+e2-e3
        {{{1, 4, 5}, 1}, {{3, 5, 6}, 1}},    // -e2
        {{{2, 4, 5}, 1}, {{3, 4, 6}, -1}},   // -e1
        {{{3, 4, 5}, 1}},                    // -e1-e2+e3
        {{{4, 5, 6}, 1}},                    // -e1-e2-e3
    };
    std::map<std::string, int> vdims = dims;
    vdims["V"] = 14;
    TensorSpace vspace({Vec("V")}, vdims);
    k.psi = EquivariantMap(vspace, ext3);
    for (std::size_t col = 0; col < vbasis.size(); ++col)
      for (const auto& [t, s] : vbasis[col])
        k.psi.matrix.add(ext3.factor_index(0, t), col, s);

    // the complement w ^ F inside Ext3 F
    QMatrix wf(20, 6);
    TensorSpace f2 = single_space(Ext(2, "F"), 6);
    const auto& b2 = f2.bases()[0];
    for (int i = 1; i <= 6; ++i) {
      for (std::size_t p = 0; p < b2.size(); ++p) {
        int a = b2[p][0], b = b2[p][1];
        Q wv = w(a, b);
        if (gres::is_zero(wv)) continue;
        IndexTuple t = {a, b, i};
        int sign = tensor_detail::merge_sign_and_sort(t, PowerKind::Ext);
        if (sign == 0) continue;
        wf(ext3.factor_index(0, t), i - 1) += wv * sign;
      }
    }
    // phi = top 14 rows of [psi | wf]^{-1}
    QMatrix full(20, 20);
    QMatrix psid = k.psi.matrix.dense();
    for (std::size_t r = 0; r < 20; ++r) {
      for (std::size_t c = 0; c < 14; ++c) full(r, c) = psid(r, c);
      for (std::size_t c = 0; c < 6; ++c) full(r, 14 + c) = wf(r, c);
    }
    auto inv = solve_matrix(full, QMatrix::identity(20));
    if (!inv) throw std::logic_error("symplectic_kit: basis not invertible");
    k.phi = EquivariantMap(ext3, vspace);
    QMatrix top(14, 20);
    for (std::size_t r = 0; r < 14; ++r)
      for (std::size_t c = 0; c < 20; ++c) top(r, c) = (*inv)(r, c);
    k.phi.matrix = SparseMatrix::from_dense(top);
    return k;
  }();
  return kit;
}

// ---------------------------------------------------------------------------
// (F4, alpha1): W = V = V(omega3) of Sp(6); ring has 14 variables labeled
// by the grading's roots, ordered to match the weight-adapted basis of V.
// ---------------------------------------------------------------------------
namespace f4a1 {

inline const RingPtr& ring() {
  static const RingPtr r = [] {
    const std::vector<std::pair<std::string, std::string>> names = {
        {"x1342", "e1+e2+e3"},  {"x1242", "e1+e2-e3"}, {"x1232", "e1"},
        {"x1231", "e2"},        {"x1222", "e1-e2+e3"}, {"x1221", "e3"},
        {"x1122", "e1-e2-e3"},  {"x1220", "-e1+e2+e3"}, {"x1121", "-e3"},
        {"x1120", "-e1+e2-e3"}, {"x1111", "-e2"},      {"x1110", "-e1"},
        {"x1100", "-e1-e2+e3"}, {"x1000", "-e1-e2-e3"},
    };
    std::vector<VariableSpec> vars;
    for (std::size_t i = 0; i < names.size(); ++i)
      vars.push_back({names[i].first, i, names[i].second,
                      {{"V", static_cast<int>(i) + 1}}});
    return PolynomialRing::create(std::move(vars), {{"V", 14, FactorKind::Tensor}});
  }();
  return r;
}

// V* -> A_1 with unit coefficients (plain 14-dimensional space)
inline const RingEmbedding& embedding() {
  static const RingEmbedding e = [] {
    std::map<std::string, int> dims = {{"V", 14}, {"F", 6}};
    RingEmbedding em{ring(), TensorSpace({Vec("V", true)}, dims), {}};
    for (std::size_t i = 0; i < 14; ++i) {
      Polynomial p(ring());
      Monomial mono(14, 0);
      mono[i] = 1;
      p.add_term(mono, 1);
      em.images.push_back(p);
    }
    return em;
  }();
  return e;
}

// shared head of the rho / d2 chains: S2 F* -> Ext3 F* (x) Ext3 F*
inline EquivariantMap wedge_pair_chain() {
  const SymplecticKit& k = symplectic_kit();
  std::map<std::string, int> dims = {{"F", 6}};
  TensorSpace dom = single_space(Sym(2, "F", true), 6);
  auto split = diagonal_at(dom, 0, 1, 1);
  // delta^{-1} on the first factor
  auto dinv = solve_matrix(k.delta, QMatrix::identity(6));
  auto step_dinv = apply_at(split.codomain, 0,
                            linear_map(Vec("F", true), Vec("F"), dims, *dinv));
  // exterior duality F -> Ext5 F* on the first factor
  auto step_star =
      apply_at(step_dinv.codomain, 0, hodge_star(6, 1, false, "F"));
  // Ext5 F* -> Ext3 F* (x) Ext2 F*
  auto step_split = diagonal_at(step_star.codomain, 0, 3, 2);
  // m_{2,3}: Ext2 F* (x) F* -> Ext3 F*
  auto step_m = multiply_at(step_split.codomain, {1, 2}, PowerKind::Ext);
  return compose({split, step_dinv, step_star, step_split, step_m});
}

// psi^* (x) psi^* applied to both Ext3 F* factors -> V* (x) V*
inline EquivariantMap pair_to_vstar(const EquivariantMap& chain) {
  const SymplecticKit& k = symplectic_kit();
  std::map<std::string, int> dims = {{"F", 6}, {"V", 14}};
  QMatrix psit = k.psi.matrix.dense().transpose();
  auto psistar = linear_map(Ext(3, "F", true), Vec("V", true), dims, psit);
  auto s1 = apply_at(chain.codomain, 0, psistar);
  auto s2 = apply_at(s1.codomain, 1, psistar);
  return compose({chain, s1, s2});
}

// rho : S2 F* -> V* (x) V* (symmetric multiplication happens in the ring)
inline EquivariantMap rho_map() {
  return pair_to_vstar(wedge_pair_chain());
}

// rho as a 1 x 21 matrix of quadrics: the ideal generators of O1-bar
inline PolyMatrix rho_quadrics() {
  return normalize_content(to_poly_matrix(rho_map(), 0, embedding(), 0, 2));
}

// d2 : V(2 omega1) (x) A(-4) -> V(omega3) (x) A(-3), a 14 x 21 matrix of
// linear forms
inline PolyMatrix o2_d2() {
  return normalize_content(to_poly_matrix(rho_map(), 1, embedding(), 3, 4));
}

// the degree-4 invariant defining O3-bar
inline Polynomial quartic_invariant() {
  const SymplecticKit& k = symplectic_kit();
  std::map<std::string, int> dims = {{"F", 6}, {"V", 14}};
  auto tr = trace_map(6, 2, PowerKind::Sym, "F");
  auto s2delta = apply_at(tr.codomain, 0,
                          induced_power_map(k.delta, Sym(2, "F"),
                                            Sym(2, "F", true), dims));
  EquivariantMap rho = rho_map();
  auto r1 = apply_at(s2delta.codomain, 0, rho);
  auto r2 = apply_at(r1.codomain, 2, rho);
  auto chain = compose({tr, s2delta, r1, r2});
  PolyMatrix m = normalize_content(to_poly_matrix(chain, 0, embedding(), 0, 4));
  return m.at(0, 0);
}

}  // namespace f4a1

// ---------------------------------------------------------------------------
// (F4, alpha2): W = E (x) S2(F), E = C^2, F = C^3; ring Q[x_ijk] with
// x_ijk dual to e_i (x) f_j f_k.  The free module written (a,b;c,d,e) is
// S_(a,b)E* (x) S_(c,d,e)F* (x) A(-(a+b)).  The auxiliary space G is a
// relabeled copy of S2(F*), so Ext2(G) makes sense as a tensor factor.
// ---------------------------------------------------------------------------
namespace f4a2 {

inline const std::vector<CaseFactor>& case_factors() {
  static const std::vector<CaseFactor> f = {{"E", 2, PowerKind::Sym, 1},
                                            {"F", 3, PowerKind::Sym, 2}};
  return f;
}
inline const RingPtr& ring() {
  static const RingPtr r = build_case_ring(case_factors());
  return r;
}
inline const RingEmbedding& embedding() {
  static const RingEmbedding e = degree_one_embedding(ring(), case_factors());
  return e;
}
inline const std::map<std::string, int>& dims() {
  static const std::map<std::string, int> d = {{"E", 2}, {"F", 3}, {"G", 6}};
  return d;
}

// S2(F*) relabeled as the plain 6-dimensional space G
inline const EquivariantMap& g_relabel() {
  static const EquivariantMap m =
      linear_map(Sym(2, "F", true), Vec("G"), dims(), QMatrix::identity(6));
  return m;
}

// Ext2(E*) (x) Ext2(G) -> A_2: a pair of quadratic forms q, q' goes to the
// 2x2 determinant of their coordinate rows, x_{1q} x_{2q'} - x_{1q'} x_{2q}
inline const RingEmbedding& det_embedding() {
  static const RingEmbedding em = [] {
    RingEmbedding e{ring(), TensorSpace({Ext(2, "E", true), Ext(2, "G")}, dims()),
                    {}};
    auto pairs = power_basis(6, 2, PowerKind::Ext);
    for (const auto& p : pairs) {
      std::size_t a = p[0] - 1, b = p[1] - 1;
      Polynomial q(ring());
      Monomial m1(12, 0), m2(12, 0);
      m1[a] += 1;
      m1[6 + b] += 1;
      m2[b] += 1;
      m2[6 + a] += 1;
      q.add_term(m1, Q(1));
      q.add_term(m2, Q(-1));
      e.images.push_back(q);
    }
    return e;
  }();
  return em;
}

// block (2,2;4,2,2) -> (2,1;2,2,2) of the first differential of C(9)
inline PolyMatrix o9_block_a() {
  TensorSpace dom({Sym(2, "F", true)}, dims());
  auto tre = apply_at(dom, 0, trace_map(2, 1, PowerKind::Sym, "E"));
  return normalize_content(to_poly_matrix(tre, 1, embedding(), 3, 4));
}

// block (2,2;4,2,2) -> (1,1;2,1,1)
inline PolyMatrix o9_block_b() {
  TensorSpace dom({Ext(3, "F", true), Sym(2, "F", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 2);
  auto s1 = diagonal_at(s0.codomain, 1, 1, 1);
  auto s2 = diagonal_at(s1.codomain, 3, 1, 1);
  auto mm = multiply_many(s2.codomain, {{1, 3}, {2, 4}},
                          {PowerKind::Sym, PowerKind::Sym});
  auto r1 = apply_at(mm.codomain, 1, g_relabel());
  auto r2 = apply_at(r1.codomain, 2, g_relabel());
  auto w = multiply_at(r2.codomain, {1, 2}, PowerKind::Ext);
  auto ins = apply_at(w.codomain, 1, unit_insert(Ext(2, "E", true), dims()));
  auto chain = compose({s0, s1, s2, mm, r1, r2, w, ins});
  return normalize_content(
      to_poly_matrix(chain, 1, {det_embedding()}, 2, 4));
}

// block (2,2;4,2,2) -> A
inline PolyMatrix o9_block_c() {
  TensorSpace dom(
      {Ext(3, "F", true), Ext(3, "F", true), Sym(2, "F", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 2);
  auto s1 = diagonal_at(s0.codomain, 1, 1, 1);
  auto s2 = diagonal_at(s1.codomain, 3, 1, 2);
  auto s3 = diagonal_at(s2.codomain, 4, 1, 1);
  auto s4 = diagonal_at(s3.codomain, 6, 1, 1);
  auto mm = multiply_many(
      s4.codomain, {{0, 6}, {1, 3}, {2, 4}, {5, 7}},
      {PowerKind::Sym, PowerKind::Sym, PowerKind::Sym, PowerKind::Sym});
  std::vector<EquivariantMap> chain = {s0, s1, s2, s3, s4, mm};
  for (std::size_t p = 0; p < 4; ++p)
    chain.push_back(apply_at(chain.back().codomain, p, g_relabel()));
  chain.push_back(multiply_many(chain.back().codomain, {{0, 1}, {2, 3}},
                                {PowerKind::Ext, PowerKind::Ext}));
  chain.push_back(apply_at(chain.back().codomain, 0,
                           unit_insert(Ext(2, "E", true), dims())));
  chain.push_back(apply_at(chain.back().codomain, 2,
                           unit_insert(Ext(2, "E", true), dims())));
  return normalize_content(to_poly_matrix(
      compose(chain), 0, {det_embedding(), det_embedding()}, 0, 4));
}

// first differential A (+) (1,1;2,1,1) (+) (2,1;2,2,2) <- (2,2;4,2,2) of
// the normalization of O9-bar; its determinant is the hypersurface equation
inline PolyMatrix o9_d1() {
  return concat_rows({o9_block_c(), o9_block_b(), o9_block_a()});
}

// inclusion of the traceless part S_(2,1)F* into F* (x) F
inline const EquivariantMap& traceless_inclusion() {
  static const EquivariantMap inc = kernel_inclusion(
      evaluation_map(3, 1, PowerKind::Sym, "F", true), "T");
  return inc;
}

// Plain identification of E* (x) S2(F*) with A_1, coefficient one on every
// basis element.  Chains that build the symmetric factor by multiplying two
// vector factors already carry the multiset multiplicities in the product
// coefficients, so pairing with the coordinates must not add them again.
inline const RingEmbedding& unit_embedding() {
  static const RingEmbedding em = [] {
    RingEmbedding e{ring(), case_dual_space(case_factors()), {}};
    for (std::size_t i = 0; i < e.domain.dim(); ++i) {
      Polynomial p(ring());
      Monomial mono(ring()->nvars(), 0);
      mono[i] = 1;
      p.add_term(mono, Q(1));
      e.images.push_back(p);
    }
    return e;
  }();
  return em;
}

// block (3,3;5,4,3) -> (3,2;4,3,3) of d2 of C(8)
inline PolyMatrix o8_block_a() {
  const auto& inc = traceless_inclusion();
  auto tr = apply_at(inc.codomain, 2, trace_map(3, 1, PowerKind::Sym, "F"));
  auto mm = multiply_many(tr.codomain, {{0, 3}, {1, 2}},
                          {PowerKind::Sym, PowerKind::Ext});
  auto tre = apply_at(mm.codomain, 2, trace_map(2, 1, PowerKind::Sym, "E"));
  auto perm = permute_factors(tre.codomain, {2, 1, 3, 0});
  auto chain = compose({inc, tr, mm, tre, perm});
  return normalize_content(to_poly_matrix(chain, 2, unit_embedding(), 5, 6));
}

// block (3,3;5,4,3) -> (2,2;4,2,2) of d2 of C(8)
inline PolyMatrix o8_block_b() {
  const auto& inc = traceless_inclusion();
  auto t1 = apply_at(inc.codomain, 2, trace_map(3, 1, PowerKind::Sym, "F"));
  auto t2 = apply_at(t1.codomain, 4, trace_map(3, 1, PowerKind::Sym, "F"));
  auto t3 = apply_at(t2.codomain, 6, trace_map(3, 1, PowerKind::Sym, "F"));
  auto mm = multiply_many(
      t3.codomain, {{0, 3}, {1, 6}, {2, 4}, {5, 7}},
      {PowerKind::Sym, PowerKind::Ext, PowerKind::Ext, PowerKind::Sym});
  auto r0 = apply_at(mm.codomain, 0, g_relabel());
  auto r3 = apply_at(r0.codomain, 3, g_relabel());
  auto h1 = apply_at(r3.codomain, 1, hodge_star(3, 2, false, "F"));
  auto h2 = apply_at(h1.codomain, 2, hodge_star(3, 2, false, "F"));
  auto w = multiply_at(h2.codomain, {0, 3}, PowerKind::Ext);
  auto m23 = multiply_at(w.codomain, {1, 2}, PowerKind::Sym);
  auto ins = apply_at(m23.codomain, 1, unit_insert(Ext(2, "E", true), dims()));
  auto perm = permute_factors(ins.codomain, {2, 1, 0});
  auto chain = compose({inc, t1, t2, t3, mm, r0, r3, h1, h2, w, m23, ins, perm});
  return normalize_content(to_poly_matrix(chain, 1, {det_embedding()}, 4, 6));
}

// d2 : (3,3;5,4,3) -> (3,2;4,3,3) (+) (2,2;4,2,2) of C(8)
inline PolyMatrix o8_d2() { return concat_rows({o8_block_a(), o8_block_b()}); }

// the extra map (5,4;6,6,6) -> (4,2;4,4,4) used to extend the resolution
// of O8-bar past the cone output
inline PolyMatrix extension_map_o8() {
  TensorSpace dom({Vec("E", true), Ext(2, "E", true), Ext(2, "E", true),
                   Ext(3, "F", true), Ext(3, "F", true)},
                  dims());
  auto s1 = diagonal_at(dom, 1, 1, 1);
  auto s2 = diagonal_at(s1.codomain, 3, 1, 1);
  auto s3 = diagonal_at(s2.codomain, 5, 1, 2);
  auto s4 = diagonal_at(s3.codomain, 6, 1, 1);
  auto s5 = diagonal_at(s4.codomain, 8, 1, 2);
  auto s6 = diagonal_at(s5.codomain, 9, 1, 1);
  auto mm = multiply_many(
      s6.codomain, {{1, 3}, {5, 8}, {6, 9}, {7, 10}},
      {PowerKind::Sym, PowerKind::Sym, PowerKind::Sym, PowerKind::Sym});
  auto perm = permute_factors(mm.codomain, {1, 0, 4, 2, 5, 3, 6});
  auto chain = compose({s1, s2, s3, s4, s5, s6, mm, perm});
  return normalize_content(to_poly_matrix(
      chain, 1, {embedding(), embedding(), embedding()}, 6, 9));
}

// d2 : (3,1;3,3,2) -> (2,1;3,2,1) of C(7)
inline PolyMatrix o7_d2() {
  TensorSpace dom({Sym(2, "E", true), Ext(2, "F", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto tr = apply_at(s0.codomain, 2, trace_map(3, 1, PowerKind::Sym, "F"));
  auto s1 = diagonal_at(tr.codomain, 4, 1, 1);
  auto mm = multiply_many(s1.codomain, {{3, 4}}, {PowerKind::Sym});
  auto p0 = permute_factors(mm.codomain, {0, 1, 2, 4, 3});
  auto q = quotient_projection(trace_map(3, 1, PowerKind::Sym, "F"), "U");
  auto qq = apply_at(p0.codomain, 2, q);
  auto p1 = permute_factors(qq.codomain, {0, 2, 1, 3});
  auto chain = compose({s0, tr, s1, mm, p0, qq, p1});
  return normalize_content(to_poly_matrix(chain, 2, embedding(), 3, 4));
}

// block E* (x) F (x) F* -> (1,1;2,2,0) of the first differential of C(6)
inline PolyMatrix o6_block_a() {
  TensorSpace dom({Vec("E", true), Vec("F"), Vec("F", true)}, dims());
  auto tr = apply_at(dom, 3, trace_map(3, 1, PowerKind::Sym, "F"));
  auto mm = multiply_many(tr.codomain, {{1, 3}, {2, 4}},
                          {PowerKind::Sym, PowerKind::Sym});
  auto perm = permute_factors(mm.codomain, {1, 0, 2});
  auto chain = compose({tr, mm, perm});
  return normalize_content(to_poly_matrix(chain, 1, embedding(), 2, 3));
}

// block E* (x) F (x) F* -> A of the first differential of C(6)
inline PolyMatrix o6_block_b() {
  TensorSpace dom({Vec("E", true), Vec("F"), Vec("F", true)}, dims());
  auto ins = apply_at(dom, 3, unit_insert(Ext(3, "F", true), dims()));
  auto h = apply_at(ins.codomain, 1, hodge_star(3, 1, false, "F"));
  auto s0 = diagonal_at(h.codomain, 1, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 4, 1, 2);
  auto s2 = diagonal_at(s1.codomain, 5, 1, 1);
  auto mm = multiply_many(s2.codomain, {{1, 4}, {2, 5}, {3, 6}},
                          {PowerKind::Sym, PowerKind::Sym, PowerKind::Sym});
  // wedging the first two products is identically zero by symmetry; the
  // nonzero choice in the same Hom space pairs the first and third
  auto r1 = apply_at(mm.codomain, 1, g_relabel());
  auto r2 = apply_at(r1.codomain, 3, g_relabel());
  auto w = multiply_at(r2.codomain, {1, 3}, PowerKind::Ext);
  auto ins2 = apply_at(w.codomain, 1, unit_insert(Ext(2, "E", true), dims()));
  auto perm = permute_factors(ins2.codomain, {0, 3, 1, 2});
  auto chain = compose({ins, h, s0, s1, s2, mm, r1, r2, w, ins2, perm});
  return normalize_content(
      to_poly_matrix(chain, 0, {embedding(), det_embedding()}, 0, 3));
}

// first differential A (+) (1,1;2,2,0) <- E* (x) F (x) F* of the
// normalization of O6-bar
inline PolyMatrix o6_d1() { return concat_rows({o6_block_b(), o6_block_a()}); }

// d4 : (3,3;5,5,2) -> (3,2;5,3,2) of C(5)
inline PolyMatrix o5_d4() {
  TensorSpace dom({Sym(3, "F")}, dims());
  auto tre = apply_at(dom, 0, trace_map(2, 1, PowerKind::Sym, "E"));
  auto t1 = apply_at(tre.codomain, 3, trace_map(3, 1, PowerKind::Sym, "F"));
  auto t2 = apply_at(t1.codomain, 5, trace_map(3, 1, PowerKind::Sym, "F"));
  auto mm = multiply_many(t2.codomain, {{3, 5}, {4, 6}},
                          {PowerKind::Sym, PowerKind::Sym});
  // quotient S3F (x) S2F by the image of S4F (x) F, leaving S_(3,2)F
  TensorSpace sub({Sym(4, "F"), Vec("F")}, dims());
  auto sd = diagonal_at(sub, 0, 3, 1);
  auto sm = multiply_many(sd.codomain, {{1, 2}}, {PowerKind::Sym});
  auto q = quotient_projection(compose({sd, sm}), "S");
  auto qq = apply_at(mm.codomain, 2, q);
  auto perm = permute_factors(qq.codomain, {0, 2, 1, 3});
  auto chain = compose({tre, t1, t2, mm, qq, perm});
  return normalize_content(to_poly_matrix(chain, 2, embedding(), 5, 6));
}

// block (3,3;6,3,3) -> (3,2;4,3,3) of d4 of C(4)
inline PolyMatrix o4_block_a() {
  TensorSpace dom({Sym(3, "F", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 2, 1);
  auto tre = apply_at(s0.codomain, 0, trace_map(2, 1, PowerKind::Sym, "E"));
  auto perm = permute_factors(tre.codomain, {0, 3, 1, 2});
  auto chain = compose({s0, tre, perm});
  return normalize_content(to_poly_matrix(chain, 2, embedding(), 5, 6));
}

// block (3,3;6,3,3) -> (3,2;5,3,2) of d4 of C(4)
inline PolyMatrix o4_block_b() {
  TensorSpace dom({Sym(3, "F", true)}, dims());
  auto ins = apply_at(dom, 1, unit_insert(Ext(3, "F", true), dims()));
  auto tre = apply_at(ins.codomain, 0, trace_map(2, 1, PowerKind::Sym, "E"));
  auto s0 = diagonal_at(tre.codomain, 2, 2, 1);
  auto s1 = diagonal_at(s0.codomain, 4, 1, 2);
  auto s2 = diagonal_at(s1.codomain, 5, 1, 1);
  auto mm = multiply_many(s2.codomain, {{2, 4}, {3, 5}},
                          {PowerKind::Sym, PowerKind::Sym});
  auto p0 = permute_factors(mm.codomain, {0, 1, 2, 4, 3});
  // quotient S3F* (x) F* by the image of S4F*, leaving S_(3,1)F*
  auto q = quotient_projection(
      diagonal_at(TensorSpace({Sym(4, "F", true)}, dims()), 0, 3, 1), "R");
  auto qq = apply_at(p0.codomain, 2, q);
  auto p1 = permute_factors(qq.codomain, {0, 2, 1, 3});
  auto chain = compose({ins, tre, s0, s1, s2, mm, p0, qq, p1});
  return normalize_content(to_poly_matrix(chain, 2, embedding(), 5, 6));
}

// d4 : (3,3;6,3,3) -> (3,2;5,3,2) (+) (3,2;4,3,3) of C(4)
inline PolyMatrix o4_d4() { return concat_rows({o4_block_b(), o4_block_a()}); }

// the 15 quadric generators of I(O3-bar): 2x2 minors of the 6x2 matrix of
// coordinates, which are exactly the images of the determinant embedding
inline PolyMatrix o3_minors() {
  GradedFreeModule target(ring(), {0});
  GradedFreeModule source(ring(), std::vector<int>(15, 2));
  PolyMatrix out(target, source);
  for (std::size_t c = 0; c < 15; ++c) out.at(0, c) = det_embedding().images[c];
  return out;
}

}  // namespace f4a2

// ---------------------------------------------------------------------------
// (E6, alpha2): W = Ext3(F), F = C^6; ring Q[x_ijk], i<j<k.  The free
// module written as a partition lambda is S_lambda F* (x) A(-|lambda|/3).
// ---------------------------------------------------------------------------
namespace e6a2 {

inline const std::vector<CaseFactor>& case_factors() {
  static const std::vector<CaseFactor> f = {{"F", 6, PowerKind::Ext, 3}};
  return f;
}
inline const RingPtr& ring() {
  static const RingPtr r = build_case_ring(case_factors());
  return r;
}
inline const RingEmbedding& embedding() {
  static const RingEmbedding e = degree_one_embedding(ring(), case_factors());
  return e;
}

// d2 : (3,2,2,2,2,1) -> (2,2,2,1,1,1), the traceless part of F (x) F*
// paired into Ext3 F (x) A_1 by a rank-two trace
inline PolyMatrix o2_d2() {
  auto inc = kernel_inclusion(
      evaluation_map(6, 1, PowerKind::Sym, "F"), "T");
  auto tr = apply_at(inc.codomain, 2, trace_map(6, 2, PowerKind::Ext, "F"));
  auto mm = multiply_many(tr.codomain, {{0, 2}, {1, 3}},
                          {PowerKind::Ext, PowerKind::Ext});
  auto chain = compose({inc, tr, mm});
  return normalize_content(to_poly_matrix(chain, 1, embedding(), 3, 4));
}

// the degree-4 invariant defining the hypersurface O3-bar
inline Polynomial quartic_invariant() {
  std::map<std::string, int> dims = {{"F", 6}};
  TensorSpace dom({Ext(6, "F", true), Ext(6, "F", true)}, dims);
  auto s0 = diagonal_at(dom, 0, 3, 3);
  auto s1 = diagonal_at(s0.codomain, 1, 2, 1);
  auto s2 = diagonal_at(s1.codomain, 3, 1, 5);
  auto s3 = diagonal_at(s2.codomain, 4, 2, 3);
  auto mm = multiply_many(s3.codomain, {{1, 3}, {2, 4}},
                          {PowerKind::Ext, PowerKind::Ext});
  auto chain = compose({s0, s1, s2, s3, mm});
  PolyMatrix m = normalize_content(to_poly_matrix(chain, 0, embedding(), 0, 4));
  return m.at(0, 0);
}

}  // namespace e6a2

// ---------------------------------------------------------------------------
// (E6, alpha3): W = E (x) Ext2(F), E = C^2, F = C^5; ring Q[x_aij], i<j.
// The free module (a,b;c,d,e,f,g) is S_(a,b)E* (x) S_(c,...,g)F* (x)
// A(-(a+b)).  G is a relabeled copy of Ext2(F*).
// ---------------------------------------------------------------------------
namespace e6a3 {

inline const std::vector<CaseFactor>& case_factors() {
  static const std::vector<CaseFactor> f = {{"E", 2, PowerKind::Sym, 1},
                                            {"F", 5, PowerKind::Ext, 2}};
  return f;
}
inline const RingPtr& ring() {
  static const RingPtr r = build_case_ring(case_factors());
  return r;
}
inline const RingEmbedding& embedding() {
  static const RingEmbedding e = degree_one_embedding(ring(), case_factors());
  return e;
}
inline const std::map<std::string, int>& dims() {
  static const std::map<std::string, int> d = {{"E", 2}, {"F", 5}};
  return d;
}

// S2 E* (x) Ext4 F* -> A_2: split both factors and pair twice through A_1
inline const RingEmbedding& wedge4_embedding() {
  static const RingEmbedding em = [] {
    TensorSpace dom({Sym(2, "E", true), Ext(4, "F", true)}, dims());
    auto s0 = diagonal_at(dom, 0, 1, 1);
    auto s1 = diagonal_at(s0.codomain, 2, 2, 2);
    auto perm = permute_factors(s1.codomain, {0, 2, 1, 3});
    PolyMatrix m = normalize_content(
        to_poly_matrix(compose({s0, s1, perm}), 0, embedding(), 0, 2));
    RingEmbedding e{ring(), dom, {}};
    for (std::size_t c = 0; c < m.cols(); ++c) e.images.push_back(m.at(0, c));
    return e;
  }();
  return em;
}

// the 15 quadric generators of I(O3-bar)
inline PolyMatrix o3_quadrics() {
  GradedFreeModule target(ring(), {0});
  GradedFreeModule source(ring(), std::vector<int>(15, 2));
  PolyMatrix out(target, source);
  for (std::size_t c = 0; c < 15; ++c)
    out.at(0, c) = wedge4_embedding().images[c];
  return out;
}

// the 45 quadric generators of I(O2-bar): 2x2 minors of the generic
// matrix of a linear map E* -> Ext2 F*
inline PolyMatrix o2_minors() {
  GradedFreeModule target(ring(), {0});
  GradedFreeModule source(ring(), std::vector<int>(45, 2));
  PolyMatrix out(target, source);
  auto pairs = power_basis(10, 2, PowerKind::Ext);
  std::size_t c = 0;
  for (const auto& p : pairs) {
    std::size_t a = p[0] - 1, b = p[1] - 1;
    Polynomial q(ring());
    Monomial m1(20, 0), m2(20, 0);
    m1[a] += 1;
    m1[10 + b] += 1;
    m2[b] += 1;
    m2[10 + a] += 1;
    q.add_term(m1, Q(1));
    q.add_term(m2, Q(-1));
    out.at(0, c++) = q;
  }
  return out;
}

// d2 : (4,1;2,2,2,2,2) -> (2,1;2,1,1,1,1) of the normalization of O6-bar
inline PolyMatrix o6_d2() {
  TensorSpace dom({Sym(3, "E", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 2, 1);
  auto tr = apply_at(s0.codomain, 2, trace_map(5, 4, PowerKind::Ext, "F"));
  auto perm = permute_factors(tr.codomain, {1, 2, 0, 3});
  auto chain = compose({s0, tr, perm});
  return normalize_content(
      to_poly_matrix(chain, 2, {wedge4_embedding()}, 3, 5));
}

// d4 : (4,4;4,3,3,3,3) -> (4,3;3,3,3,3,2) of the resolution of O5-bar
inline PolyMatrix o5_d4() {
  TensorSpace dom({Vec("F", true)}, dims());
  auto tre = apply_at(dom, 1, trace_map(2, 1, PowerKind::Sym, "E"));
  auto trf = apply_at(tre.codomain, 3, trace_map(5, 1, PowerKind::Sym, "F"));
  auto mm = multiply_many(trf.codomain, {{0, 4}}, {PowerKind::Ext});
  auto perm = permute_factors(mm.codomain, {1, 3, 2, 0});
  auto chain = compose({tre, trf, mm, perm});
  return normalize_content(to_poly_matrix(chain, 2, embedding(), 7, 8));
}

}  // namespace e6a3

// ---------------------------------------------------------------------------
// (E6, alpha4): W = E (x) F (x) H, E = C^2, F = H = C^3; ring Q[x_ijk].
// The free module (a,b;c,d,e;f,g,h) is S_(a,b)E* (x) S_(c,d,e)F* (x)
// S_(f,g,h)H* (x) A(-(a+b)).  delta is the generic 3x3 matrix of linear
// forms u x_1jk + v x_2jk; its determinant's coefficients a_ij and the
// coefficients of its 2x2 minors drive the two Schur-module embeddings.
// ---------------------------------------------------------------------------
namespace e6a4 {

inline const std::vector<CaseFactor>& case_factors() {
  static const std::vector<CaseFactor> f = {{"E", 2, PowerKind::Sym, 1},
                                            {"F", 3, PowerKind::Sym, 1},
                                            {"H", 3, PowerKind::Sym, 1}};
  return f;
}
inline const RingPtr& ring() {
  static const RingPtr r = build_case_ring(case_factors());
  return r;
}
inline const RingEmbedding& embedding() {
  static const RingEmbedding e = degree_one_embedding(ring(), case_factors());
  return e;
}
inline const std::map<std::string, int>& dims() {
  static const std::map<std::string, int> d = {{"E", 2}, {"F", 3}, {"H", 3}};
  return d;
}

inline std::size_t vidx(int i, int j, int k) {
  return static_cast<std::size_t>((i - 1) * 9 + (j - 1) * 3 + (k - 1));
}

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
        Monomial mono(18, 0);
        for (int j = 1; j <= 3; ++j) {
          int i = (mask >> (j - 1)) & 1 ? 2 : 1;
          if (i == 2) ++t;
          mono[vidx(i, j, perm[p][j - 1])] += 1;
        }
        a[t].add_term(mono, Q(sgn[p]));
      }
    return a;
  }();
  return coeffs;
}

// coefficients of the (rows a,b | columns c,d) 2x2 minor of delta:
// entry t is the coefficient of u^(2-t) v^t
inline std::vector<Polynomial> minor_coeffs(int a, int b, int c, int d) {
  std::vector<Polynomial> m(3, Polynomial(ring()));
  const int rows[2][2] = {{a, b}, {a, b}};
  const int cols[2][2] = {{c, d}, {d, c}};
  const int sgn[2] = {1, -1};
  for (int p = 0; p < 2; ++p)
    for (int mask = 0; mask < 4; ++mask) {
      int t = 0;
      Monomial mono(18, 0);
      for (int f = 0; f < 2; ++f) {
        int i = (mask >> f) & 1 ? 2 : 1;
        if (i == 2) ++t;
        mono[vidx(i, rows[p][f], cols[p][f])] += 1;
      }
      m[t].add_term(mono, Q(sgn[p]));
    }
  return m;
}

// S3 E* (x) Ext3 F* (x) Ext3 H* -> A_3 by (e1*)^i (e2*)^j -> i!j!/3! a_ij
inline const RingEmbedding& det_embedding() {
  static const RingEmbedding em = [] {
    RingEmbedding e{ring(),
                    TensorSpace({Sym(3, "E", true), Ext(3, "F", true),
                                 Ext(3, "H", true)},
                                dims()),
                    {}};
    const auto& a = delta_coeffs();
    Q third(1, 3);
    third.canonicalize();
    const Q f[4] = {Q(1), third, third, Q(1)};
    for (int t = 0; t < 4; ++t)
      e.images.push_back(a[t] * Polynomial::constant(ring(), f[t]));
    return e;
  }();
  return em;
}

// S2 E* (x) Ext2 F* (x) Ext2 H* -> A_2 by the 2x2 minor coefficients
inline const RingEmbedding& minor_embedding() {
  static const RingEmbedding em = [] {
    RingEmbedding e{ring(),
                    TensorSpace({Sym(2, "E", true), Ext(2, "F", true),
                                 Ext(2, "H", true)},
                                dims()),
                    {}};
    Q half(1, 2);
    half.canonicalize();
    const Q f[3] = {Q(1), half, Q(1)};
    auto pairs = power_basis(3, 2, PowerKind::Ext);
    for (int t = 0; t < 3; ++t)
      for (const auto& fp : pairs)
        for (const auto& hp : pairs) {
          auto mc = minor_coeffs(fp[0], fp[1], hp[0], hp[1]);
          e.images.push_back(mc[t] * Polynomial::constant(ring(), f[t]));
        }
    return e;
  }();
  return em;
}

// block (4,2;2,2,2;2,2,2) -> (2,1;1,1,1;1,1,1) of d1 of N(O16-bar);
// also the minimal presentation of the cokernel C(16)
inline PolyMatrix o16_block_a() {
  TensorSpace dom({Sym(2, "E", true)}, dims());
  auto tre = apply_at(dom, 0, trace_map(2, 1, PowerKind::Sym, "E"));
  auto mm = multiply_many(tre.codomain, {{1, 2}}, {PowerKind::Sym});
  auto i1 = apply_at(mm.codomain, 2, unit_insert(Ext(3, "F", true), dims()));
  auto i2 = apply_at(i1.codomain, 3, unit_insert(Ext(3, "H", true), dims()));
  auto chain = compose({tre, mm, i1, i2});
  return normalize_content(to_poly_matrix(chain, 1, {det_embedding()}, 3, 6));
}

// block (4,2;2,2,2;2,2,2) -> A of d1 of N(O16-bar)
inline PolyMatrix o16_block_b() {
  TensorSpace dom(
      {Sym(2, "E", true), Ext(2, "E", true), Ext(2, "E", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 1);
  auto s2 = diagonal_at(s1.codomain, 4, 1, 1);
  auto mm = multiply_many(s2.codomain, {{0, 2, 4}, {1, 3, 5}},
                          {PowerKind::Sym, PowerKind::Sym});
  auto i1 = apply_at(mm.codomain, 1, unit_insert(Ext(3, "F", true), dims()));
  auto i2 = apply_at(i1.codomain, 2, unit_insert(Ext(3, "H", true), dims()));
  auto i3 = apply_at(i2.codomain, 4, unit_insert(Ext(3, "F", true), dims()));
  auto i4 = apply_at(i3.codomain, 5, unit_insert(Ext(3, "H", true), dims()));
  auto chain = compose({s0, s1, s2, mm, i1, i2, i3, i4});
  return normalize_content(to_poly_matrix(
      chain, 0, {det_embedding(), det_embedding()}, 0, 6));
}

// first differential A (+) (2,1;1,1,1;1,1,1) <- (4,2;2,2,2;2,2,2)
inline PolyMatrix o16_d1() {
  return concat_rows({o16_block_b(), o16_block_a()});
}

// d2 : (5,4;3,3,3;3,3,3) -> (4,2;2,2,2;2,2,2) of the resolution of O15-bar
inline PolyMatrix o15_d2() {
  TensorSpace dom(
      {Ext(2, "E", true), Ext(2, "E", true), Vec("E", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 1);
  auto mm = multiply_many(s1.codomain, {{0, 2}, {1, 3}, {0, 4}},
                          {PowerKind::Sym, PowerKind::Sym, PowerKind::Sym});
  auto perm = permute_factors(mm.codomain, {1, 0});
  auto i1 = apply_at(perm.codomain, 2, unit_insert(Ext(3, "F", true), dims()));
  auto i2 = apply_at(i1.codomain, 3, unit_insert(Ext(3, "H", true), dims()));
  auto chain = compose({s0, s1, mm, perm, i1, i2});
  return normalize_content(to_poly_matrix(chain, 1, {det_embedding()}, 6, 9));
}

// d3 : (5,1;2,2,2;2,2,2) -> (3,1;2,1,1;2,1,1) of N(O14-bar)
inline PolyMatrix o14_d3() {
  TensorSpace dom({Sym(4, "E", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 2, 2);
  auto trf = apply_at(s0.codomain, 2, trace_map(3, 2, PowerKind::Ext, "F"));
  auto trh = apply_at(trf.codomain, 4, trace_map(3, 2, PowerKind::Ext, "H"));
  auto perm = permute_factors(trh.codomain, {0, 2, 4, 1, 3, 5});
  auto chain = compose({s0, trf, trh, perm});
  return normalize_content(to_poly_matrix(chain, 3, {minor_embedding()}, 4, 6));
}

// d4 : (4,4;3,3,2;3,3,2) -> (4,3;3,2,2;3,2,2) of N(O13-bar)
inline PolyMatrix o13_d4() {
  TensorSpace dom({Ext(2, "F", true), Ext(2, "H", true)}, dims());
  auto tre = apply_at(dom, 0, trace_map(2, 1, PowerKind::Sym, "E"));
  auto s0 = diagonal_at(tre.codomain, 2, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 4, 1, 1);
  auto perm = permute_factors(s1.codomain, {0, 2, 4, 1, 3, 5});
  auto chain = compose({tre, s0, s1, perm});
  return normalize_content(to_poly_matrix(chain, 3, embedding(), 7, 8));
}

// block (6,3;3,3,3;3,3,3) -> (4,3;3,2,2;3,2,2) of d4 of N(O12-bar)
inline PolyMatrix o12_block_a() {
  TensorSpace dom(
      {Sym(3, "E", true), Ext(3, "F", true), Ext(3, "H", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 2);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 2);
  auto s2 = diagonal_at(s1.codomain, 4, 1, 2);
  auto perm = permute_factors(s2.codomain, {0, 2, 4, 1, 3, 5});
  auto chain = compose({s0, s1, s2, perm});
  return normalize_content(to_poly_matrix(chain, 3, {minor_embedding()}, 7, 9));
}

// block (6,3;3,3,3;3,3,3) -> (5,1;2,2,2;2,2,2) of d4 of N(O12-bar)
inline PolyMatrix o12_block_b() {
  TensorSpace dom(
      {Ext(2, "E", true), Ext(2, "E", true), Sym(3, "E", true)}, dims());
  auto s0 = diagonal_at(dom, 0, 1, 1);
  auto s1 = diagonal_at(s0.codomain, 2, 1, 1);
  auto s2 = diagonal_at(s1.codomain, 4, 2, 1);
  auto mm = multiply_many(s2.codomain, {{0, 2, 4}, {1, 3, 5}},
                          {PowerKind::Sym, PowerKind::Sym});
  auto i1 = apply_at(mm.codomain, 2, unit_insert(Ext(3, "F", true), dims()));
  auto i2 = apply_at(i1.codomain, 3, unit_insert(Ext(3, "H", true), dims()));
  auto chain = compose({s0, s1, s2, mm, i1, i2});
  return normalize_content(to_poly_matrix(chain, 1, {det_embedding()}, 6, 9));
}

// d4 : (6,3;3,3,3;3,3,3) -> (4,3;3,2,2;3,2,2) (+) (5,1;2,2,2;2,2,2)
inline PolyMatrix o12_d4() {
  return concat_rows({o12_block_a(), o12_block_b()});
}

}  // namespace e6a4

}  // namespace gres

#endif  // GRES_DIFFERENTIALS_HPP
