#include <catch2/catch_amalgamated.hpp>

#include "gres/tensor.hpp"

using namespace gres;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("power bases have binomial and multiset sizes") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      CHECK((long)power_basis(n, r, PowerKind::Ext).size() == binom(n, r));
      CHECK((long)power_basis(n, r, PowerKind::Sym).size() ==
            binom(n + r - 1, r));
    }
}

TEST_CASE("flatten and unflatten are inverse") {
  TensorSpace sp({Ext(2, "E"), Sym(2, "E"), Vec("E", true)}, {{"E", 3}});
  REQUIRE(sp.dim() == 3u * 6u * 3u);
  for (std::size_t i = 0; i < sp.dim(); ++i)
    CHECK(sp.flatten(sp.unflatten(i)) == i);
}

TEST_CASE("multiplication after diagonal is a binomial multiple of identity") {
  // m o Delta = C(r+s, r) id on both algebras, all small cases
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= n; ++r)
      for (int s = 0; r + s <= n; ++s) {
        if (r + s == 0) continue;
        auto ext = compose({exterior_diagonal(n, r, s),
                            exterior_mult(n, r, s)});
        CHECK(ext.matrix.equals(
            SparseMatrix::identity(ext.domain.dim()).scaled(binom(r + s, r))));
        auto sym = compose({symmetric_diagonal(n, r, s),
                            symmetric_mult(n, r, s)});
        CHECK(sym.matrix.equals(
            SparseMatrix::identity(sym.domain.dim()).scaled(binom(r + s, r))));
      }
}

TEST_CASE("exterior diagonal is coassociative") {
  int n = 4;
  // (Delta (x) id) o Delta_{2,1} = (id (x) Delta) o Delta_{1,2} on Ext^3
  auto d21 = exterior_diagonal(n, 2, 1);
  auto left = compose({d21, diagonal_at(d21.codomain, 0, 1, 1)});
  auto d12 = exterior_diagonal(n, 1, 2);
  auto right = compose({d12, diagonal_at(d12.codomain, 1, 1, 1)});
  CHECK(left.matrix.equals(right.matrix));
}

TEST_CASE("hodge star squares to a sign") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      auto ss = compose({hodge_star(n, r, false), hodge_star(n, n - r, true)});
      int sign = ((long)r * (n - r)) % 2 == 0 ? 1 : -1;
      CHECK(ss.matrix.equals(
          SparseMatrix::identity(ss.domain.dim()).scaled(sign)));
    }
}

TEST_CASE("evaluation contracts the trace to the identity") {
  // (ev (x) id) o (id (x) tr) = id on P_r(E*), exterior and symmetric
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= 2; ++r)
      for (PowerKind kind : {PowerKind::Ext, PowerKind::Sym}) {
        if (kind == PowerKind::Ext && r > n) continue;
        TensorFactor down{"E", true, kind, r};
        TensorSpace dom({down}, {{"E", n}});
        auto idd = EquivariantMap::identity(dom);
        auto step1 = idd.tensor(trace_map(n, r, kind));
        // E* (x) E (x) E*: evaluate factors (1,2), keep factor 3
        auto ev = evaluation_map(n, r, kind, "E", true);
        auto step2 = ev.tensor(idd);
        auto total = compose({step1, step2});
        CHECK(total.matrix.equals(SparseMatrix::identity(dom.dim())));
      }
}

TEST_CASE("trace pairs with evaluation to the dimension") {
  for (int n = 2; n <= 6; ++n) {
    auto t = compose({trace_map(n, 1, PowerKind::Sym),
                      evaluation_map(n, 1, PowerKind::Sym)});
    CHECK(t.matrix.get(0, 0) == n);
  }
}

TEST_CASE("multiply_at merges non-adjacent exterior factors with signs") {
  // E (x) E* (x) E -> Ext2(E) (x) E*, multiplying factors 0 and 2
  TensorSpace sp({Vec("E"), Vec("E", true), Vec("E")}, {{"E", 3}});
  auto m = multiply_at(sp, {0, 2}, PowerKind::Ext);
  REQUIRE(m.codomain.factors().size() == 2);
  CHECK(m.codomain.factors()[0].power == 2);
  // e2 (x) e*1 (x) e1 -> -(e1^e2) (x) e*1
  std::size_t col = sp.flatten({1, 0, 0});
  std::size_t row = m.codomain.flatten(
      {m.codomain.factor_index(0, {1, 2}), 0});
  CHECK(m.matrix.get(row, col) == -1);
  // e1 (x) e*1 (x) e1 -> 0
  CHECK(m.matrix.column(sp.flatten({0, 0, 0})).empty());
}

TEST_CASE("symmetric multiplication counts multiplicities correctly") {
  // x1 (x) x1 -> x1^2 coefficient 1 (merge, not divided power scaling)
  auto m = symmetric_mult(2, 1, 1);
  std::size_t col = m.domain.flatten({0, 0});
  std::size_t row = m.codomain.factor_index(0, {1, 1});
  CHECK(m.matrix.get(row, col) == 1);
}

TEST_CASE("permute_factors shuffles indices without signs") {
  TensorSpace sp({Vec("E"), Ext(2, "E"), Vec("E", true)}, {{"E", 3}});
  auto p = permute_factors(sp, {2, 0, 1});
  CHECK(p.codomain.factors()[0].dual);
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    auto d = sp.unflatten(i);
    std::size_t j = p.codomain.flatten({d[2], d[0], d[1]});
    CHECK(p.matrix.get(j, i) == 1);
  }
  // inverse permutation composes to the identity
  auto q = permute_factors(p.codomain, {1, 2, 0});
  CHECK(compose({p, q}).matrix.equals(SparseMatrix::identity(sp.dim())));
}

TEST_CASE("kernel inclusion and quotient projection split a contraction") {
  // contraction Ext3(E) -> E for a symplectic form on E = C^6
  int n = 6;
  TensorSpace dom = single_space(Ext(3, "E"), n);
  std::map<std::string, int> dims = {{"E", n}};
  TensorSpace cod({Vec("E")}, dims);
  EquivariantMap c(dom, cod);
  auto omega = [&](int a, int b) -> int {
    if (b == a + 3) return 1;
    if (a == b + 3) return -1;
    return 0;
  };
  const auto& basis = dom.bases()[0];
  for (std::size_t col = 0; col < basis.size(); ++col) {
    int a = basis[col][0], b = basis[col][1], cc = basis[col][2];
    c.matrix.add(cc - 1, col, omega(a, b));
    c.matrix.add(b - 1, col, -omega(a, cc));
    c.matrix.add(a - 1, col, omega(b, cc));
  }
  auto inc = kernel_inclusion(c, "V");
  CHECK(inc.domain.dim() == 14);
  CHECK(compose({inc, c}).matrix.is_zero());
  auto proj = quotient_projection(inc, "W");
  CHECK(proj.codomain.dim() == 6);
  CHECK(compose({inc, proj}).matrix.is_zero());
}
