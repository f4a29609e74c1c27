#include <catch2/catch_amalgamated.hpp>

#include "gres/complexes.hpp"
#include "gres/differentials.hpp"
#include "gres/groebner.hpp"

using namespace gres;

TEST_CASE("case ring for a single cubic symmetric power") {
  const auto& R = g2a2::ring();
  REQUIRE(R->nvars() == 4);
  CHECK(R->variables()[0].name == "x111");
  CHECK(R->variables()[1].name == "x112");
  CHECK(R->variables()[2].name == "x122");
  CHECK(R->variables()[3].name == "x222");
  CHECK(R->variables()[1].slots.size() == 3);
}

TEST_CASE("degree-one embedding carries multiplicity factorials") {
  const auto& em = g2a2::embedding();
  REQUIRE(em.images.size() == 4);
  // (e1*)^3 pairs with x111 with coefficient 3!, (e1*)^2 e2* with 2!
  CHECK(em.images[0] == parse_polynomial(g2a2::ring(), "6*x111"));
  CHECK(em.images[1] == parse_polynomial(g2a2::ring(), "2*x112"));
  CHECK(em.images[2] == parse_polynomial(g2a2::ring(), "2*x122"));
  CHECK(em.images[3] == parse_polynomial(g2a2::ring(), "6*x222"));
}

TEST_CASE("g2a2 block (4,2)->(2,1) is a 2x3 matrix of linear forms") {
  PolyMatrix a = g2a2::o2_block_a();
  REQUIRE(a.rows() == 2);
  REQUIRE(a.cols() == 3);
  CHECK(a.is_homogeneous());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (!a.at(r, c).is_zero()) CHECK(a.at(r, c).degree() == 1);
}

TEST_CASE("g2a2 block (4,2)->A gives three quadric generators") {
  PolyMatrix b = g2a2::o2_block_b();
  REQUIRE(b.rows() == 1);
  REQUIRE(b.cols() == 3);
  CHECK(b.is_homogeneous());
  // the quadrics vanish on O1-bar (rep x111 = 1) ...
  Point o1 = {Q(1), Q(0), Q(0), Q(0)};
  for (std::size_t c = 0; c < 3; ++c) CHECK(b.at(0, c).evaluate(o1) == 0);
  // ... and not identically on O2 (rep x112 = 1)
  Point o2 = {Q(0), Q(1), Q(0), Q(0)};
  bool some_nonzero = false;
  for (std::size_t c = 0; c < 3; ++c)
    if (b.at(0, c).evaluate(o2) != 0) some_nonzero = true;
  CHECK(some_nonzero);
}

TEST_CASE("g2a2 first and second differentials compose to zero") {
  PolyMatrix d1 = g2a2::o2_block_b();
  PolyMatrix d2 = g2a2::o1_d2();
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 2);
  CHECK(d2.is_homogeneous());
  CHECK((d1 * d2).is_zero());
}

TEST_CASE("g2a2 normalization differential has a quartic determinant") {
  PolyMatrix d1 = g2a2::o2_d1();
  REQUIRE(d1.rows() == 3);
  REQUIRE(d1.cols() == 3);
  CHECK(d1.is_homogeneous());
  // determinant by cofactor expansion
  Polynomial det =
      d1.at(0, 0) * (d1.at(1, 1) * d1.at(2, 2) - d1.at(1, 2) * d1.at(2, 1)) -
      d1.at(0, 1) * (d1.at(1, 0) * d1.at(2, 2) - d1.at(1, 2) * d1.at(2, 0)) +
      d1.at(0, 2) * (d1.at(1, 0) * d1.at(2, 1) - d1.at(1, 1) * d1.at(2, 0));
  REQUIRE_FALSE(det.is_zero());
  CHECK(det.is_homogeneous());
  CHECK(det.degree() == 4);
  // the quartic hypersurface contains O2 but not the dense orbit O3
  Point o2 = {Q(0), Q(1), Q(0), Q(0)};
  Point o3 = {Q(1), Q(0), Q(0), Q(1)};
  CHECK(det.evaluate(o2) == 0);
  CHECK(det.evaluate(o3) != 0);
}

namespace {

Point f4a1_point(const std::vector<std::size_t>& ones) {
  Point p(14, Q(0));
  for (auto i : ones) p[i] = 1;
  return p;
}

}  // namespace

TEST_CASE("symplectic kit: phi is a section retraction for psi") {
  const SymplecticKit& k = symplectic_kit();
  CHECK(k.psi.domain.dim() == 14);
  // psi lands in the kernel of the contraction
  CHECK(compose({k.psi, k.contraction}).matrix.is_zero());
  // phi o psi = id on V
  CHECK(compose({k.psi, k.phi}).matrix.equals(SparseMatrix::identity(14)));
  // delta is antisymmetric and invertible
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(k.delta(i, j) == -k.delta(j, i));
  CHECK(rank(k.delta) == 6);
}

TEST_CASE("f4a1 rho is a nonzero 1x21 matrix of quadrics") {
  PolyMatrix rho = f4a1::rho_quadrics();
  REQUIRE(rho.rows() == 1);
  REQUIRE(rho.cols() == 21);
  CHECK(rho.is_homogeneous());
  bool nonzero = false;
  for (std::size_t c = 0; c < 21; ++c)
    if (!rho.at(0, c).is_zero()) nonzero = true;
  CHECK(nonzero);
  // the quadrics cut out O1-bar: vanish at the O1 representative,
  // not all at the O2 representative
  Point o1 = f4a1_point({13}), o2 = f4a1_point({10});
  bool nz_at_o2 = false;
  for (std::size_t c = 0; c < 21; ++c) {
    CHECK(rho.at(0, c).evaluate(o1) == 0);
    if (rho.at(0, c).evaluate(o2) != 0) nz_at_o2 = true;
  }
  CHECK(nz_at_o2);
}

TEST_CASE("f4a1 d2 of O2 is a homogeneous 14x21 linear matrix") {
  PolyMatrix d2 = f4a1::o2_d2();
  REQUIRE(d2.rows() == 14);
  REQUIRE(d2.cols() == 21);
  CHECK(d2.is_homogeneous());
  CHECK(d2.target().twists == std::vector<int>(14, 3));
}

TEST_CASE("f4a1 quartic invariant separates O3 from the dense orbit") {
  Polynomial inv = f4a1::quartic_invariant();
  REQUIRE_FALSE(inv.is_zero());
  CHECK(inv.is_homogeneous());
  CHECK(inv.degree() == 4);
  // vanishes on O0..O3, nonzero on the dense orbit O4
  CHECK(inv.evaluate(f4a1_point({})) == 0);
  CHECK(inv.evaluate(f4a1_point({13})) == 0);
  CHECK(inv.evaluate(f4a1_point({10})) == 0);
  CHECK(inv.evaluate(f4a1_point({13, 3})) == 0);
  CHECK(inv.evaluate(f4a1_point({13, 0})) != 0);
}

namespace {

Point f4a2_point(const std::vector<std::pair<std::size_t, int>>& vals) {
  Point p(12, Q(0));
  for (auto [i, v] : vals) p[i] = v;
  return p;
}

std::size_t rank_at(const PolyMatrix& m, const Point& p) {
  QMatrix e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m.at(r, c).evaluate(p);
  return rank(e);
}

void check_degrees(const PolyMatrix& m, int deg) {
  CHECK(m.is_homogeneous());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) CHECK(m.at(r, c).degree() == deg);
}

}  // namespace

TEST_CASE("f4a2 ring has twelve variables in row-major order") {
  const auto& R = f4a2::ring();
  REQUIRE(R->nvars() == 12);
  CHECK(R->variables()[0].name == "x111");
  CHECK(R->variables()[4].name == "x123");
  CHECK(R->variables()[5].name == "x133");
  CHECK(R->variables()[6].name == "x211");
  CHECK(R->variables()[11].name == "x233");
}

TEST_CASE("f4a2 determinant embedding gives the fifteen 2x2 minors") {
  const auto& em = f4a2::det_embedding();
  REQUIRE(em.images.size() == 15);
  for (const auto& q : em.images) {
    CHECK(q.is_homogeneous());
    CHECK(q.degree() == 2);
  }
  // first pair (11,12): x111*x212 - x112*x211
  Polynomial expect =
      parse_polynomial(f4a2::ring(), "x111*x212 - x112*x211");
  CHECK(em.images[0] == expect);
}

TEST_CASE("f4a2 normalization differential of O9 detects the hypersurface") {
  PolyMatrix d1 = f4a2::o9_d1();
  REQUIRE(d1.rows() == 6);
  REQUIRE(d1.cols() == 6);
  CHECK(d1.is_homogeneous());
  CHECK(d1.target().twists == std::vector<int>({0, 2, 2, 2, 3, 3}));
  CHECK(d1.source().twists == std::vector<int>(6, 4));
  // det d1 cuts out the complement of the dense orbit: drops rank on the
  // O8 representative, full rank on the O10 representative
  Point o8 = f4a2_point({{8, 1}, {4, 1}, {0, 1}});
  Point o10 = f4a2_point({{0, 1}, {3, 1}, {5, 1}, {6, 1}, {9, -1}});
  CHECK(rank_at(d1, o8) < 6);
  CHECK(rank_at(d1, o10) == 6);
}

TEST_CASE("f4a2 registered d2 of C(8) has the two expected blocks") {
  PolyMatrix d2 = f4a2::o8_d2();
  REQUIRE(d2.rows() == 12);
  REQUIRE(d2.cols() == 8);
  CHECK(d2.is_homogeneous());
  std::vector<int> twists(6, 5);
  twists.insert(twists.end(), 6, 4);
  CHECK(d2.target().twists == twists);
  CHECK(d2.source().twists == std::vector<int>(8, 6));
}

TEST_CASE("f4a2 extension map for O8 is a 3x2 matrix of cubics") {
  PolyMatrix m = f4a2::extension_map_o8();
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 2);
  check_degrees(m, 3);
  bool nonzero = false;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      if (!m.at(r, c).is_zero()) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("f4a2 registered d2 of C(7) is a 16x9 linear matrix") {
  PolyMatrix d2 = f4a2::o7_d2();
  REQUIRE(d2.rows() == 16);
  REQUIRE(d2.cols() == 9);
  check_degrees(d2, 1);
}

TEST_CASE("f4a2 normalization differential of O6 has a cubic row") {
  PolyMatrix d1 = f4a2::o6_d1();
  REQUIRE(d1.rows() == 7);
  REQUIRE(d1.cols() == 18);
  CHECK(d1.is_homogeneous());
  bool cubic_row_nonzero = false;
  for (std::size_t c = 0; c < 18; ++c)
    if (!d1.at(0, c).is_zero()) {
      cubic_row_nonzero = true;
      CHECK(d1.at(0, c).degree() == 3);
    }
  CHECK(cubic_row_nonzero);
}

TEST_CASE("f4a2 registered d4 of C(5) lands in the hook quotient") {
  PolyMatrix d4 = f4a2::o5_d4();
  REQUIRE(d4.rows() == 30);
  REQUIRE(d4.cols() == 10);
  check_degrees(d4, 1);
}

TEST_CASE("f4a2 registered d4 of C(4) stacks to 36 rows") {
  PolyMatrix d4 = f4a2::o4_d4();
  REQUIRE(d4.rows() == 36);
  REQUIRE(d4.cols() == 10);
  check_degrees(d4, 1);
}

TEST_CASE("f4a2 minor quadrics separate O3 from O4") {
  PolyMatrix m = f4a2::o3_minors();
  REQUIRE(m.cols() == 15);
  Point o3 = f4a2_point({{0, 1}, {4, 1}});
  Point o4 = f4a2_point({{0, 1}, {9, 1}});
  bool nz_at_o4 = false;
  for (std::size_t c = 0; c < 15; ++c) {
    CHECK(m.at(0, c).evaluate(o3) == 0);
    if (m.at(0, c).evaluate(o4) != 0) nz_at_o4 = true;
  }
  CHECK(nz_at_o4);
}

namespace {

Point point_at(std::size_t n, const std::vector<std::pair<std::size_t, int>>& v) {
  Point p(n, Q(0));
  for (auto [i, x] : v) p[i] = x;
  return p;
}

}  // namespace

TEST_CASE("e6a2 traceless d2 is a 20x35 linear matrix") {
  REQUIRE(e6a2::ring()->nvars() == 20);
  PolyMatrix d2 = e6a2::o2_d2();
  REQUIRE(d2.rows() == 20);
  REQUIRE(d2.cols() == 35);
  check_degrees(d2, 1);
  CHECK(d2.target().twists == std::vector<int>(20, 3));
}

TEST_CASE("e6a2 quartic invariant cuts out the hypersurface orbit") {
  Polynomial inv = e6a2::quartic_invariant();
  REQUIRE_FALSE(inv.is_zero());
  CHECK(inv.is_homogeneous());
  CHECK(inv.degree() == 4);
  // basis order: 123 125 145 246 456 -> indices 0, 7, 14, 19
  CHECK(inv.evaluate(point_at(20, {{0, 1}})) == 0);
  CHECK(inv.evaluate(point_at(20, {{0, 1}, {7, 1}})) == 0);
  CHECK(inv.evaluate(point_at(20, {{0, 1}, {7, 1}, {14, 1}})) == 0);
  CHECK(inv.evaluate(point_at(20, {{0, 1}, {19, 1}})) != 0);
}

TEST_CASE("e6a3 quadrics of O3 and O2 separate the right orbits") {
  REQUIRE(e6a3::ring()->nvars() == 20);
  PolyMatrix q3 = e6a3::o3_quadrics();
  REQUIRE(q3.cols() == 15);
  PolyMatrix q2 = e6a3::o2_minors();
  REQUIRE(q2.cols() == 45);
  // O2 rep x1;12 = x1;34 = 1 -> 0, 7; O3 rep x1;12 = x2;13 -> 0, 11;
  // O4 rep x1;12 = x1;34 = x2;13
  Point o2 = point_at(20, {{0, 1}, {7, 1}});
  Point o3 = point_at(20, {{0, 1}, {11, 1}});
  Point o4 = point_at(20, {{0, 1}, {7, 1}, {11, 1}});
  bool nz = false;
  for (std::size_t c = 0; c < 15; ++c) {
    CHECK(q3.at(0, c).evaluate(o3) == 0);
    if (q3.at(0, c).evaluate(o4) != 0) nz = true;
  }
  CHECK(nz);
  nz = false;
  for (std::size_t c = 0; c < 45; ++c) {
    CHECK(q2.at(0, c).evaluate(o2) == 0);
    if (q2.at(0, c).evaluate(o3) != 0) nz = true;
  }
  CHECK(nz);
}

TEST_CASE("e6a3 registered differentials have the expected shapes") {
  PolyMatrix d2 = e6a3::o6_d2();
  REQUIRE(d2.rows() == 10);
  REQUIRE(d2.cols() == 4);
  check_degrees(d2, 2);
  PolyMatrix d4 = e6a3::o5_d4();
  REQUIRE(d4.rows() == 10);
  REQUIRE(d4.cols() == 5);
  check_degrees(d4, 1);
}

TEST_CASE("e6a4 determinant coefficients vanish along O13") {
  const auto& a = e6a4::delta_coeffs();
  REQUIRE(a.size() == 4);
  // O13 rep x111 = x222 = x123 = x231; O14 rep x111 = x222 = x133
  Point o13 = point_at(18, {{0, 1}, {13, 1}, {5, 1}, {15, 1}});
  Point o14 = point_at(18, {{0, 1}, {13, 1}, {8, 1}});
  bool nz = false;
  for (int t = 0; t < 4; ++t) {
    CHECK(a[t].degree() == 3);
    CHECK(a[t].evaluate(o13) == 0);
    if (a[t].evaluate(o14) != 0) nz = true;
  }
  CHECK(nz);
}

TEST_CASE("e6a4 normalization differential of O16 detects the discriminant") {
  PolyMatrix d1 = e6a4::o16_d1();
  REQUIRE(d1.rows() == 3);
  REQUIRE(d1.cols() == 3);
  CHECK(d1.is_homogeneous());
  CHECK(d1.target().twists == std::vector<int>({0, 3, 3}));
  // O15 rep lies in O16-bar; the O17 rep is in the dense orbit
  Point o15 = point_at(18, {{0, 1}, {13, 1}, {5, 1}, {15, 1}, {7, 1}});
  Point o17 = point_at(18, {{0, 1}, {9, 1}, {4, 1}, {8, 1}, {13, -1}});
  CHECK(rank_at(d1, o15) < 3);
  CHECK(rank_at(d1, o17) == 3);
}

TEST_CASE("e6a4 d1 and d2 of the O15 resolution compose to zero") {
  PolyMatrix d1 = e6a4::o16_block_b();
  PolyMatrix d2 = e6a4::o15_d2();
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 2);
  check_degrees(d2, 3);
  CHECK((d1 * d2).is_zero());
}

TEST_CASE("e6a4 deeper registered differentials have the expected shapes") {
  PolyMatrix d3 = e6a4::o14_d3();
  REQUIRE(d3.rows() == 27);
  REQUIRE(d3.cols() == 5);
  check_degrees(d3, 2);
  PolyMatrix d4 = e6a4::o13_d4();
  REQUIRE(d4.rows() == 18);
  REQUIRE(d4.cols() == 9);
  check_degrees(d4, 1);
  PolyMatrix d4b = e6a4::o12_d4();
  REQUIRE(d4b.rows() == 23);
  REQUIRE(d4b.cols() == 4);
  CHECK(d4b.is_homogeneous());
}

TEST_CASE("g2a2 quadrics resolve with betti totals 1,3,2") {
  FreeComplex C = resolve_interactive(g2a2::o2_block_b(), {3, 4}, {}, 4);
  BettiTable b = BettiTable::of(C);
  CHECK(b.totals() == std::vector<long>({1, 3, 2}));
  CHECK(b.entries.at({1, 2}) == 3);
  CHECK(b.entries.at({2, 3}) == 2);
}
