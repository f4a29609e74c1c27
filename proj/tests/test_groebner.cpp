#include <catch2/catch_amalgamated.hpp>

#include "gres/groebner.hpp"

using namespace gres;

namespace {

PolyMatrix row_matrix(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(R, g));
  return PolyMatrix::ideal_presentation(ps);
}

}  // namespace

TEST_CASE("a monomial ideal is its own Groebner basis") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  ModuleGB gb(row_matrix(R, {"x", "y"}));
  CHECK(gb.basis().size() == 2);
  CHECK(gb.buchberger_holds());
}

TEST_CASE("2x2 minors of a generic 2x3 matrix form a Groebner basis") {
  auto R = PolynomialRing::create_simple({"a", "b", "c", "d", "e", "f"});
  // minors of (a b c; d e f)
  ModuleGB gb(row_matrix(R, {"a*e - b*d", "a*f - c*d", "b*f - c*e"}));
  CHECK(gb.buchberger_holds());
  CHECK(gb.basis().size() == 3);
}

TEST_CASE("normal form detects membership") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  PolyMatrix I = row_matrix(R, {"x^2 - y^2", "x*y"});
  ModuleGB gb(I);
  ModPoly member(R, 1);
  // x^3 = x(x^2-y^2) + y(xy)
  member.add_term(0, {3, 0}, 1);
  CHECK(gb.contains(member));
  ModPoly nonmember(R, 1);
  nonmember.add_term(0, {1, 0}, 1);
  CHECK_FALSE(gb.contains(nonmember));
}

TEST_CASE("koszul syzygy of (x, y)") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  PolyMatrix d = row_matrix(R, {"x", "y"});
  PolyMatrix s = syzygies(d);
  REQUIRE(s.cols() == 1);
  REQUIRE(s.rows() == 2);
  CHECK((d * s).is_zero());
  CHECK(s.source().twists == std::vector<int>{2});
  CHECK(s.is_homogeneous());
}

TEST_CASE("identity matrix has no syzygies") {
  auto R = PolynomialRing::create_simple({"x"});
  PolyMatrix id(GradedFreeModule(R, {0, 0}), GradedFreeModule(R, {0, 0}));
  id.at(0, 0) = Polynomial::constant(R, 1);
  id.at(1, 1) = Polynomial::constant(R, 1);
  CHECK(syzygies(id).cols() == 0);
}

TEST_CASE("syzygies of the twisted cubic ideal") {
  auto R = PolynomialRing::create_simple({"x0", "x1", "x2", "x3"});
  // 2x2 minors of (x0 x1 x2; x1 x2 x3)
  PolyMatrix d = row_matrix(
      R, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  PolyMatrix s = syzygies(d, 3);
  CHECK((d * s).is_zero());
  REQUIRE(s.cols() == 2);
  CHECK(s.source().twists == std::vector<int>({3, 3}));
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c)
      if (!s.at(r, c).is_zero()) CHECK(s.at(r, c).degree() == 1);
}

TEST_CASE("syzygies of constant matrices match the linear-algebra kernel") {
  auto R = PolynomialRing::create_simple({"x"});
  PolyMatrix d(GradedFreeModule(R, {0, 0}), GradedFreeModule(R, {0, 0, 0}));
  // rows (1 2 3; 2 4 6): rank 1, kernel dim 2
  int vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c)
      d.at(r, c) = Polynomial::constant(R, vals[r][c]);
  PolyMatrix s = syzygies(d);
  CHECK(s.cols() == 2);
  CHECK((d * s).is_zero());
  QMatrix k = kernel_basis(d.evaluate({Q(0)}));
  CHECK(k.cols() == 2);
}

TEST_CASE("minimize_presentation eliminates unit entries") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  PolyMatrix d(GradedFreeModule(R, {0, 1}), GradedFreeModule(R, {1, 1}));
  d.at(0, 0) = parse_polynomial(R, "x");
  d.at(0, 1) = parse_polynomial(R, "y");
  d.at(1, 0) = Polynomial::constant(R, 1);
  d.at(1, 1) = Polynomial::constant(R, 2);
  PolyMatrix min = minimize_presentation(d);
  REQUIRE(min.rows() == 1);
  REQUIRE(min.cols() == 1);
  // after eliminating the unit, the surviving entry is y - 2x (up to sign)
  CHECK(min.at(0, 0) == parse_polynomial(R, "y - 2*x"));
  // already-minimal input is a fixed point
  CHECK(minimize_presentation(min).at(0, 0) == min.at(0, 0));
}

TEST_CASE("minimize_presentation preserves the Hilbert function") {
  auto R = PolynomialRing::create_simple({"x", "y", "z"});
  PolyMatrix d = row_matrix(R, {"x^2", "x*y"});
  // pad with a redundant generator expressed through a unit row
  PolyMatrix padded(GradedFreeModule(R, {0, 2}),
                    GradedFreeModule(R, {2, 2, 2}));
  padded.at(0, 0) = parse_polynomial(R, "x^2");
  padded.at(0, 1) = parse_polynomial(R, "x*y");
  padded.at(0, 2) = parse_polynomial(R, "x^2 + x*y");
  padded.at(1, 2) = Polynomial::constant(R, 1);
  PolyMatrix min = minimize_presentation(padded);
  ModuleGB a(d), b(min);
  for (int deg = 0; deg <= 4; ++deg) CHECK(a.hilbert(deg) == b.hilbert(deg));
}

TEST_CASE("rank at points and generic rank") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  PolyMatrix d(GradedFreeModule(R, {0, 0}), GradedFreeModule(R, {1, 1}));
  d.at(0, 0) = parse_polynomial(R, "x");
  d.at(0, 1) = parse_polynomial(R, "y");
  d.at(1, 0) = parse_polynomial(R, "y");
  d.at(1, 1) = parse_polynomial(R, "x");
  CHECK(rank_at_point(d, {Q(0), Q(0)}) == 0);
  CHECK(rank_at_point(d, {Q(1), Q(1)}) == 1);
  CHECK(generic_rank(d) == 2);
  CHECK(symbolic_rank(d) == 2);
  // zero matrix
  PolyMatrix z(GradedFreeModule(R, {0}), GradedFreeModule(R, {1}));
  CHECK(generic_rank(z) == 0);
  // rank at every point is bounded by the generic rank
  std::vector<std::size_t> samples;
  generic_rank(d, &samples);
  for (auto s : samples) CHECK(s <= 2);
}

TEST_CASE("kernel_of_parametrization: twisted conic and cubic") {
  auto P = PolynomialRing::create_simple({"s", "t"});
  auto img = [&](const std::string& e) { return parse_polynomial(P, e); };
  auto conic = kernel_of_parametrization({img("s^2"), img("s*t"), img("t^2")}, 2);
  REQUIRE(conic.size() == 1);
  CHECK(conic[0].degree() == 2);

  auto cubic = kernel_of_parametrization(
      {img("s^3"), img("s^2*t"), img("s*t^2"), img("t^3")}, 2);
  CHECK(cubic.size() == 3);
  for (const auto& g : cubic) CHECK(g.degree() == 2);
}

TEST_CASE("kernel generators vanish on the parametrization") {
  auto P = PolynomialRing::create_simple({"s", "t"});
  std::vector<Polynomial> images = {
      parse_polynomial(P, "s^3"), parse_polynomial(P, "s^2*t"),
      parse_polynomial(P, "s*t^2"), parse_polynomial(P, "t^3")};
  auto rel = kernel_of_parametrization(images, 3);
  RationalSampler smp(11);
  for (const auto& g : rel) {
    // substitute the images for the relation variables and check 0
    Point par = smp.vector(2);
    Point img_vals;
    for (const auto& f : images) img_vals.push_back(f.evaluate(par));
    CHECK(g.evaluate(img_vals) == 0);
  }
}
