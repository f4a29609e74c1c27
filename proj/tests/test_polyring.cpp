#include <catch2/catch_amalgamated.hpp>

#include "gres/module.hpp"
#include "gres/polyring.hpp"

using namespace gres;

namespace {

// Sym(S3 E*) on E of dimension 2: variables x111..x222.
RingPtr cubic_forms_ring() {
  std::vector<VariableSpec> vars;
  for (int i = 1; i <= 2; ++i)
    for (int j = i; j <= 2; ++j)
      for (int k = j; k <= 2; ++k) {
        VariableSpec v;
        v.name = "x" + std::to_string(i) + std::to_string(j) + std::to_string(k);
        v.slots = {{"E", i}, {"E", j}, {"E", k}};
        vars.push_back(v);
      }
  return PolynomialRing::create(vars, {{"E", 2, FactorKind::Symmetric}});
}

// E (x) F (x) H with dims 2,3,3: variables xijk.
RingPtr trilinear_ring() {
  std::vector<VariableSpec> vars;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        VariableSpec v;
        v.name = "x" + std::to_string(i) + std::to_string(j) + std::to_string(k);
        v.slots = {{"E", i}, {"F", j}, {"H", k}};
        vars.push_back(v);
      }
  return PolynomialRing::create(
      vars, {{"E", 2, FactorKind::Tensor},
             {"F", 3, FactorKind::Tensor},
             {"H", 3, FactorKind::Tensor}});
}

}  // namespace

TEST_CASE("ring arithmetic obeys ring axioms on samples") {
  auto R = PolynomialRing::create_simple({"x", "y", "z"});
  RationalSampler s(3);
  auto rnd = [&] {
    Polynomial p(R);
    for (int t = 0; t < 4; ++t) {
      Monomial m(3, 0);
      m[t % 3] = t;
      p.add_term(m, s.next());
    }
    return p;
  };
  for (int i = 0; i < 10; ++i) {
    Polynomial a = rnd(), b = rnd(), c = rnd();
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  Polynomial x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");
  Polynomial p = x * x + y * Q(3), q = x * y - Polynomial::constant(R, Q(1, 2));
  Point pt = {Q(2, 3), Q(-5)};
  CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
  CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
  CHECK_THROWS_AS(p.evaluate({Q(1)}), std::invalid_argument);
}

TEST_CASE("2x2 minor vanishes at a rank-one point") {
  auto R = trilinear_ring();
  Polynomial minor =
      Polynomial::variable(R, "x111") * Polynomial::variable(R, "x222") -
      Polynomial::variable(R, "x112") * Polynomial::variable(R, "x122");
  Point pt(R->nvars(), Q(0));
  pt[R->var_index("x111")] = 1;
  CHECK(minor.evaluate(pt) == 0);
}

TEST_CASE("jacobian shape and calculus") {
  auto R = PolynomialRing::create_simple({"x"});
  Polynomial x = Polynomial::variable(R, "x");
  PolyMatrix j = jacobian({x * x});
  REQUIRE(j.rows() == 1);
  REQUIRE(j.cols() == 1);
  CHECK(j.at(0, 0) == x * Q(2));
  CHECK(j.is_homogeneous());
  CHECK_THROWS_AS(jacobian({}), std::invalid_argument);
}

TEST_CASE("polarization moves single slots") {
  auto R = trilinear_ring();
  Polynomial x111 = Polynomial::variable(R, "x111");
  CHECK(apply_polarization(x111, "F", 1, 2) ==
        Polynomial::variable(R, "x121"));
  CHECK(apply_polarization(x111, "E", 1, 2) ==
        Polynomial::variable(R, "x211"));
  CHECK_THROWS_AS(apply_polarization(x111, "Z", 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(apply_polarization(x111, "F", 0, 2), std::invalid_argument);
}

TEST_CASE("polarization is a derivation") {
  auto R = trilinear_ring();
  Polynomial a = Polynomial::variable(R, "x111");
  Polynomial b = Polynomial::variable(R, "x212");
  // Leibniz on a product
  CHECK(apply_polarization(a * b, "H", 1, 3) ==
        apply_polarization(a, "H", 1, 3) * b +
            a * apply_polarization(b, "H", 1, 3));
  // additive
  CHECK(apply_polarization(a + b, "E", 2, 1) ==
        apply_polarization(a, "E", 2, 1) + apply_polarization(b, "E", 2, 1));
  // square: Leibniz gives the factor 2
  CHECK(apply_polarization(a * a, "E", 1, 2) ==
        Q(2) * a * apply_polarization(a, "E", 1, 2));
}

TEST_CASE("diagonal polarization counts slot multiplicity") {
  auto R = cubic_forms_ring();
  Polynomial x112 = Polynomial::variable(R, "x112");
  CHECK(apply_polarization(x112, "E", 1, 1) == Q(2) * x112);
  CHECK(apply_polarization(x112, "E", 2, 2) == x112);
  // symmetric slots accumulate: x111 -> 3 x112 under 1->2
  Polynomial x111 = Polynomial::variable(R, "x111");
  CHECK(apply_polarization(x111, "E", 1, 2) ==
        Q(3) * Polynomial::variable(R, "x112"));
}

TEST_CASE("polarize_span of one variable sweeps out all variables") {
  auto R = trilinear_ring();
  auto span = polarize_span({Polynomial::variable(R, "x111")}, {"E", "F", "H"});
  CHECK(span.size() == 18);
}

TEST_CASE("polarize_span output is closed under the operators") {
  auto R = cubic_forms_ring();
  Polynomial x111 = Polynomial::variable(R, "x111");
  Polynomial x222 = Polynomial::variable(R, "x222");
  auto span = polarize_span({x111 * x222}, {"E"});
  PolySpan check;
  for (const auto& p : span) check.add(p);
  for (const auto& p : span)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        CHECK(check.contains(apply_polarization(p, "E", i, j)));
}

TEST_CASE("parser handles signs, powers and rational coefficients") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  Polynomial x = Polynomial::variable(R, "x"), y = Polynomial::variable(R, "y");
  CHECK(parse_polynomial(R, "x^2 - 3/2*x*y + y") ==
        x * x - Q(3, 2) * x * y + y);
  CHECK(parse_polynomial(R, "-x + 2*y") == y * Q(2) - x);
  CHECK(parse_polynomial(R, "x").to_string() == "x");
  CHECK(parse_polynomial(R, "x^2 - 3/2*x*y + y").to_string() ==
        "x^2 - 3/2*x*y + y");
  CHECK_THROWS_AS(parse_polynomial(R, "w + 1"), std::invalid_argument);
}

TEST_CASE("homogeneity and degree bookkeeping") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  Polynomial p = parse_polynomial(R, "x^2 + x*y");
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 2);
  Polynomial q = parse_polynomial(R, "x^2 + y");
  CHECK_FALSE(q.is_homogeneous());
  CHECK(Polynomial(R).is_homogeneous());
}

TEST_CASE("primitive part clears denominators and content") {
  auto R = PolynomialRing::create_simple({"x", "y"});
  Polynomial p = parse_polynomial(R, "4*x^2 - 2*x*y");
  CHECK(p.primitive_part() == parse_polynomial(R, "2*x^2 - x*y"));
  Polynomial q = parse_polynomial(R, "x*y - 1/3*x^2");
  CHECK(q.primitive_part() == parse_polynomial(R, "x^2 - 3*x*y"));
}
