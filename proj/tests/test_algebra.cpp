#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "codim3/field.hpp"
#include "codim3/monomial.hpp"
#include "codim3/polynomial.hpp"
#include "codim3/text.hpp"

using namespace codim3;

TEST_CASE("field spec accepts 0 and primes, rejects composites", "[algebra]") {
  CHECK_NOTHROW(FieldSpec(0));
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_NOTHROW(FieldSpec(3));
  CHECK_NOTHROW(FieldSpec(101));
  CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec(91), std::invalid_argument);  // 7*13
}

TEST_CASE("prime field arithmetic and balanced printing", "[algebra]") {
  PrimeField k(3);
  CHECK(k.add(2, 2) == 1);
  CHECK(k.mul(2, 2) == 1);
  CHECK(k.inv(2) == 2);
  CHECK(k.from_int(-1) == 2);
  CHECK(k.balanced(2) == -1);
  CHECK(k.print_abs(2) == "1");
  CHECK(k.print_negative(2));

  PrimeField k5(5);
  CHECK(k5.balanced(3) == -2);
  CHECK(k5.balanced(2) == 2);
  for (int a = 1; a < 5; ++a) CHECK(k5.mul(a, k5.inv(a)) == 1);

  PrimeField k2(2);
  CHECK(k2.balanced(1) == 1);
  CHECK_FALSE(k2.print_negative(1));
}

TEST_CASE("rational field is exact", "[algebra]") {
  RationalField k;
  auto half = k.from_fraction(1, 2);
  CHECK(k.add(half, half) == k.one());
  CHECK(k.print_abs(k.from_fraction(-3, 4)) == "3/4");
  CHECK(k.print_negative(k.from_fraction(-3, 4)));
}

TEST_CASE("grevlex in degree 2: x2 > xy > y2 > xz > yz > z2", "[algebra]") {
  Monomial x2(2, 0, 0), xy(1, 1, 0), y2(0, 2, 0), xz(1, 0, 1), yz(0, 1, 1), z2(0, 0, 2);
  std::vector<Monomial> expected = {x2, xy, y2, xz, yz, z2};
  CHECK(monomials_of_degree(2) == expected);
  for (std::size_t i = 0; i + 1 < expected.size(); ++i)
    CHECK(grevlex_less(expected[i + 1], expected[i]));
}

TEST_CASE("ring arithmetic on the worked examples", "[algebra]") {
  PrimeField k(3);
  auto x_plus_y = parse_polynomial(k, "x+y");
  auto x_minus_y = parse_polynomial(k, "x-y");
  CHECK(to_machine(k, mul(k, x_plus_y, x_minus_y)) == "x^2-y^2");

  auto f = parse_polynomial(k, "x^2+2*x*y-z^2");
  CHECK(add(k, f, scale(k, f, k.from_int(-1))).is_zero());

  auto xy = parse_polynomial(k, "x*y");
  auto zz = parse_polynomial(k, "z^2");
  auto prod = mul(k, xy, zz);
  CHECK(prod.degree() == 4);
  CHECK(to_machine(k, prod) == "x*y*z^2");

  CHECK_THROWS_AS(add(k, parse_polynomial(k, "x"), parse_polynomial(k, "x^2")),
                  std::invalid_argument);
  CHECK_NOTHROW(add(k, Poly<PrimeField>::zero(5), parse_polynomial(k, "x^2")));
}

TEST_CASE("ring axioms on random triples", "[algebra]") {
  std::mt19937_64 rng(7);
  PrimeField k3(3);
  RationalField kq;
  auto check_axioms = [&](auto k) {
    using F = decltype(k);
    for (int trial = 0; trial < 25; ++trial) {
      int d = 1 + static_cast<int>(uniform_below(rng, 3));
      Poly<F> f = random_homogeneous(k, d, 0, rng);
      Poly<F> g = random_homogeneous(k, d, 0, rng);
      Poly<F> h = random_homogeneous(k, d + 1, 0, rng);
      CHECK(add(k, f, g) == add(k, g, f));
      CHECK(mul(k, f, h) == mul(k, h, f));
      CHECK(mul(k, mul(k, f, g), h) == mul(k, f, mul(k, g, h)));
      CHECK(mul(k, add(k, f, g), h) == add(k, mul(k, f, h), mul(k, g, h)));
    }
  };
  check_axioms(k3);
  check_axioms(kq);
}

TEST_CASE("random_homogeneous term counts", "[algebra]") {
  PrimeField k(3);
  std::mt19937_64 rng(11);

  auto one_term = random_homogeneous(k, 2, 1, rng);
  CHECK(one_term.term_count() == 1);
  CHECK(one_term.degree() == 2);

  auto all_terms = random_homogeneous(k, 2, 6, rng);
  CHECK(all_terms.term_count() == 6);

  // more terms requested than monomials exist: use all of them
  auto clamped = random_homogeneous(k, 2, 100, rng);
  CHECK(clamped.term_count() == 6);

  for (int trial = 0; trial < 50; ++trial) {
    auto dense = random_homogeneous(k, 3, 0, rng);
    CHECK(dense.term_count() >= 1);
    CHECK(dense.term_count() <= 10);
    CHECK(dense.degree() == 3);
  }

  // exact counts whenever t <= C(d+2,2)
  for (int trial = 0; trial < 50; ++trial) {
    int d = 1 + static_cast<int>(uniform_below(rng, 5));
    int avail = (d + 1) * (d + 2) / 2;
    int t = 1 + static_cast<int>(uniform_below(rng, avail));
    CHECK(random_homogeneous(k, d, t, rng).term_count() == static_cast<std::size_t>(t));
  }

  CHECK_THROWS_AS(random_homogeneous(k, 0, 1, rng), std::invalid_argument);
}

TEST_CASE("serialization matches the recorded formats", "[algebra]") {
  PrimeField k(3);
  CHECK(to_machine(k, parse_polynomial(k, "y*z")) == "y*z");
  CHECK(to_human(k, parse_polynomial(k, "x^2-y^2")) == "x2-y2");
  CHECK(to_machine(k, Poly<PrimeField>::zero(2)) == "0");
  CHECK(to_human(k, Poly<PrimeField>::zero(2)) == "0");

  auto gens = parse_generators(k, "matrix{{y*z,x*z,y^2+z^2,x*y+z^2,x^2+z^2}}");
  REQUIRE(gens.size() == 5);
  CHECK(machine_matrix(k, gens) == "matrix{{y*z,x*z,y^2+z^2,x*y+z^2,x^2+z^2}}");
  CHECK(human_list(k, gens) == "yz xz y2+z2 xy+z2 x2+z2");
  CHECK(human_from_machine_matrix("matrix{{y*z,x*z,y^2+z^2,x*y+z^2,x^2+z^2}}") ==
        "yz xz y2+z2 xy+z2 x2+z2");

  // balanced coefficients: 2 = -1 in GF(3)
  CHECK(to_machine(k, parse_polynomial(k, "2*x^2")) == "-x^2");
  PrimeField k5(5);
  CHECK(to_machine(k5, parse_polynomial(k5, "3*x*y")) == "-2*x*y");
}

TEST_CASE("parse errors name the problem", "[algebra]") {
  PrimeField k(3);
  CHECK_THROWS_AS(parse_polynomial(k, "x^2+y^3"), parse_error);
  CHECK_THROWS_AS(parse_polynomial(k, "x^2+w^2"), parse_error);
  CHECK_THROWS_AS(parse_polynomial(k, "x^"), parse_error);
  CHECK_THROWS_AS(parse_polynomial(k, ""), parse_error);
  CHECK_THROWS_AS(parse_polynomial(k, "2x"), parse_error);
  CHECK_THROWS_AS(parse_generators(k, "matrix{{x^2"), parse_error);
  CHECK_THROWS_MATCHES(parse_polynomial(k, "x^2+q"), parse_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("'q'")));
}

TEST_CASE("parse round-trips serialize on random polynomials", "[algebra]") {
  std::mt19937_64 rng(23);
  auto round_trip = [&](auto k) {
    using F = decltype(k);
    for (int trial = 0; trial < 200; ++trial) {
      int d = 1 + static_cast<int>(uniform_below(rng, 6));
      Poly<F> f = random_homogeneous(k, d, 0, rng);
      Poly<F> parsed = parse_polynomial(k, to_machine(k, f));
      CHECK(parsed == f);
    }
  };
  round_trip(PrimeField(3));
  round_trip(PrimeField(7));
  round_trip(RationalField{});

  // fractional coefficients over the rationals survive the trip too
  RationalField kq;
  Poly<RationalField> f = Poly<RationalField>::from_terms(
      kq, {{Monomial(2, 0, 0), kq.from_fraction(1, 2)},
           {Monomial(0, 1, 1), kq.from_fraction(-5, 3)}});
  CHECK(parse_polynomial(kq, to_machine(kq, f)) == f);
  CHECK(to_machine(kq, f) == "1/2*x^2-5/3*y*z");
}
