#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgl2/scalar.hpp"

using namespace qgl2;

namespace {

Scalar P(const RingMode& m, int e = 1) { return Scalar::symbol(Sym::p, m, e); }
Scalar Q(const RingMode& m, int e = 1) { return Scalar::symbol(Sym::q, m, e); }
Scalar H(const RingMode& m, int e = 1) { return Scalar::symbol(Sym::h, m, e); }

// random scalar built from the same recipe under any mode, for the
// substitution-homomorphism property
Scalar random_scalar(std::mt19937& rng, const RingMode& m, bool allow_fraction) {
  std::uniform_int_distribution<int> coeff(-4, 4), xp(-2, 2), nterms(1, 3);
  auto poly = [&] {
    Scalar s = Scalar::zero(m);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      Scalar t = Scalar::integer(coeff(rng), m);
      t = t * P(m, xp(rng)) * Q(m, xp(rng)) * H(m, xp(rng));
      s = s + t;
    }
    return s;
  };
  Scalar s = poly();
  if (allow_fraction) {
    Scalar d = poly();
    if (!d.is_zero()) s = s / d;
  }
  return s;
}

}  // namespace

TEST_CASE("self quotient is one") {
  auto m = RingMode::generic();
  Scalar x = Q(m) - P(m, -1);
  CHECK((x / x).is_one());
}

TEST_CASE("q times q inverse is one") {
  auto m = RingMode::generic();
  CHECK((Q(m) * Q(m, -1)).is_one());
}

TEST_CASE("equal-pq substitutes p by q") {
  auto m = RingMode::equal_pq();
  Scalar x = P(m, -1) - Q(m);
  CHECK(x == Q(m, -1) - Q(m));
  CHECK_FALSE(x.involves(Sym::p));
}

TEST_CASE("root of unity substitution makes p^-1 q equal zeta") {
  auto m = RingMode::root_of_unity(3, 3);
  Scalar x = P(m, -1) * Q(m);
  CHECK(x == Scalar::zeta(m));
}

TEST_CASE("Phi_3 reduction kills 1 + zeta + zeta^2") {
  auto m = RingMode::root_of_unity(3, 3);
  Scalar x = Scalar::one(m) + Scalar::zeta(m) + Scalar::zeta(m, 2);
  CHECK(x.is_zero());
}

TEST_CASE("zeta^n is one, zeta^k is not for 0 < k < d") {
  for (auto [n, d] : {std::pair{2, 2}, {3, 3}, {4, 2}, {4, 4}, {6, 3}}) {
    auto m = RingMode::root_of_unity(n, d);
    CHECK(Scalar::zeta(m).pow(n).is_one());
    CHECK(Scalar::zeta(m).pow(d).is_one());
    for (int k = 1; k < d; ++k) CHECK_FALSE(Scalar::zeta(m).pow(k).is_one());
  }
}

TEST_CASE("fraction reduction cancels common factors") {
  auto m = RingMode::generic();
  Scalar num = P(m) * P(m) - Scalar::one(m);   // p^2 - 1
  Scalar den = P(m) - Scalar::one(m);          // p - 1
  CHECK(num / den == P(m) + Scalar::one(m));
}

TEST_CASE("division by an identically vanishing scalar throws") {
  auto m = RingMode::equal_pq();
  Scalar z = P(m) - Q(m);  // identically zero after substitution
  CHECK(z.is_zero());
  CHECK_THROWS_AS(Scalar::one(m) / z, Error);
}

TEST_CASE("canonical text of simple values") {
  auto m = RingMode::generic();
  CHECK(Scalar::zero(m).str() == "0");
  CHECK(Scalar::one(m).str() == "1");
  CHECK((P(m, -1) * Q(m) - Scalar::one(m)).str() == "p^-1*q - 1");
  CHECK((Q(m) - P(m, -1)).str() == "q - p^-1");
  CHECK((Scalar::one(m) / (Q(m) - P(m, -1))).str() == "p*(p*q - 1)^-1");
  CHECK((Scalar::rational(Rational(-2, 3), m) * H(m)).str() == "-2/3*h");
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937 rng(20240811);
  for (const auto& m : {RingMode::generic(), RingMode::equal_pq(), RingMode::root_of_unity(3, 3),
                        RingMode::root_of_unity(4, 2)}) {
    for (int i = 0; i < 60; ++i) {
      Scalar a = random_scalar(rng, m, true);
      Scalar b = random_scalar(rng, m, false);
      Scalar c = random_scalar(rng, m, false);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a - a).is_zero());
      if (!b.is_zero()) CHECK(a * b / b == a);
    }
  }
}

TEST_CASE("substitution commutes with arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3), xp(-2, 2);
  for (const auto& m : {RingMode::equal_pq(), RingMode::root_of_unity(3, 3)}) {
    auto g = RingMode::generic();
    for (int i = 0; i < 40; ++i) {
      int c1 = coeff(rng), e1 = xp(rng), e2 = xp(rng), c2 = coeff(rng), e3 = xp(rng);
      auto build = [&](const RingMode& mode) {
        return Scalar::integer(c1, mode) * P(mode, e1) * Q(mode, e2) +
               Scalar::integer(c2, mode) * H(mode, e3);
      };
      auto rebuild = [&](const Scalar& s) {
        // push the generic value through the substitution term by term
        Scalar out = Scalar::zero(m);
        for (const auto& [xpv, cy] : s.num().terms()) {
          Scalar t = Scalar::rational(cy.rational_part(), m);
          t = t * P(m, xpv.e[0]) * Q(m, xpv.e[1]) * H(m, xpv.e[2]);
          out = out + t;
        }
        return out;
      };
      Scalar ga = build(g), gm = build(m);
      CHECK(rebuild(ga) == gm);
      CHECK(rebuild(ga * ga) == gm * gm);
      CHECK(rebuild(ga + ga) == gm + gm);
    }
  }
}

TEST_CASE("pow handles negative exponents") {
  auto m = RingMode::generic();
  Scalar x = Q(m) - P(m, -1);
  CHECK((x.pow(3) * x.pow(-3)).is_one());
  CHECK(x.pow(0).is_one());
  CHECK_THROWS_AS(Scalar::zero(m).pow(-1), Error);
}
