#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qgl2/error.hpp"

namespace qgl2 {

using Rational = mpq_class;

// Coefficient ring selector. EqualPQ substitutes p := q; RootOfUnity
// substitutes p := zeta^-1 * q, where zeta is a primitive d-th root of
// unity and d | n (so zeta^n = 1). Substitutions are applied eagerly when
// symbols are constructed, so a scalar in EqualPQ mode never contains p.
struct RingMode {
  enum class Kind { Generic, EqualPQ, RootOfUnity };

  Kind kind = Kind::Generic;
  int n = 1;  // RootOfUnity: zeta^n = 1
  int d = 1;  // order of zeta (1 outside RootOfUnity)

  static RingMode generic() { return {}; }
  static RingMode equal_pq() { return {Kind::EqualPQ, 1, 1}; }
  static RingMode root_of_unity(int n, int d = 0);

  bool operator==(const RingMode&) const = default;
  std::string str() const;
};

// Element of Q(zeta_d) = Q[x]/Phi_d(x), coordinates in the power basis
// 1, zeta, ..., zeta^{phi(d)-1}.
class Cyclotomic {
public:
  Cyclotomic() : d_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(int d, Rational r = Rational(0));
  static Cyclotomic zeta_pow(int d, long k);
  static Cyclotomic from_coords(int d, std::vector<Rational> coords);

  int order() const { return d_; }
  bool is_zero() const;
  bool is_rational() const;           // lies in the prime field
  const Rational& rational_part() const { return c_[0]; }
  const std::vector<Rational>& coords() const { return c_; }

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic&) const;
  Cyclotomic operator-(const Cyclotomic&) const;
  Cyclotomic operator*(const Cyclotomic&) const;
  Cyclotomic inverse() const;  // throws DivisionByZero on zero
  bool operator==(const Cyclotomic&) const = default;

private:
  int d_;
  std::vector<Rational> c_;  // size phi(d), reduced mod Phi_d
  void reduce(std::vector<Rational>& raw) const;
};

// The d-th cyclotomic polynomial, monic, as coefficient vector (low to high).
const std::vector<Rational>& cyclotomic_polynomial(int d);
int euler_phi(int d);

enum class Sym : int { p = 0, q = 1, h = 2 };

// Laurent exponent vector for (p, q, h).
struct Expo3 {
  std::array<int32_t, 3> e{0, 0, 0};
  int32_t grade() const { return e[0] + e[1] + e[2]; }
  bool operator==(const Expo3&) const = default;
};

// Graded order; ties broken lexicographically with h before q before p
// (symbol order zeta < p < q < h, highest symbol compared first).
struct Expo3Less {
  bool operator()(const Expo3& a, const Expo3& b) const {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    for (int v = 2; v >= 0; --v)
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
    return false;
  }
};

// Sparse Laurent polynomial in p, q, h over Q(zeta_d).
class MPoly {
public:
  MPoly() : d_(1) {}
  explicit MPoly(int d) : d_(d) {}
  static MPoly constant(int d, const Cyclotomic& c);
  static MPoly monomial(int d, const Expo3& xp, const Cyclotomic& c);

  int order() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  const std::map<Expo3, Cyclotomic, Expo3Less>& terms() const { return terms_; }
  int32_t min_exp(int var) const;  // 0 for the zero polynomial
  int32_t max_exp(int var) const;
  bool involves(int var) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly&) const;
  MPoly operator-(const MPoly&) const;
  MPoly operator*(const MPoly&) const;
  MPoly shifted(const Expo3& by) const;  // multiply by a monomial
  MPoly scaled(const Cyclotomic& c) const;
  bool operator==(const MPoly&) const = default;

  void add_term(const Expo3& xp, const Cyclotomic& c);  // accumulate, drop zeros
  const Cyclotomic& leading_coeff() const;              // under Expo3Less, max term
  const Expo3& leading_exp() const;

private:
  int d_;
  std::map<Expo3, Cyclotomic, Expo3Less> terms_;
};

// gcd of two genuine polynomials (no negative exponents), monic result.
MPoly poly_gcd(const MPoly& a, const MPoly& b);
// exact division; throws std::logic_error if not divisible
MPoly poly_divexact(const MPoly& a, const MPoly& b);

// Element of the fraction field Q(zeta_d)(p, q, h), kept in canonical form:
// denominator is a genuine polynomial with min-exponent 0 in each variable,
// monic leading coefficient, and no common factor with the numerator.
// Numerators may be Laurent. Equality is term-map identity.
class Scalar {
public:
  Scalar() : mode_(RingMode::generic()), num_(1), den_(MPoly::constant(1, Cyclotomic(1, 1))) {}
  static Scalar zero(const RingMode& m);
  static Scalar one(const RingMode& m);
  static Scalar rational(const Rational& r, const RingMode& m);
  static Scalar integer(long v, const RingMode& m);
  // p/q/h with the mode substitution applied; exp may be any integer
  static Scalar symbol(Sym s, const RingMode& m, int exp = 1);
  static Scalar zeta(const RingMode& m, long k = 1);
  static Scalar from_fraction(MPoly num, MPoly den, const RingMode& m);

  const RingMode& mode() const { return mode_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;  // constant and in Q
  bool involves(Sym s) const;

  Scalar operator-() const;
  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;  // throws DivisionByZero
  Scalar inverse() const;
  Scalar pow(long k) const;
  bool operator==(const Scalar&) const = default;

  // canonical text, parseable by the expression grammar
  std::string str() const;
  // sign split for rendering inside sums: (negative?, text of |this|)
  std::pair<bool, std::string> signed_str() const;
  // true when str() needs no parentheses as a product factor
  bool is_plain_term() const;

private:
  RingMode mode_;
  MPoly num_, den_;
  void canonicalize();
  static void check_same_mode(const Scalar& a, const Scalar& b);
};

std::string mpoly_str(const MPoly& poly);

}  // namespace qgl2
