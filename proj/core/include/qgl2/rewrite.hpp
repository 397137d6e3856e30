#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgl2/scalar.hpp"

namespace qgl2 {

// Point of the formal two-torus: each coordinate is a monomial in p, q, h,
// zeta with integer exponents (zeta exponents mod d). Mode substitutions are
// applied on construction, matching the scalar conventions.
struct TorusPoint {
  std::array<int32_t, 4> x1{0, 0, 0, 0}, x2{0, 0, 0, 0};  // exponents of p, q, h, zeta
  int32_t d = 1;

  static TorusPoint identity(const RingMode& m);
  static TorusPoint make(const RingMode& m, std::array<int32_t, 4> c1, std::array<int32_t, 4> c2);

  TorusPoint operator*(const TorusPoint&) const;
  TorusPoint inverse() const;
  TorusPoint pow(int k) const;
  bool is_identity() const;
  bool operator==(const TorusPoint&) const = default;
  auto operator<=>(const TorusPoint&) const = default;

  // coordinate (1 or 2) as a scalar monomial
  Scalar coord_scalar(int which, const RingMode& m) const;
  // x1^w1 * x2^w2 as a scalar, the value of the weight (w1, w2) at this point
  Scalar weight_scalar(const RingMode& m, int w1, int w2) const;
  std::string str() const;
};

struct Generator {
  std::string name;
  int index = 0;
  bool invertible = false;
  // conjugation weight (w1, w2): t g t^-1 = x1^w1 x2^w2 * g for torus points t
  std::optional<std::pair<int, int>> torus_weight;
};

struct GenPow {
  int16_t gen = 0;
  int16_t exp = 0;
  bool operator==(const GenPow&) const = default;
};

struct Letter {
  enum class Kind : uint8_t { Gen, Torus };
  Kind kind = Kind::Gen;
  GenPow gp{};
  TorusPoint tp{};

  static Letter gen(int g, int e) { return {Kind::Gen, {static_cast<int16_t>(g), static_cast<int16_t>(e)}, {}}; }
  static Letter torus(TorusPoint t) { return {Kind::Torus, {}, std::move(t)}; }
  bool operator==(const Letter&) const = default;
};

// Replacement for an adjacent generator pair x*y. A scaling rule rewrites to
// swap_coeff * y*x; a general rule substitutes the listed words.
struct RuleRhs {
  std::optional<Scalar> swap_coeff;
  std::vector<std::pair<Scalar, std::vector<Letter>>> general;
};

struct Algebra {
  std::string id;
  RingMode mode;
  std::vector<Generator> gens;
  // keyed by the adjacent pair (left, right); out-of-order pairs with no
  // entry commute freely, in-order pairs with an entry are reducible
  std::map<std::pair<int, int>, RuleRhs> rules;
  std::map<int, int> exponent_moduli;  // gen -> m with g^m = 1
  bool has_torus = false;
  std::vector<Letter> confluence_letters;  // alphabet used by check_confluence

  int gen_index(std::string_view name) const;  // -1 when absent
  const RuleRhs* rule(int left, int right) const;
  std::vector<std::pair<int, int>> inorder_rule_pairs() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Monomial {
  std::vector<int16_t> exps;
  TorusPoint torus{};

  int32_t grade() const;
  bool is_unit() const;  // exponent-free and torus-free
  bool operator==(const Monomial&) const = default;
};

// graded order, ties broken on the highest generator index first, torus last
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class NCPoly {
public:
  NCPoly() = default;
  explicit NCPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static NCPoly zero(AlgebraPtr alg) { return NCPoly(std::move(alg)); }
  static NCPoly unit(AlgebraPtr alg);
  static NCPoly from_scalar(AlgebraPtr alg, const Scalar& s);
  static NCPoly generator(AlgebraPtr alg, int gen, int exp = 1);
  static NCPoly torus_hat(AlgebraPtr alg, const TorusPoint& t);
  static NCPoly monomial_term(AlgebraPtr alg, Monomial m, Scalar c);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Monomial, Scalar, MonomialLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  Scalar scalar_value() const;  // 0 for zero, coefficient of the unit monomial otherwise
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Scalar& c);

  NCPoly operator+(const NCPoly&) const;
  NCPoly operator-(const NCPoly&) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly&) const;
  NCPoly scaled(const Scalar&) const;
  NCPoly pow(int k) const;  // negative k needs a single invertible term
  bool operator==(const NCPoly&) const;

  std::string str() const;

private:
  AlgebraPtr alg_;
  std::map<Monomial, Scalar, MonomialLess> terms_;
};

// PBW normal form of a scalar-weighted word; deterministic strategy
NCPoly normalize_word(const AlgebraPtr& alg, const Scalar& coeff, std::vector<Letter> letters);

// set of normal forms reachable under every order of rule application;
// more than one element witnesses non-confluence
std::vector<NCPoly> all_normal_forms(const AlgebraPtr& alg, const std::vector<Letter>& letters);

struct Divergence {
  std::string word;
  std::string nf_a, nf_b;
};

struct ConfluenceReport {
  std::string algebra;
  int max_len = 0;
  long words_checked = 0;
  std::vector<Divergence> divergences;
  bool confluent() const { return divergences.empty(); }
  std::string str() const;
};

ConfluenceReport check_confluence(const AlgebraPtr& alg, int max_len);

// all normal monomials of the given total degree in ascending monomial order;
// invertible generators without an exponent modulus need an explicit bound
std::vector<Monomial> enumerate_basis(const AlgebraPtr& alg, int total_degree,
                                      std::optional<int> invertible_bound = std::nullopt);

std::string monomial_str(const Algebra& alg, const Monomial& m);
std::string dump_presentation(const AlgebraPtr& alg);

}  // namespace qgl2
