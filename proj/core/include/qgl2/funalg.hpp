#pragma once

#include "qgl2/report.hpp"
#include "qgl2/tensor.hpp"

namespace qgl2 {

// Function-algebra presets on the generators a < b < c < D < d, with D the
// quantum determinant adjoined as a generator via a*d -> D + p^-1*b*c.
enum class FunVariant { Mat, GL, SLq, SLqXi };

struct FunAlg {
  AlgebraPtr alg;
  FunVariant variant = FunVariant::Mat;
  int a = 0, b = 1, c = 2, D = 3, d = 4;

  NCPoly gen(int index, int exp = 1) const { return NCPoly::generator(alg, index, exp); }
  NCPoly one() const { return NCPoly::unit(alg); }
  NCPoly scalar(const Scalar& s) const { return NCPoly::from_scalar(alg, s); }
  Scalar sym(Sym s, int exp = 1) const { return Scalar::symbol(s, alg->mode, exp); }
  bool has_inverse_det() const { return variant != FunVariant::Mat; }
};

// mat/gl take an optional root-of-unity mode (n, dzeta); slq is equal-pq with
// the determinant exponent erased; slqxi(n, dzeta) reduces it mod n
FunAlg make_funalg(FunVariant v, int n = 0, int dzeta = 0);
// p = q with D kept as a generator; the unquotiented centrality setting
FunAlg make_gl_equal_pq();

NCPoly determinant(const FunAlg& f);
TensorPoly coproduct(const FunAlg& f, const NCPoly& x);
Scalar counit(const FunAlg& f, const NCPoly& x);
NCPoly antipode(const FunAlg& f, const NCPoly& x);  // AntipodeUnavailable on Mat

struct Matrix2 {
  std::array<std::array<NCPoly, 2>, 2> e;

  static Matrix2 zero(const AlgebraPtr& alg);
  static Matrix2 identity(const AlgebraPtr& alg);
  Matrix2 operator*(const Matrix2&) const;
  Matrix2 operator+(const Matrix2&) const;
  Matrix2 transpose() const;
  bool operator==(const Matrix2&) const;
  std::string str() const;
};

Matrix2 matrix_Y(const FunAlg& f);
Matrix2 matrix_P(const FunAlg& f);
Matrix2 matrix_P_inv(const FunAlg& f);
Matrix2 matrix_Q(const FunAlg& f);
Matrix2 matrix_Q_inv(const FunAlg& f);
Matrix2 entrywise(const Matrix2& m, const EndoFn& fn);

IdentityReport matrix_identities(const FunAlg& f);

struct Centrality {
  bool central = false;
  std::string witness_generator;  // empty when central
  NCPoly commutator;              // zero when central
};

Centrality is_central(const FunAlg& f, const NCPoly& x);

// two-sided ideal generated by b and c: monomial criterion
bool ideal_membership_bc(const FunAlg& f, const NCPoly& x);
IdentityReport hopf_ideal_check_bc(const FunAlg& f);

// ideal generated by D^n - 1 inside the unquotiented root-of-unity algebra
IdentityReport hopf_ideal_check_Dn(int n, int dzeta);

// quotient by (b, c): commutative algebra on a, D, d with a*d = D, D^n = 1
struct QuotientBC {
  AlgebraPtr alg;
  int a = 0, D = 1, d = 2;
};
QuotientBC make_quotient_bc(const FunAlg& f);
NCPoly quotient_by_bc(const QuotientBC& q, const NCPoly& x);
IdentityReport quotient_bc_checks(const FunAlg& f);

// both quantum-plane coactions preserve their plane relations: the straight
// coaction x' = a(x)x + b(x)y pairs with the q-plane, the transposed one with
// the p-plane
IdentityReport quantum_plane_coaction_check(const FunAlg& f);

}  // namespace qgl2
