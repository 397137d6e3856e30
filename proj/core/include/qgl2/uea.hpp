#pragma once

#include "qgl2/report.hpp"
#include "qgl2/tensor.hpp"

namespace qgl2 {

// Enveloping-algebra presets over the torus group algebra, PBW order
// t-hat < F < E. Straightening: E t = alpha(t)^-1 t E, F t = alpha(t) t F,
// E F = F E + (Q1-hat - Q2-hat^-1)/(q - p^-1).
enum class UVariant { Upq, Uq, UqXi };

struct Weight {
  int m1 = 0, m2 = 0;
  static Weight alpha() { return {1, -1}; }
};

struct UeaAlg {
  AlgebraPtr alg;
  UVariant variant = UVariant::Upq;
  int F = 0, E = 1;
  TorusPoint Q1, Q2, K, qhat, hhat, W, xihat;

  NCPoly gen(int index, int exp = 1) const { return NCPoly::generator(alg, index, exp); }
  NCPoly hat(const TorusPoint& t) const;  // validates subgroup membership
  NCPoly one() const { return NCPoly::unit(alg); }
  NCPoly ef_commutator_value() const;  // the torus-algebra element [E, F] reduces to
};

UeaAlg make_uea(UVariant v, int n = 0, int dzeta = 0);

// Upq admits every point; Uq the antidiagonal x1*x2 = 1; UqXi the
// antidiagonal twisted by powers of W = (1, zeta)
bool torus_point_allowed(const UeaAlg& u, const TorusPoint& t);

NCPoly u_normalize(const UeaAlg& u, const Scalar& coeff, std::vector<Letter> letters);
TensorPoly u_coproduct(const UeaAlg& u, const NCPoly& x);
Scalar u_counit(const UeaAlg& u, const NCPoly& x);
NCPoly u_antipode(const UeaAlg& u, const NCPoly& x);

// evaluation of a torus-subalgebra element at an integer weight;
// NonToralElement if x involves E or F
Scalar weight_eval(const UeaAlg& u, const NCPoly& x, const Weight& w);

// the root-of-unity subalgebra picture: Q1 = W qhat, Q2^-1 = W xihat qhat^-1,
// W^n = 1, and the specialized commutator and coproducts
IdentityReport embedding_consistency(int n, int dzeta);

}  // namespace qgl2
