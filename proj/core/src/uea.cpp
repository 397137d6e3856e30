#include "qgl2/uea.hpp"

namespace qgl2 {

namespace {

TorusPoint pt(const RingMode& m, std::array<int32_t, 4> x1, std::array<int32_t, 4> x2) {
  return TorusPoint::make(m, x1, x2);
}

}  // namespace

NCPoly UeaAlg::hat(const TorusPoint& t) const {
  if (!torus_point_allowed(*this, t))
    fail(Errc::TorusPointOutsideSubgroup,
         "torus point " + t.str() + " is outside the subgroup of " + alg->id);
  return NCPoly::torus_hat(alg, t);
}

NCPoly UeaAlg::ef_commutator_value() const {
  const RingMode& m = alg->mode;
  Scalar denom = Scalar::symbol(Sym::q, m) - Scalar::symbol(Sym::p, m, -1);
  if (denom.is_zero()) fail(Errc::ZeroDenominator, "commutator denominator vanishes identically");
  NCPoly x = NCPoly::torus_hat(alg, Q1).scaled(denom.inverse());
  return x - NCPoly::torus_hat(alg, Q2.inverse()).scaled(denom.inverse());
}

UeaAlg make_uea(UVariant v, int n, int dzeta) {
  RingMode mode;
  std::string id;
  switch (v) {
    case UVariant::Upq:
      mode = RingMode::generic();
      id = "upq";
      break;
    case UVariant::Uq:
      mode = RingMode::equal_pq();
      id = "uq";
      break;
    case UVariant::UqXi:
      mode = RingMode::root_of_unity(n, dzeta > 0 ? dzeta : n);
      id = "uqxi(n=" + std::to_string(mode.n) + ",d=" + std::to_string(mode.d) + ")";
      break;
  }

  auto alg = std::make_shared<Algebra>();
  alg->id = id;
  alg->mode = mode;
  alg->has_torus = true;
  alg->gens = {{"F", 0, false, std::pair<int, int>{-1, 1}},
               {"E", 1, false, std::pair<int, int>{1, -1}}};

  UeaAlg u;
  u.variant = v;
  u.Q1 = pt(mode, {0, 1, 0, 0}, {-1, 0, 0, 0});    // (q, p^-1)
  u.Q2 = pt(mode, {1, 0, 0, 0}, {0, -1, 0, 0});    // (p, q^-1)
  u.K = pt(mode, {0, 1, 0, 0}, {0, -1, 0, 0});     // (q, q^-1)
  u.qhat = u.K;
  u.hhat = pt(mode, {0, 0, 1, 0}, {0, 0, -1, 0});  // (h, h^-1)
  u.W = pt(mode, {0, 0, 0, 0}, {0, 0, 0, 1});      // (1, zeta)
  u.xihat = pt(mode, {0, 0, 0, 1}, {0, 0, 0, -1}); // (zeta, zeta^-1)

  Scalar denom = Scalar::symbol(Sym::q, mode) - Scalar::symbol(Sym::p, mode, -1);
  if (denom.is_zero())
    fail(Errc::ZeroDenominator, "commutator denominator vanishes identically in " + id);
  RuleRhs ef;  // E*F -> F*E + (Q1-hat - Q2-hat^-1)/(q - p^-1)
  ef.general.push_back({Scalar::one(mode), {Letter::gen(0, 1), Letter::gen(1, 1)}});
  ef.general.push_back({denom.inverse(), {Letter::torus(u.Q1)}});
  ef.general.push_back({-denom.inverse(), {Letter::torus(u.Q2.inverse())}});
  alg->rules[{1, 0}] = std::move(ef);

  alg->confluence_letters = {Letter::gen(0, 1), Letter::gen(0, 2), Letter::gen(1, 1),
                             Letter::gen(1, 2), Letter::torus(u.hhat)};
  switch (v) {
    case UVariant::Upq:
      alg->confluence_letters.push_back(Letter::torus(u.Q1));
      alg->confluence_letters.push_back(Letter::torus(u.Q2.inverse()));
      break;
    case UVariant::Uq:
      alg->confluence_letters.push_back(Letter::torus(u.K));
      alg->confluence_letters.push_back(Letter::torus(u.K.inverse()));
      break;
    case UVariant::UqXi:
      alg->confluence_letters.push_back(Letter::torus(u.W));
      alg->confluence_letters.push_back(Letter::torus(u.qhat));
      alg->confluence_letters.push_back(Letter::torus(u.xihat));
      break;
  }
  u.alg = alg;
  return u;
}

bool torus_point_allowed(const UeaAlg& u, const TorusPoint& t) {
  switch (u.variant) {
    case UVariant::Upq:
      return true;
    case UVariant::Uq:
      for (int i = 0; i < 3; ++i)
        if (t.x1[i] + t.x2[i] != 0) return false;
      return (t.x1[3] + t.x2[3]) % t.d == 0;
    case UVariant::UqXi:
      // the antidiagonal twisted by powers of W = (1, zeta)
      for (int i = 0; i < 3; ++i)
        if (t.x1[i] + t.x2[i] != 0) return false;
      return true;
  }
  return false;
}

NCPoly u_normalize(const UeaAlg& u, const Scalar& coeff, std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.kind == Letter::Kind::Torus && !torus_point_allowed(u, l.tp))
      fail(Errc::TorusPointOutsideSubgroup,
           "torus point " + l.tp.str() + " is outside the subgroup of " + u.alg->id);
    if (l.kind == Letter::Kind::Gen && l.gp.exp < 0)
      fail(Errc::NegativeExponentOnNonInvertible,
           "negative exponent on " + u.alg->gens[l.gp.gen].name);
  }
  return normalize_word(u.alg, coeff, std::move(letters));
}

TensorPoly u_coproduct(const UeaAlg& u, const NCPoly& x) {
  NCPoly E = u.gen(u.E), F = u.gen(u.F), one = u.one();
  std::vector<TensorPoly> im;
  im.push_back(TensorPoly::tensor(F, NCPoly::torus_hat(u.alg, u.Q2.inverse())) +
               TensorPoly::tensor(one, F));
  im.push_back(TensorPoly::tensor(E, one) +
               TensorPoly::tensor(NCPoly::torus_hat(u.alg, u.Q1), E));
  return extend_to_tensor(x, im);
}

Scalar u_counit(const UeaAlg& u, const NCPoly& x) {
  return extend_to_scalar(x, {Scalar::zero(u.alg->mode), Scalar::zero(u.alg->mode)});
}

NCPoly u_antipode(const UeaAlg& u, const NCPoly& x) {
  std::vector<NCPoly> im;
  im.push_back(-(NCPoly::torus_hat(u.alg, u.Q2) * u.gen(u.F)));           // S(F) = -Q2 F
  im.push_back(-(NCPoly::torus_hat(u.alg, u.Q1.inverse()) * u.gen(u.E))); // S(E) = -Q1^-1 E
  return extend_antimap(x, im);
}

Scalar weight_eval(const UeaAlg& u, const NCPoly& x, const Weight& w) {
  Scalar out = Scalar::zero(u.alg->mode);
  for (const auto& [m, c] : x.terms()) {
    for (auto e : m.exps)
      if (e != 0)
        fail(Errc::NonToralElement, "weight evaluation of a non-torus element: " + x.str());
    out = out + c * m.torus.weight_scalar(u.alg->mode, w.m1, w.m2);
  }
  return out;
}

IdentityReport embedding_consistency(int n, int dzeta) {
  UeaAlg u = make_uea(UVariant::UqXi, n, dzeta);
  const RingMode& m = u.alg->mode;
  IdentityReport rep;
  rep.preset = u.alg->id;
  rep.suite = "uea";

  add_eq(rep, "Q1 = W*qhat", u.Q1, u.W * u.qhat);
  add_eq(rep, "Q2^-1 = W*xihat*qhat^-1", u.Q2.inverse(), u.W * u.xihat * u.qhat.inverse());
  rep.add("W^n = 1", u.W.pow(n).is_identity(),
          u.W.pow(n).is_identity() ? "" : u.W.pow(n).str());

  NCPoly E = u.gen(u.E), F = u.gen(u.F), one = u.one();
  Scalar q = Scalar::symbol(Sym::q, m);
  Scalar denom = q - Scalar::zeta(m) * Scalar::symbol(Sym::q, m, -1);
  NCPoly rhs = (NCPoly::torus_hat(u.alg, u.qhat * u.W) -
                NCPoly::torus_hat(u.alg, u.xihat * u.qhat.inverse() * u.W))
                   .scaled(denom.inverse());
  add_eq(rep, "[E,F] = (qhat - xihat*qhat^-1) W / (q - zeta q^-1)", E * F - F * E, rhs);
  add_eq(rep, "[E,F] matches the generic commutator value", E * F - F * E,
         u.ef_commutator_value());

  add_eq(rep, "Delta(E) = E(x)1 + W*qhat(x)E", u_coproduct(u, E),
         TensorPoly::tensor(E, one) +
             TensorPoly::tensor(NCPoly::torus_hat(u.alg, u.W * u.qhat), E));
  add_eq(rep, "Delta(F) = F(x)W*xihat*qhat^-1 + 1(x)F", u_coproduct(u, F),
         TensorPoly::tensor(F, NCPoly::torus_hat(u.alg, u.W * u.xihat * u.qhat.inverse())) +
             TensorPoly::tensor(one, F));
  return rep;
}

}  // namespace qgl2
