#include "qgl2/funalg.hpp"

namespace qgl2 {

namespace {

RuleRhs swap_rule(Scalar c) {
  RuleRhs r;
  r.swap_coeff = std::move(c);
  return r;
}

std::vector<Letter> conf_letters(const Algebra& alg) {
  std::vector<Letter> out;
  for (const auto& g : alg.gens) {
    out.push_back(Letter::gen(g.index, 1));
    out.push_back(Letter::gen(g.index, 2));
    if (g.invertible) out.push_back(Letter::gen(g.index, -1));
  }
  return out;
}

}  // namespace

FunAlg make_funalg(FunVariant v, int n, int dzeta) {
  RingMode mode;
  std::string id;
  switch (v) {
    case FunVariant::Mat:
    case FunVariant::GL: {
      id = v == FunVariant::Mat ? "mat" : "gl";
      if (n > 0) {
        mode = RingMode::root_of_unity(n, dzeta > 0 ? dzeta : n);
        id += "[" + mode.str() + "]";
      } else {
        mode = RingMode::generic();
      }
      break;
    }
    case FunVariant::SLq:
      mode = RingMode::equal_pq();
      id = "slq";
      break;
    case FunVariant::SLqXi:
      mode = RingMode::root_of_unity(n, dzeta > 0 ? dzeta : n);
      id = "slqxi(n=" + std::to_string(mode.n) + ",d=" + std::to_string(mode.d) + ")";
      break;
  }

  auto alg = std::make_shared<Algebra>();
  alg->id = id;
  alg->mode = mode;
  bool det_invertible = v != FunVariant::Mat;
  alg->gens = {{"a", 0, false, {}},
               {"b", 1, false, {}},
               {"c", 2, false, {}},
               {"D", 3, det_invertible, {}},
               {"d", 4, false, {}}};

  Scalar p = Scalar::symbol(Sym::p, mode);
  Scalar q = Scalar::symbol(Sym::q, mode);
  Scalar pinv = Scalar::symbol(Sym::p, mode, -1);
  Scalar qinv = Scalar::symbol(Sym::q, mode, -1);
  Scalar one = Scalar::one(mode);

  alg->rules[{1, 0}] = swap_rule(p);           // b*a -> p a*b
  alg->rules[{2, 0}] = swap_rule(q);           // c*a -> q a*c
  alg->rules[{2, 1}] = swap_rule(pinv * q);    // c*b -> p^-1 q b*c
  alg->rules[{4, 1}] = swap_rule(q);           // d*b -> q b*d
  alg->rules[{4, 2}] = swap_rule(p);           // d*c -> p c*d
  alg->rules[{3, 1}] = swap_rule(pinv * q);    // D*b -> p^-1 q b*D
  alg->rules[{3, 2}] = swap_rule(p * qinv);    // D*c -> p q^-1 c*D

  RuleRhs da;  // d*a -> a*d - (p^-1 - q) b*c
  da.general.push_back({one, {Letter::gen(0, 1), Letter::gen(4, 1)}});
  da.general.push_back({-(pinv - q), {Letter::gen(1, 1), Letter::gen(2, 1)}});
  alg->rules[{4, 0}] = std::move(da);

  RuleRhs ad;  // a*d -> D + p^-1 b*c
  ad.general.push_back({one, {Letter::gen(3, 1)}});
  ad.general.push_back({pinv, {Letter::gen(1, 1), Letter::gen(2, 1)}});
  alg->rules[{0, 4}] = std::move(ad);

  if (v == FunVariant::SLq) alg->exponent_moduli[3] = 1;
  if (v == FunVariant::SLqXi) alg->exponent_moduli[3] = mode.n;

  alg->confluence_letters = conf_letters(*alg);
  return {alg, v};
}

FunAlg make_gl_equal_pq() {
  FunAlg f = make_funalg(FunVariant::SLq);
  auto alg = std::make_shared<Algebra>(*f.alg);
  alg->id = "gl[equal-pq]";
  alg->exponent_moduli.clear();
  alg->confluence_letters = conf_letters(*alg);
  return {alg, FunVariant::GL};
}

NCPoly determinant(const FunAlg& f) {
  return f.gen(f.d) * f.gen(f.a) - f.scalar(f.sym(Sym::p)) * f.gen(f.c) * f.gen(f.b);
}

namespace {

std::vector<TensorPoly> coproduct_images(const FunAlg& f) {
  auto A = f.gen(f.a), B = f.gen(f.b), C = f.gen(f.c), Dd = f.gen(f.d), Det = f.gen(f.D);
  std::vector<TensorPoly> im;
  im.push_back(TensorPoly::tensor(A, A) + TensorPoly::tensor(B, C));    // a
  im.push_back(TensorPoly::tensor(A, B) + TensorPoly::tensor(B, Dd));   // b
  im.push_back(TensorPoly::tensor(C, A) + TensorPoly::tensor(Dd, C));   // c
  im.push_back(TensorPoly::tensor(Det, Det));                           // D
  im.push_back(TensorPoly::tensor(C, B) + TensorPoly::tensor(Dd, Dd));  // d
  return im;
}

std::vector<Scalar> counit_values(const FunAlg& f) {
  Scalar one = Scalar::one(f.alg->mode), nil = Scalar::zero(f.alg->mode);
  return {one, nil, nil, one, one};
}

std::vector<NCPoly> antipode_images(const FunAlg& f) {
  Scalar p = f.sym(Sym::p), pinv = f.sym(Sym::p, -1);
  NCPoly Dinv = f.gen(f.D, -1);
  std::vector<NCPoly> im(5, NCPoly::zero(f.alg));
  im[0] = f.gen(f.d) * Dinv;                  // S(a) = d D^-1
  im[1] = (f.gen(f.b) * Dinv).scaled(-p);     // S(b) = -p b D^-1
  im[2] = (f.gen(f.c) * Dinv).scaled(-pinv);  // S(c) = -p^-1 c D^-1
  im[3] = Dinv;                               // S(D) = D^-1
  im[4] = f.gen(f.a) * Dinv;                  // S(d) = a D^-1
  return im;
}

}  // namespace

TensorPoly coproduct(const FunAlg& f, const NCPoly& x) {
  return extend_to_tensor(x, coproduct_images(f));
}

Scalar counit(const FunAlg& f, const NCPoly& x) { return extend_to_scalar(x, counit_values(f)); }

NCPoly antipode(const FunAlg& f, const NCPoly& x) {
  if (!f.has_inverse_det())
    fail(Errc::AntipodeUnavailable, "the bialgebra " + f.alg->id + " has no antipode");
  return extend_antimap(x, antipode_images(f));
}

// ---------------------------------------------------------------------------
// matrices

Matrix2 Matrix2::zero(const AlgebraPtr& alg) {
  Matrix2 m;
  for (auto& row : m.e) row.fill(NCPoly::zero(alg));
  return m;
}

Matrix2 Matrix2::identity(const AlgebraPtr& alg) {
  Matrix2 m = zero(alg);
  m.e[0][0] = NCPoly::unit(alg);
  m.e[1][1] = NCPoly::unit(alg);
  return m;
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = e[i][0] * o.e[0][j] + e[i][1] * o.e[1][j];
  return r;
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = e[i][j] + o.e[i][j];
  return r;
}

Matrix2 Matrix2::transpose() const {
  Matrix2 r = *this;
  std::swap(r.e[0][1], r.e[1][0]);
  return r;
}

bool Matrix2::operator==(const Matrix2& o) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(e[i][j] == o.e[i][j])) return false;
  return true;
}

std::string Matrix2::str() const {
  return "[" + e[0][0].str() + ", " + e[0][1].str() + "; " + e[1][0].str() + ", " +
         e[1][1].str() + "]";
}

Matrix2 matrix_Y(const FunAlg& f) {
  Matrix2 m = Matrix2::zero(f.alg);
  m.e[0][0] = f.gen(f.a);
  m.e[0][1] = f.gen(f.b);
  m.e[1][0] = f.gen(f.c);
  m.e[1][1] = f.gen(f.d);
  return m;
}

Matrix2 matrix_P(const FunAlg& f) {
  Matrix2 m = Matrix2::zero(f.alg);
  m.e[0][1] = f.scalar(-Scalar::one(f.alg->mode));
  m.e[1][0] = f.scalar(f.sym(Sym::p, -1));
  return m;
}

Matrix2 matrix_P_inv(const FunAlg& f) {
  Matrix2 m = Matrix2::zero(f.alg);
  m.e[0][1] = f.scalar(f.sym(Sym::p));
  m.e[1][0] = f.scalar(-Scalar::one(f.alg->mode));
  return m;
}

Matrix2 matrix_Q(const FunAlg& f) {
  Matrix2 m = Matrix2::zero(f.alg);
  m.e[0][1] = f.scalar(-Scalar::one(f.alg->mode));
  m.e[1][0] = f.scalar(f.sym(Sym::q, -1));
  return m;
}

Matrix2 matrix_Q_inv(const FunAlg& f) {
  Matrix2 m = Matrix2::zero(f.alg);
  m.e[0][1] = f.scalar(f.sym(Sym::q));
  m.e[1][0] = f.scalar(-Scalar::one(f.alg->mode));
  return m;
}

Matrix2 entrywise(const Matrix2& m, const EndoFn& fn) {
  Matrix2 r = m;
  for (auto& row : r.e)
    for (auto& x : row) x = fn(x);
  return r;
}

namespace {

Matrix2 scale_left(const NCPoly& s, const Matrix2& m) {
  Matrix2 r = m;
  for (auto& row : r.e)
    for (auto& x : row) x = s * x;
  return r;
}

Matrix2 scale_right(const Matrix2& m, const NCPoly& s) {
  Matrix2 r = m;
  for (auto& row : r.e)
    for (auto& x : row) x = x * s;
  return r;
}

void add_matrix_eq(IdentityReport& rep, std::string name, const Matrix2& lhs, const Matrix2& rhs) {
  bool ok = lhs == rhs;
  rep.add(std::move(name), ok, ok ? "" : lhs.str() + "  !=  " + rhs.str());
}

}  // namespace

IdentityReport matrix_identities(const FunAlg& f) {
  IdentityReport rep;
  rep.preset = f.alg->id;
  rep.suite = "matrix";
  Matrix2 Y = matrix_Y(f), P = matrix_P(f), Q = matrix_Q(f);
  NCPoly det = determinant(f);

  add_matrix_eq(rep, "Y*P*Yt = D*P", Y * P * Y.transpose(), scale_left(det, P));
  add_matrix_eq(rep, "Yt*Q*Y = D*Q", Y.transpose() * Q * Y, scale_left(det, Q));

  if (f.has_inverse_det()) {
    Matrix2 SY = entrywise(Y, [&](const NCPoly& x) { return antipode(f, x); });
    NCPoly Dinv = f.gen(f.D, -1);
    add_matrix_eq(rep, "S(Y) = P*Yt*Pinv*Dinv",
                  SY, scale_right(P * Y.transpose() * matrix_P_inv(f), Dinv));
    add_matrix_eq(rep, "S(Y) = Dinv*Qinv*Yt*Q",
                  SY, scale_left(Dinv, matrix_Q_inv(f) * Y.transpose() * Q));
    add_matrix_eq(rep, "Y*S(Y) = S(Y)*Y = 1", Y * SY, SY * Y);
    add_matrix_eq(rep, "Y*S(Y) = 1", Y * SY, Matrix2::identity(f.alg));
  }
  return rep;
}

Centrality is_central(const FunAlg& f, const NCPoly& x) {
  for (const auto& g : f.alg->gens) {
    NCPoly gp = f.gen(g.index);
    NCPoly comm = x * gp - gp * x;
    if (!comm.is_zero()) return {false, g.name, comm};
  }
  return {true, "", NCPoly::zero(f.alg)};
}

bool ideal_membership_bc(const FunAlg& f, const NCPoly& x) {
  for (const auto& [m, c] : x.terms())
    if (m.exps[f.b] + m.exps[f.c] < 1) return false;
  return true;
}

IdentityReport hopf_ideal_check_bc(const FunAlg& f) {
  IdentityReport rep;
  rep.preset = f.alg->id;
  rep.suite = "ideals";
  auto side_test = [&](const TensorPoly& t) {
    for (const auto& [m, c] : t.terms()) {
      bool left = m.first.exps[f.b] + m.first.exps[f.c] >= 1;
      bool right = m.second.exps[f.b] + m.second.exps[f.c] >= 1;
      if (!left && !right) return false;
    }
    return true;
  };
  rep.add("Delta(b) in A(x)I + I(x)A", side_test(coproduct(f, f.gen(f.b))));
  rep.add("Delta(c) in A(x)I + I(x)A", side_test(coproduct(f, f.gen(f.c))));
  rep.add("eps(b) = 0", counit(f, f.gen(f.b)).is_zero());
  rep.add("eps(c) = 0", counit(f, f.gen(f.c)).is_zero());
  if (f.has_inverse_det()) {
    rep.add("S(b) in I", ideal_membership_bc(f, antipode(f, f.gen(f.b))));
    rep.add("S(c) in I", ideal_membership_bc(f, antipode(f, f.gen(f.c))));
  }
  return rep;
}

IdentityReport hopf_ideal_check_Dn(int n, int dzeta) {
  // the ideal (D^n - 1) lives in the unquotiented root-of-unity algebra
  FunAlg f = make_funalg(FunVariant::GL, n, dzeta);
  IdentityReport rep;
  rep.preset = f.alg->id;
  rep.suite = "ideals";
  NCPoly Dn = f.gen(f.D).pow(n);
  NCPoly one = f.one();
  NCPoly gen = Dn - one;

  TensorPoly lhs = coproduct(f, gen);
  TensorPoly rhs = TensorPoly::tensor(gen, Dn) + TensorPoly::tensor(one, gen);
  add_eq(rep, "Delta(D^n - 1) = (D^n - 1)(x)D^n + 1(x)(D^n - 1)", lhs, rhs);
  add_eq(rep, "eps(D^n - 1) = 0", counit(f, gen), Scalar::zero(f.alg->mode));
  add_eq(rep, "S(D^n - 1) = D^-n - 1", antipode(f, gen), f.gen(f.D, -1).pow(n) - one);
  add_eq(rep, "S(D^n - 1) = -D^-n (D^n - 1)", antipode(f, gen),
         -(f.gen(f.D, -1).pow(n) * gen));
  return rep;
}

// ---------------------------------------------------------------------------
// quotient by (b, c)

QuotientBC make_quotient_bc(const FunAlg& f) {
  if (f.variant != FunVariant::SLqXi)
    fail(Errc::SuiteInapplicable, "the (b, c) quotient requires the slqxi preset");
  auto alg = std::make_shared<Algebra>();
  alg->id = f.alg->id + "/(b,c)";
  alg->mode = f.alg->mode;
  alg->gens = {{"a", 0, false, {}}, {"D", 1, true, {}}, {"d", 2, false, {}}};
  RuleRhs ad;
  ad.general.push_back({Scalar::one(alg->mode), {Letter::gen(1, 1)}});
  alg->rules[{0, 2}] = std::move(ad);
  alg->exponent_moduli[1] = f.alg->mode.n;
  alg->confluence_letters = conf_letters(*alg);
  return {alg, 0, 1, 2};
}

NCPoly quotient_by_bc(const QuotientBC& q, const NCPoly& x) {
  NCPoly out(q.alg);
  for (const auto& [m, c] : x.terms()) {
    if (m.exps[1] + m.exps[2] >= 1) continue;  // b or c present
    std::vector<Letter> w;
    if (m.exps[0]) w.push_back(Letter::gen(q.a, m.exps[0]));
    if (m.exps[3]) w.push_back(Letter::gen(q.D, m.exps[3]));
    if (m.exps[4]) w.push_back(Letter::gen(q.d, m.exps[4]));
    out = out + normalize_word(q.alg, c, std::move(w));
  }
  return out;
}

IdentityReport quotient_bc_checks(const FunAlg& f) {
  QuotientBC q = make_quotient_bc(f);
  IdentityReport rep;
  rep.preset = f.alg->id;
  rep.suite = "ideals";
  int n = f.alg->mode.n;

  auto pi = [&](const NCPoly& x) { return quotient_by_bc(q, x); };
  NCPoly qa = NCPoly::generator(q.alg, q.a), qD = NCPoly::generator(q.alg, q.D),
         qd = NCPoly::generator(q.alg, q.d);
  NCPoly qone = NCPoly::unit(q.alg);

  add_eq(rep, "pi(b) = 0", pi(f.gen(f.b)), NCPoly::zero(q.alg));
  add_eq(rep, "pi(c) = 0", pi(f.gen(f.c)), NCPoly::zero(q.alg));
  add_eq(rep, "a*d = D", qa * qd, qD);
  add_eq(rep, "d*a = D", qd * qa, qD);
  add_eq(rep, "D^n = 1", qD.pow(n), qone);
  add_eq(rep, "a*d - d*a = 0", qa * qd - qd * qa, NCPoly::zero(q.alg));
  add_eq(rep, "a*D - D*a = 0", qa * qD - qD * qa, NCPoly::zero(q.alg));
  add_eq(rep, "d*D - D*d = 0", qd * qD - qD * qd, NCPoly::zero(q.alg));

  // images of the coproducts: all three generators become group-like
  auto project_tensor = [&](const TensorPoly& t) {
    TensorPoly out(q.alg);
    for (const auto& [m, c] : t.terms()) {
      NCPoly left = pi(mono_poly(f.alg, m.first));
      NCPoly right = pi(mono_poly(f.alg, m.second));
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) out.add_term(ml, mr, c * cl * cr);
    }
    return out;
  };
  add_eq(rep, "Delta(a) = a(x)a", project_tensor(coproduct(f, f.gen(f.a))),
         TensorPoly::tensor(qa, qa));
  add_eq(rep, "Delta(d) = d(x)d", project_tensor(coproduct(f, f.gen(f.d))),
         TensorPoly::tensor(qd, qd));
  add_eq(rep, "Delta(D) = D(x)D", project_tensor(coproduct(f, f.gen(f.D))),
         TensorPoly::tensor(qD, qD));

  NCPoly qDinv = qD.pow(-1);
  add_eq(rep, "S(a) = d*D^-1", pi(antipode(f, f.gen(f.a))), qd * qDinv);
  add_eq(rep, "S(d) = a*D^-1", pi(antipode(f, f.gen(f.d))), qa * qDinv);
  add_eq(rep, "S(D) = D^-1", pi(antipode(f, f.gen(f.D))), qDinv);
  return rep;
}

// ---------------------------------------------------------------------------
// quantum planes

namespace {

// the base algebra extended by commuting plane generators x, y with
// y*x -> lambda x*y
AlgebraPtr plane_extension(const FunAlg& f, const Scalar& lambda, const std::string& tag) {
  auto alg = std::make_shared<Algebra>(*f.alg);
  alg->id = f.alg->id + tag;
  int x = static_cast<int>(alg->gens.size());
  alg->gens.push_back({"x", x, false, {}});
  alg->gens.push_back({"y", x + 1, false, {}});
  alg->rules[{x + 1, x}] = swap_rule(lambda);
  alg->confluence_letters = conf_letters(*alg);
  return alg;
}

}  // namespace

IdentityReport quantum_plane_coaction_check(const FunAlg& f) {
  IdentityReport rep;
  rep.preset = f.alg->id;
  rep.suite = "matrix";
  const RingMode& mode = f.alg->mode;
  Scalar p = f.sym(Sym::p), q = f.sym(Sym::q);

  {
    // p-plane x y = p^-1 y x, preserved by the transposed coaction
    AlgebraPtr ext = plane_extension(f, p, "[p-plane]");
    int xi = static_cast<int>(ext->gens.size()) - 2, yi = xi + 1;
    auto G = [&](int g) { return NCPoly::generator(ext, g); };
    NCPoly X2 = G(f.a) * G(xi) + G(f.c) * G(yi);
    NCPoly Y2 = G(f.b) * G(xi) + G(f.d) * G(yi);
    add_eq(rep, "p-plane, transposed coaction: x'y' = p^-1 y'x'",
           X2 * Y2, (Y2 * X2).scaled(p.inverse()));
    add_eq(rep, "p-plane relation", G(xi) * G(yi),
           (G(yi) * G(xi)).scaled(p.inverse()));
  }
  {
    // q-plane x y = q^-1 y x, preserved by the straight coaction
    AlgebraPtr ext = plane_extension(f, q, "[q-plane]");
    int xi = static_cast<int>(ext->gens.size()) - 2, yi = xi + 1;
    auto G = [&](int g) { return NCPoly::generator(ext, g); };
    NCPoly X1 = G(f.a) * G(xi) + G(f.b) * G(yi);
    NCPoly Y1 = G(f.c) * G(xi) + G(f.d) * G(yi);
    add_eq(rep, "q-plane, straight coaction: x'y' = q^-1 y'x'",
           X1 * Y1, (Y1 * X1).scaled(q.inverse()));
    add_eq(rep, "q-plane relation", G(xi) * G(yi),
           (G(yi) * G(xi)).scaled(q.inverse()));
  }
  (void)mode;
  return rep;
}

}  // namespace qgl2
