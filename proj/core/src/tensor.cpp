#include "qgl2/tensor.hpp"

namespace qgl2 {

namespace {
Monomial unit_mono(const Algebra& alg) {
  Monomial m;
  m.exps.assign(alg.gens.size(), 0);
  m.torus = TorusPoint::identity(alg.mode);
  return m;
}
}  // namespace

NCPoly mono_poly(const AlgebraPtr& alg, const Monomial& m) {
  return NCPoly::monomial_term(alg, m, Scalar::one(alg->mode));
}

TensorPoly TensorPoly::unit(AlgebraPtr alg) {
  TensorPoly t(alg);
  Monomial u = unit_mono(*alg);
  t.add_term(u, u, Scalar::one(alg->mode));
  return t;
}

TensorPoly TensorPoly::tensor(const NCPoly& x, const NCPoly& y) {
  TensorPoly t(x.algebra());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) t.add_term(mx, my, cx * cy);
  return t;
}

void TensorPoly::add_term(const Monomial& m1, const Monomial& m2, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(m1, m2), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.first, m.second, c);
  return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.first, m.second, -c);
  return r;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
  TensorPoly r(alg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      NCPoly left = mono_poly(alg_, ma.first) * mono_poly(alg_, mb.first);
      NCPoly right = mono_poly(alg_, ma.second) * mono_poly(alg_, mb.second);
      Scalar cc = ca * cb;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) r.add_term(ml, mr, cc * cl * cr);
    }
  return r;
}

TensorPoly TensorPoly::scaled(const Scalar& s) const {
  TensorPoly r(alg_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m.first, m.second, c * s);
  return r;
}

TensorPoly TensorPoly::pow(int k) const {
  if (k == 0) return unit(alg_);
  TensorPoly base = *this;
  if (k < 0) {
    if (terms_.size() != 1) fail(Errc::InvalidExponent, "negative power of a non-unit tensor");
    const auto& [m, c] = *terms_.begin();
    NCPoly li = mono_poly(alg_, m.first).pow(-1);
    NCPoly ri = mono_poly(alg_, m.second).pow(-1);
    base = tensor(li, ri).scaled(c.inverse());
    k = -k;
  }
  TensorPoly acc = unit(alg_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool TensorPoly::operator==(const TensorPoly& o) const {
  if (!alg_ || !o.alg_) return terms_.empty() && o.terms_.empty();
  return alg_->id == o.alg_->id && terms_ == o.terms_;
}

std::string TensorPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    auto [neg, mag] = c.signed_str();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string pair = monomial_str(*alg_, m.first) + " (x) " + monomial_str(*alg_, m.second);
    if (mag == "1") {
      out += pair;
    } else {
      Scalar abs_c = neg ? -c : c;
      if (abs_c.is_plain_term() || !abs_c.den().is_one())
        out += mag + "*" + pair;
      else
        out += "(" + mag + ")*" + pair;
    }
  }
  return out;
}

void Tensor3Poly::add_term(const Monomial& m1, const Monomial& m2, const Monomial& m3,
                           const Scalar& c) {
  if (c.is_zero()) return;
  std::array<Monomial, 3> key{m1, m2, m3};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Tensor3Poly::operator==(const Tensor3Poly& o) const {
  if (!alg_ || !o.alg_) return terms_.empty() && o.terms_.empty();
  return alg_->id == o.alg_->id && terms_ == o.terms_;
}

std::string Tensor3Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    auto [neg, mag] = c.signed_str();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string triple = monomial_str(*alg_, m[0]) + " (x) " + monomial_str(*alg_, m[1]) +
                         " (x) " + monomial_str(*alg_, m[2]);
    if (mag == "1")
      out += triple;
    else
      out += "(" + mag + ")*" + triple;
  }
  return out;
}

TensorPoly extend_to_tensor(const NCPoly& x, const std::vector<TensorPoly>& gen_images) {
  const AlgebraPtr& alg = x.algebra();
  TensorPoly out(alg);
  for (const auto& [m, c] : x.terms()) {
    TensorPoly t(alg);
    Monomial tm = unit_mono(*alg);
    tm.torus = m.torus;
    t.add_term(tm, tm, Scalar::one(alg->mode));  // torus points are group-like
    for (size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] != 0) t = t * gen_images[i].pow(m.exps[i]);
    out = out + t.scaled(c);
  }
  return out;
}

Scalar extend_to_scalar(const NCPoly& x, const std::vector<Scalar>& gen_values) {
  const AlgebraPtr& alg = x.algebra();
  Scalar out = Scalar::zero(alg->mode);
  for (const auto& [m, c] : x.terms()) {
    Scalar v = c;
    for (size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] != 0) v = v * gen_values[i].pow(m.exps[i]);
    out = out + v;
  }
  return out;
}

NCPoly extend_antimap(const NCPoly& x, const std::vector<NCPoly>& gen_images) {
  const AlgebraPtr& alg = x.algebra();
  NCPoly out(alg);
  for (const auto& [m, c] : x.terms()) {
    NCPoly acc = NCPoly::unit(alg);
    for (size_t i = m.exps.size(); i-- > 0;)
      if (m.exps[i] != 0) acc = acc * gen_images[i].pow(m.exps[i]);
    if (!m.torus.is_identity()) acc = acc * NCPoly::torus_hat(alg, m.torus.inverse());
    out = out + acc.scaled(c);
  }
  return out;
}

Tensor3Poly expand_left(const DeltaFn& delta, const TensorPoly& t) {
  Tensor3Poly out(t.algebra());
  for (const auto& [m, c] : t.terms()) {
    TensorPoly d = delta(mono_poly(t.algebra(), m.first));
    for (const auto& [dm, dc] : d.terms()) out.add_term(dm.first, dm.second, m.second, c * dc);
  }
  return out;
}

Tensor3Poly expand_right(const DeltaFn& delta, const TensorPoly& t) {
  Tensor3Poly out(t.algebra());
  for (const auto& [m, c] : t.terms()) {
    TensorPoly d = delta(mono_poly(t.algebra(), m.second));
    for (const auto& [dm, dc] : d.terms()) out.add_term(m.first, dm.first, dm.second, c * dc);
  }
  return out;
}

NCPoly convolve(const TensorPoly& t, const EndoFn& left, const EndoFn& right) {
  NCPoly out(t.algebra());
  for (const auto& [m, c] : t.terms())
    out = out + (left(mono_poly(t.algebra(), m.first)) * right(mono_poly(t.algebra(), m.second)))
                    .scaled(c);
  return out;
}

NCPoly counit_left(const TensorPoly& t, const CounitFn& eps) {
  NCPoly out(t.algebra());
  for (const auto& [m, c] : t.terms())
    out = out + mono_poly(t.algebra(), m.second).scaled(c * eps(mono_poly(t.algebra(), m.first)));
  return out;
}

NCPoly counit_right(const TensorPoly& t, const CounitFn& eps) {
  NCPoly out(t.algebra());
  for (const auto& [m, c] : t.terms())
    out = out + mono_poly(t.algebra(), m.first).scaled(c * eps(mono_poly(t.algebra(), m.second)));
  return out;
}

}  // namespace qgl2
