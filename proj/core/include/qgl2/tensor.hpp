#pragma once

#include <functional>

#include "qgl2/rewrite.hpp"

namespace qgl2 {

struct MonoPairLess {
  bool operator()(const std::pair<Monomial, Monomial>& a,
                  const std::pair<Monomial, Monomial>& b) const {
    MonomialLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

// element of the tensor square; legs normalize in the same algebra and
// commute across the tensor sign
class TensorPoly {
public:
  TensorPoly() = default;
  explicit TensorPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static TensorPoly zero(AlgebraPtr alg) { return TensorPoly(std::move(alg)); }
  static TensorPoly unit(AlgebraPtr alg);
  static TensorPoly tensor(const NCPoly& x, const NCPoly& y);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<std::pair<Monomial, Monomial>, Scalar, MonoPairLess>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m1, const Monomial& m2, const Scalar& c);

  TensorPoly operator+(const TensorPoly&) const;
  TensorPoly operator-(const TensorPoly&) const;
  TensorPoly operator*(const TensorPoly&) const;
  TensorPoly scaled(const Scalar&) const;
  TensorPoly pow(int k) const;
  bool operator==(const TensorPoly&) const;

  std::string str() const;

private:
  AlgebraPtr alg_;
  std::map<std::pair<Monomial, Monomial>, Scalar, MonoPairLess> terms_;
};

struct MonoTripleLess {
  bool operator()(const std::array<Monomial, 3>& a, const std::array<Monomial, 3>& b) const {
    MonomialLess less;
    for (int i = 0; i < 3; ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return false;
  }
};

class Tensor3Poly {
public:
  Tensor3Poly() = default;
  explicit Tensor3Poly(AlgebraPtr alg) : alg_(std::move(alg)) {}

  void add_term(const Monomial& m1, const Monomial& m2, const Monomial& m3, const Scalar& c);
  bool operator==(const Tensor3Poly&) const;
  std::string str() const;

private:
  AlgebraPtr alg_;
  std::map<std::array<Monomial, 3>, Scalar, MonoTripleLess> terms_;
};

using DeltaFn = std::function<TensorPoly(const NCPoly&)>;
using EndoFn = std::function<NCPoly(const NCPoly&)>;
using CounitFn = std::function<Scalar(const NCPoly&)>;

// algebra-map extension of per-generator tensor images; torus points are
// group-like
TensorPoly extend_to_tensor(const NCPoly& x, const std::vector<TensorPoly>& gen_images);
// algebra-map extension of per-generator scalar values; torus points map to 1
Scalar extend_to_scalar(const NCPoly& x, const std::vector<Scalar>& gen_values);
// anti-homomorphic extension; torus points map to the inverse point
NCPoly extend_antimap(const NCPoly& x, const std::vector<NCPoly>& gen_images);

// (delta (x) id) and (id (x) delta) applied to a tensor element
Tensor3Poly expand_left(const DeltaFn& delta, const TensorPoly& t);
Tensor3Poly expand_right(const DeltaFn& delta, const TensorPoly& t);

// multiply the two legs after mapping them, summed over terms
NCPoly convolve(const TensorPoly& t, const EndoFn& left, const EndoFn& right);
// collapse one leg with the counit
NCPoly counit_left(const TensorPoly& t, const CounitFn& eps);
NCPoly counit_right(const TensorPoly& t, const CounitFn& eps);

NCPoly mono_poly(const AlgebraPtr& alg, const Monomial& m);

}  // namespace qgl2
