#include "qgl2/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

namespace qgl2 {

// ---------------------------------------------------------------------------
// RingMode

RingMode RingMode::root_of_unity(int n, int d) {
  if (d == 0) d = n;
  if (n < 1 || d < 1 || n % d != 0)
    throw std::invalid_argument("root_of_unity: need n >= 1 and d | n");
  return {Kind::RootOfUnity, n, d};
}

std::string RingMode::str() const {
  switch (kind) {
    case Kind::Generic: return "generic";
    case Kind::EqualPQ: return "equal-pq";
    case Kind::RootOfUnity:
      return "root-of-unity(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// dense univariate helpers over Q (coefficient vectors, low to high)

namespace {

using QVec = std::vector<Rational>;

void qv_trim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

QVec qv_mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qv_trim(r);
  return r;
}

// a mod b and a div b, b monic-trimmed
std::pair<QVec, QVec> qv_divmod(QVec a, const QVec& b) {
  QVec quo(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  qv_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qv_trim(a);
  }
  qv_trim(quo);
  return {quo, a};
}

}  // namespace

int euler_phi(int d) {
  int r = d;
  for (int f = 2; f * f <= d; ++f) {
    if (d % f == 0) {
      r -= r / f;
      while (d % f == 0) d /= f;
    }
  }
  if (d > 1) r -= r / d;
  return r;
}

const std::vector<Rational>& cyclotomic_polynomial(int d) {
  static std::map<int, QVec> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  // Phi_e = (x^e - 1) / prod_{f | e, f < e} Phi_f, filled for all divisors of d
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0 || cache.count(e)) continue;
    QVec num(e + 1, Rational(0));
    num[0] = -1;
    num[e] = 1;
    QVec den{Rational(1)};
    for (int f = 1; f < e; ++f)
      if (e % f == 0) den = qv_mul(den, cache.at(f));
    auto [quo, rem] = qv_divmod(std::move(num), den);
    if (!rem.empty()) throw std::logic_error("cyclotomic_polynomial: non-exact division");
    cache.emplace(e, std::move(quo));
  }
  return cache.at(d);
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic(int d, Rational r) : d_(d), c_(euler_phi(d), Rational(0)) {
  if (d < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  c_[0] = std::move(r);
}

void Cyclotomic::reduce(std::vector<Rational>& raw) const {
  const QVec& phi = cyclotomic_polynomial(d_);
  qv_trim(raw);
  raw = qv_divmod(std::move(raw), phi).second;
  raw.resize(euler_phi(d_), Rational(0));
}

Cyclotomic Cyclotomic::from_coords(int d, std::vector<Rational> coords) {
  Cyclotomic z(d);
  coords.resize(euler_phi(d), Rational(0));
  z.c_ = std::move(coords);
  return z;
}

Cyclotomic Cyclotomic::zeta_pow(int d, long k) {
  Cyclotomic z(d);
  long m = ((k % d) + d) % d;
  std::vector<Rational> raw(m + 1, Rational(0));
  raw[m] = 1;
  z.reduce(raw);
  z.c_ = std::move(raw);
  return z;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (d_ != o.d_) throw std::logic_error("Cyclotomic: mixed orders");
  Cyclotomic r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (d_ != o.d_) throw std::logic_error("Cyclotomic: mixed orders");
  std::vector<Rational> raw(2 * c_.size(), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
  }
  Cyclotomic r(d_);
  reduce(raw);
  r.c_ = std::move(raw);
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "cyclotomic inverse of zero");
  // extended Euclid in Q[x] against Phi_d
  QVec r0 = cyclotomic_polynomial(d_);
  QVec r1(c_.begin(), c_.end());
  qv_trim(r1);
  QVec s0{}, s1{Rational(1)};  // coefficients of the input in the Bezout identity
  while (true) {
    auto [quo, rem] = qv_divmod(r0, r1);
    if (rem.empty()) break;
    QVec s2 = s0;
    QVec qs = qv_mul(quo, s1);
    s2.resize(std::max(s2.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qv_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is the gcd, a nonzero constant since Phi_d is irreducible over Q
  if (r1.size() != 1) throw std::logic_error("cyclotomic inverse: non-unit gcd");
  Rational scale = 1 / r1[0];
  Cyclotomic inv(d_);
  std::vector<Rational> raw(s1.begin(), s1.end());
  for (auto& x : raw) x *= scale;
  reduce(raw);
  inv.c_ = std::move(raw);
  return inv;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(int d, const Cyclotomic& c) {
  MPoly r(d);
  r.add_term(Expo3{}, c);
  return r;
}

MPoly MPoly::monomial(int d, const Expo3& xp, const Cyclotomic& c) {
  MPoly r(d);
  r.add_term(xp, c);
  return r;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Expo3{} &&
         terms_.begin()->second == Cyclotomic(d_, 1);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo3{});
}

int32_t MPoly::min_exp(int var) const {
  int32_t m = 0;
  bool first = true;
  for (const auto& [xp, c] : terms_) {
    if (first || xp.e[var] < m) m = xp.e[var];
    first = false;
  }
  return m;
}

int32_t MPoly::max_exp(int var) const {
  int32_t m = 0;
  bool first = true;
  for (const auto& [xp, c] : terms_) {
    if (first || xp.e[var] > m) m = xp.e[var];
    first = false;
  }
  return m;
}

bool MPoly::involves(int var) const {
  for (const auto& [xp, c] : terms_)
    if (xp.e[var] != 0) return true;
  return false;
}

void MPoly::add_term(const Expo3& xp, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(xp, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(d_);
  for (const auto& [xp, c] : terms_) r.terms_.emplace(xp, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [xp, c] : o.terms_) r.add_term(xp, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [xp, c] : o.terms_) r.add_term(xp, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(d_);
  for (const auto& [xa, ca] : terms_)
    for (const auto& [xb, cb] : o.terms_) {
      Expo3 xp;
      for (int v = 0; v < 3; ++v) xp.e[v] = xa.e[v] + xb.e[v];
      r.add_term(xp, ca * cb);
    }
  return r;
}

MPoly MPoly::shifted(const Expo3& by) const {
  MPoly r(d_);
  for (const auto& [xp, c] : terms_) {
    Expo3 nx;
    for (int v = 0; v < 3; ++v) nx.e[v] = xp.e[v] + by.e[v];
    r.terms_.emplace(nx, c);
  }
  return r;
}

MPoly MPoly::scaled(const Cyclotomic& c) const {
  MPoly r(d_);
  if (c.is_zero()) return r;
  for (const auto& [xp, co] : terms_) r.add_term(xp, co * c);
  return r;
}

const Cyclotomic& MPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
  return terms_.rbegin()->second;
}

const Expo3& MPoly::leading_exp() const {
  if (terms_.empty()) throw std::logic_error("leading_exp of zero");
  return terms_.rbegin()->first;
}

// ---------------------------------------------------------------------------
// multivariate gcd: primitive PRS over Q(zeta_d), recursing on the variable set

namespace {

MPoly mp_monic(const MPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.leading_coeff().inverse());
}

// divide out the common rational content to keep PRS coefficients small
MPoly strip_rational_content(const MPoly& a) {
  if (a.is_zero()) return a;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [xp, c] : a.terms()) {
    for (const auto& r : c.coords()) {
      if (r == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    }
  }
  if (num_gcd == 0) return a;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return a.scaled(Cyclotomic(a.order(), scale));
}

// view of a polynomial as univariate in `var` with MPoly coefficients
std::map<int32_t, MPoly> uni_view(const MPoly& a, int var) {
  std::map<int32_t, MPoly> v;
  for (const auto& [xp, c] : a.terms()) {
    Expo3 rest = xp;
    int32_t deg = xp.e[var];
    rest.e[var] = 0;
    auto [it, inserted] = v.emplace(deg, MPoly(a.order()));
    it->second.add_term(rest, c);
  }
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

MPoly from_uni_view(const std::map<int32_t, MPoly>& v, int var, int d) {
  MPoly r(d);
  for (const auto& [deg, coeff] : v) {
    Expo3 sh{};
    sh.e[var] = deg;
    r = r + coeff.shifted(sh);
  }
  return r;
}

int32_t uni_degree(const std::map<int32_t, MPoly>& v) {
  return v.empty() ? -1 : v.rbegin()->first;
}

// pseudo-remainder of a by b in variable var (both genuine polynomials)
MPoly pseudo_rem(const MPoly& a, const MPoly& b, int var) {
  auto vb = uni_view(b, var);
  int32_t db = uni_degree(vb);
  const MPoly& lb = vb.rbegin()->second;
  MPoly rem = a;
  while (true) {
    auto vr = uni_view(rem, var);
    int32_t dr = uni_degree(vr);
    if (dr < db || rem.is_zero()) return rem;
    const MPoly& lr = vr.rbegin()->second;
    Expo3 sh{};
    sh.e[var] = dr - db;
    rem = strip_rational_content(rem * lb - b.shifted(sh) * lr);
  }
}

MPoly content_in(const MPoly& a, int var) {
  MPoly g(a.order());
  for (const auto& [deg, coeff] : uni_view(a, var)) g = poly_gcd(g, coeff);
  return g;
}

}  // namespace

MPoly poly_divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::logic_error("poly_divexact: zero divisor");
  MPoly rem = a;
  MPoly quo(a.order());
  while (!rem.is_zero()) {
    const Expo3& xr = rem.leading_exp();
    const Expo3& xb = b.leading_exp();
    Expo3 sh;
    for (int v = 0; v < 3; ++v) {
      sh.e[v] = xr.e[v] - xb.e[v];
      if (sh.e[v] < 0) throw std::logic_error("poly_divexact: not divisible");
    }
    Cyclotomic c = rem.leading_coeff() * b.leading_coeff().inverse();
    MPoly t = MPoly::monomial(a.order(), sh, c);
    quo = quo + t;
    rem = rem - t * b;
    if (!rem.is_zero() && !(Expo3Less{}(rem.leading_exp(), xr)))
      throw std::logic_error("poly_divexact: no progress");
  }
  return quo;
}

namespace {

std::optional<MPoly> try_divexact(const MPoly& a, const MPoly& b) {
  try {
    return poly_divexact(a, b);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
}

Rational rational_pow(long base, int32_t e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(z);
}

// image of a genuine polynomial with every variable except `var` evaluated
// at pt; dense univariate coefficients over Q(zeta_d)
std::vector<Cyclotomic> eval_except(const MPoly& a, int var, const std::array<long, 3>& pt) {
  std::vector<Cyclotomic> out(a.max_exp(var) + 1, Cyclotomic(a.order()));
  for (const auto& [xp, c] : a.terms()) {
    Rational f(1);
    for (int v = 0; v < 3; ++v)
      if (v != var && xp.e[v] != 0) f *= rational_pow(pt[v], xp.e[v]);
    out[xp.e[var]] = out[xp.e[var]] + c * Cyclotomic(a.order(), f);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Cyclotomic eval_all(const MPoly& a, const std::array<long, 3>& pt) {
  auto v = eval_except(a, 0, pt);  // var 0 still symbolic, then evaluate it
  Cyclotomic acc(a.order());
  Rational x(1);
  for (size_t i = 0; i < v.size(); ++i) {
    acc = acc + v[i] * Cyclotomic(a.order(), x);
    x *= pt[0];
  }
  return acc;
}

int uni_gcd_degree(std::vector<Cyclotomic> x, std::vector<Cyclotomic> y) {
  auto trim = [](std::vector<Cyclotomic>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(x);
  trim(y);
  while (!y.empty()) {
    // monic reduction step
    Cyclotomic inv = y.back().inverse();
    for (auto& c : y) c = c * inv;
    while (x.size() >= y.size() && !x.empty()) {
      Cyclotomic lead = x.back();
      size_t shift = x.size() - y.size();
      for (size_t i = 0; i < y.size(); ++i) x[shift + i] = x[shift + i] - y[i] * lead;
      trim(x);
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

// ---- heuristic gcd (evaluate at a large integer, reconstruct, verify) ----
// Works for cyclotomic orders with phi(d) <= 2, where Z[zeta] is
// norm-Euclidean; returns a verified common divisor or nullopt.

bool heuristic_supported(int d) { return euler_phi(d) <= 2; }

MPoly clear_denominators(const MPoly& a) {
  mpz_class l = 1;
  for (const auto& [xp, c] : a.terms())
    for (const auto& r : c.coords())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den().get_mpz_t());
  return a.scaled(Cyclotomic(a.order(), Rational(l)));
}

mpz_class max_abs_coeff(const MPoly& a) {
  mpz_class m = 0;
  for (const auto& [xp, c] : a.terms())
    for (const auto& r : c.coords()) {
      mpz_class v = abs(r.get_num());
      if (v > m) m = v;
    }
  return m;
}

MPoly eval_var_int(const MPoly& a, int var, const mpz_class& xi) {
  MPoly out(a.order());
  for (const auto& [xp, c] : a.terms()) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(xp.e[var]));
    Expo3 rest = xp;
    rest.e[var] = 0;
    out.add_term(rest, c * Cyclotomic(a.order(), Rational(f)));
  }
  return out;
}

// balanced remainder coordinate-wise; also divides the argument by xi
MPoly balanced_digit(MPoly& h, const mpz_class& xi) {
  MPoly digit(h.order());
  MPoly next(h.order());
  mpz_class half = xi / 2;
  for (const auto& [xp, c] : h.terms()) {
    std::vector<Rational> rc, qc;
    for (const auto& coord : c.coords()) {
      mpz_class v = coord.get_num();
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      rc.emplace_back(r);
      qc.emplace_back(mpz_class((v - r) / xi));
    }
    digit.add_term(xp, Cyclotomic::from_coords(h.order(), std::move(rc)));
    next.add_term(xp, Cyclotomic::from_coords(h.order(), std::move(qc)));
  }
  h = std::move(next);
  return digit;
}

Rational round_nearest(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (r - Rational(q) >= Rational(1, 2)) q += 1;
  return Rational(q);
}

// gcd in Z[zeta_d] for phi(d) <= 2 via rounding division; unit-normalized
// only by the caller's later monic scaling
std::optional<Cyclotomic> cyclo_int_gcd(Cyclotomic a, Cyclotomic b) {
  int d = a.order();
  for (int iter = 0; iter < 256; ++iter) {
    if (b.is_zero()) return a;
    Cyclotomic quo = a * b.inverse();
    std::vector<Rational> rounded;
    for (const auto& coord : quo.coords()) rounded.push_back(round_nearest(coord));
    Cyclotomic q = Cyclotomic::from_coords(d, std::move(rounded));
    Cyclotomic r = a - q * b;
    a = std::move(b);
    b = std::move(r);
  }
  return std::nullopt;
}

std::optional<Cyclotomic> integer_content(const MPoly& a) {
  Cyclotomic g(a.order());
  for (const auto& [xp, c] : a.terms()) {
    auto next = cyclo_int_gcd(g, c);
    if (!next) return std::nullopt;
    g = *next;
  }
  return g;
}

std::optional<MPoly> heuristic_gcd_int(const MPoly& a, const MPoly& b, int depth) {
  int var = -1;
  for (int v = 2; v >= 0; --v) {
    if (a.max_exp(v) > 0 && b.max_exp(v) > 0) {
      var = v;
      break;
    }
  }
  if (var < 0) {
    // no shared variable: only the integer divisibility information matters
    // for the digit reconstruction upstream
    auto na = integer_content(a), nb = integer_content(b);
    if (!na || !nb) return std::nullopt;
    auto g = cyclo_int_gcd(*na, *nb);
    if (!g || g->is_zero()) return std::nullopt;
    return MPoly::constant(a.order(), *g);
  }
  if (depth > 8) return std::nullopt;

  mpz_class xi = 2 * std::max(max_abs_coeff(a), max_abs_coeff(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ia = eval_var_int(a, var, xi), ib = eval_var_int(b, var, xi);
    std::optional<MPoly> sub = heuristic_gcd_int(ia, ib, depth + 1);
    if (sub) {
      MPoly h = *sub, g(a.order());
      int32_t deg = 0;
      while (!h.is_zero() && deg < 512) {
        MPoly digit = balanced_digit(h, xi);
        Expo3 sh{};
        sh.e[var] = deg;
        g = g + digit.shifted(sh);
        ++deg;
      }
      if (h.is_zero() && !g.is_zero()) {
        // keep the integer content: it carries divisibility information for
        // the digit reconstruction one level up
        if (try_divexact(a, g) && try_divexact(b, g)) return g;
      }
    }
    xi = xi * 73794 / 27011 + 37;
  }
  return std::nullopt;
}

std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b) {
  if (!heuristic_supported(a.order())) return std::nullopt;
  auto g = heuristic_gcd_int(clear_denominators(a), clear_denominators(b), 0);
  if (g) *g = strip_rational_content(*g);
  return g;
}

// Rigorous coprimality test: for each variable, if a univariate evaluation
// image (with non-vanishing leading coefficient of one input) has a constant
// gcd, the true gcd has degree 0 in that variable.
bool provably_coprime(const MPoly& a, const MPoly& b) {
  static const std::array<std::array<long, 3>, 4> points{{{2, 3, 5}, {3, 5, 2}, {7, 2, 3}, {5, 7, 11}}};
  for (int var = 0; var < 3; ++var) {
    int da = a.max_exp(var), db = b.max_exp(var);
    if (da == 0 || db == 0) continue;  // gcd divides something of degree 0 in var
    bool settled = false;
    for (const auto& pt : points) {
      auto ia = eval_except(a, var, pt);
      if (static_cast<int>(ia.size()) - 1 != da) continue;  // leading coeff vanished
      auto ib = eval_except(b, var, pt);
      if (ib.empty()) continue;
      if (uni_gcd_degree(std::move(ia), std::move(ib)) == 0) {
        settled = true;
        break;
      }
      return false;  // images share a factor; inconclusive, run the full gcd
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace

namespace {

// primitive PRS; the last-resort path
MPoly prs_gcd(const MPoly& a, const MPoly& b) {
  int var = -1;
  for (int v = 2; v >= 0; --v) {
    if (a.involves(v) || b.involves(v)) {
      var = v;
      break;
    }
  }
  if (var < 0) return MPoly::constant(a.order(), Cyclotomic(a.order(), 1));

  MPoly ca = content_in(a, var), cb = content_in(b, var);
  MPoly u = poly_divexact(a, ca), v = poly_divexact(b, cb);
  MPoly cont = poly_gcd(ca, cb);
  u = strip_rational_content(u);
  v = strip_rational_content(v);

  if (uni_degree(uni_view(u, var)) < uni_degree(uni_view(v, var))) std::swap(u, v);
  while (true) {
    if (uni_degree(uni_view(v, var)) <= 0) {
      // a constant (in var) tail means the primitive parts are coprime in var
      if (!v.is_zero()) return mp_monic(cont);
      return mp_monic(cont * u);
    }
    MPoly r = strip_rational_content(pseudo_rem(u, v, var));
    if (r.is_zero()) return mp_monic(cont * poly_divexact(v, content_in(v, var)));
    r = strip_rational_content(poly_divexact(r, content_in(r, var)));
    u = std::move(v);
    v = std::move(r);
  }
}

}  // namespace

MPoly poly_gcd(const MPoly& a_in, const MPoly& b_in) {
  MPoly a = a_in, b = b_in;
  MPoly acc = MPoly::constant(a.order(), Cyclotomic(a.order(), 1));
  while (true) {
    if (a.is_zero()) return mp_monic(acc * b);
    if (b.is_zero()) return mp_monic(acc * a);
    if (a.is_constant() || b.is_constant()) return mp_monic(acc);
    if (try_divexact(a, b)) return mp_monic(acc * b);
    if (try_divexact(b, a)) return mp_monic(acc * a);
    if (provably_coprime(a, b)) return mp_monic(acc);

    // peel off a verified common divisor and loop on the quotients; a
    // constant heuristic result means the evaluation images were coprime
    if (auto g = heuristic_gcd(a, b)) {
      if (g->is_constant()) return mp_monic(acc);
      acc = acc * *g;
      a = poly_divexact(a, *g);
      b = poly_divexact(b, *g);
      continue;
    }
    return mp_monic(acc * prs_gcd(a, b));
  }
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

// the mode image of symbol s as (exponents, coefficient) factors
MPoly symbol_poly(Sym s, const RingMode& m, int exp) {
  int d = m.d;
  Expo3 xp{};
  Cyclotomic c(d, 1);
  switch (s) {
    case Sym::p:
      if (m.kind == RingMode::Kind::Generic) {
        xp.e[0] = exp;
      } else if (m.kind == RingMode::Kind::EqualPQ) {
        xp.e[1] = exp;
      } else {  // p := zeta^-1 * q
        xp.e[1] = exp;
        c = Cyclotomic::zeta_pow(d, -exp);
      }
      break;
    case Sym::q: xp.e[1] = exp; break;
    case Sym::h: xp.e[2] = exp; break;
  }
  return MPoly::monomial(d, xp, c);
}

}  // namespace

Scalar Scalar::zero(const RingMode& m) {
  Scalar s;
  s.mode_ = m;
  s.num_ = MPoly(m.d);
  s.den_ = MPoly::constant(m.d, Cyclotomic(m.d, 1));
  return s;
}

Scalar Scalar::one(const RingMode& m) { return rational(Rational(1), m); }

Scalar Scalar::rational(const Rational& r, const RingMode& m) {
  Scalar s = zero(m);
  s.num_ = MPoly::constant(m.d, Cyclotomic(m.d, r));
  return s;
}

Scalar Scalar::integer(long v, const RingMode& m) { return rational(Rational(v), m); }

Scalar Scalar::symbol(Sym sym, const RingMode& m, int exp) {
  Scalar s = zero(m);
  s.num_ = symbol_poly(sym, m, exp);
  return s;
}

Scalar Scalar::zeta(const RingMode& m, long k) {
  Scalar s = zero(m);
  s.num_ = MPoly::constant(m.d, Cyclotomic::zeta_pow(m.d, k));
  return s;
}

Scalar Scalar::from_fraction(MPoly num, MPoly den, const RingMode& m) {
  Scalar s = zero(m);
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  if (s.den_.is_zero()) fail(Errc::ZeroDenominator, "scalar denominator is zero");
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(mode_.d, Cyclotomic(mode_.d, 1));
    return;
  }
  // shift the denominator to a genuine polynomial with min-exponent 0
  Expo3 shift{};
  for (int v = 0; v < 3; ++v) shift.e[v] = -den_.min_exp(v);
  if (shift != Expo3{}) {
    den_ = den_.shifted(shift);
    num_ = num_.shifted(shift);
  }
  if (!den_.is_constant()) {
    // split the numerator into monomial unit * genuine polynomial; the gcd of
    // two min-exponent-0 polynomials is min-exponent-0, so no reshift needed
    Expo3 unit{};
    for (int v = 0; v < 3; ++v) unit.e[v] = num_.min_exp(v);
    Expo3 neg{};
    for (int v = 0; v < 3; ++v) neg.e[v] = -unit.e[v];
    MPoly np = num_.shifted(neg);
    MPoly g = poly_gcd(np, den_);
    if (!g.is_constant()) {
      np = poly_divexact(np, g);
      den_ = poly_divexact(den_, g);
      num_ = np.shifted(unit);
    }
  }
  // monic denominator
  const Cyclotomic& lc = den_.leading_coeff();
  if (!(lc == Cyclotomic(mode_.d, 1))) {
    Cyclotomic inv = lc.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

void Scalar::check_same_mode(const Scalar& a, const Scalar& b) {
  if (!(a.mode_ == b.mode_))
    fail(Errc::AlgebraMismatch, "scalar modes differ: " + a.mode_.str() + " vs " + b.mode_.str());
}

bool Scalar::is_one() const { return num_.is_one() && den_.is_one(); }

bool Scalar::is_rational() const { return den_.is_one() && num_.is_constant() &&
                                          (num_.is_zero() || num_.terms().begin()->second.is_rational()); }

bool Scalar::involves(Sym s) const {
  return num_.involves(static_cast<int>(s)) || den_.involves(static_cast<int>(s));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_mode(*this, o);
  return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, mode_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_mode(*this, o);
  if (is_zero() || o.is_zero()) return zero(mode_);
  return from_fraction(num_ * o.num_, den_ * o.den_, mode_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "scalar division by zero");
  return from_fraction(den_, num_, mode_);
}

Scalar Scalar::pow(long k) const {
  if (k == 0) return one(mode_);
  Scalar base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  Scalar acc = one(mode_);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

struct PrintTerm {
  Rational r;
  long zexp;
  Expo3 xp;
};

// order: grade including the zeta exponent, then h, q, p, zeta
bool print_term_less(const PrintTerm& a, const PrintTerm& b) {
  long ga = a.xp.grade() + a.zexp, gb = b.xp.grade() + b.zexp;
  if (ga != gb) return ga < gb;
  for (int v = 2; v >= 0; --v)
    if (a.xp.e[v] != b.xp.e[v]) return a.xp.e[v] < b.xp.e[v];
  return a.zexp < b.zexp;
}

std::vector<PrintTerm> expand_terms(const MPoly& poly) {
  std::vector<PrintTerm> out;
  for (const auto& [xp, c] : poly.terms()) {
    const auto& coords = c.coords();
    for (size_t l = 0; l < coords.size(); ++l)
      if (coords[l] != 0) out.push_back({coords[l], static_cast<long>(l), xp});
  }
  std::sort(out.begin(), out.end(), print_term_less);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string magnitude_str(const PrintTerm& t) {
  static const char* names[3] = {"p", "q", "h"};
  std::vector<std::string> factors;
  Rational r = t.r < 0 ? Rational(-t.r) : t.r;
  if (r != 1) factors.push_back(r.get_str());
  for (int v = 0; v < 3; ++v) {
    if (t.xp.e[v] == 0) continue;
    std::string f = names[v];
    if (t.xp.e[v] != 1) f += "^" + std::to_string(t.xp.e[v]);
    factors.push_back(f);
  }
  if (t.zexp != 0) {
    std::string f = "zeta";
    if (t.zexp != 1) f += "^" + std::to_string(t.zexp);
    factors.push_back(f);
  }
  if (factors.empty()) return "1";
  std::string out = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

std::string sum_str(const std::vector<PrintTerm>& ts) {
  if (ts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    bool neg = ts[i].r < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += magnitude_str(ts[i]);
  }
  return out;
}

}  // namespace

std::string mpoly_str(const MPoly& poly) { return sum_str(expand_terms(poly)); }

std::string Scalar::str() const {
  std::string n = mpoly_str(num_);
  if (den_.is_one()) return n;
  std::string d = "(" + mpoly_str(den_) + ")^-1";
  if (num_.is_one()) return d;
  auto nts = expand_terms(num_);
  if (nts.size() == 1) {
    std::string mag = magnitude_str(nts[0]);
    std::string sign = nts[0].r < 0 ? "-" : "";
    if (mag == "1") return sign + d;
    return sign + mag + "*" + d;
  }
  return "(" + n + ")*" + d;
}

std::pair<bool, std::string> Scalar::signed_str() const {
  auto nts = expand_terms(num_);
  if (nts.empty()) return {false, "0"};
  bool neg = nts[0].r < 0;
  if (neg) {
    Scalar m = -*this;
    return {true, m.str()};
  }
  return {false, str()};
}

bool Scalar::is_plain_term() const {
  if (!den_.is_one()) return false;
  return expand_terms(num_).size() == 1;
}

}  // namespace qgl2
