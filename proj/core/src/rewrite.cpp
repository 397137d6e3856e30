#include "qgl2/rewrite.hpp"

#include <algorithm>
#include <unordered_map>

namespace qgl2 {

// ---------------------------------------------------------------------------
// TorusPoint

TorusPoint TorusPoint::identity(const RingMode& m) {
  TorusPoint t;
  t.d = m.d;
  return t;
}

namespace {
int32_t fold_mod(int32_t v, int32_t d) { return ((v % d) + d) % d; }
}  // namespace

TorusPoint TorusPoint::make(const RingMode& m, std::array<int32_t, 4> c1, std::array<int32_t, 4> c2) {
  TorusPoint t;
  t.d = m.d;
  for (auto* c : {&c1, &c2}) {
    if (m.kind == RingMode::Kind::EqualPQ) {
      (*c)[1] += (*c)[0];
      (*c)[0] = 0;
    } else if (m.kind == RingMode::Kind::RootOfUnity) {
      (*c)[1] += (*c)[0];
      (*c)[3] -= (*c)[0];
      (*c)[0] = 0;
    }
    (*c)[3] = fold_mod((*c)[3], t.d);
  }
  t.x1 = c1;
  t.x2 = c2;
  return t;
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  TorusPoint t;
  t.d = d;
  for (int i = 0; i < 4; ++i) {
    t.x1[i] = x1[i] + o.x1[i];
    t.x2[i] = x2[i] + o.x2[i];
  }
  t.x1[3] = fold_mod(t.x1[3], d);
  t.x2[3] = fold_mod(t.x2[3], d);
  return t;
}

TorusPoint TorusPoint::inverse() const { return pow(-1); }

TorusPoint TorusPoint::pow(int k) const {
  TorusPoint t;
  t.d = d;
  for (int i = 0; i < 4; ++i) {
    t.x1[i] = x1[i] * k;
    t.x2[i] = x2[i] * k;
  }
  t.x1[3] = fold_mod(t.x1[3], d);
  t.x2[3] = fold_mod(t.x2[3], d);
  return t;
}

bool TorusPoint::is_identity() const {
  return x1 == std::array<int32_t, 4>{0, 0, 0, 0} && x2 == std::array<int32_t, 4>{0, 0, 0, 0};
}

Scalar TorusPoint::coord_scalar(int which, const RingMode& m) const {
  const auto& c = which == 1 ? x1 : x2;
  Scalar s = Scalar::one(m);
  if (c[0]) s = s * Scalar::symbol(Sym::p, m, c[0]);
  if (c[1]) s = s * Scalar::symbol(Sym::q, m, c[1]);
  if (c[2]) s = s * Scalar::symbol(Sym::h, m, c[2]);
  if (c[3]) s = s * Scalar::zeta(m, c[3]);
  return s;
}

Scalar TorusPoint::weight_scalar(const RingMode& m, int w1, int w2) const {
  return coord_scalar(1, m).pow(w1) * coord_scalar(2, m).pow(w2);
}

namespace {

std::string coord_str(const std::array<int32_t, 4>& c) {
  static const char* names[4] = {"p", "q", "h", "zeta"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (c[i] != 1) out += "^" + std::to_string(c[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string TorusPoint::str() const { return "T(" + coord_str(x1) + ", " + coord_str(x2) + ")"; }

// ---------------------------------------------------------------------------
// Algebra

int Algebra::gen_index(std::string_view name) const {
  for (const auto& g : gens)
    if (g.name == name) return g.index;
  return -1;
}

const RuleRhs* Algebra::rule(int left, int right) const {
  auto it = rules.find({left, right});
  return it == rules.end() ? nullptr : &it->second;
}

std::vector<std::pair<int, int>> Algebra::inorder_rule_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, rhs] : rules)
    if (key.first < key.second) out.push_back(key);
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

int32_t Monomial::grade() const {
  int32_t g = 0;
  for (auto e : exps) g += e;
  return g;
}

bool Monomial::is_unit() const {
  if (!torus.is_identity()) return false;
  return std::all_of(exps.begin(), exps.end(), [](int16_t e) { return e == 0; });
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int32_t ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  size_t n = std::max(a.exps.size(), b.exps.size());
  for (size_t i = n; i-- > 0;) {
    int16_t ea = i < a.exps.size() ? a.exps[i] : 0;
    int16_t eb = i < b.exps.size() ? b.exps[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return a.torus < b.torus;
}

namespace {

Monomial unit_monomial(const Algebra& alg) {
  Monomial m;
  m.exps.assign(alg.gens.size(), 0);
  m.torus = TorusPoint::identity(alg.mode);
  return m;
}

std::vector<Letter> monomial_letters(const Monomial& m) {
  std::vector<Letter> out;
  if (!m.torus.is_identity()) out.push_back(Letter::torus(m.torus));
  for (size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] != 0) out.push_back(Letter::gen(static_cast<int>(i), m.exps[i]));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// NCPoly basics

NCPoly NCPoly::unit(AlgebraPtr alg) {
  NCPoly p(alg);
  p.add_term(unit_monomial(*alg), Scalar::one(alg->mode));
  return p;
}

NCPoly NCPoly::from_scalar(AlgebraPtr alg, const Scalar& s) {
  NCPoly p(alg);
  p.add_term(unit_monomial(*alg), s);
  return p;
}

NCPoly NCPoly::generator(AlgebraPtr alg, int gen, int exp) {
  return normalize_word(alg, Scalar::one(alg->mode), {Letter::gen(gen, exp)});
}

NCPoly NCPoly::torus_hat(AlgebraPtr alg, const TorusPoint& t) {
  NCPoly p(alg);
  Monomial m = unit_monomial(*alg);
  m.torus = t;
  p.add_term(m, Scalar::one(alg->mode));
  return p;
}

NCPoly NCPoly::monomial_term(AlgebraPtr alg, Monomial m, Scalar c) {
  NCPoly p(alg);
  p.add_term(m, c);
  return p;
}

bool NCPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Scalar NCPoly::scalar_value() const {
  if (terms_.empty()) return Scalar::zero(alg_->mode);
  if (!is_scalar()) throw std::logic_error("element is not a scalar: " + str());
  return terms_.begin()->second;
}

void NCPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void check_same_algebra(const NCPoly& a, const NCPoly& b) {
  if (!a.algebra() || !b.algebra() || a.algebra()->id != b.algebra()->id)
    fail(Errc::AlgebraMismatch, "elements belong to different algebras");
}
}  // namespace

NCPoly NCPoly::operator+(const NCPoly& o) const {
  check_same_algebra(*this, o);
  NCPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  check_same_algebra(*this, o);
  NCPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& s) const {
  NCPoly r(alg_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  check_same_algebra(*this, o);
  NCPoly r(alg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      std::vector<Letter> w = monomial_letters(ma);
      auto wb = monomial_letters(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      r = r + normalize_word(alg_, ca * cb, std::move(w));
    }
  return r;
}

NCPoly NCPoly::pow(int k) const {
  if (k == 0) return unit(alg_);
  NCPoly base = *this;
  if (k < 0) {
    if (terms_.size() != 1) fail(Errc::InvalidExponent, "negative power of a non-unit element");
    const auto& [m, c] = *terms_.begin();
    for (size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] != 0 && !alg_->gens[i].invertible &&
          !alg_->exponent_moduli.count(static_cast<int>(i)))
        fail(Errc::InvalidExponent,
             "negative power of non-invertible generator " + alg_->gens[i].name);
    }
    // invert the sorted word g1^e1..gk^ek as gk^-ek..g1^-e1
    std::vector<Letter> w;
    for (size_t i = m.exps.size(); i-- > 0;)
      if (m.exps[i] != 0) w.push_back(Letter::gen(static_cast<int>(i), -m.exps[i]));
    if (!m.torus.is_identity()) w.push_back(Letter::torus(m.torus.inverse()));
    base = normalize_word(alg_, c.inverse(), std::move(w));
    k = -k;
  }
  NCPoly acc = unit(alg_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool NCPoly::operator==(const NCPoly& o) const {
  if (!alg_ || !o.alg_) return terms_.empty() && o.terms_.empty();
  return alg_->id == o.alg_->id && terms_ == o.terms_;
}

// ---------------------------------------------------------------------------
// rewriting engine

namespace {

struct Step {
  enum class Kind : uint8_t { TorusMove, Swap, GeneralAdj, Macro };
  Kind kind = Kind::Swap;
  int pos = 0;
  int pair_i = -1, pair_j = -1;
};

void canonicalize_letters(std::vector<Letter>& ls) {
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (const auto& l : ls) {
    if (l.kind == Letter::Kind::Gen && l.gp.exp == 0) continue;
    if (l.kind == Letter::Kind::Torus && l.tp.is_identity()) continue;
    Letter cur = l;
    bool consumed = false;
    while (!out.empty() && !consumed) {
      Letter& b = out.back();
      if (b.kind == Letter::Kind::Gen && cur.kind == Letter::Kind::Gen && b.gp.gen == cur.gp.gen) {
        int e = b.gp.exp + cur.gp.exp;
        out.pop_back();
        if (e == 0) {
          consumed = true;
        } else {
          cur = Letter::gen(cur.gp.gen, e);
        }
        continue;
      }
      if (b.kind == Letter::Kind::Torus && cur.kind == Letter::Kind::Torus) {
        TorusPoint t = b.tp * cur.tp;
        out.pop_back();
        if (t.is_identity()) {
          consumed = true;
        } else {
          cur = Letter::torus(t);
        }
        continue;
      }
      break;
    }
    if (!consumed) out.push_back(cur);
  }
  ls = std::move(out);
}

// steps applicable at adjacent positions; when none exist the word is sorted
// and only the co-occurrence macro (or nothing) remains
void collect_adjacent_steps(const Algebra& alg, const std::vector<Letter>& ls,
                            std::vector<Step>& steps, bool first_only) {
  for (size_t i = 0; i + 1 < ls.size(); ++i) {
    const Letter& a = ls[i];
    const Letter& b = ls[i + 1];
    if (a.kind == Letter::Kind::Gen && b.kind == Letter::Kind::Torus) {
      steps.push_back({Step::Kind::TorusMove, static_cast<int>(i), -1, -1});
      if (first_only) return;
      continue;
    }
    if (a.kind != Letter::Kind::Gen || b.kind != Letter::Kind::Gen) continue;
    int ga = a.gp.gen, gb = b.gp.gen;
    if (ga > gb) {
      const RuleRhs* r = alg.rule(ga, gb);
      bool general = r && !r->swap_coeff.has_value();
      steps.push_back({general ? Step::Kind::GeneralAdj : Step::Kind::Swap,
                       static_cast<int>(i), -1, -1});
      if (first_only) return;
    } else if (ga < gb) {
      if (alg.rule(ga, gb)) {
        steps.push_back({Step::Kind::GeneralAdj, static_cast<int>(i), -1, -1});
        if (first_only) return;
      }
    }
  }
}

void collect_macro_steps(const Algebra& alg, const std::vector<Letter>& ls,
                         std::vector<Step>& steps, bool first_only) {
  for (const auto& [gi, gj] : alg.inorder_rule_pairs()) {
    int pos_i = -1, pos_j = -1;
    for (size_t k = 0; k < ls.size(); ++k) {
      if (ls[k].kind != Letter::Kind::Gen) continue;
      if (ls[k].gp.gen == gi && ls[k].gp.exp > 0) pos_i = static_cast<int>(k);
      if (ls[k].gp.gen == gj && ls[k].gp.exp > 0 && pos_j < 0) pos_j = static_cast<int>(k);
    }
    if (pos_i >= 0 && pos_j > pos_i + 1) {
      steps.push_back({Step::Kind::Macro, pos_i, gi, gj});
      if (first_only) return;
    }
  }
}

std::vector<Step> enumerate_steps(const Algebra& alg, const std::vector<Letter>& ls,
                                  bool first_only) {
  std::vector<Step> steps;
  collect_adjacent_steps(alg, ls, steps, first_only);
  if (steps.empty()) collect_macro_steps(alg, ls, steps, first_only);
  return steps;
}

using Child = std::pair<Scalar, std::vector<Letter>>;

std::vector<Child> apply_step(const Algebra& alg, const std::vector<Letter>& ls, const Step& st) {
  const RingMode& mode = alg.mode;
  std::vector<Child> out;
  if (st.kind == Step::Kind::TorusMove) {
    const Letter& g = ls[st.pos];
    const Letter& t = ls[st.pos + 1];
    const auto& gen = alg.gens[g.gp.gen];
    if (!gen.torus_weight)
      throw std::logic_error("torus letter next to a generator without a torus weight");
    auto [w1, w2] = *gen.torus_weight;
    Scalar coeff = t.tp.weight_scalar(mode, w1, w2).pow(-g.gp.exp);
    std::vector<Letter> nl = ls;
    std::swap(nl[st.pos], nl[st.pos + 1]);
    out.push_back({std::move(coeff), std::move(nl)});
    return out;
  }
  if (st.kind == Step::Kind::Swap) {
    const Letter& a = ls[st.pos];
    const Letter& b = ls[st.pos + 1];
    const RuleRhs* r = alg.rule(a.gp.gen, b.gp.gen);
    Scalar coeff = Scalar::one(mode);
    if (r && r->swap_coeff)
      coeff = r->swap_coeff->pow(static_cast<long>(a.gp.exp) * b.gp.exp);
    std::vector<Letter> nl = ls;
    std::swap(nl[st.pos], nl[st.pos + 1]);
    out.push_back({std::move(coeff), std::move(nl)});
    return out;
  }
  if (st.kind == Step::Kind::GeneralAdj) {
    const Letter& a = ls[st.pos];
    const Letter& b = ls[st.pos + 1];
    const RuleRhs* r = alg.rule(a.gp.gen, b.gp.gen);
    if (!r || r->swap_coeff) throw std::logic_error("general rule expected");
    if (a.gp.exp < 1 || b.gp.exp < 1) throw std::logic_error("general rule on a negative exponent");
    for (const auto& [c, word] : r->general) {
      std::vector<Letter> nl(ls.begin(), ls.begin() + st.pos);
      if (a.gp.exp > 1) nl.push_back(Letter::gen(a.gp.gen, a.gp.exp - 1));
      nl.insert(nl.end(), word.begin(), word.end());
      if (b.gp.exp > 1) nl.push_back(Letter::gen(b.gp.gen, b.gp.exp - 1));
      nl.insert(nl.end(), ls.begin() + st.pos + 2, ls.end());
      out.push_back({c, std::move(nl)});
    }
    return out;
  }
  // macro: move one unit of g_j leftwards through the scaling letters to sit
  // right after the g_i block, then apply the in-order rule
  int gi = st.pair_i, gj = st.pair_j;
  int pos_i = st.pos;
  int pos_j = -1;
  for (size_t k = pos_i + 1; k < ls.size(); ++k)
    if (ls[k].kind == Letter::Kind::Gen && ls[k].gp.gen == gj && ls[k].gp.exp > 0) {
      pos_j = static_cast<int>(k);
      break;
    }
  if (pos_j < 0) throw std::logic_error("macro: missing right generator");
  Scalar move = Scalar::one(mode);
  for (int k = pos_i + 1; k < pos_j; ++k) {
    if (ls[k].kind != Letter::Kind::Gen) throw std::logic_error("macro across a torus letter");
    const RuleRhs* r = alg.rule(gj, ls[k].gp.gen);
    if (r) {
      if (!r->swap_coeff) throw std::logic_error("macro across a non-scaling pair");
      move = move * r->swap_coeff->pow(-static_cast<long>(ls[k].gp.exp));
    }
  }
  const RuleRhs* rule = alg.rule(gi, gj);
  if (!rule || rule->swap_coeff) throw std::logic_error("macro: in-order rule expected");
  for (const auto& [c, word] : rule->general) {
    std::vector<Letter> nl(ls.begin(), ls.begin() + pos_i);
    if (ls[pos_i].gp.exp > 1) nl.push_back(Letter::gen(gi, ls[pos_i].gp.exp - 1));
    nl.insert(nl.end(), word.begin(), word.end());
    for (int k = pos_i + 1; k < pos_j; ++k) nl.push_back(ls[k]);
    if (ls[pos_j].gp.exp > 1) nl.push_back(Letter::gen(gj, ls[pos_j].gp.exp - 1));
    nl.insert(nl.end(), ls.begin() + pos_j + 1, ls.end());
    out.push_back({move * c, std::move(nl)});
  }
  return out;
}

Monomial monomial_of_sorted(const Algebra& alg, const std::vector<Letter>& ls) {
  Monomial m = unit_monomial(alg);
  for (const auto& l : ls) {
    if (l.kind == Letter::Kind::Torus) {
      m.torus = m.torus * l.tp;
      continue;
    }
    m.exps[l.gp.gen] = static_cast<int16_t>(m.exps[l.gp.gen] + l.gp.exp);
  }
  for (const auto& [g, mod] : alg.exponent_moduli)
    m.exps[g] = static_cast<int16_t>(((m.exps[g] % mod) + mod) % mod);
  for (size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] < 0 && !alg.gens[i].invertible)
      fail(Errc::NegativeExponentOnNonInvertible,
           "negative exponent on non-invertible generator " + alg.gens[i].name);
  return m;
}

}  // namespace

NCPoly normalize_word(const AlgebraPtr& alg, const Scalar& coeff, std::vector<Letter> letters) {
  NCPoly result(alg);
  std::vector<Child> stack;
  stack.push_back({coeff, std::move(letters)});
  long steps = 0;
  while (!stack.empty()) {
    auto [c, ls] = std::move(stack.back());
    stack.pop_back();
    if (c.is_zero()) continue;
    canonicalize_letters(ls);
    auto st = enumerate_steps(*alg, ls, true);
    if (st.empty()) {
      result.add_term(monomial_of_sorted(*alg, ls), c);
      continue;
    }
    if (++steps > 2'000'000) throw std::logic_error("normalization step limit exceeded");
    for (auto& [cc, nl] : apply_step(*alg, ls, st.front()))
      stack.push_back({c * cc, std::move(nl)});
  }
  return result;
}

// ---------------------------------------------------------------------------
// every-order reduction and confluence checking

namespace {

std::string letters_key(const std::vector<Letter>& ls) {
  std::string k;
  k.reserve(ls.size() * 10);
  for (const auto& l : ls) {
    if (l.kind == Letter::Kind::Gen) {
      k += 'g';
      k += std::to_string(l.gp.gen);
      k += '^';
      k += std::to_string(l.gp.exp);
    } else {
      k += 't';
      for (auto v : l.tp.x1) k += std::to_string(v) + ",";
      k += ';';
      for (auto v : l.tp.x2) k += std::to_string(v) + ",";
    }
    k += '|';
  }
  return k;
}

constexpr size_t kMaxNfSet = 6;

using NfMemo = std::unordered_map<std::string, std::vector<NCPoly>>;

std::vector<NCPoly> nf_set(const AlgebraPtr& alg, std::vector<Letter> ls, NfMemo& memo) {
  canonicalize_letters(ls);
  std::string key = letters_key(ls);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto steps = enumerate_steps(*alg, ls, false);
  std::vector<NCPoly> result;
  if (steps.empty()) {
    result.push_back(
        NCPoly::monomial_term(alg, monomial_of_sorted(*alg, ls), Scalar::one(alg->mode)));
    memo.emplace(std::move(key), result);
    return result;
  }

  std::map<std::string, NCPoly> acc;
  for (const auto& st : steps) {
    std::vector<NCPoly> combos{NCPoly::zero(alg)};
    for (auto& [cc, nl] : apply_step(*alg, ls, st)) {
      auto child_nfs = nf_set(alg, std::move(nl), memo);
      std::vector<NCPoly> next;
      for (const auto& base : combos) {
        for (const auto& nf : child_nfs) {
          next.push_back(base + nf.scaled(cc));
          if (next.size() >= kMaxNfSet) break;
        }
        if (next.size() >= kMaxNfSet) break;
      }
      combos = std::move(next);
    }
    for (auto& p : combos) {
      if (acc.size() >= kMaxNfSet) break;
      acc.emplace(p.str(), p);
    }
    if (acc.size() >= kMaxNfSet) break;
  }
  result.reserve(acc.size());
  for (auto& [s, p] : acc) result.push_back(std::move(p));
  memo.emplace(std::move(key), result);
  return result;
}

std::string word_str(const Algebra& alg, const std::vector<Letter>& ls) {
  if (ls.empty()) return "1";
  std::string out;
  for (const auto& l : ls) {
    if (!out.empty()) out += "*";
    if (l.kind == Letter::Kind::Torus) {
      out += l.tp.str();
    } else {
      out += alg.gens[l.gp.gen].name;
      if (l.gp.exp != 1) out += "^" + std::to_string(l.gp.exp);
    }
  }
  return out;
}

}  // namespace

std::vector<NCPoly> all_normal_forms(const AlgebraPtr& alg, const std::vector<Letter>& letters) {
  NfMemo memo;
  return nf_set(alg, letters, memo);
}

ConfluenceReport check_confluence(const AlgebraPtr& alg, int max_len) {
  ConfluenceReport report;
  report.algebra = alg->id;
  report.max_len = max_len;
  NfMemo memo;
  const auto& letters = alg->confluence_letters;
  if (letters.empty()) return report;

  std::vector<size_t> idx;
  for (int len = 1; len <= max_len; ++len) {
    idx.assign(len, 0);
    while (true) {
      std::vector<Letter> word;
      word.reserve(len);
      for (int i = 0; i < len; ++i) word.push_back(letters[idx[i]]);
      ++report.words_checked;
      auto nfs = nf_set(alg, word, memo);
      if (nfs.size() > 1)
        report.divergences.push_back({word_str(*alg, word), nfs[0].str(), nfs[1].str()});

      int pos = len - 1;
      while (pos >= 0 && ++idx[pos] == letters.size()) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return report;
}

std::string ConfluenceReport::str() const {
  std::string out = "confluence " + algebra + " max_len=" + std::to_string(max_len) + ": ";
  out += divergences.empty() ? "confluent" : "NOT confluent";
  out += " (" + std::to_string(words_checked) + " words, " +
         std::to_string(divergences.size()) + " divergences)";
  for (const auto& d : divergences)
    out += "\n  " + d.word + "  ->  " + d.nf_a + "   vs   " + d.nf_b;
  return out;
}

// ---------------------------------------------------------------------------
// basis enumeration

std::vector<Monomial> enumerate_basis(const AlgebraPtr& alg, int total_degree,
                                      std::optional<int> invertible_bound) {
  const auto inorder = alg->inorder_rule_pairs();
  for (const auto& g : alg->gens) {
    if (g.invertible && !alg->exponent_moduli.count(g.index) && !invertible_bound)
      fail(Errc::Unbounded, "degree class is infinite: invertible generator " + g.name +
                                " has no exponent bound");
  }

  std::vector<Monomial> out;
  Monomial m = unit_monomial(*alg);
  auto rec = [&](auto&& self, size_t gen, int remaining) -> void {
    if (gen == alg->gens.size()) {
      if (remaining != 0) return;
      for (const auto& [i, j] : inorder)
        if (m.exps[i] > 0 && m.exps[j] > 0) return;
      out.push_back(m);
      return;
    }
    const auto& g = alg->gens[gen];
    int lo = 0, hi = 0;
    if (auto it = alg->exponent_moduli.find(g.index); it != alg->exponent_moduli.end()) {
      hi = it->second - 1;
    } else if (g.invertible) {
      lo = -*invertible_bound;
      hi = *invertible_bound;
    } else {
      hi = std::max(remaining, 0) + 4 * static_cast<int>(alg->gens.size()) *
                                        (invertible_bound ? *invertible_bound : 0);
    }
    for (int e = lo; e <= hi; ++e) {
      m.exps[gen] = static_cast<int16_t>(e);
      self(self, gen + 1, remaining - e);
      m.exps[gen] = 0;
    }
  };
  rec(rec, 0, total_degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return MonomialLess{}(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// printing

std::string monomial_str(const Algebra& alg, const Monomial& m) {
  std::string out;
  if (!m.torus.is_identity()) out = m.torus.str();
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += alg.gens[i].name;
    if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string NCPoly::str() const {
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
    std::string ms = monomial_str(*alg_, m);
    Scalar abs_c = neg ? -c : c;
    if (mag == "1") {
      out += ms;
    } else if (m.is_unit()) {
      out += mag;
    } else if (abs_c.is_plain_term() || !abs_c.den().is_one()) {
      out += mag + "*" + ms;
    } else {
      out += "(" + mag + ")*" + ms;
    }
  }
  return out;
}

std::string dump_presentation(const AlgebraPtr& alg) {
  std::string out;
  for (const auto& [key, rhs] : alg->rules) {
    const auto& [l, r] = key;
    out += alg->gens[l].name + "*" + alg->gens[r].name + " -> ";
    NCPoly image = NCPoly::zero(alg);
    if (rhs.swap_coeff) {
      image = normalize_word(alg, *rhs.swap_coeff,
                             {Letter::gen(r, 1), Letter::gen(l, 1)});
    } else {
      for (const auto& [c, word] : rhs.general) image = image + normalize_word(alg, c, word);
    }
    out += image.str() + "\n";
  }
  for (const auto& g : alg->gens) {
    if (g.torus_weight)
      out += "torus-weight " + g.name + " (" + std::to_string(g.torus_weight->first) + "," +
             std::to_string(g.torus_weight->second) + ")\n";
  }
  for (const auto& [g, mod] : alg->exponent_moduli)
    out += alg->gens[g].name + "^" + std::to_string(mod) + " -> 1\n";
  return out;
}

}  // namespace qgl2
