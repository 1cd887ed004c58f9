#include "sixlines/field.hpp"

#include <cctype>
#include <cmath>

namespace sixlines {

namespace {

// Decide whether sqrt(m) lies in the tower spanned by `rads`, and if so at
// which basis mask with which rational coefficient. For integer m > 0 and
// independent radicands d_i, sqrt(m) is in the tower iff m * prod(d_i, i in S)
// is a perfect square for some subset S; the witness is (s / prod) * basis(S).
bool sqrt_in_radicands(const Integer& m, const FieldTower& tower,
                       std::size_t* mask_out, Rational* coeff_out) {
  const int n = tower.depth();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Integer prod = 1;
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) prod *= tower.radicand(i);
    Integer value = m * prod;
    if (mpz_perfect_square_p(value.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), value.get_mpz_t());
      *mask_out = mask;
      *coeff_out = Rational(s, prod);
      return true;
    }
  }
  return false;
}

}  // namespace

const FieldTower& FieldTower::rationals() {
  static const FieldTower q;
  return q;
}

FieldTower FieldTower::prefix() const {
  FieldTower t;
  if (!radicands_.empty())
    t.radicands_.assign(radicands_.begin(), radicands_.end() - 1);
  return t;
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
  if (depth() > other.depth()) return false;
  for (int i = 0; i < depth(); ++i)
    if (radicands_[i] != other.radicands_[i]) return false;
  return true;
}

std::string FieldTower::str() const {
  if (radicands_.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < radicands_.size(); ++i) {
    if (i) s += ", ";
    s += "sqrt(" + radicands_[i].get_str() + ")";
  }
  return s + ")";
}

AdjoinResult adjoin_sqrt(const FieldTower& base, const Rational& d) {
  if (d.sign() <= 0)
    throw DegenerateInput("adjoin_sqrt requires a positive radicand, got " +
                          d.str());
  // sqrt(p/q) = sqrt(p*q) / q: reduce to an integer radicand.
  Integer m = d.num() * d.den();
  const Rational scale(Integer(1), d.den());

  std::size_t mask = 0;
  Rational coeff;
  if (sqrt_in_radicands(m, base, &mask, &coeff)) {
    std::vector<Rational> c(std::size_t(1) << base.depth(), Rational(0));
    c[mask] = coeff * scale;
    AdjoinResult r;
    r.tower = base;
    r.extended = false;
    r.sqrt_value = FieldElement(base, std::move(c));
    return r;
  }

  if (base.depth() >= 2)
    throw TowerDepthExceeded(
        "adjoining sqrt(" + d.str() + ") to " + base.str() +
        " would exceed the supported two quadratic extensions");

  FieldTower t = base;
  t.radicands_.push_back(m);
  std::vector<Rational> c(std::size_t(1) << t.depth(), Rational(0));
  c[std::size_t(1) << base.depth()] = scale;  // scale * sqrt(m)
  AdjoinResult r;
  r.tower = t;
  r.extended = true;
  r.sqrt_value = FieldElement(t, std::move(c));
  return r;
}

FieldElement::FieldElement(Rational r, const FieldTower& tower)
    : tower_(tower), c_(std::size_t(1) << tower.depth(), Rational(0)) {
  c_[0] = std::move(r);
}

bool FieldElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational())
    throw IncompatibleTowers("element " + str() + " is not rational");
  return c_[0];
}

FieldElement FieldElement::lower_half() const {
  const std::size_t half = c_.size() / 2;
  return FieldElement(tower_.prefix(),
                      std::vector<Rational>(c_.begin(), c_.begin() + half));
}

FieldElement FieldElement::upper_half() const {
  const std::size_t half = c_.size() / 2;
  return FieldElement(tower_.prefix(),
                      std::vector<Rational>(c_.begin() + half, c_.end()));
}

FieldElement FieldElement::from_halves(const FieldTower& tower,
                                       const FieldElement& lo,
                                       const FieldElement& hi) {
  std::vector<Rational> c;
  c.reserve(lo.c_.size() * 2);
  c.insert(c.end(), lo.c_.begin(), lo.c_.end());
  c.insert(c.end(), hi.c_.begin(), hi.c_.end());
  return FieldElement(tower, std::move(c));
}

int FieldElement::sign() const {
  if (tower_.depth() == 0) return c_[0].sign();
  const FieldElement a = lower_half();
  const FieldElement b = upper_half();
  const int sb = b.sign();
  if (sb == 0) return a.sign();
  const int sa = a.sign();
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Mixed signs: compare a^2 against b^2 d in the lower tower.
  const FieldElement d(Rational(tower_.radicand(tower_.depth() - 1)),
                       tower_.prefix());
  const FieldElement diff = a * a - b * b * d;
  return sa * diff.sign();
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return FieldElement(tower_, std::move(c));
}

FieldElement FieldElement::in_tower(const FieldTower& target) const {
  if (tower_ == target) return *this;
  if (tower_.is_prefix_of(target)) {
    std::vector<Rational> c(std::size_t(1) << target.depth(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    return FieldElement(target, std::move(c));
  }
  // General case: re-express each source basis root within `target`.
  std::vector<FieldElement> roots;  // sqrt(d_i) of the source tower, in target
  for (int i = 0; i < tower_.depth(); ++i) {
    std::size_t mask = 0;
    Rational coeff;
    if (!sqrt_in_radicands(tower_.radicand(i), target, &mask, &coeff))
      throw IncompatibleTowers("cannot express " + tower_.str() + " inside " +
                               target.str());
    std::vector<Rational> c(std::size_t(1) << target.depth(), Rational(0));
    c[mask] = coeff;
    roots.push_back(FieldElement(target, std::move(c)));
  }
  FieldElement result = FieldElement::zero(target);
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (c_[m].is_zero()) continue;
    FieldElement term(c_[m], target);
    for (int i = 0; i < tower_.depth(); ++i)
      if (m & (std::size_t(1) << i)) term = term * roots[i];
    result = result + term;
  }
  return result;
}

void FieldElement::unify(FieldElement& a, FieldElement& b) {
  if (a.tower_ == b.tower_) return;
  if (a.tower_.is_prefix_of(b.tower_)) {
    a = a.in_tower(b.tower_);
    return;
  }
  if (b.tower_.is_prefix_of(a.tower_)) {
    b = b.in_tower(a.tower_);
    return;
  }
  // Merge: adjoin b's radicands to a's tower (reduces when representable).
  FieldTower t = a.tower_;
  for (int i = 0; i < b.tower_.depth(); ++i)
    t = adjoin_sqrt(t, Rational(b.tower_.radicand(i))).tower;
  a = a.in_tower(t);
  b = b.in_tower(t);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement x = a, y = b;
  FieldElement::unify(x, y);
  std::vector<Rational> c(x.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.c_[i] + y.c_[i];
  return FieldElement(x.tower_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement x = a, y = b;
  FieldElement::unify(x, y);
  const int depth = x.tower_.depth();
  std::vector<Rational> c(x.c_.size(), Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j].is_zero()) continue;
      Rational term = x.c_[i] * y.c_[j];
      const std::size_t common = i & j;
      for (int k = 0; k < depth; ++k)
        if (common & (std::size_t(1) << k))
          term *= Rational(x.tower_.radicand(k));
      c[i ^ j] += term;
    }
  }
  return FieldElement(x.tower_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (tower_.depth() == 0)
    return FieldElement(Rational(1) / c_[0]);
  // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
  // because sqrt(d) is irrational over the lower tower.
  const FieldElement a = lower_half();
  const FieldElement b = upper_half();
  const FieldElement d(Rational(tower_.radicand(tower_.depth() - 1)),
                       tower_.prefix());
  const FieldElement norm = a * a - b * b * d;
  const FieldElement ninv = norm.inverse();
  return from_halves(tower_, a * ninv, -(b * ninv));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement x = a, y = b;
  FieldElement::unify(x, y);
  return x * y.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement x = a, y = b;
  FieldElement::unify(x, y);
  return x.c_ == y.c_;
}

std::optional<FieldElement> FieldElement::sqrt_in_tower() const {
  const int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return FieldElement::zero(tower_);
  if (tower_.depth() == 0) {
    auto r = c_[0].sqrt_if_square();
    if (!r) return std::nullopt;
    return FieldElement(*r);
  }
  const FieldElement a = lower_half();
  const FieldElement b = upper_half();
  const FieldElement d(Rational(tower_.radicand(tower_.depth() - 1)),
                       tower_.prefix());
  if (b.is_zero()) {
    if (auto r = a.sqrt_in_tower())
      return from_halves(tower_, *r, FieldElement::zero(tower_.prefix()));
    if (auto r = (a / d).sqrt_in_tower())
      return from_halves(tower_, FieldElement::zero(tower_.prefix()), *r);
    return std::nullopt;
  }
  // x = a + b sqrt(d) = (p + q sqrt(d))^2 needs p^2 + q^2 d = a, 2pq = b,
  // hence (p^2 - q^2 d)^2 = a^2 - b^2 d must be a square in the lower tower.
  const FieldElement norm = a * a - b * b * d;
  const auto root = norm.sqrt_in_tower();
  if (!root) return std::nullopt;
  const FieldElement two(Rational(2), tower_.prefix());
  for (int sgn_choice : {+1, -1}) {
    const FieldElement h =
        (sgn_choice > 0 ? a + *root : a - *root) / two;  // candidate p^2
    if (h.sign() <= 0) continue;
    const auto p = h.sqrt_in_tower();
    if (!p || p->is_zero()) continue;
    const FieldElement q = b / (two * *p);
    FieldElement cand = from_halves(tower_, *p, q);
    if (cand.sign() < 0) cand = -cand;
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

double FieldElement::to_double() const {
  double acc = 0.0;
  const int depth = tower_.depth();
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (c_[m].is_zero()) continue;
    double term = c_[m].to_double();
    for (int k = 0; k < depth; ++k)
      if (m & (std::size_t(1) << k))
        term *= std::sqrt(mpz_class(tower_.radicand(k)).get_d());
    acc += term;
  }
  return acc;
}

std::string FieldElement::str() const {
  std::string out;
  for (std::size_t m = 0; m < c_.size(); ++m) {
    if (c_[m].is_zero()) continue;
    Rational coeff = c_[m];
    std::string term;
    if (m == 0) {
      term = coeff.abs().str();
    } else {
      Integer rad = 1;
      for (int k = 0; k < tower_.depth(); ++k)
        if (m & (std::size_t(1) << k)) rad *= tower_.radicand(k);
      const Rational mag = coeff.abs();
      const std::string root = "sqrt(" + rad.get_str() + ")";
      term = (mag == Rational(1)) ? root : mag.str() + "*" + root;
    }
    if (out.empty())
      out = (coeff.sign() < 0 ? "-" : "") + term;
    else
      out += (coeff.sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Grammar parser

namespace {

class ElementParser {
public:
  explicit ElementParser(const std::string& text) : s_(text) {}

  FieldElement parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty field-element text", pos_);
    FieldElement value = parse_term();
    skip_ws();
    while (!at_end()) {
      const char op = s_[pos_];
      if (op != '+' && op != '-')
        throw ParseError(std::string("expected '+' or '-', got '") + op + "'",
                         pos_);
      ++pos_;
      skip_ws();
      const FieldElement term = parse_term();
      value = (op == '+') ? value + term : value - term;
      skip_ws();
    }
    return value;
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool looking_at_sqrt() const {
    return s_.compare(pos_, 4, "sqrt") == 0;
  }

  FieldElement parse_term() {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    if (looking_at_sqrt()) return parse_root();
    Rational coeff = parse_rational();
    skip_ws();
    if (!at_end() && s_[pos_] == '*') {
      ++pos_;
      skip_ws();
      if (!looking_at_sqrt())
        throw ParseError("expected sqrt(...) after '*'", pos_);
      return FieldElement(coeff) * parse_root();
    }
    return FieldElement(coeff);
  }

  FieldElement parse_root() {
    pos_ += 4;  // "sqrt"
    skip_ws();
    if (at_end() || s_[pos_] != '(')
      throw ParseError("expected '(' after sqrt", pos_);
    ++pos_;
    skip_ws();
    if (looking_at_sqrt())
      throw ParseError("nested radicals are not supported (depth-3 nesting)",
                       pos_);
    const std::size_t rad_pos = pos_;
    Rational rad = parse_rational();
    skip_ws();
    if (at_end() || s_[pos_] != ')')
      throw ParseError("expected ')' closing sqrt", pos_);
    ++pos_;
    if (rad.sign() <= 0)
      throw ParseError("radicand must be positive, got " + rad.str(), rad_pos);
    const AdjoinResult r = adjoin_sqrt(FieldTower::rationals(), rad);
    return r.sqrt_value;
  }

  Rational parse_rational() {
    skip_ws();
    bool negative = false;
    if (!at_end() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    Integer num = parse_integer();
    Integer den = 1;
    skip_ws();
    if (!at_end() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", pos_);
    }
    Rational r(num, den);
    return negative ? -r : r;
  }

  Integer parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError("expected an integer", start);
    return Integer(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_field_element(const std::string& text) {
  ElementParser p(text);
  FieldElement e = p.parse();
  if (e.tower().depth() > 2)
    throw ParseError("element requires more than two quadratic extensions", 0);
  return e;
}

}  // namespace sixlines
