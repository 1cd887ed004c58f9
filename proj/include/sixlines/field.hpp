#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sixlines/rational.hpp"

namespace sixlines {

class FieldElement;
struct AdjoinResult;

// A tower of real quadratic extensions of Q, at most two levels deep.
// Radicands are stored as positive integers, each guaranteed not to be a
// square in the tower below it. The empty tower is Q itself.
class FieldTower {
public:
  FieldTower() = default;

  static const FieldTower& rationals();

  int depth() const { return static_cast<int>(radicands_.size()); }
  const Integer& radicand(int level) const { return radicands_[level]; }

  // Tower with the top level removed.
  FieldTower prefix() const;
  bool is_prefix_of(const FieldTower& other) const;

  bool operator==(const FieldTower& other) const {
    return radicands_ == other.radicands_;
  }
  bool operator!=(const FieldTower& other) const { return !(*this == other); }

  std::string str() const;  // e.g. "Q(sqrt(5), sqrt(2))"

private:
  friend struct AdjoinResult;
  friend AdjoinResult adjoin_sqrt(const FieldTower&, const Rational&);

  std::vector<Integer> radicands_;
};

// An element of a quadratic tower: 2^depth rational coordinates in the
// basis of products of the adjoined square roots. Coefficient index is a
// bitmask over tower levels. Immutable value; all operations are pure.
class FieldElement {
public:
  FieldElement() : tower_(), c_{Rational(0)} {}
  FieldElement(Rational r)  // NOLINT: implicit by design
      : tower_(), c_{std::move(r)} {}
  FieldElement(long n) : FieldElement(Rational(n)) {}  // NOLINT
  FieldElement(Rational r, const FieldTower& tower);

  static FieldElement zero(const FieldTower& tower) {
    return FieldElement(Rational(0), tower);
  }

  const FieldTower& tower() const { return tower_; }
  const Rational& coefficient(std::size_t mask) const { return c_[mask]; }
  std::size_t coefficient_count() const { return c_.size(); }

  bool is_zero() const;
  bool is_rational() const;        // all irrational coordinates vanish
  Rational rational_value() const; // throws IncompatibleTowers if not rational

  // Exact sign in {-1, 0, +1}, resolved recursively: the sign of a + b*sqrt(d)
  // follows from the signs of a, b and a^2 - b^2 d.
  int sign() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;  // throws DivisionByZero on zero

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  // Lift into a deeper or merged tower; every radicand of the current tower
  // must be expressible there. Throws IncompatibleTowers otherwise.
  FieldElement in_tower(const FieldTower& target) const;

  // Exact square root within this element's own tower, if one exists.
  // The returned root is the non-negative one.
  std::optional<FieldElement> sqrt_in_tower() const;

  double to_double() const;
  std::string str() const;  // field-element grammar text

private:
  friend AdjoinResult adjoin_sqrt(const FieldTower&, const Rational&);

  FieldElement(FieldTower tower, std::vector<Rational> coeffs)
      : tower_(std::move(tower)), c_(std::move(coeffs)) {}

  FieldElement lower_half() const;
  FieldElement upper_half() const;
  static FieldElement from_halves(const FieldTower& tower,
                                  const FieldElement& lo,
                                  const FieldElement& hi);
  static void unify(FieldElement& a, FieldElement& b);

  FieldTower tower_;
  std::vector<Rational> c_;
};

inline int sign_of(const FieldElement& x) { return x.sign(); }

struct AdjoinResult {
  FieldTower tower;        // resulting tower (== base when no extension needed)
  bool extended = false;   // true when a new level was added
  FieldElement sqrt_value; // sqrt(d) expressed as an element of `tower`
};

// Adjoin sqrt(d) to `base`. If d is already a square in `base`, the tower is
// returned unchanged and `extended` is false. Requires d > 0; throws
// TowerDepthExceeded when the result would be deeper than two levels.
AdjoinResult adjoin_sqrt(const FieldTower& base, const Rational& d);

// Parse `text` against the field-element grammar
//   ELEM := TERM (('+'|'-') TERM)*
//   TERM := RAT | RAT '*' ROOT | ROOT
//   ROOT := 'sqrt(' RAT ')'
//   RAT  := ['-'] INT ['/' INT]
// Whitespace is insignificant. Rejects nested radicals, non-positive
// radicands, and elements needing more than two extensions.
FieldElement parse_field_element(const std::string& text);

}  // namespace sixlines
