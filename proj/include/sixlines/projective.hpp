#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sixlines/field.hpp"

namespace sixlines {

// Point of projective 3-space, defined up to a nonzero scalar.
class HomPoint3 {
public:
  HomPoint3(FieldElement x, FieldElement y, FieldElement z, FieldElement w);

  const FieldElement& operator[](int i) const { return x_[i]; }
  HomPoint3 negated() const;

  friend bool projectively_equal(const HomPoint3& a, const HomPoint3& b);
  std::string str() const;

private:
  std::array<FieldElement, 4> x_;
};

// Plane of projective 3-space (coefficient vector, up to scalar).
class ProjPlane {
public:
  explicit ProjPlane(std::array<FieldElement, 4> coeffs);

  const FieldElement& operator[](int i) const { return c_[i]; }
  FieldElement eval(const HomPoint3& p) const;

private:
  std::array<FieldElement, 4> c_;
};

// A line as its six Plücker coordinates (p01, p02, p03, p12, p13, p23),
// satisfying p01 p23 - p02 p13 + p03 p12 = 0 and not all zero.
class PluckerLine {
public:
  static PluckerLine from_coords(std::array<FieldElement, 6> p);

  const FieldElement& operator[](int i) const { return p_[i]; }

  // Two distinct points spanning the line, extracted from the coordinate
  // matrix. Deterministic.
  std::pair<HomPoint3, HomPoint3> two_points() const;

  // True when the point lies on the line.
  bool contains(const HomPoint3& p) const;

  friend bool projectively_equal(const PluckerLine& a, const PluckerLine& b);
  std::string str() const;

private:
  explicit PluckerLine(std::array<FieldElement, 6> p) : p_(std::move(p)) {}
  std::array<FieldElement, 6> p_;
};

// Line spanned by two distinct points; throws DegenerateSpan if a = b.
PluckerLine line_through(const HomPoint3& a, const HomPoint3& b);

// The symmetric Plücker pairing; vanishes exactly when the lines meet.
// For lines built from ordered point pairs it equals det[a1,b1,a2,b2].
FieldElement plucker_pairing(const PluckerLine& l1, const PluckerLine& l2);

bool meets(const PluckerLine& l1, const PluckerLine& l2);
bool skew(const PluckerLine& l1, const PluckerLine& l2);

// Oriented line: an ordered pair of fixed spanning representatives.
// Negating one representative reverses the orientation; negating both
// preserves it.
class OrientedLine {
public:
  OrientedLine(HomPoint3 a, HomPoint3 b);

  const HomPoint3& a() const { return a_; }
  const HomPoint3& b() const { return b_; }
  const PluckerLine& line() const { return line_; }
  OrientedLine reversed() const { return OrientedLine(b_, a_); }

private:
  HomPoint3 a_, b_;
  PluckerLine line_;
};

// Sign of det[a1,b1,a2,b2] over the four representative rows; ±1 for skew
// lines. Throws NotSkew when the lines meet.
int linking_index(const OrientedLine& l1, const OrientedLine& l2);

// Product of the three pairwise linking indices; independent of orientations
// and of argument order. Throws NotSkew naming the offending pair.
int triple_linking(const PluckerLine& l1, const PluckerLine& l2,
                   const PluckerLine& l3);

// Plane spanned by a line and a point off it.
ProjPlane plane_through(const PluckerLine& line, const HomPoint3& p);
// Line of intersection of two distinct planes.
PluckerLine plane_meet(const ProjPlane& a, const ProjPlane& b);
// Intersection point of a line with a plane not containing it.
HomPoint3 line_plane_point(const PluckerLine& line, const ProjPlane& plane);
// Intersection point of two meeting lines.
HomPoint3 lines_common_point(const PluckerLine& l1, const PluckerLine& l2);

// A cyclic arrangement of indices up to rotation and reversal, stored in
// canonical form: starts at the smallest index, direction lexicographically
// smaller.
class CyclicOrder {
public:
  static CyclicOrder from_sequence(std::vector<int> items);

  const std::vector<int>& items() const { return items_; }
  bool operator==(const CyclicOrder& other) const {
    return items_ == other.items_;
  }
  bool operator!=(const CyclicOrder& other) const { return !(*this == other); }
  std::string str() const;

private:
  std::vector<int> items_;
};

// Homogeneous coordinate on a real projective line; the cyclic order of a
// list of such points is that of the circle RP^1.
struct PencilCoord {
  FieldElement alpha, beta;  // the point (alpha : beta)
};

// Cyclic order of distinct points of RP^1. Throws DuplicatePoint.
CyclicOrder rp1_cyclic_order(const std::vector<PencilCoord>& pts);

// Cyclic order of the planes span(axis, other_i) within the pencil of planes
// through `axis`. Throws NotIncident if a line misses the axis.
CyclicOrder pencil_order(const PluckerLine& axis,
                         const std::vector<PluckerLine>& others);

// Canonical cyclic order of distinct points along a line in projective
// 3-space. Throws NotOnLine / DuplicatePoint.
CyclicOrder points_order_on_line(const PluckerLine& carrier,
                                 const std::vector<HomPoint3>& pts);

// Common transversals of four lines: either finitely many (0, 1 or 2,
// coordinates possibly in a one-step extension of the input tower) or
// infinitely many (the fourth line lies on the ruled quadric through the
// other three). Requires l1, l2, l3 pairwise skew.
struct TransversalSet {
  bool infinite = false;
  std::vector<PluckerLine> lines;
};

TransversalSet transversals_of_four(const PluckerLine& l1,
                                    const PluckerLine& l2,
                                    const PluckerLine& l3,
                                    const PluckerLine& l4);

// The unique common transversal of five pairwise-skew lines, if any.
// Throws AmbiguousTransversal when two transversals survive (the five lines
// are too special) and DegenerateInput on violated preconditions.
std::optional<PluckerLine> transversal_of_five(
    const std::vector<PluckerLine>& lines);

}  // namespace sixlines
