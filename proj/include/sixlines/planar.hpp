#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sixlines/invariants.hpp"
#include "sixlines/projective.hpp"

namespace sixlines {

// Point of the real projective plane, up to scalar.
class PlanarPoint {
public:
  PlanarPoint(FieldElement x, FieldElement y, FieldElement z);

  const FieldElement& operator[](int i) const { return x_[i]; }
  std::string str() const;

private:
  std::array<FieldElement, 3> x_;
};

bool projectively_equal(const PlanarPoint& a, const PlanarPoint& b);

// Six marked points of the plane. General position (no collinear triple, not
// all six coconic) is a checked property, not a construction invariant.
class SixPoints {
public:
  explicit SixPoints(std::array<PlanarPoint, 6> points)
      : pts_(std::move(points)) {}

  const PlanarPoint& point(int i) const { return pts_[i]; }

private:
  std::array<PlanarPoint, 6> pts_;
};

struct Violation {
  enum class Kind { Collinear, Coconic };
  Kind kind;
  std::array<int, 3> triple = {-1, -1, -1};  // offending indices if collinear
  std::string str() const;
};

// Empty optional means the points are in general position.
std::optional<Violation> general_position_check(const SixPoints& s);

// Edge {i,j} present when one of the two arcs of the line p_i p_j bounded by
// the points misses all six lines through pairs of the remaining four.
struct InseparabilityGraph {
  std::set<std::pair<int, int>> edges;  // 0-based, i < j
};

InseparabilityGraph inseparability_graph(const SixPoints& s);

// A conic as its six coefficients (x^2, xy, y^2, xz, yz, z^2), up to scale.
class Conic {
public:
  explicit Conic(std::array<FieldElement, 6> coeffs);

  const FieldElement& operator[](int i) const { return c_[i]; }
  FieldElement eval(const PlanarPoint& p) const;
  // Tangent line at a point of the conic, as a dual 3-vector.
  std::array<FieldElement, 3> tangent_at(const PlanarPoint& p) const;

private:
  std::array<FieldElement, 6> c_;
};

// The unique conic through five points, no three collinear.
// Throws DegenerateConic otherwise.
Conic conic_through_five(const std::array<PlanarPoint, 5>& pts);

// Cyclic order of five points along the nondegenerate conic through them,
// read off the pencil of chords through the first point (whose own place is
// marked by the tangent line). Throws NotOnConic.
CyclicOrder cyclic_order_on_conic(const Conic& conic,
                                  const std::array<PlanarPoint, 5>& pts);

// Segre pentagram of the configuration with the given distinguished point:
// relabel the other five consecutively along the pencil of lines through it,
// read their cyclic order on the conic through them, and take the coarse
// five-line class of that permutation.
Pentagram segre_pentagram_planar(const SixPoints& s, int distinguished = 5);

enum class Kind { Icosahedral, Bipartite, Tripartite, Hexagonal };
const char* kind_name(Kind k);
Kind kind_from_pentagram(Pentagram p);

// Computes the pentagram for every choice of distinguished point, requires
// agreement, and maps P10/P4/P2/P0 to Hexagonal/Bipartite/Tripartite/
// Icosahedral. Throws InconsistentPentagrams if the six roles disagree.
Kind planar_kind(const SixPoints& s);

}  // namespace sixlines
