#include "sixlines/projective.hpp"

#include <algorithm>

namespace sixlines {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
// Complementary index pair and sign for the Plücker pairing:
// omega(p, q) = p01 q23 - p02 q13 + p03 q12 + p12 q03 - p13 q02 + p23 q01.
constexpr int kComplement[6] = {5, 4, 3, 2, 1, 0};
constexpr int kPairingSign[6] = {+1, -1, +1, +1, -1, +1};

bool all_zero(const std::array<FieldElement, 4>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Proportionality of two coordinate vectors: all 2x2 minors vanish.
template <std::size_t N>
bool proportional(const std::array<FieldElement, N>& u,
                  const std::array<FieldElement, N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
  return true;
}

// Entry P[i][j] of the antisymmetric Plücker matrix.
FieldElement plucker_matrix_entry(const PluckerLine& l, int i, int j) {
  if (i == j) return FieldElement(Rational(0));
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  int idx = -1;
  for (int k = 0; k < 6; ++k)
    if (kPairs[k][0] == i && kPairs[k][1] == j) idx = k;
  return swapped ? -l[idx] : l[idx];
}

// Dual Plücker coordinates (line as intersection of planes).
std::array<FieldElement, 6> dual_coords(const PluckerLine& l) {
  std::array<FieldElement, 6> q = {l[5], -l[4], l[3], l[2], -l[1], l[0]};
  return q;
}

FieldElement dual_matrix_entry(const std::array<FieldElement, 6>& q, int i,
                               int j) {
  if (i == j) return FieldElement(Rational(0));
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  int idx = -1;
  for (int k = 0; k < 6; ++k)
    if (kPairs[k][0] == i && kPairs[k][1] == j) idx = k;
  return swapped ? -q[idx] : q[idx];
}

// Plücker vector of the line through x and the basis point e_m (raw minors;
// used for the plane-through formula, never normalized into a line).
std::array<FieldElement, 6> raw_minors_with_basis(const HomPoint3& x, int m) {
  std::array<FieldElement, 6> out;
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    FieldElement mi = (j == m) ? x[i] : FieldElement(Rational(0));
    FieldElement mj = (i == m) ? x[j] : FieldElement(Rational(0));
    out[k] = mi - mj;
  }
  return out;
}

FieldElement pairing_raw(const std::array<FieldElement, 6>& p,
                         const std::array<FieldElement, 6>& q) {
  FieldElement acc = FieldElement(Rational(0));
  for (int k = 0; k < 6; ++k) {
    FieldElement term = p[k] * q[kComplement[k]];
    acc = (kPairingSign[k] > 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

HomPoint3::HomPoint3(FieldElement x, FieldElement y, FieldElement z,
                     FieldElement w)
    : x_{std::move(x), std::move(y), std::move(z), std::move(w)} {
  if (all_zero(x_))
    throw DegenerateInput("projective point with all coordinates zero");
}

HomPoint3 HomPoint3::negated() const {
  return HomPoint3(-x_[0], -x_[1], -x_[2], -x_[3]);
}

bool projectively_equal(const HomPoint3& a, const HomPoint3& b) {
  return proportional(a.x_, b.x_);
}

std::string HomPoint3::str() const {
  std::string s = x_[0].str();
  for (int i = 1; i < 4; ++i) s += " : " + x_[i].str();
  return s;
}

ProjPlane::ProjPlane(std::array<FieldElement, 4> coeffs)
    : c_(std::move(coeffs)) {
  if (all_zero(c_))
    throw DegenerateInput("projective plane with all coefficients zero");
}

FieldElement ProjPlane::eval(const HomPoint3& p) const {
  FieldElement acc = FieldElement(Rational(0));
  for (int i = 0; i < 4; ++i) acc = acc + c_[i] * p[i];
  return acc;
}

PluckerLine PluckerLine::from_coords(std::array<FieldElement, 6> p) {
  bool nonzero = false;
  for (const auto& x : p)
    if (!x.is_zero()) nonzero = true;
  if (!nonzero) throw DegenerateInput("all Plücker coordinates are zero");
  const FieldElement rel = p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
  if (!rel.is_zero())
    throw DegenerateInput("coordinates violate the Plücker relation");
  return PluckerLine(std::move(p));
}

std::pair<HomPoint3, HomPoint3> PluckerLine::two_points() const {
  std::vector<std::array<FieldElement, 4>> cols;
  for (int k = 0; k < 4; ++k) {
    std::array<FieldElement, 4> col = {
        plucker_matrix_entry(*this, 0, k), plucker_matrix_entry(*this, 1, k),
        plucker_matrix_entry(*this, 2, k), plucker_matrix_entry(*this, 3, k)};
    if (!all_zero(col)) cols.push_back(std::move(col));
  }
  for (std::size_t i = 1; i < cols.size(); ++i) {
    if (!proportional(cols[0], cols[i]))
      return {HomPoint3(cols[0][0], cols[0][1], cols[0][2], cols[0][3]),
              HomPoint3(cols[i][0], cols[i][1], cols[i][2], cols[i][3])};
  }
  throw DegenerateInput("Plücker matrix has rank below two");
}

bool PluckerLine::contains(const HomPoint3& p) const {
  const auto q = dual_coords(*this);
  for (int i = 0; i < 4; ++i) {
    FieldElement acc = FieldElement(Rational(0));
    for (int j = 0; j < 4; ++j) acc = acc + dual_matrix_entry(q, i, j) * p[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool projectively_equal(const PluckerLine& a, const PluckerLine& b) {
  return proportional(a.p_, b.p_);
}

std::string PluckerLine::str() const {
  std::string s = "(" + p_[0].str();
  for (int i = 1; i < 6; ++i) s += ", " + p_[i].str();
  return s + ")";
}

PluckerLine line_through(const HomPoint3& a, const HomPoint3& b) {
  if (projectively_equal(a, b))
    throw DegenerateSpan("line through coincident points " + a.str());
  std::array<FieldElement, 6> p;
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    p[k] = a[i] * b[j] - a[j] * b[i];
  }
  return PluckerLine::from_coords(std::move(p));
}

FieldElement plucker_pairing(const PluckerLine& l1, const PluckerLine& l2) {
  FieldElement acc = FieldElement(Rational(0));
  for (int k = 0; k < 6; ++k) {
    FieldElement term = l1[k] * l2[kComplement[k]];
    acc = (kPairingSign[k] > 0) ? acc + term : acc - term;
  }
  return acc;
}

bool meets(const PluckerLine& l1, const PluckerLine& l2) {
  return plucker_pairing(l1, l2).is_zero();
}

bool skew(const PluckerLine& l1, const PluckerLine& l2) {
  return !meets(l1, l2);
}

OrientedLine::OrientedLine(HomPoint3 a, HomPoint3 b)
    : a_(std::move(a)), b_(std::move(b)), line_(line_through(a_, b_)) {}

int linking_index(const OrientedLine& l1, const OrientedLine& l2) {
  const int s = plucker_pairing(l1.line(), l2.line()).sign();
  if (s == 0) throw NotSkew("linking index of meeting lines");
  return s;
}

int triple_linking(const PluckerLine& l1, const PluckerLine& l2,
                   const PluckerLine& l3) {
  // Each line's Plücker vector occurs twice in the product, so the result
  // does not depend on any representative or orientation choice.
  const PluckerLine* ls[3] = {&l1, &l2, &l3};
  int product = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const int s = plucker_pairing(*ls[i], *ls[j]).sign();
      if (s == 0)
        throw NotSkew("lines " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " are not skew");
      product *= s;
    }
  return product;
}

ProjPlane plane_through(const PluckerLine& line, const HomPoint3& p) {
  std::array<FieldElement, 4> coeffs;
  for (int m = 0; m < 4; ++m) {
    // pi_m = det[u, v, p, e_m] for any spanning points u, v of the line.
    coeffs[m] = FieldElement(Rational(0));
    const auto minors = raw_minors_with_basis(p, m);
    coeffs[m] = pairing_raw(
        {line[0], line[1], line[2], line[3], line[4], line[5]}, minors);
  }
  if (all_zero(coeffs))
    throw DegenerateInput("point lies on the line; plane is not unique");
  return ProjPlane(std::move(coeffs));
}

PluckerLine plane_meet(const ProjPlane& a, const ProjPlane& b) {
  std::array<FieldElement, 6> q;
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    q[k] = a[i] * b[j] - a[j] * b[i];
  }
  // Dual-to-primal: swap complementary pairs with the pairing signs.
  std::array<FieldElement, 6> p = {q[5], -q[4], q[3], q[2], -q[1], q[0]};
  return PluckerLine::from_coords(std::move(p));
}

HomPoint3 line_plane_point(const PluckerLine& line, const ProjPlane& plane) {
  std::array<FieldElement, 4> x;
  for (int i = 0; i < 4; ++i) {
    x[i] = FieldElement(Rational(0));
    for (int j = 0; j < 4; ++j)
      x[i] = x[i] + plucker_matrix_entry(line, i, j) * plane[j];
  }
  if (all_zero(x))
    throw DegenerateInput("line lies in the plane; intersection not a point");
  return HomPoint3(x[0], x[1], x[2], x[3]);
}

HomPoint3 lines_common_point(const PluckerLine& l1, const PluckerLine& l2) {
  if (!meets(l1, l2)) throw NotIncident("lines are skew; no common point");
  if (projectively_equal(l1, l2))
    throw DegenerateInput("coincident lines have no unique common point");
  // Pick a plane through l2 that does not contain l1, then cut l1 with it.
  const auto q = dual_coords(l2);
  const auto pts = l1.two_points();
  for (int k = 0; k < 4; ++k) {
    std::array<FieldElement, 4> col = {
        dual_matrix_entry(q, 0, k), dual_matrix_entry(q, 1, k),
        dual_matrix_entry(q, 2, k), dual_matrix_entry(q, 3, k)};
    if (all_zero(col)) continue;
    const ProjPlane plane(col);
    if (plane.eval(pts.first).is_zero() && plane.eval(pts.second).is_zero())
      continue;  // contains l1
    return line_plane_point(l1, plane);
  }
  throw DegenerateInput("no separating plane found for meeting lines");
}

CyclicOrder CyclicOrder::from_sequence(std::vector<int> items) {
  if (items.empty()) throw DegenerateInput("empty cyclic order");
  const std::size_t n = items.size();
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> seq = items;
    if (dir) std::reverse(seq.begin(), seq.end());
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> rot(seq.begin() + r, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  CyclicOrder c;
  c.items_ = std::move(best);
  return c;
}

std::string CyclicOrder::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(items_[i]);
  }
  return s + ")";
}

CyclicOrder rp1_cyclic_order(const std::vector<PencilCoord>& pts) {
  struct Key {
    bool infinite;
    FieldElement t;
    int index;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    if (p.beta.is_zero()) {
      if (p.alpha.is_zero())
        throw DegenerateInput("(0:0) is not a point of RP^1");
      keys.push_back({true, FieldElement(Rational(0)), int(i)});
    } else {
      keys.push_back({false, p.alpha / p.beta, int(i)});
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.infinite != b.infinite) return b.infinite;  // infinity last
    if (a.infinite) return false;
    return (a.t - b.t).sign() < 0;
  });
  for (std::size_t i = 1; i < keys.size(); ++i) {
    const bool equal = keys[i - 1].infinite == keys[i].infinite &&
                       (keys[i - 1].infinite ||
                        (keys[i - 1].t - keys[i].t).is_zero());
    if (equal) throw DuplicatePoint("coincident points on RP^1");
  }
  std::vector<int> order;
  order.reserve(keys.size());
  for (const auto& k : keys) order.push_back(k.index);
  return CyclicOrder::from_sequence(std::move(order));
}

namespace {

// Coordinates (alpha : beta) of `v` in the rank-2 span of basis vectors a, b.
template <std::size_t N>
PencilCoord span_coordinates(const std::array<FieldElement, N>& a,
                             const std::array<FieldElement, N>& b,
                             const std::array<FieldElement, N>& v) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t s = r + 1; s < N; ++s) {
      const FieldElement det = a[r] * b[s] - a[s] * b[r];
      if (det.is_zero()) continue;
      FieldElement alpha = v[r] * b[s] - v[s] * b[r];
      FieldElement beta = a[r] * v[s] - a[s] * v[r];
      return PencilCoord{std::move(alpha), std::move(beta)};
    }
  throw DegenerateInput("basis vectors of the pencil are dependent");
}

}  // namespace

CyclicOrder pencil_order(const PluckerLine& axis,
                         const std::vector<PluckerLine>& others) {
  // Two independent planes through the axis from its dual matrix.
  const auto q = dual_coords(axis);
  std::vector<std::array<FieldElement, 4>> cols;
  for (int k = 0; k < 4 && cols.size() < 2; ++k) {
    std::array<FieldElement, 4> col = {
        dual_matrix_entry(q, 0, k), dual_matrix_entry(q, 1, k),
        dual_matrix_entry(q, 2, k), dual_matrix_entry(q, 3, k)};
    if (all_zero(col)) continue;
    if (cols.size() == 1 && proportional(cols[0], col)) continue;
    cols.push_back(std::move(col));
  }
  if (cols.size() < 2)
    throw DegenerateInput("axis dual matrix has rank below two");

  std::vector<PencilCoord> coords;
  for (const auto& line : others) {
    if (projectively_equal(line, axis))
      throw NotIncident("a pencil line coincides with the axis");
    if (!meets(line, axis))
      throw NotIncident("line does not meet the pencil axis");
    // Plane spanned by axis and line: axis plus any point of `line` off it.
    const auto pts = line.two_points();
    const HomPoint3& x = axis.contains(pts.first) ? pts.second : pts.first;
    const ProjPlane plane = plane_through(axis, x);
    std::array<FieldElement, 4> v = {plane[0], plane[1], plane[2], plane[3]};
    coords.push_back(span_coordinates(cols[0], cols[1], v));
  }
  return rp1_cyclic_order(coords);
}

CyclicOrder points_order_on_line(const PluckerLine& carrier,
                                 const std::vector<HomPoint3>& pts) {
  const auto span = carrier.two_points();
  std::array<FieldElement, 4> g = {span.first[0], span.first[1], span.first[2],
                                   span.first[3]};
  std::array<FieldElement, 4> h = {span.second[0], span.second[1],
                                   span.second[2], span.second[3]};
  std::vector<PencilCoord> coords;
  for (const auto& p : pts) {
    if (!carrier.contains(p))
      throw NotOnLine("point " + p.str() + " is not on the carrier line");
    std::array<FieldElement, 4> v = {p[0], p[1], p[2], p[3]};
    coords.push_back(span_coordinates(g, h, v));
  }
  return rp1_cyclic_order(coords);
}

TransversalSet transversals_of_four(const PluckerLine& l1,
                                    const PluckerLine& l2,
                                    const PluckerLine& l3,
                                    const PluckerLine& l4) {
  if (meets(l1, l2) || meets(l1, l3) || meets(l2, l3))
    throw DegenerateInput("first three lines must be pairwise skew");

  // Moving point x(s,t) on l3; the unique line through x meeting l1 and l2
  // is the intersection of planes span(x,l1) and span(x,l2). Its incidence
  // with l4 is a homogeneous quadratic in (s,t).
  const auto [a, b] = l3.two_points();
  const auto candidate = [&](const FieldElement& s,
                             const FieldElement& t) -> PluckerLine {
    const HomPoint3 x(s * a[0] + t * b[0], s * a[1] + t * b[1],
                      s * a[2] + t * b[2], s * a[3] + t * b[3]);
    const ProjPlane alpha = plane_through(l1, x);
    const ProjPlane beta = plane_through(l2, x);
    return plane_meet(alpha, beta);
  };
  const FieldElement zero(Rational(0)), one(Rational(1));
  const FieldElement fA = plucker_pairing(candidate(one, zero), l4);
  const FieldElement fC = plucker_pairing(candidate(zero, one), l4);
  const FieldElement fAll = plucker_pairing(candidate(one, one), l4);
  const FieldElement fB = fAll - fA - fC;

  TransversalSet out;
  if (fA.is_zero() && fB.is_zero() && fC.is_zero()) {
    out.infinite = true;
    return out;
  }

  const FieldElement four(Rational(4));
  const FieldElement two(Rational(2));
  const FieldElement disc = fB * fB - four * fA * fC;
  const int ds = disc.sign();
  std::vector<std::pair<FieldElement, FieldElement>> roots;
  if (ds == 0) {
    if (!fA.is_zero())
      roots.emplace_back(-fB, two * fA);
    else if (!fC.is_zero())
      roots.emplace_back(two * fC, -fB);
    else  // fA = fC = 0, fB != 0: st = 0 gives the double root pattern
      roots.emplace_back(one, zero);
  } else if (ds > 0) {
    FieldElement root = [&] {
      if (auto r = disc.sqrt_in_tower()) return *r;
      if (disc.is_rational())
        return adjoin_sqrt(disc.tower(), disc.rational_value()).sqrt_value;
      throw TowerDepthExceeded(
          "transversal discriminant needs a non-rational radical beyond the "
          "supported tower depth");
    }();
    if (!fA.is_zero()) {
      roots.emplace_back(-fB + root, two * fA);
      roots.emplace_back(-fB - root, two * fA);
    } else {
      // fA = 0, disc = fB^2 > 0: roots t = 0 and fB s + fC t = 0.
      roots.emplace_back(one, zero);
      roots.emplace_back(-fC, fB);
    }
  }
  for (const auto& [s, t] : roots) out.lines.push_back(candidate(s, t));
  return out;
}

std::optional<PluckerLine> transversal_of_five(
    const std::vector<PluckerLine>& lines) {
  if (lines.size() != 5)
    throw DegenerateInput("transversal_of_five expects exactly five lines");
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (meets(lines[i], lines[j]))
        throw DegenerateInput("input lines " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " are not skew");

  for (int omit = 4; omit >= 0; --omit) {
    std::vector<const PluckerLine*> four;
    for (int i = 0; i < 5; ++i)
      if (i != omit) four.push_back(&lines[i]);
    const TransversalSet ts =
        transversals_of_four(*four[0], *four[1], *four[2], *four[3]);
    if (ts.infinite) continue;
    std::vector<PluckerLine> hits;
    for (const auto& t : ts.lines)
      if (meets(t, lines[omit])) hits.push_back(t);
    if (hits.size() >= 2)
      throw AmbiguousTransversal(
          "two common transversals; the five lines are too special");
    if (hits.empty()) return std::nullopt;
    return hits[0];
  }
  throw AmbiguousTransversal(
      "every four-line subset lies on a common ruled quadric");
}

}  // namespace sixlines
