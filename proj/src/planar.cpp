#include "sixlines/planar.hpp"

#include <algorithm>

namespace sixlines {

namespace {

FieldElement det3(const std::array<std::array<FieldElement, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

FieldElement point_det(const PlanarPoint& a, const PlanarPoint& b,
                       const PlanarPoint& c) {
  return det3({{{a[0], a[1], a[2]}, {b[0], b[1], b[2]}, {c[0], c[1], c[2]}}});
}

// Dual vector of the line through two distinct points (cross product).
std::array<FieldElement, 3> line_join(const PlanarPoint& a,
                                      const PlanarPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

FieldElement eval_line(const std::array<FieldElement, 3>& line,
                       const PlanarPoint& p) {
  return line[0] * p[0] + line[1] * p[1] + line[2] * p[2];
}

std::array<FieldElement, 6> conic_row(const PlanarPoint& p) {
  return {p[0] * p[0], p[0] * p[1], p[1] * p[1],
          p[0] * p[2], p[1] * p[2], p[2] * p[2]};
}

// Rank and (for square systems) regularity of a small matrix over the field,
// by Gaussian elimination with exact division.
int matrix_rank(std::vector<std::vector<FieldElement>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const FieldElement inv = m[rank][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// One-dimensional kernel vector of a rank-(cols-1) matrix.
std::vector<FieldElement> kernel_vector(std::vector<std::vector<FieldElement>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const FieldElement inv = m[rank][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const FieldElement f = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = m[r][c] - f * m[rank][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  // Free column: the one that is not a pivot.
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = static_cast<int>(c);
      break;
    }
  if (free_col < 0 || rank != cols - 1)
    throw DegenerateConic("linear system does not have a unique conic");
  std::vector<FieldElement> kernel(cols, FieldElement(Rational(0)));
  kernel[free_col] = FieldElement(Rational(1));
  for (std::size_t r = 0; r < rank; ++r)
    kernel[pivot_col[r]] = -m[r][free_col];
  return kernel;
}

}  // namespace

PlanarPoint::PlanarPoint(FieldElement x, FieldElement y, FieldElement z)
    : x_{std::move(x), std::move(y), std::move(z)} {
  if (x_[0].is_zero() && x_[1].is_zero() && x_[2].is_zero())
    throw DegenerateInput("planar point with all coordinates zero");
}

std::string PlanarPoint::str() const {
  return x_[0].str() + " : " + x_[1].str() + " : " + x_[2].str();
}

bool projectively_equal(const PlanarPoint& a, const PlanarPoint& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::string Violation::str() const {
  if (kind == Kind::Coconic) return "Coconic";
  return "Collinear{" + std::to_string(triple[0]) + "," +
         std::to_string(triple[1]) + "," + std::to_string(triple[2]) + "}";
}

std::optional<Violation> general_position_check(const SixPoints& s) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        if (point_det(s.point(i), s.point(j), s.point(k)).is_zero())
          return Violation{Violation::Kind::Collinear, {i, j, k}};
  std::vector<std::vector<FieldElement>> m;
  for (int i = 0; i < 6; ++i) {
    const auto row = conic_row(s.point(i));
    m.push_back(std::vector<FieldElement>(row.begin(), row.end()));
  }
  if (matrix_rank(std::move(m)) < 6)
    return Violation{Violation::Kind::Coconic, {}};
  return std::nullopt;
}

InseparabilityGraph inseparability_graph(const SixPoints& s) {
  if (general_position_check(s))
    throw DegenerateInput("inseparability graph requires general position");
  InseparabilityGraph g;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      std::vector<int> rest;
      for (int k = 0; k < 6; ++k)
        if (k != i && k != j) rest.push_back(k);
      // Each line through a pair of the remaining four cuts the line p_i p_j
      // at (s : t) = (-l(p_j) : l(p_i)); the cut lies on the arc with
      // st > 0 exactly when l(p_i) l(p_j) < 0.
      int positive = 0, negative = 0;
      for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) {
          const auto line = line_join(s.point(rest[a]), s.point(rest[b]));
          const int sign = eval_line(line, s.point(i)).sign() *
                           eval_line(line, s.point(j)).sign();
          (sign > 0 ? positive : negative)++;
        }
      if (positive == 6 || negative == 6) g.edges.insert({i, j});
    }
  return g;
}

Conic::Conic(std::array<FieldElement, 6> coeffs) : c_(std::move(coeffs)) {
  bool nonzero = false;
  for (const auto& x : c_)
    if (!x.is_zero()) nonzero = true;
  if (!nonzero) throw DegenerateConic("zero conic");
}

FieldElement Conic::eval(const PlanarPoint& p) const {
  const auto row = conic_row(p);
  FieldElement acc(Rational(0));
  for (int i = 0; i < 6; ++i) acc = acc + c_[i] * row[i];
  return acc;
}

std::array<FieldElement, 3> Conic::tangent_at(const PlanarPoint& p) const {
  // Gradient of a x^2 + b xy + c y^2 + d xz + e yz + f z^2, doubled.
  const FieldElement two{Rational(2)};
  return {two * c_[0] * p[0] + c_[1] * p[1] + c_[3] * p[2],
          c_[1] * p[0] + two * c_[2] * p[1] + c_[4] * p[2],
          c_[3] * p[0] + c_[4] * p[1] + two * c_[5] * p[2]};
}

Conic conic_through_five(const std::array<PlanarPoint, 5>& pts) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k)
        if (point_det(pts[i], pts[j], pts[k]).is_zero())
          throw DegenerateConic("three of the five points are collinear");
  std::vector<std::vector<FieldElement>> m;
  for (const auto& p : pts) {
    const auto row = conic_row(p);
    m.push_back(std::vector<FieldElement>(row.begin(), row.end()));
  }
  const auto kernel = kernel_vector(std::move(m));
  std::array<FieldElement, 6> coeffs;
  std::copy(kernel.begin(), kernel.end(), coeffs.begin());
  return Conic(std::move(coeffs));
}

CyclicOrder cyclic_order_on_conic(const Conic& conic,
                                  const std::array<PlanarPoint, 5>& pts) {
  for (const auto& p : pts)
    if (!conic.eval(p).is_zero())
      throw NotOnConic("point " + p.str() + " is not on the conic");

  // Stereographic projection from pts[0]: chords to the other points plus
  // the tangent at pts[0] standing in for pts[0] itself.
  const PlanarPoint& center = pts[0];
  std::vector<std::array<FieldElement, 3>> pencil;
  pencil.push_back(conic.tangent_at(center));
  for (int i = 1; i < 5; ++i) pencil.push_back(line_join(center, pts[i]));

  // Basis of the lines through `center`: join with two auxiliary points not
  // on a common line with it.
  std::array<FieldElement, 3> basis_a{}, basis_b{};
  bool have_a = false, have_b = false;
  for (int i = 0; i < 3 && !(have_a && have_b); ++i) {
    const FieldElement zero{Rational(0)}, one{Rational(1)};
    PlanarPoint e(i == 0 ? one : zero, i == 1 ? one : zero,
                  i == 2 ? one : zero);
    if (projectively_equal(e, center)) continue;
    auto l = line_join(center, e);
    if (!have_a) {
      basis_a = l;
      have_a = true;
      continue;
    }
    bool proportional = true;
    for (int r = 0; r < 3; ++r)
      for (int c = r + 1; c < 3; ++c)
        if (!(basis_a[r] * l[c] - basis_a[c] * l[r]).is_zero())
          proportional = false;
    if (!proportional) {
      basis_b = l;
      have_b = true;
    }
  }
  if (!have_b)
    throw DegenerateInput("could not build a basis of the pencil of lines");

  std::vector<PencilCoord> coords;
  for (const auto& line : pencil) {
    // Solve line = alpha basis_a + beta basis_b.
    bool done = false;
    for (int r = 0; r < 3 && !done; ++r)
      for (int c = r + 1; c < 3 && !done; ++c) {
        const FieldElement det = basis_a[r] * basis_b[c] - basis_a[c] * basis_b[r];
        if (det.is_zero()) continue;
        FieldElement alpha = line[r] * basis_b[c] - line[c] * basis_b[r];
        FieldElement beta = basis_a[r] * line[c] - basis_a[c] * line[r];
        coords.push_back({std::move(alpha), std::move(beta)});
        done = true;
      }
    if (!done) throw DegenerateInput("pencil basis degenerated");
  }
  return rp1_cyclic_order(coords);
}

Pentagram segre_pentagram_planar(const SixPoints& s, int distinguished) {
  if (distinguished < 0 || distinguished > 5)
    throw DegenerateInput("distinguished point index out of range");
  if (auto v = general_position_check(s))
    throw DegenerateInput("points are not in general position: " + v->str());

  std::vector<int> others;
  for (int i = 0; i < 6; ++i)
    if (i != distinguished) others.push_back(i);

  // Cyclic order of the chords p_d p_i within the pencil through p_d.
  const PlanarPoint& center = s.point(distinguished);
  std::vector<std::array<FieldElement, 3>> chords;
  for (int i : others) chords.push_back(line_join(center, s.point(i)));

  std::array<FieldElement, 3> basis_a = chords[0];
  std::array<FieldElement, 3> basis_b{};
  bool have_b = false;
  for (std::size_t i = 1; i < chords.size() && !have_b; ++i) {
    bool proportional = true;
    for (int r = 0; r < 3; ++r)
      for (int c = r + 1; c < 3; ++c)
        if (!(basis_a[r] * chords[i][c] - basis_a[c] * chords[i][r]).is_zero())
          proportional = false;
    if (!proportional) {
      basis_b = chords[i];
      have_b = true;
    }
  }
  if (!have_b) throw DegenerateInput("pencil of chords is degenerate");

  std::vector<PencilCoord> coords;
  for (const auto& line : chords) {
    bool done = false;
    for (int r = 0; r < 3 && !done; ++r)
      for (int c = r + 1; c < 3 && !done; ++c) {
        const FieldElement det =
            basis_a[r] * basis_b[c] - basis_a[c] * basis_b[r];
        if (det.is_zero()) continue;
        FieldElement alpha = line[r] * basis_b[c] - line[c] * basis_b[r];
        FieldElement beta = basis_a[r] * line[c] - basis_a[c] * line[r];
        coords.push_back({std::move(alpha), std::move(beta)});
        done = true;
      }
    if (!done) throw DegenerateInput("pencil basis degenerated");
  }
  const CyclicOrder pencil = rp1_cyclic_order(coords);

  // Label the five points 1..5 along the pencil order.
  std::array<int, 5> label_of_local{};  // local index -> label 1..5
  for (int k = 0; k < 5; ++k) label_of_local[pencil.items()[k]] = k + 1;

  // Their cyclic order on the conic through them.
  std::array<PlanarPoint, 5> five = {s.point(others[0]), s.point(others[1]),
                                     s.point(others[2]), s.point(others[3]),
                                     s.point(others[4])};
  const Conic conic = conic_through_five(five);
  const CyclicOrder on_conic = cyclic_order_on_conic(conic, five);

  std::vector<int> images;
  for (int local : on_conic.items()) images.push_back(label_of_local[local]);
  const Perm sigma{images};
  const int sgn = comb_signature(sigma);
  return pentagram_from_abs(sgn < 0 ? -sgn : sgn);
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Icosahedral: return "icosahedral";
    case Kind::Bipartite: return "bipartite";
    case Kind::Tripartite: return "tripartite";
    case Kind::Hexagonal: return "hexagonal";
  }
  return "?";
}

Kind kind_from_pentagram(Pentagram p) {
  switch (p) {
    case Pentagram::P10: return Kind::Hexagonal;
    case Pentagram::P4: return Kind::Bipartite;
    case Pentagram::P2: return Kind::Tripartite;
    case Pentagram::P0: return Kind::Icosahedral;
  }
  return Kind::Hexagonal;
}

Kind planar_kind(const SixPoints& s) {
  const Pentagram first = segre_pentagram_planar(s, 0);
  for (int role = 1; role < 6; ++role)
    if (segre_pentagram_planar(s, role) != first)
      throw InconsistentPentagrams(
          "the six distinguished-point roles disagree");
  return kind_from_pentagram(first);
}

}  // namespace sixlines
