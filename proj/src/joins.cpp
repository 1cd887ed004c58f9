#include "sixlines/joins.hpp"

namespace sixlines {

Config::Config(std::vector<OrientedLine> lines) : lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i)
    for (std::size_t j = i + 1; j < lines_.size(); ++j)
      if (meets(lines_[i].line(), lines_[j].line()))
        throw NotSkew("configuration lines " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " meet");
}

Config Config::without(int i) const {
  std::vector<OrientedLine> rest;
  for (int k = 0; k < size(); ++k)
    if (k != i) rest.push_back(lines_[k]);
  return Config(std::move(rest));
}

Config Config::without_pair(int i, int j) const {
  std::vector<OrientedLine> rest;
  for (int k = 0; k < size(); ++k)
    if (k != i && k != j) rest.push_back(lines_[k]);
  return Config(std::move(rest));
}

std::vector<PluckerLine> Config::plucker_lines() const {
  std::vector<PluckerLine> out;
  out.reserve(lines_.size());
  for (const auto& l : lines_) out.push_back(l.line());
  return out;
}

Config config_from_lines(const std::vector<PluckerLine>& lines) {
  std::vector<OrientedLine> oriented;
  oriented.reserve(lines.size());
  for (const auto& l : lines) {
    auto pts = l.two_points();
    oriented.emplace_back(std::move(pts.first), std::move(pts.second));
  }
  return Config(std::move(oriented));
}

namespace {

HomPoint3 basis_point(int axis_index, long parameter) {
  // p_i = e1 + i*e2 on L^p; q_j = e4 + j*e3 on L^q.
  const FieldElement zero(Rational(0)), one(Rational(1));
  const FieldElement t{Rational(parameter)};
  if (axis_index == 0) return HomPoint3(one, t, zero, zero);
  return HomPoint3(zero, zero, t, one);
}

}  // namespace

std::pair<OrientedLine, OrientedLine> join_axes() {
  const FieldElement zero(Rational(0)), one(Rational(1));
  OrientedLine lp(HomPoint3(one, zero, zero, zero),
                  HomPoint3(zero, one, zero, zero));
  OrientedLine lq(HomPoint3(zero, zero, zero, one),
                  HomPoint3(zero, zero, one, zero));
  return {std::move(lp), std::move(lq)};
}

Config build_join(const Perm& sigma) {
  std::vector<OrientedLine> lines;
  for (int i = 1; i <= sigma.n(); ++i)
    lines.emplace_back(basis_point(0, i), basis_point(1, sigma(i)));
  return Config(std::move(lines));
}

}  // namespace sixlines
