#pragma once

#include <vector>

#include "sixlines/perm.hpp"
#include "sixlines/projective.hpp"

namespace sixlines {

// An ordered configuration of pairwise-skew oriented lines. Skewness is
// checked on construction; the order of lines is part of the value but every
// class invariant computed from a Config is order-independent.
class Config {
public:
  explicit Config(std::vector<OrientedLine> lines);

  int size() const { return static_cast<int>(lines_.size()); }
  const OrientedLine& line(int i) const { return lines_[i]; }
  const PluckerLine& plucker(int i) const { return lines_[i].line(); }

  Config without(int i) const;
  Config without_pair(int i, int j) const;
  std::vector<PluckerLine> plucker_lines() const;

private:
  std::vector<OrientedLine> lines_;
};

// Config over unoriented lines: each line gets its deterministic extracted
// representatives. Safe for every invariant in this library, all of which
// are orientation-free.
Config config_from_lines(const std::vector<PluckerLine>& lines);

// The join configuration J(σ): axes L^p = span(e1,e2) and L^q = span(e4,e3)
// linked negatively, marked points at consecutive integer parameters, and
// line i joining p_i to q_{σ(i)}, oriented from p_i to q_{σ(i)}. Satisfies
// lk(L_i, L_j) = +1 iff σ(i) < σ(j).
Config build_join(const Perm& sigma);

// The two axes used by build_join, oriented as in the construction.
std::pair<OrientedLine, OrientedLine> join_axes();

}  // namespace sixlines
