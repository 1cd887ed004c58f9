#pragma once

// Shared helpers for the test suites: independent small oracles and a
// deterministic generator of random exact line configurations.

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "sixlines/joins.hpp"
#include "sixlines/projective.hpp"

namespace sixlines::testing {

// Naive 4x4 determinant by cofactor expansion; independent of the Plücker
// pairing path it cross-checks.
inline FieldElement det4(const std::array<std::array<FieldElement, 4>, 4>& m) {
  auto det3 = [](const FieldElement& a, const FieldElement& b,
                 const FieldElement& c, const FieldElement& d,
                 const FieldElement& e, const FieldElement& f,
                 const FieldElement& g, const FieldElement& h,
                 const FieldElement& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  };
  FieldElement acc = FieldElement(Rational(0));
  for (int col = 0; col < 4; ++col) {
    std::array<FieldElement, 9> sub;
    int k = 0;
    for (int r = 1; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (c != col) sub[k++] = m[r][c];
    FieldElement minor = det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5],
                              sub[6], sub[7], sub[8]);
    FieldElement term = m[0][col] * minor;
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline FieldElement det4_points(const HomPoint3& a, const HomPoint3& b,
                                const HomPoint3& c, const HomPoint3& d) {
  std::array<std::array<FieldElement, 4>, 4> m;
  for (int i = 0; i < 4; ++i) {
    m[0][i] = a[i];
    m[1][i] = b[i];
    m[2][i] = c[i];
    m[3][i] = d[i];
  }
  return det4(m);
}

class RandomConfigGen {
public:
  explicit RandomConfigGen(std::uint64_t seed) : rng_(seed) {}

  HomPoint3 point() {
    std::uniform_int_distribution<long> coord(-9, 9);
    while (true) {
      std::array<long, 4> v = {coord(rng_), coord(rng_), coord(rng_),
                               coord(rng_)};
      if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) continue;
      return HomPoint3(FieldElement(Rational(v[0])),
                       FieldElement(Rational(v[1])),
                       FieldElement(Rational(v[2])),
                       FieldElement(Rational(v[3])));
    }
  }

  OrientedLine line() {
    while (true) {
      HomPoint3 a = point();
      HomPoint3 b = point();
      if (projectively_equal(a, b)) continue;
      return OrientedLine(std::move(a), std::move(b));
    }
  }

  // n pairwise-skew random rational lines.
  Config skew_config(int n) {
    while (true) {
      std::vector<OrientedLine> lines;
      bool ok = true;
      while (static_cast<int>(lines.size()) < n) {
        OrientedLine cand = line();
        bool skew_to_all = true;
        for (const auto& l : lines)
          if (meets(l.line(), cand.line())) skew_to_all = false;
        if (skew_to_all)
          lines.push_back(std::move(cand));
        else if (++rejects_ > 10000) {
          ok = false;
          break;
        }
      }
      if (ok) return Config(std::move(lines));
      rejects_ = 0;
    }
  }

private:
  std::mt19937_64 rng_;
  int rejects_ = 0;
};

}  // namespace sixlines::testing
