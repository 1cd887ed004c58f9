#include "sixlines/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

namespace sixlines {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  if (n < 3 || n > 6)
    throw InvalidPermutation("permutation length must be between 3 and 6, got " +
                             std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v - 1])
      throw InvalidPermutation("images are not a bijection of 1.." +
                               std::to_string(n));
    seen[v - 1] = true;
  }
}

Perm Perm::parse(const std::string& text) {
  std::vector<int> img;
  bool spaced = text.find_first_of(" \t") != std::string::npos;
  if (spaced) {
    std::string token;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        token += text[i];
        continue;
      }
      if (token.empty()) continue;
      if (token.size() != 1 || !std::isdigit(static_cast<unsigned char>(token[0])))
        throw InvalidPermutation("bad permutation token '" + token + "'");
      img.push_back(token[0] - '0');
      token.clear();
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidPermutation(std::string("bad permutation character '") +
                                 c + "'");
      img.push_back(c - '0');
    }
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= n(); ++i) inv[img_[i - 1] - 1] = i;
  return Perm(std::move(inv));
}

std::string Perm::str() const {
  std::string s;
  for (int v : img_) s += static_cast<char>('0' + v);
  return s;
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.n() != g.n())
    throw InvalidPermutation("composing permutations of different degree");
  std::vector<int> img(f.n());
  for (int i = 1; i <= f.n(); ++i) img[i - 1] = f(g(i));
  return Perm(std::move(img));
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(base));
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

Perm mirror_perm(const Perm& sigma) {
  const int n = sigma.n();
  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - sigma(i);
  return Perm(std::move(img));
}

int comb_signature(const Perm& sigma) {
  const int n = sigma.n();
  int total = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        int inv = 0;
        if (sigma(i) > sigma(j)) ++inv;
        if (sigma(i) > sigma(k)) ++inv;
        if (sigma(j) > sigma(k)) ++inv;
        total += (inv % 2 == 0) ? +1 : -1;
      }
  return total;
}

namespace {

// Cyclic shift permutations c_k(i) = ((i - 1 + k) mod n) + 1.
std::vector<Perm> cyclic_group(int n) {
  std::vector<Perm> out;
  for (int k = 0; k < n; ++k) {
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = ((i - 1 + k) % n) + 1;
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

// Full dihedral group on the n-gon vertex labels: rotations and reflections
// i ↦ (k - i) mod n.
std::vector<Perm> dihedral_group(int n) {
  std::vector<Perm> out = cyclic_group(n);
  for (int k = 0; k < n; ++k) {
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
      int v = (k - i) % n;
      if (v < 0) v += n;
      img[i - 1] = v + 1;
    }
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

Perm orbit_minimum(const Perm& sigma, const std::vector<Perm>& left,
                   const std::vector<Perm>& right, bool include_mirror) {
  std::optional<Perm> best;
  for (const Perm& l : left)
    for (const Perm& r : right) {
      Perm cand = compose(l, compose(sigma, r));
      if (!best || cand < *best) best = cand;
      if (include_mirror) {
        Perm mirrored = mirror_perm(cand);
        if (mirrored < *best) best = mirrored;
      }
    }
  return *best;
}

}  // namespace

JoinClassToken canonical_coarse(const Perm& sigma) {
  const auto c = cyclic_group(sigma.n());
  JoinClassToken token{orbit_minimum(sigma, c, c, false),
                       orbit_minimum(sigma, c, c, true)};
  return token;
}

Perm dihedral_canonical(const Perm& sigma) {
  const auto d = dihedral_group(sigma.n());
  return orbit_minimum(sigma, d, d, false);
}

bool is_irreducible_join(const Perm& sigma) {
  const int n = sigma.n();
  for (int i = 1; i <= n; ++i) {
    const int a = sigma(i);
    const int b = sigma(i == n ? 1 : i + 1);
    int diff = (a - b) % n;
    if (diff < 0) diff += n;
    if (diff == 1 || diff == n - 1) return false;  // a side of the n-gon
  }
  return true;
}

}  // namespace sixlines
