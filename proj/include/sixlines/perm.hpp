#pragma once

#include <string>
#include <vector>

#include "sixlines/errors.hpp"

namespace sixlines {

// Permutation of {1..n}, n in 3..6, stored as the image list σ(1),…,σ(n).
class Perm {
public:
  explicit Perm(std::vector<int> images);

  // Accepts compact digit strings ("123654") and space-separated forms
  // ("1 2 3 6 5 4"). Throws InvalidPermutation.
  static Perm parse(const std::string& text);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }  // 1-based
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  std::string str() const;  // compact digits

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;
};

Perm compose(const Perm& f, const Perm& g);  // (f∘g)(i) = f(g(i))

// All n! permutations of {1..n} in lexicographic order.
std::vector<Perm> all_perms(int n);

// ρ∘σ with ρ(i) = n+1-i; combinatorial mirror: negates the signature.
Perm mirror_perm(const Perm& sigma);

// Σ over i<j<k of (-1)^r, r = inversions in (σ(i),σ(j),σ(k)). Equals the
// geometric signature of the join configuration J(σ).
int comb_signature(const Perm& sigma);

// Two-sided cyclic-orbit canonical form and its coarse refinement
// (additionally minimized over mirror images of the orbit).
struct JoinClassToken {
  Perm canonical;
  Perm coarse_canonical;
};
JoinClassToken canonical_coarse(const Perm& sigma);

// Minimum over the full two-sided dihedral orbit {g1∘σ∘g2}. The quotient in
// which spindle readings are well-defined regardless of axis orientation.
Perm dihedral_canonical(const Perm& sigma);

// Join irreducibility: the permutation diagram of σ contains no side of the
// n-gon, i.e. σ(i+1) - σ(i) is never ±1 mod n (indices cyclic).
bool is_irreducible_join(const Perm& sigma);

}  // namespace sixlines
