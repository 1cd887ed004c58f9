#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "sixlines/joins.hpp"
#include "support.hpp"

using namespace sixlines;

namespace {

Perm P(const char* digits) { return Perm::parse(digits); }

// Inversion count of the values at one index triple, straight from the
// definition; kept separate from comb_signature as a reading check.
int inversions_of_triple(int a, int b, int c) {
  return (a > b) + (a > c) + (b > c);
}

}  // namespace

TEST_CASE("perm parsing accepts both forms and validates") {
  CHECK(P("123654") == Perm({1, 2, 3, 6, 5, 4}));
  CHECK(Perm::parse("1 2 3 6 5 4") == P("123654"));
  CHECK_THROWS_AS(Perm::parse("12"), InvalidPermutation);
  CHECK_THROWS_AS(Perm::parse("1234567"), InvalidPermutation);
  CHECK_THROWS_AS(Perm::parse("123455"), InvalidPermutation);
  CHECK_THROWS_AS(Perm::parse("12x4"), InvalidPermutation);
  CHECK_THROWS_AS(Perm::parse("137"), InvalidPermutation);
}

TEST_CASE("comb_signature reproduces the published 5-line signatures") {
  CHECK(comb_signature(P("12345")) == 10);
  CHECK(comb_signature(P("12354")) == 4);
  CHECK(comb_signature(P("13425")) == 2);
  CHECK(comb_signature(P("13524")) == 0);
  // (214365): 8 positive and 12 negative triples.
  CHECK(comb_signature(P("214365")) == -4);
  CHECK(comb_signature(P("123456")) == 20);
  CHECK(comb_signature(P("321")) == -1);
  CHECK(comb_signature(P("123")) == 1);
}

TEST_CASE("mirror_perm matches the paper's pairs and negates signatures") {
  CHECK(mirror_perm(P("123456")) == P("654321"));
  CHECK(mirror_perm(P("214365")) == P("563412"));
  for (int n : {4, 5, 6})
    for (const Perm& s : all_perms(n))
      CHECK(comb_signature(mirror_perm(s)) == -comb_signature(s));
}

TEST_CASE("achiral coarse classes: mirror stays in the same token") {
  // (123654) mirrors to (654123); they share a coarse canonical token.
  const Perm s = P("123654");
  CHECK(mirror_perm(s) == P("654123"));
  CHECK(canonical_coarse(s).coarse_canonical ==
        canonical_coarse(mirror_perm(s)).coarse_canonical);
}

TEST_CASE("canonical_coarse is idempotent and constant on orbits") {
  CHECK(canonical_coarse(P("234561")).canonical == P("123456"));
  CHECK(canonical_coarse(P("563412")).coarse_canonical ==
        canonical_coarse(P("214365")).coarse_canonical);
  CHECK(canonical_coarse(P("12345")).canonical ==
        canonical_coarse(P("23451")).canonical);

  for (const Perm& s : all_perms(5)) {
    const JoinClassToken t = canonical_coarse(s);
    CHECK(canonical_coarse(t.canonical).canonical == t.canonical);
    CHECK(canonical_coarse(t.coarse_canonical).coarse_canonical ==
          t.coarse_canonical);
  }

  // comb_signature is constant on every two-sided cyclic orbit.
  std::map<std::string, int> orbit_signature;
  for (const Perm& s : all_perms(6)) {
    const std::string key = canonical_coarse(s).canonical.str();
    const int sig = comb_signature(s);
    auto [it, inserted] = orbit_signature.emplace(key, sig);
    if (!inserted) CHECK(it->second == sig);
  }
}

TEST_CASE("builder contract: geometric linking equals the inversion rule") {
  // For all sigma in S_6 and all index pairs, lk(L_i, L_j) = +1 iff
  // sigma(i) < sigma(j); consequently every triple linking matches the
  // inversion parity.
  for (const Perm& sigma : all_perms(6)) {
    const Config c = build_join(sigma);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        const int lk = linking_index(c.line(i - 1), c.line(j - 1));
        CHECK(lk == ((sigma(i) < sigma(j)) ? +1 : -1));
      }
  }
}

TEST_CASE("triple linkings on join coordinates match (-1)^r exactly") {
  for (const char* digits : {"123456", "321654", "135264", "214365"}) {
    const Perm sigma = P(digits);
    const Config c = build_join(sigma);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) {
          const int r =
              inversions_of_triple(sigma(i), sigma(j), sigma(k));
          const int expected = (r % 2 == 0) ? 1 : -1;
          CHECK(triple_linking(c.plucker(i - 1), c.plucker(j - 1),
                               c.plucker(k - 1)) == expected);
        }
  }
}

TEST_CASE("small join examples from the construction") {
  // sigma = (123): all triple linkings +1; (321): -1.
  const Config c123 = build_join(P("123"));
  CHECK(triple_linking(c123.plucker(0), c123.plucker(1), c123.plucker(2)) ==
        1);
  const Config c321 = build_join(P("321"));
  CHECK(triple_linking(c321.plucker(0), c321.plucker(1), c321.plucker(2)) ==
        -1);
  // Identity on six lines: all 20 triples positive.
  const Config c6 = build_join(P("123456"));
  int total = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        total += triple_linking(c6.plucker(i), c6.plucker(j), c6.plucker(k));
  CHECK(total == 20);
}

TEST_CASE("join axes are negatively linked and meet every join line") {
  const auto [lp, lq] = join_axes();
  CHECK(linking_index(lp, lq) == -1);
  const Config c = build_join(P("142536"));
  for (int i = 0; i < 6; ++i) {
    CHECK(meets(lp.line(), c.plucker(i)));
    CHECK(meets(lq.line(), c.plucker(i)));
  }
}

TEST_CASE("irreducibility criterion") {
  CHECK(is_irreducible_join(P("135264")));
  CHECK(!is_irreducible_join(P("123456")));
  CHECK(!is_irreducible_join(P("123654")));
  // The wrap-around side {6,1} of the hexagon counts: in (163524) the only
  // polygon side is the value pair (1,6).
  CHECK(!is_irreducible_join(P("163524")));

  // The criterion is constant on two-sided cyclic orbits (it reads off a
  // property of the closed permutation diagram).
  std::map<std::string, bool> orbit_flag;
  for (const Perm& s : all_perms(6)) {
    const std::string key = canonical_coarse(s).coarse_canonical.str();
    auto [it, inserted] = orbit_flag.emplace(key, is_irreducible_join(s));
    if (!inserted) CHECK(it->second == is_irreducible_join(s));
  }

  // Exactly one coarse token over S_6 is irreducible and it holds (135264).
  std::set<std::string> irreducible_tokens;
  for (const Perm& s : all_perms(6))
    if (is_irreducible_join(s))
      irreducible_tokens.insert(canonical_coarse(s).coarse_canonical.str());
  CHECK(irreducible_tokens.size() == 1);
  CHECK(*irreducible_tokens.begin() ==
        canonical_coarse(P("135264")).coarse_canonical.str());
}

TEST_CASE("J(sigma) and J(sigma inverse) share combinatorial invariants") {
  for (const Perm& s : all_perms(6))
    CHECK(comb_signature(s.inverse()) == comb_signature(s));
}

TEST_CASE("config construction rejects meeting lines") {
  const auto [lp, lq] = join_axes();
  const Config c = build_join(P("1234"));
  std::vector<OrientedLine> bad = {c.line(0), c.line(1), lp};
  CHECK_THROWS_AS(Config{bad}, NotSkew);
}
