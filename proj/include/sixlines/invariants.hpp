#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sixlines/joins.hpp"

namespace sixlines {

// n+ - n- over all 3-subsets of the configuration.
int signature(const Config& c);

// Image under the fixed orientation-reversing map negating the last
// coordinate of every representative. Negates the signature.
Config mirror_config(const Config& c);

// Multiset of signatures of the (n-1)-subconfigurations, stored sorted.
struct SignatureSpectrum {
  std::vector<int> values;  // ascending

  bool operator==(const SignatureSpectrum& o) const {
    return values == o.values;
  }
  SignatureSpectrum negated() const;
  std::vector<int> coarse() const;  // sorted absolute values
};

SignatureSpectrum signature_spectrum(const Config& c);

// Coarse 5-line class token; the absolute signature is a complete invariant
// of coarse five-line deformation classes.
enum class Pentagram { P0, P2, P4, P10 };

int pentagram_abs_signature(Pentagram p);
const char* pentagram_name(Pentagram p);
Pentagram pentagram_from_abs(int abs_signature);  // throws UnknownSpectrum

std::vector<Pentagram> pentagram_spectrum(const Config& c);  // sorted

// Graph on the six lines joining {i,j} when the 4-line subconfiguration
// omitting them is chiral (|signature| = 4).
struct ChiralityGraph {
  std::set<std::pair<int, int>> edges;  // 0-based pairs i < j

  int degree(int v) const;
  bool is_regular() const;
};

ChiralityGraph chirality_graph(const Config& c);

// All six 5-line subconfigurations lie in one coarse deformation class.
bool is_homogeneous(const Config& c);

// Product of the four triple linkings over every 4-subset equals +1.
bool cocycle_check(const Config& c);

// Z/2 chains of triangles of the 5-simplex on the six lines.
struct TripleChain {
  std::set<std::array<int, 3>> triples;  // 0-based, each sorted ascending
};

struct TripleChains {
  TripleChain positive, negative;
  bool positive_is_cycle = false;
  bool negative_is_cycle = false;
};

TripleChains triple_chains(const Config& c);

// True when the chain triangulates a real projective plane: 10 triangles,
// every edge in exactly two of them, all 6 vertices and 15 edges used,
// connected, V - E + F = 1.
bool rp2_check(const TripleChain& ch);

// -----------------------------------------------------------------------
// Deformation-class identification

struct ClassId {
  std::string coarse;  // "J(123456)", "M", "L"
  enum class Chirality { Chiral, Achiral };
  Chirality chirality = Chirality::Chiral;
  bool chirality_stored = false;  // true: imported classification fact
  enum class Orientation { Plus, Minus, Unresolved };
  Orientation orientation = Orientation::Unresolved;

  std::string str() const;
};

struct CandidateSet {
  std::vector<std::string> candidates;  // coarse class names
};

using Classification = std::variant<ClassId, CandidateSet>;

// One coarse deformation class of six skew lines.
struct ClassRow {
  std::string name;          // "J(123456)", "M", "L"
  std::optional<Perm> rep;   // representative permutation for join classes
  std::vector<int> spectrum; // sorted signed spectrum of the + branch
  std::vector<int> coarse_spectrum;
  int signature = 0;
  bool homogeneous = false;
  bool achiral = false;
  bool achiral_stored = false;     // achirality taken from the classification
  bool spectrum_stored = false;    // spectrum imported rather than computed
  bool irreducible = false;
  bool irreducible_stored = false;
  std::string source_note;         // citation for stored fields
};

// The eleven coarse classes of six-line configurations: nine join classes
// with published representatives plus the two non-join classes M and L.
// Join data is recomputed from the representatives on first use.
const std::vector<ClassRow>& coarse_class_table();

// Identify the coarse deformation class of a six-line configuration from its
// signature spectrum, with chirality resolved by comparing the spectrum to
// its negation and falling back to stored achirality facts. Collisions give
// a CandidateSet. Throws UnknownSpectrum when nothing matches.
Classification identify_class(const Config& c);

}  // namespace sixlines
