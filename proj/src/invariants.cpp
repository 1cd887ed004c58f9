#include "sixlines/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sixlines {

int signature(const Config& c) {
  const int n = c.size();
  int total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        total += triple_linking(c.plucker(i), c.plucker(j), c.plucker(k));
  return total;
}

Config mirror_config(const Config& c) {
  std::vector<OrientedLine> lines;
  lines.reserve(c.size());
  for (int i = 0; i < c.size(); ++i) {
    const OrientedLine& l = c.line(i);
    auto flip = [](const HomPoint3& p) {
      return HomPoint3(p[0], p[1], p[2], -p[3]);
    };
    lines.emplace_back(flip(l.a()), flip(l.b()));
  }
  return Config(std::move(lines));
}

SignatureSpectrum SignatureSpectrum::negated() const {
  SignatureSpectrum out;
  out.values.reserve(values.size());
  for (int v : values) out.values.push_back(-v);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::vector<int> SignatureSpectrum::coarse() const {
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : values) out.push_back(v < 0 ? -v : v);
  std::sort(out.begin(), out.end());
  return out;
}

SignatureSpectrum signature_spectrum(const Config& c) {
  if (c.size() != 6)
    throw DegenerateInput("signature spectrum requires six lines");
  SignatureSpectrum s;
  for (int i = 0; i < 6; ++i) s.values.push_back(signature(c.without(i)));
  std::sort(s.values.begin(), s.values.end());
  return s;
}

int pentagram_abs_signature(Pentagram p) {
  switch (p) {
    case Pentagram::P0: return 0;
    case Pentagram::P2: return 2;
    case Pentagram::P4: return 4;
    case Pentagram::P10: return 10;
  }
  return 0;
}

const char* pentagram_name(Pentagram p) {
  switch (p) {
    case Pentagram::P0: return "P0";
    case Pentagram::P2: return "P2";
    case Pentagram::P4: return "P4";
    case Pentagram::P10: return "P10";
  }
  return "?";
}

Pentagram pentagram_from_abs(int abs_signature) {
  switch (abs_signature) {
    case 0: return Pentagram::P0;
    case 2: return Pentagram::P2;
    case 4: return Pentagram::P4;
    case 10: return Pentagram::P10;
  }
  throw UnknownSpectrum("no five-line class has |signature| = " +
                        std::to_string(abs_signature));
}

std::vector<Pentagram> pentagram_spectrum(const Config& c) {
  std::vector<Pentagram> out;
  for (int v : signature_spectrum(c).coarse())
    out.push_back(pentagram_from_abs(v));
  return out;
}

int ChiralityGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.first == v || e.second == v) ++d;
  return d;
}

bool ChiralityGraph::is_regular() const {
  const int d = degree(0);
  for (int v = 1; v < 6; ++v)
    if (degree(v) != d) return false;
  return true;
}

ChiralityGraph chirality_graph(const Config& c) {
  if (c.size() != 6)
    throw DegenerateInput("chirality graph requires six lines");
  ChiralityGraph g;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const int s = signature(c.without_pair(i, j));
      if (s == 4 || s == -4) g.edges.insert({i, j});
    }
  return g;
}

bool is_homogeneous(const Config& c) {
  const std::vector<int> coarse = signature_spectrum(c).coarse();
  for (int v : coarse)
    if (v != coarse[0]) return false;
  return true;
}

bool cocycle_check(const Config& c) {
  const int n = c.size();
  if (n < 4) throw DegenerateInput("cocycle check requires at least 4 lines");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = k + 1; m < n; ++m) {
          const int product =
              triple_linking(c.plucker(i), c.plucker(j), c.plucker(k)) *
              triple_linking(c.plucker(i), c.plucker(j), c.plucker(m)) *
              triple_linking(c.plucker(i), c.plucker(k), c.plucker(m)) *
              triple_linking(c.plucker(j), c.plucker(k), c.plucker(m));
          if (product != 1) return false;
        }
  return true;
}

namespace {

// Z/2 boundary vanishes: every edge lies in an even number of triangles.
bool chain_is_cycle(const TripleChain& ch) {
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : ch.triples) {
    edge_count[{t[0], t[1]}] ^= 1;
    edge_count[{t[0], t[2]}] ^= 1;
    edge_count[{t[1], t[2]}] ^= 1;
  }
  for (const auto& [edge, parity] : edge_count)
    if (parity != 0) return false;
  return true;
}

}  // namespace

TripleChains triple_chains(const Config& c) {
  if (c.size() != 6)
    throw DegenerateInput("triple chains require six lines");
  TripleChains out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        const int lk =
            triple_linking(c.plucker(i), c.plucker(j), c.plucker(k));
        if (lk > 0)
          out.positive.triples.insert({i, j, k});
        else
          out.negative.triples.insert({i, j, k});
      }
  out.positive_is_cycle = chain_is_cycle(out.positive);
  out.negative_is_cycle = chain_is_cycle(out.negative);
  return out;
}

bool rp2_check(const TripleChain& ch) {
  if (ch.triples.size() != 10) return false;
  std::map<std::pair<int, int>, int> edge_count;
  std::set<int> vertices;
  for (const auto& t : ch.triples) {
    edge_count[{t[0], t[1]}] += 1;
    edge_count[{t[0], t[2]}] += 1;
    edge_count[{t[1], t[2]}] += 1;
    vertices.insert(t.begin(), t.end());
  }
  if (vertices.size() != 6) return false;
  if (edge_count.size() != 15) return false;
  for (const auto& [edge, count] : edge_count)
    if (count != 2) return false;

  // Connectivity of the triangle adjacency (shared-edge) graph.
  const std::vector<std::array<int, 3>> tris(ch.triples.begin(),
                                             ch.triples.end());
  std::vector<int> parent(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) parent[i] = int(i);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto shares_edge = [](const std::array<int, 3>& a,
                        const std::array<int, 3>& b) {
    int common = 0;
    for (int x : a)
      for (int y : b)
        if (x == y) ++common;
    return common == 2;
  };
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (std::size_t j = i + 1; j < tris.size(); ++j)
      if (shares_edge(tris[i], tris[j])) parent[find(int(i))] = find(int(j));
  for (std::size_t i = 0; i < tris.size(); ++i)
    if (find(int(i)) != find(0)) return false;

  const int euler = int(vertices.size()) - int(edge_count.size()) +
                    int(ch.triples.size());
  return euler == 1;
}

// -----------------------------------------------------------------------
// Class table and identification

namespace {

// Combinatorial spectrum of J(sigma): deleting line i leaves the join of the
// rank pattern of sigma with index i removed.
std::vector<int> comb_spectrum(const Perm& sigma) {
  const int n = sigma.n();
  std::vector<int> spectrum;
  for (int omit = 1; omit <= n; ++omit) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (i != omit) rest.push_back(sigma(i));
    std::vector<int> ranks(rest.size());
    for (std::size_t a = 0; a < rest.size(); ++a) {
      int rank = 1;
      for (std::size_t b = 0; b < rest.size(); ++b)
        if (rest[b] < rest[a]) ++rank;
      ranks[a] = rank;
    }
    spectrum.push_back(comb_signature(Perm(ranks)));
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

bool spectrum_symmetric(const std::vector<int>& s) {
  std::vector<int> neg;
  neg.reserve(s.size());
  for (int v : s) neg.push_back(-v);
  std::sort(neg.begin(), neg.end());
  return neg == s;
}

std::vector<ClassRow> build_table() {
  // Representatives and achirality from the deformation classification of
  // six skew lines (Mazurovskii; Viro for the subconfiguration level).
  struct Seed {
    const char* digits;
    bool achiral;
  };
  const Seed join_seeds[] = {
      {"123456", false}, {"214365", false}, {"123465", false},
      {"123564", false}, {"124365", false}, {"215364", false},
      {"123654", true},  {"135264", true},  {"124653", true},
  };

  std::vector<ClassRow> rows;
  for (const Seed& seed : join_seeds) {
    const Perm rep = Perm::parse(seed.digits);
    ClassRow row;
    row.name = std::string("J(") + seed.digits + ")";
    row.rep = rep;
    row.spectrum = comb_spectrum(rep);
    SignatureSpectrum s;
    s.values = row.spectrum;
    row.coarse_spectrum = s.coarse();
    row.signature = comb_signature(rep);
    row.homogeneous =
        std::all_of(row.coarse_spectrum.begin(), row.coarse_spectrum.end(),
                    [&](int v) { return v == row.coarse_spectrum[0]; });
    row.achiral = seed.achiral;
    row.achiral_stored = seed.achiral;  // achirality is an imported fact
    row.irreducible = is_irreducible_join(rep);
    row.irreducible_stored = false;
    if (seed.achiral)
      row.source_note = "achirality stored: Mazurovskii classification";
    rows.push_back(std::move(row));
  }

  // The two non-join coarse classes. Their invariant data is imported:
  // M has the all-zero spectrum; L shares the spectrum of J(214365).
  ClassRow m;
  m.name = "M";
  m.spectrum = std::vector<int>(6, 0);
  m.coarse_spectrum = m.spectrum;
  m.signature = 0;
  m.homogeneous = true;
  m.achiral = false;
  m.achiral_stored = true;
  m.spectrum_stored = true;
  m.irreducible = true;
  m.irreducible_stored = true;
  m.source_note =
      "spectrum, chirality, irreducibility stored: Mazurovskii classification";
  rows.push_back(std::move(m));

  ClassRow l;
  l.name = "L";
  for (const ClassRow& row : rows)
    if (row.name == "J(214365)") {
      l.spectrum = row.spectrum;
      l.coarse_spectrum = row.coarse_spectrum;
      l.signature = row.signature;
    }
  l.homogeneous = true;
  l.achiral = false;
  l.achiral_stored = true;
  l.spectrum_stored = true;
  l.irreducible = true;
  l.irreducible_stored = true;
  l.source_note =
      "spectrum shared with J(214365); chirality, irreducibility stored: "
      "Mazurovskii classification";
  rows.push_back(std::move(l));

  return rows;
}

}  // namespace

const std::vector<ClassRow>& coarse_class_table() {
  static const std::vector<ClassRow> table = build_table();
  return table;
}

std::string ClassId::str() const {
  std::string s = coarse;
  switch (orientation) {
    case Orientation::Plus: s += "+"; break;
    case Orientation::Minus: s += "-"; break;
    case Orientation::Unresolved: break;
  }
  return s;
}

Classification identify_class(const Config& c) {
  if (c.size() != 6)
    throw DegenerateInput("class identification requires six lines");
  const SignatureSpectrum spec = signature_spectrum(c);
  const std::vector<int>& s = spec.values;
  const std::vector<int> neg = spec.negated().values;

  std::vector<ClassId> matches;
  for (const ClassRow& row : coarse_class_table()) {
    const bool plus = (s == row.spectrum);
    const bool minus = (neg == row.spectrum);
    if (!plus && !minus) continue;
    ClassId id;
    id.coarse = row.name;
    if (row.achiral) {
      id.chirality = ClassId::Chirality::Achiral;
      id.chirality_stored = row.achiral_stored;
      id.orientation = ClassId::Orientation::Unresolved;
    } else {
      id.chirality = ClassId::Chirality::Chiral;
      // A spectrum different from its negation certifies chirality on its
      // own; otherwise the chirality flag is the stored fact.
      id.chirality_stored = spectrum_symmetric(row.spectrum);
      if (plus && minus)
        id.orientation = ClassId::Orientation::Unresolved;
      else
        id.orientation = plus ? ClassId::Orientation::Plus
                              : ClassId::Orientation::Minus;
    }
    matches.push_back(std::move(id));
  }

  if (matches.empty())
    throw UnknownSpectrum("signature spectrum matches no deformation class");
  if (matches.size() == 1) return matches[0];
  CandidateSet set;
  for (const auto& id : matches) set.candidates.push_back(id.coarse);
  return set;
}

}  // namespace sixlines
