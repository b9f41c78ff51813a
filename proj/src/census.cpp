#include "twograph/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "twograph/decks.hpp"
#include "twograph/io.hpp"
#include "twograph/measures.hpp"
#include "twograph/spectral.hpp"
#include "twograph/subsets.hpp"

namespace twograph {

namespace {

// Labeled graph whose upper-triangle pairs (0,1),(0,2),...,(1,2),... are the
// bits of code, low bit first.
Graph graph_from_code(int n, std::uint64_t code) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1U) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
}

struct Candidate {
  Graph graph;  // canonical form
  std::uint64_t count = 0;
};

using CandidateMap = std::map<std::vector<std::uint8_t>, Candidate>;

// Canonical forms of all labeled graphs on n vertices, with multiplicities.
CandidateMap labeled_census(int n, int threads) {
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::vector<CandidateMap> parts(static_cast<std::size_t>(chunk_count(total)));
  parallel_chunks(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    CandidateMap& local = parts[static_cast<std::size_t>(chunk)];
    for (std::uint64_t code = begin; code < end; ++code) {
      CanonicalLabeling lab = canonical_labeling(graph_from_code(n, code));
      auto [it, inserted] = local.try_emplace(encode_upper_triangle(lab.graph));
      if (inserted) it->second.graph = lab.graph;
      ++it->second.count;
    }
  });
  CandidateMap merged;
  for (CandidateMap& part : parts) {
    for (auto& [key, cand] : part) {
      auto [it, inserted] = merged.try_emplace(key, cand);
      if (!inserted) it->second.count += cand.count;
    }
  }
  return merged;
}

void check_range(const char* what, int n, int lo, int hi, const char* why) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " outside " + std::to_string(lo) +
                            ".." + std::to_string(hi) + " (" + why + ")");
  }
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length certificate hex");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  }
  return out;
}

using DeckKey = std::vector<std::pair<ClassCertificate, int>>;

DeckKey deck_key(const Graph& g) {
  DeckKey key;
  for (const CardGroup& c : deck_switching_types(g)) key.emplace_back(c.certificate, c.multiplicity);
  return key;
}

ProfileVerdict compare_profiles(const std::vector<std::vector<double>>& profiles) {
  ProfileVerdict v;
  v.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < profiles.size(); ++a) {
    for (std::size_t b = a + 1; b < profiles.size(); ++b) {
      double gap = 0.0;
      for (std::size_t i = 0; i < profiles[a].size(); ++i) {
        gap = std::max(gap, std::abs(profiles[a][i] - profiles[b][i]));
      }
      const ClassPair pair{static_cast<int>(a), static_cast<int>(b), gap};
      if (gap <= 1e-6) {
        v.holds = false;
        v.collisions.push_back(pair);
      }
      if (gap < v.min_separation) {
        v.min_separation = gap;
        v.closest = pair;
      }
    }
  }
  if (profiles.size() < 2) v.min_separation = 0.0;
  return v;
}

}  // namespace

std::uint64_t count_isomorphism_classes(int n, int threads) {
  check_range("count_isomorphism_classes", n, 1, kMaxIsoCensus,
              "exhaustive over 2^C(n,2) labeled graphs; n = 8 would need 2^28 canonical forms");
  return labeled_census(n, threads).size();
}

std::vector<Graph> isomorphism_class_representatives(int n, int threads) {
  check_range("isomorphism_class_representatives", n, 1, kMaxClassCensus, "cost cap");
  if (n == 1) return {Graph(1)};
  const std::vector<Graph> smaller = isomorphism_class_representatives(n - 1, threads);
  const std::uint64_t neighbourhoods = std::uint64_t{1} << (n - 1);
  std::vector<std::map<std::vector<std::uint8_t>, Graph>> parts(static_cast<std::size_t>(chunk_count(smaller.size())));
  parallel_chunks(smaller.size(), threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    auto& local = parts[static_cast<std::size_t>(chunk)];
    for (std::uint64_t i = begin; i < end; ++i) {
      const Graph& h = smaller[i];
      for (std::uint64_t nb = 0; nb < neighbourhoods; ++nb) {
        std::array<std::uint64_t, kMaxVertices> rows{};
        for (int v = 0; v < n - 1; ++v) {
          rows[static_cast<std::size_t>(v)] = h.row(v);
          if ((nb >> v) & 1U) {
            rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (n - 1);
            rows[static_cast<std::size_t>(n - 1)] |= std::uint64_t{1} << v;
          }
        }
        const Graph g = Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
        const CanonicalLabeling lab = canonical_labeling(g);
        local.try_emplace(encode_upper_triangle(lab.graph), lab.graph);
      }
    }
  });
  std::map<std::vector<std::uint8_t>, Graph> merged;
  for (auto& part : parts) merged.insert(part.begin(), part.end());
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto& [key, g] : merged) out.push_back(g);
  return out;
}

std::uint64_t switching_class_count(int n) {
  if (n < 1) throw std::out_of_range("switching_class_count needs n >= 1");
  const long long e = static_cast<long long>(n - 1) * (n - 2) / 2;
  if (e > 63) throw std::overflow_error("2^" + std::to_string(e) + " does not fit in 64 bits");
  return std::uint64_t{1} << e;
}

int ClassTable::find(const Graph& g) const {
  if (g.order() != n) return -1;
  const ClassCertificate cert = class_certificate(g);
  auto it = std::lower_bound(classes.begin(), classes.end(), cert,
                             [](const ClassEntry& e, const ClassCertificate& c) { return e.certificate < c; });
  if (it == classes.end() || it->certificate != cert) return -1;
  return static_cast<int>(it - classes.begin());
}

ClassTable enumerate_class_representatives(int n, int threads) {
  check_range("enumerate_class_representatives", n, 3, kMaxClassCensus,
              "candidates are the 2^C(n-1,2) labeled graphs on n-1 vertices");
  const CandidateMap candidates = labeled_census(n - 1, threads);
  std::vector<const CandidateMap::value_type*> items;
  items.reserve(candidates.size());
  for (const auto& item : candidates) items.push_back(&item);

  std::vector<ClassCertificate> certs(items.size());
  parallel_chunks(items.size(), threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) certs[i] = class_certificate(add_isolated_vertex(items[i]->second.graph));
  });

  // candidates iterate in canonical-form order, so the first one seen is the
  // representative regardless of scheduling
  std::map<ClassCertificate, ClassEntry> classes;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, inserted] = classes.try_emplace(certs[i]);
    if (inserted) {
      it->second.certificate = certs[i];
      it->second.representative = add_isolated_vertex(items[i]->second.graph);
    }
    it->second.found += items[i]->second.count;
  }

  ClassTable table;
  table.n = n;
  for (auto& [cert, entry] : classes) table.classes.push_back(std::move(entry));
  table.iso_classes = isomorphism_class_representatives(n, threads).size();
  table.switching_classes = switching_class_count(n);
  return table;
}

void write_class_table(const ClassTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# n=" << table.n << " iso_classes=" << table.iso_classes << " switching_classes=" << table.switching_classes
      << " switching_equivalence_classes=" << table.classes.size() << "\n";
  out << "certificate\trepresentative\tfound\n";
  for (const ClassEntry& e : table.classes) {
    out << e.certificate.hex() << '\t' << format_graph_literal(e.representative) << '\t' << e.found << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ClassTable read_class_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  ClassTable table;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# n=", 0) != 0) {
    throw std::runtime_error(path.string() + ": missing census header");
  }
  {
    std::istringstream hs(line.substr(2));
    std::string field;
    while (hs >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (key == "n") table.n = std::stoi(value);
      if (key == "iso_classes") table.iso_classes = std::stoull(value);
      if (key == "switching_classes") table.switching_classes = std::stoull(value);
    }
  }
  std::getline(in, line);  // column names
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string hex;
    std::string literal;
    std::string found;
    if (!std::getline(ls, hex, '\t') || !std::getline(ls, literal, '\t') || !std::getline(ls, found)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected three tab-separated fields");
    }
    ClassEntry e;
    e.certificate = {CertificateKind::switching_equivalence, from_hex(hex)};
    e.representative = parse_graph_literal(literal);
    e.found = std::stoull(found);
    if (class_certificate(e.representative) != e.certificate) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": representative does not match its certificate");
    }
    table.classes.push_back(std::move(e));
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const ClassEntry& a, const ClassEntry& b) { return a.certificate < b.certificate; });
  return table;
}

ClassTable load_or_enumerate(int n, const std::filesystem::path& dir, int threads) {
  if (!dir.empty()) {
    const auto path = dir / ("census_" + std::to_string(n) + ".tsv");
    if (std::filesystem::exists(path)) {
      ClassTable t = read_class_table(path);
      if (t.n == n && !t.classes.empty()) return t;
    }
    ClassTable t = enumerate_class_representatives(n, threads);
    std::filesystem::create_directories(dir);
    write_class_table(t, path);
    return t;
  }
  return enumerate_class_representatives(n, threads);
}

std::uint64_t count_euler_isomorphism_classes(int n, int threads) {
  std::uint64_t count = 0;
  for (const Graph& g : isomorphism_class_representatives(n, threads)) {
    if (is_euler(g)) ++count;
  }
  return count;
}

std::vector<std::vector<int>> verify_spectral_determination(const ClassTable& table, double tol) {
  std::vector<Spectrum> spectra;
  spectra.reserve(table.classes.size());
  for (const ClassEntry& e : table.classes) spectra.push_back(seidel_spectrum(e.representative, tol));
  // union-find over all pairs; sorting by raw values would let rounding noise
  // interleave unrelated spectra
  std::vector<std::size_t> parent(spectra.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < spectra.size(); ++a) {
    for (std::size_t b = a + 1; b < spectra.size(); ++b) {
      if (spectra[a].approx_equal(spectra[b])) parent[root(b)] = root(a);
    }
  }
  std::map<std::size_t, std::vector<int>> by_root;
  for (std::size_t i = 0; i < spectra.size(); ++i) by_root[root(i)].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> groups;
  for (auto& [r, members] : by_root) {
    if (members.size() >= 2) groups.push_back(std::move(members));
  }
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  std::sort(groups.begin(), groups.end());
  return groups;
}

ProfileVerdict verify_infinity_norm_separation(const ClassTable& table, int threads) {
  std::vector<std::vector<double>> profiles;
  for (const ClassEntry& e : table.classes) {
    std::vector<double> p;
    for (int m = 3; m <= table.n; ++m) p.push_back(e_infinity(e.representative, m, threads));
    profiles.push_back(std::move(p));
  }
  return compare_profiles(profiles);
}

ProfileVerdict verify_one_norm_conjecture(const ClassTable& table, int threads) {
  std::vector<std::vector<double>> profiles;
  for (const ClassEntry& e : table.classes) profiles.push_back(norm_profile(e.representative, NormSpec::one(), threads).values);
  return compare_profiles(profiles);
}

DeckVerdict verify_deck_conjecture(const ClassTable& table, int samples_per_class, std::uint64_t seed, int threads) {
  check_range("verify_deck_conjecture", table.n, 4, kMaxClassCensus, "decks of switching classes need n >= 4");
  const std::size_t count = table.classes.size();
  std::vector<DeckKey> keys(count);
  std::vector<char> stable(count, 1);
  parallel_chunks(count, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Graph& rep = table.classes[i].representative;
      keys[i] = deck_key(rep);
      std::mt19937_64 rng(seed ^ (i * 0x9e3779b97f4a7c15ULL));
      std::vector<int> perm(static_cast<std::size_t>(table.n));
      for (int s = 0; s < samples_per_class; ++s) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const SwitchingSet t(rng() & VertexSet::full(table.n).bits());
        const Graph member = relabel(switch_graph(rep, t), perm);
        if (deck_key(member) != keys[i]) stable[i] = 0;
      }
    }
  });
  DeckVerdict v;
  v.members_checked = static_cast<int>(count) * samples_per_class;
  for (std::size_t i = 0; i < count; ++i) {
    if (!stable[i]) {
      v.holds = false;
      v.unstable_classes.push_back(static_cast<int>(i));
    }
    for (std::size_t j = i + 1; j < count; ++j) {
      if (keys[i] == keys[j]) {
        v.holds = false;
        v.collisions.push_back({static_cast<int>(i), static_cast<int>(j), 0.0});
      }
    }
  }
  return v;
}

}  // namespace twograph
