#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twograph/canonical.hpp"
#include "twograph/census.hpp"
#include "twograph/decks.hpp"
#include "twograph/figures.hpp"
#include "twograph/frames.hpp"
#include "twograph/graph.hpp"
#include "twograph/io.hpp"
#include "twograph/measures.hpp"
#include "twograph/spectral.hpp"

namespace {

using namespace twograph;
using json = nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int threads = 1;
  double tol = kDefaultSpectrumTol;
};

std::string fmt12(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;  // rotation residue, not a value
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

// 12 significant digits, emitted by json as the shortest round-trip form
double round12(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFormat resolve_format(const std::string& text, const std::string& format) {
  if (format == "auto") return detect_format(text);
  return parse_format_name(format);
}

// A graph from a --graph literal, a --figure name, or a file ("-" for stdin).
struct GraphInput {
  std::string path;
  std::string literal;
  std::string figure;
  std::string format = "auto";

  void attach(CLI::App* cmd, const std::string& positional = "input") {
    cmd->add_option(positional, path, "graph file, or - for stdin");
    cmd->add_option("--graph", literal, "inline graph literal, e.g. \"n=6;12,13,24,34\"");
    cmd->add_option("--figure", figure, "named example graph (see: gen named-figure --list)");
    cmd->add_option("--format", format, "auto, edge-list, adjacency, seidel or graph6");
  }

  Graph load() const {
    const int given = !path.empty() + !literal.empty() + !figure.empty();
    if (given != 1) throw UsageError("give exactly one of a file, --graph or --figure");
    if (!literal.empty()) return parse_graph_literal(literal);
    if (!figure.empty()) return named_figure(figure);
    const std::string text = read_source(path);
    return parse_graph(text, resolve_format(text, format));
  }
};

int parse_int_strict(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

// "4", "3..6", "3-6" or "all".
std::pair<int, int> parse_m_range(const std::string& text, int n) {
  if (text.empty() || text == "all") return {1, n};
  int lo = 0;
  int hi = 0;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    lo = parse_int_strict(text.substr(0, dots), "m range");
    hi = parse_int_strict(text.substr(dots + 2), "m range");
  } else if (auto dash = text.find('-'); dash != std::string::npos && dash > 0) {
    lo = parse_int_strict(text.substr(0, dash), "m range");
    hi = parse_int_strict(text.substr(dash + 1), "m range");
  } else {
    lo = hi = parse_int_strict(text, "m");
  }
  if (lo < 1 || hi > n || lo > hi) {
    throw UsageError("m range " + text + " outside 1.." + std::to_string(n));
  }
  return {lo, hi};
}

int cmd_canon(const GraphInput& in) {
  const Graph g = in.load();
  const CanonicalLabeling lab = canonical_labeling(g);
  std::cout << "n: " << g.order() << "\n";
  std::cout << "isomorphism: " << canonical_form(g).hex() << "\n";
  if (g.order() >= 2) std::cout << "switching-equivalence: " << class_certificate(g).hex() << "\n";
  std::cout << "canonical: " << format_graph_literal(lab.graph) << "\n";
  std::cout << "order:";
  for (int v : lab.order) std::cout << ' ' << v + 1;
  std::cout << "\n";
  if (g.order() % 2 == 1) std::cout << "euler: " << format_graph_literal(euler_representative(g)) << "\n";
  return kExitYes;
}

int cmd_equiv(const GraphInput& a, const GraphInput& b) {
  const Graph g = a.load();
  const Graph h = b.load();
  if (g.order() != h.order()) {
    throw UsageError("graphs have different vertex counts (" + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()) + ")");
  }
  if (g.order() < 2) throw UsageError("switching equivalence needs at least 2 vertices");
  const ClassCertificate cg = class_certificate(g);
  const ClassCertificate ch = class_certificate(h);
  const bool same = cg == ch;
  std::cout << "equivalent: " << (same ? "yes" : "no") << "\n";
  std::cout << "certificate-1: " << cg.hex() << "\n";
  std::cout << "certificate-2: " << ch.hex() << "\n";
  return same ? kExitYes : kExitNo;
}

int cmd_norms(const GraphInput& in, const std::string& family, const std::string& m_text, bool distribution,
              const Globals& globals) {
  const Graph g = in.load();
  const NormSpec spec = parse_norm_spec(family);
  const auto [lo, hi] = parse_m_range(m_text, g.order());
  for (int m = lo; m <= hi; ++m) {
    json row;
    row["n"] = g.order();
    row["family"] = norm_spec_name(spec);
    row["m"] = m;
    row["value"] = round12(e_measure(g, m, spec, globals.threads));
    if (distribution) {
      json buckets = json::array();
      for (const NormBucket& b : norm_distribution(g, m, globals.threads).buckets) {
        buckets.push_back({{"value", round12(b.value)}, {"count", b.count}});
      }
      row["distribution"] = buckets;
    }
    std::cout << row.dump() << "\n";
  }
  return kExitYes;
}

int cmd_spectrum(const GraphInput& in, bool clusters, const Globals& globals) {
  const Graph g = in.load();
  const Spectrum sp = seidel_spectrum(g, globals.tol);
  std::string line;
  for (double v : sp.values()) line += (line.empty() ? "" : ",") + fmt12(v);
  std::cout << line << "\n";
  if (clusters) {
    for (const auto& c : sp.clusters()) std::cout << fmt12(c.value) << " x" << c.multiplicity << "\n";
  }
  return kExitYes;
}

int cmd_deck(const GraphInput& in, const GraphInput& other, bool compare, const std::string& kind,
             const Globals& globals) {
  const Graph g = in.load();
  if (compare) {
    const Graph h = other.load();
    if (g.order() != h.order()) throw UsageError("decks of graphs with different vertex counts");
    const bool iso = decks_isomorphic(g, h, globals.threads);
    const bool sw = decks_switching_equivalent(g, h, globals.threads);
    std::cout << "iso: " << (iso ? "yes" : "no") << "  switch-equiv: " << (sw ? "yes" : "no") << "\n";
    return sw ? kExitYes : kExitNo;
  }
  std::vector<CardGroup> groups;
  if (kind == "iso") {
    groups = deck_isomorphism_types(g, globals.threads);
  } else if (kind == "class") {
    groups = deck_switching_types(g, globals.threads);
  } else {
    throw UsageError("--kind must be iso or class");
  }
  for (const CardGroup& c : groups) {
    std::cout << c.multiplicity << '\t' << c.certificate.hex() << '\t'
              << format_graph_literal(delete_vertex(g, c.example_vertex)) << "\n";
  }
  std::cout << "distinct: " << groups.size() << "\n";
  return kExitYes;
}

void check_census_n(int n, bool stretch, int lo) {
  const int hi = stretch ? kMaxClassCensus : kMaxIsoCensus;
  if (n < lo || n > hi) {
    throw UsageError("n=" + std::to_string(n) + " unsupported: required tier is " + std::to_string(lo) + ".." +
                     std::to_string(kMaxIsoCensus) + "; n=8 (2^21 candidates) needs --stretch; n >= 9 is out of budget");
  }
}

int cmd_census(int n, bool stretch, const std::string& out_dir, const Globals& globals) {
  check_census_n(n, stretch, 3);
  const ClassTable table = enumerate_class_representatives(n, globals.threads);
  std::filesystem::path dir = out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / ("census_" + std::to_string(n) + ".tsv");
  write_class_table(table, path);
  std::cout << "n: " << n << "\n";
  std::cout << "isomorphism-classes: " << table.iso_classes << "\n";
  std::cout << "switching-classes: " << table.switching_classes << "\n";
  std::cout << "switching-equivalence-classes: " << table.classes.size() << "\n";
  std::cout << "written: " << path.string() << "\n";
  return kExitYes;
}

std::string rep(const ClassTable& t, int i) {
  return format_graph_literal(t.classes[static_cast<std::size_t>(i)].representative);
}

int cmd_verify(const std::string& claim, int n, bool stretch, const std::string& census_dir, const Globals& globals) {
  if (claim == "deck") {
    check_census_n(n, stretch, 4);
  } else if (claim == "spectrum" || claim == "one-norm" || claim == "infinity-norm") {
    check_census_n(n, stretch, 3);
  } else {
    throw UsageError("unknown claim '" + claim + "' (spectrum, deck, one-norm, infinity-norm)");
  }
  const ClassTable table = load_or_enumerate(n, census_dir, globals.threads);
  std::cout << "claim: " << claim << "  n: " << n << "  classes: " << table.classes.size() << "\n";
  bool pass = true;
  if (claim == "spectrum") {
    const auto groups = verify_spectral_determination(table, globals.tol);
    pass = groups.empty();
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& grp : groups) {
      std::cout << "cospectral:";
      for (int i : grp) std::cout << ' ' << rep(table, i);
      std::cout << "\n";
    }
    std::cout << "cospectral-groups: " << groups.size() << "\n";
  } else if (claim == "deck") {
    const DeckVerdict v = verify_deck_conjecture(table, 4, 0x5eed, globals.threads);
    pass = v.holds;
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    for (const ClassPair& p : v.collisions) std::cout << "collision: " << rep(table, p.a) << " " << rep(table, p.b) << "\n";
    for (int i : v.unstable_classes) std::cout << "unstable: " << rep(table, i) << "\n";
    std::cout << "members-checked: " << v.members_checked << "\n";
  } else {
    const ProfileVerdict v = claim == "one-norm" ? verify_one_norm_conjecture(table, globals.threads)
                                                 : verify_infinity_norm_separation(table, globals.threads);
    pass = v.holds;
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    for (const ClassPair& p : v.collisions) {
      std::cout << "collision: " << rep(table, p.a) << " " << rep(table, p.b) << " gap=" << fmt12(p.gap) << "\n";
    }
    std::cout << "min-separation: " << fmt12(v.min_separation);
    if (v.closest.a >= 0) std::cout << " between " << rep(table, v.closest.a) << " " << rep(table, v.closest.b);
    std::cout << "\n";
  }
  return pass ? kExitYes : kExitNo;
}

SeidelMatrix load_seidel(const std::string& path, const std::string& format) {
  if (path.empty()) throw UsageError("frame needs a Seidel matrix file (or - for stdin)");
  const std::string text = read_source(path);
  const GraphFormat f = resolve_format(text, format);
  if (f == GraphFormat::seidel) return parse_seidel(text);
  return seidel_matrix(parse_graph(text, f));
}

int cmd_frame_analyze(const std::string& path, const std::string& format, int m_max, const Globals& globals) {
  const SeidelMatrix s = load_seidel(path, format);
  const auto params = signature_check(s);
  if (!params) {
    std::string spec;
    for (const auto& c : seidel_spectrum(s, globals.tol).clusters(1e-6)) {
      spec += (spec.empty() ? "" : ", ") + fmt12(c.value) + " x" + std::to_string(c.multiplicity);
    }
    std::cout << "signature: no (spectrum " << spec << ")\n";
    return kExitNo;
  }
  const Matrix p = autocorrelation(s);
  const FrameVectors v = frame_vectors(s);
  double parseval = (v.parseval() - Matrix::identity(v.k)).frobenius_norm();
  std::cout << "n: " << params->n << "\n";
  std::cout << "k: " << params->k << "\n";
  std::cout << "c: " << fmt12(params->c) << "\n";
  std::cout << "lambda1: " << fmt12(params->lambda1) << "\n";
  std::cout << "least-eigenvalue-identity: "
            << (least_eigenvalue_identity(*params, seidel_spectrum(s, globals.tol)) ? "yes" : "no") << "\n";
  std::cout << "projection-residual: " << fmt12(projection_residual(p)) << "\n";
  std::cout << "trace: " << fmt12(p.trace()) << "\n";
  std::cout << "parseval-residual: " << fmt12(parseval) << "\n";
  const int top = m_max > 0 ? std::min(m_max, params->n) : params->n;
  std::vector<double> profile;
  if (top == params->n) {
    profile = frame_error_profile(s, NormSpec::infinity(), globals.threads);
  } else {
    for (int m = 1; m <= top; ++m) profile.push_back(frame_error_norm(s, m, NormSpec::infinity(), globals.threads));
  }
  std::cout << "m\tbound\te_inf\n";
  for (int m = 1; m <= top; ++m) {
    std::cout << m << '\t' << fmt12(frame_error_bound(*params, m)) << '\t'
              << fmt12(profile[static_cast<std::size_t>(m - 1)]) << "\n";
  }
  return kExitYes;
}

int cmd_frame_vectors(const std::string& path, const std::string& format) {
  const SeidelMatrix s = load_seidel(path, format);
  const FrameVectors v = frame_vectors(s);
  for (int i = 0; i < v.n; ++i) {
    for (int j = 0; j < v.k; ++j) std::cout << (j ? "\t" : "") << fmt12(v(i, j));
    std::cout << "\n";
  }
  return kExitYes;
}

int cmd_gen(const std::string& family, int n, int q, const std::string& name, bool list, const std::string& format) {
  if (family == "named-figure" && list) {
    for (const NamedFigure& f : named_figures()) std::cout << f.name << '\t' << f.description << "\n";
    return kExitYes;
  }
  if (family == "paley") {
    if (q == 0) throw UsageError("gen paley needs --q");
    const SeidelMatrix s = paley_conference_seidel(q);
    if (format == "auto" || format == "seidel") {
      std::cout << format_seidel(s);
    } else {
      std::cout << format_graph(graph_of_seidel(s), parse_format_name(format));
    }
    return kExitYes;
  }
  Graph g;
  if (family == "named-figure") {
    if (name.empty()) throw UsageError("gen named-figure needs --name (or --list)");
    g = named_figure(name);
  } else {
    if (n < 1) throw UsageError("gen " + family + " needs --n >= 1");
    if (family == "empty") {
      g = empty_graph(n);
    } else if (family == "complete") {
      g = complete_graph(n);
    } else if (family == "cycle") {
      g = cycle_graph(n);
    } else if (family == "path") {
      g = path_graph(n);
    } else {
      throw UsageError("unknown family '" + family + "'");
    }
  }
  std::cout << format_graph(g, format == "auto" ? GraphFormat::edge_list : parse_format_name(format));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twograph: switching classes, Seidel spectra and erasure measures"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--threads", globals.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", globals.tol, "spectrum comparison tolerance")->check(CLI::PositiveNumber);

  std::function<int()> run;

  GraphInput canon_in;
  auto* canon = app.add_subcommand("canon", "canonical labeling and certificates");
  canon_in.attach(canon);
  canon->callback([&] { run = [&] { return cmd_canon(canon_in); }; });

  GraphInput eq_a;
  GraphInput eq_b;
  auto* equiv = app.add_subcommand("equiv", "switching equivalence of two graphs");
  equiv->add_option("first", eq_a.path, "first graph file");
  equiv->add_option("second", eq_b.path, "second graph file");
  equiv->add_option("--graph", eq_a.literal, "first graph literal");
  equiv->add_option("--other", eq_b.literal, "second graph literal");
  equiv->add_option("--figure", eq_a.figure, "first graph as a named example");
  equiv->add_option("--other-figure", eq_b.figure, "second graph as a named example");
  equiv->add_option("--format", eq_a.format, "input format for both files");
  equiv->callback([&] {
    eq_b.format = eq_a.format;
    run = [&] { return cmd_equiv(eq_a, eq_b); };
  });

  GraphInput norms_in;
  std::string family = "inf";
  std::string m_text = "all";
  bool distribution = false;
  auto* norms = app.add_subcommand("norms", "e_m measures as JSON rows");
  norms_in.attach(norms);
  norms->add_option("--family", family, "inf, one, or p=<value>");
  norms->add_option("--m", m_text, "m, a range a..b, or all");
  norms->add_flag("--distribution", distribution, "add norm buckets per m");
  norms->callback([&] { run = [&] { return cmd_norms(norms_in, family, m_text, distribution, globals); }; });

  GraphInput spec_in;
  bool clusters = false;
  auto* spectrum = app.add_subcommand("spectrum", "Seidel spectrum, descending");
  spec_in.attach(spectrum);
  spectrum->add_flag("--clusters", clusters, "also print eigenvalue multiplicities");
  spectrum->callback([&] { run = [&] { return cmd_spectrum(spec_in, clusters, globals); }; });

  GraphInput deck_in;
  GraphInput deck_other;
  std::string deck_kind = "class";
  auto* deck_cmd = app.add_subcommand("deck", "vertex-deleted deck");
  deck_in.attach(deck_cmd);
  deck_cmd->add_option("--compare", deck_other.path, "second graph file to compare decks with");
  deck_cmd->add_option("--compare-graph", deck_other.literal, "second graph literal to compare decks with");
  deck_cmd->add_option("--compare-figure", deck_other.figure, "named example to compare decks with");
  deck_cmd->add_option("--kind", deck_kind, "card certificate: class (switching) or iso");
  deck_cmd->callback([&] {
    deck_other.format = deck_in.format;
    const bool compare = !deck_other.path.empty() || !deck_other.literal.empty() || !deck_other.figure.empty();
    run = [&, compare] { return cmd_deck(deck_in, deck_other, compare, deck_kind, globals); };
  });

  int census_n = 0;
  bool census_stretch = false;
  std::string census_out = ".";
  auto* census = app.add_subcommand("census", "switching-equivalence class census");
  census->add_option("--n", census_n, "vertex count")->required();
  census->add_flag("--stretch", census_stretch, "allow n = 8");
  census->add_option("--out", census_out, "directory for census_<n>.tsv");
  census->callback([&] { run = [&] { return cmd_census(census_n, census_stretch, census_out, globals); }; });

  std::string claim;
  int verify_n = 0;
  bool verify_stretch = false;
  std::string census_dir;
  auto* verify = app.add_subcommand("verify", "check a claim over all classes on n vertices");
  verify->add_option("--claim", claim, "spectrum, deck, one-norm or infinity-norm")->required();
  verify->add_option("--n", verify_n, "vertex count")->required();
  verify->add_flag("--stretch", verify_stretch, "allow n = 8");
  verify->add_option("--census-dir", census_dir, "reuse or store census_<n>.tsv here");
  verify->callback([&] { run = [&] { return cmd_verify(claim, verify_n, verify_stretch, census_dir, globals); }; });

  auto* frame = app.add_subcommand("frame", "two-eigenvalue Seidel matrices as frames");
  frame->require_subcommand(1);
  std::string frame_path;
  std::string frame_format = "auto";
  int frame_m_max = 0;
  auto* analyze = frame->add_subcommand("analyze", "frame parameters and erasure norms");
  analyze->add_option("input", frame_path, "Seidel matrix file, or - for stdin");
  analyze->add_option("--format", frame_format, "auto, seidel, adjacency, edge-list or graph6");
  analyze->add_option("--m-max", frame_m_max, "largest m in the erasure table (default n)");
  analyze->callback([&] { run = [&] { return cmd_frame_analyze(frame_path, frame_format, frame_m_max, globals); }; });
  auto* vectors = frame->add_subcommand("vectors", "frame vectors as an n x k TSV");
  vectors->add_option("input", frame_path, "Seidel matrix file, or - for stdin");
  vectors->add_option("--format", frame_format, "auto, seidel, adjacency, edge-list or graph6");
  vectors->callback([&] { run = [&] { return cmd_frame_vectors(frame_path, frame_format); }; });

  std::string gen_family;
  int gen_n = 0;
  int gen_q = 0;
  std::string gen_name;
  bool gen_list = false;
  std::string gen_format = "auto";
  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->add_option("family", gen_family, "empty, complete, cycle, path, paley or named-figure")->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--q", gen_q, "field size for paley (5, 9, 13, 17, 25, 29)");
  gen->add_option("--name", gen_name, "figure name for named-figure");
  gen->add_flag("--list", gen_list, "list named figures");
  gen->add_option("--format", gen_format, "output format");
  gen->callback([&] { run = [&] { return cmd_gen(gen_family, gen_n, gen_q, gen_name, gen_list, gen_format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    return run ? run() : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
