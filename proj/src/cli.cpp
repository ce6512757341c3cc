#include "gtri/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gtri/chain_complex.hpp"
#include "gtri/coset.hpp"
#include "gtri/cs.hpp"
#include "gtri/dual.hpp"
#include "gtri/faces.hpp"
#include "gtri/fox.hpp"
#include "gtri/links.hpp"

namespace gtri {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// A usage or argument error detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string homology_line(const IntegerChainComplex& c) {
  std::vector<std::string> parts;
  for (const HomologyGroup& h : homology(c)) parts.push_back(h.str());
  return join(parts, " ");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// pi_1 of a 4-dimensional triangulation: dual presentation over the default
/// spanning tree, Tietze-simplified, generators renamed a, b, ...
GroupPresentation fundamental_group(const Triangulation& t) {
  return relabel_alphabetic(tietze_simplify(dual_presentation(t, default_spanning_tree(t))));
}

std::vector<Word> parse_kill(const std::string& text, const GroupPresentation& p) {
  std::vector<Word> words;
  std::stringstream in(text);
  for (std::string piece; std::getline(in, piece, ',');) {
    try {
      words.push_back(parse_word(piece, p.names));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--kill: ") + e.what());
    }
  }
  if (words.empty()) throw UsageError("--kill needs at least one word");
  return words;
}

std::vector<int> parse_deg(const std::string& text, const GroupPresentation& p) {
  std::map<std::string, int> given;
  std::stringstream in(text);
  for (std::string piece; std::getline(in, piece, ',');) {
    const auto eq = piece.find('=');
    if (eq == std::string::npos) throw UsageError("--deg entries look like name=integer");
    const std::string name = piece.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(piece.substr(eq + 1), &used);
      if (used != piece.size() - eq - 1) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("--deg: bad integer in '" + piece + "'");
    }
    if (given.count(name)) throw UsageError("--deg: '" + name + "' given twice");
    given[name] = value;
  }
  std::vector<int> deg;
  for (const std::string& name : p.names) {
    const auto it = given.find(name);
    if (it == given.end()) throw UsageError("--deg: no degree for generator '" + name + "'");
    deg.push_back(it->second);
    given.erase(it);
  }
  if (!given.empty()) throw UsageError("--deg: unknown generator '" + given.begin()->first + "'");
  return deg;
}

MonodromyMatrix parse_matrix(const std::string& text) {
  std::array<long, 9> e{};
  std::stringstream in(text);
  int n = 0;
  for (std::string piece; std::getline(in, piece, ',');) {
    if (n == 9) throw UsageError("--matrix takes exactly 9 integers");
    try {
      std::size_t used = 0;
      e[n++] = std::stol(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw UsageError("--matrix: bad integer '" + piece + "'");
    }
  }
  if (n != 9) throw UsageError("--matrix takes exactly 9 integers");
  try {
    return MonodromyMatrix(e);
  } catch (const std::invalid_argument& err) {
    throw UsageError(std::string("--matrix: ") + err.what());
  }
}

int cmd_validate(const Triangulation& t, std::ostream& out) {
  const ValidityReport r = validate(t);
  out << "dimension: " << t.dimension() << "\n";
  out << "simplices: " << t.size() << "\n";
  out << "boundary-facets: " << r.boundary_facets << "\n";
  std::vector<std::string> self;
  for (std::size_t d = 0; d < r.self_identified.size(); ++d)
    for (int o : r.self_identified[d]) self.push_back(std::to_string(d) + ":" + std::to_string(o));
  out << "self-identified: " << (self.empty() ? "none" : join(self, " ")) << "\n";
  if (t.dimension() == 4 && !r.edge_link_sphere.empty()) {
    std::vector<std::string> e, v;
    for (bool b : r.edge_link_sphere) e.push_back(b ? "sphere" : "not-sphere");
    for (bool b : r.vertex_link_closed) v.push_back(b ? "closed" : "not-closed");
    out << "edge-links: " << join(e, " ") << "\n";
    out << "vertex-links: " << join(v, " ") << "\n";
  }
  out << "valid: " << (r.passes() ? "PASS" : "FAIL") << "\n";
  return r.passes() ? kOk : kFail;
}

bool report_invalid(const Triangulation& t, std::ostream& out) {
  if (!validate(t).has_self_identifications()) return false;
  out << "error: triangulation has self-identified faces\n";
  cmd_validate(t, out);
  return true;
}

int cmd_invariants(const Triangulation& t, std::ostream& out) {
  if (report_invalid(t, out)) return kFail;
  std::vector<std::string> counts;
  for (int c : face_counts(t)) counts.push_back(std::to_string(c));
  out << "faces: " << join(counts, " ") << "\n";
  if (t.dimension() == 4 && t.boundary_facet_count() == 0) {
    out << "model: ideal (dual cell complex)\n";
    out << "chi: " << euler_characteristic(t, true) << "\n";
    out << "H*: " << homology_line(dual_chain_complex(t)) << "\n";
  } else {
    out << "model: simplicial\n";
    out << "chi: " << euler_characteristic(t, false) << "\n";
    out << "H*: " << homology_line(chain_complex_of(t)) << "\n";
  }
  return kOk;
}

void write_file(const std::string& dir, const std::string& name, const std::string& text, std::ostream& out) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  out << "wrote: " << path << "\n";
}

int cmd_links(const Triangulation& t, const std::string& out_dir, std::ostream& out) {
  if (t.dimension() != 4) throw UsageError("links: needs a 4-dimensional triangulation");
  if (report_invalid(t, out)) return kFail;
  const auto vertices = face_orbits(t, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Link l = vertex_link(t, vertices[i]);
    const std::string key = "vertex-link " + std::to_string(i);
    out << key << " tetrahedra: " << l.triangulation.size() << "\n";
    out << key << " boundary-facets: " << l.triangulation.boundary_facet_count() << "\n";
    out << key << " H*: " << homology_line(chain_complex_of(l.triangulation)) << "\n";
    if (!out_dir.empty())
      write_file(out_dir, "vertex-link-" + std::to_string(i) + ".tri", serialize(l.triangulation), out);
  }
  const auto edges = face_orbits(t, 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Link l = edge_link(t, edges[i]);
    const SurfaceClassification s = classify_surface(l.triangulation);
    const std::string key = "edge-link " + std::to_string(i);
    out << key << " triangles: " << l.triangulation.size() << "\n";
    out << key << " connected: " << yes_no(s.connected) << "\n";
    out << key << " orientable: " << yes_no(s.orientable) << "\n";
    out << key << " boundary-circles: " << s.boundary_circles << "\n";
    out << key << " chi: " << s.euler_characteristic << "\n";
    if (!out_dir.empty())
      write_file(out_dir, "edge-link-" + std::to_string(i) + ".tri", serialize(l.triangulation), out);
  }
  return kOk;
}

int cmd_group(const Triangulation& t, std::ostream& out) {
  if (report_invalid(t, out)) return kFail;
  const auto tree = default_spanning_tree(t);
  std::vector<std::string> names;
  for (int e : tree) names.push_back("e" + std::to_string(e));
  const GroupPresentation dual = dual_presentation(t, tree);
  const GroupPresentation simple = relabel_alphabetic(tietze_simplify(dual));
  out << "tree: " << (names.empty() ? "none" : join(names, " ")) << "\n";
  out << "dual: " << format_presentation(dual) << "\n";
  out << "simplified: " << format_presentation(simple) << "\n";
  out << "abelianization: " << abelianization(simple).str() << "\n";
  return kOk;
}

int cmd_alexander(const Triangulation& t, const std::string& deg_text, std::ostream& out) {
  if (report_invalid(t, out)) return kFail;
  const GroupPresentation p = fundamental_group(t);
  const std::vector<int> deg = parse_deg(deg_text, p);
  out << "presentation: " << format_presentation(p) << "\n";
  try {
    const std::string poly = fox_alexander(p, deg).str();
    out << "alexander: " << poly << "\n";
  } catch (const AlexanderError& e) {
    out << "alexander: FAIL (" << e.what() << ")\n";
    return kFail;
  }
  return kOk;
}

int cmd_cs_compare(const Triangulation& t, const std::string& matrix_text, std::optional<int> bound,
                   std::ostream& out) {
  const MonodromyMatrix a = parse_matrix(matrix_text);
  if (bound && *bound < 1) throw UsageError("--bound must be at least 1");
  if (report_invalid(t, out)) return kFail;
  const GroupPresentation p = fundamental_group(t);
  const ComparisonReport r = compare_invariants(p, a, bound);
  out << "# necessary conditions only; not a proof of isomorphism\n";
  out << "presentation: " << format_presentation(p) << "\n";
  out << "char-poly: " << r.char_poly_a.str() << "\n";
  out << "alexander-poly: " << (r.alexander_p ? r.alexander_p->str() : "undefined") << "\n";
  if (r.epimorphism) {
    std::vector<std::string> images;
    for (std::size_t i = 0; i < p.names.size(); ++i)
      images.push_back(p.names[i] + "->" + r.epimorphism->images[i].str());
    out << "images: " << join(images, " ") << "\n";
  }
  out << r.str();
  return r.all_pass() ? kOk : kFail;
}

int cmd_trivialize(const Triangulation& t, const std::string& kill_text, long max_cosets, std::ostream& out) {
  if (max_cosets < 1) throw UsageError("--max-cosets must be at least 1");
  if (report_invalid(t, out)) return kFail;
  const GroupPresentation p = fundamental_group(t);
  const std::vector<Word> kill = parse_kill(kill_text, p);
  out << "presentation: " << format_presentation(p) << "\n";
  const CosetResult r = coset_enumeration(p, kill, max_cosets);
  if (const auto* i = std::get_if<Index>(&r)) {
    out << "trivial: " << (i->value == 1 ? "PASS" : "FAIL") << " (index " << i->value << ")\n";
    return i->value == 1 ? kOk : kFail;
  }
  out << "trivial: FAIL (inconclusive, " << std::get<Inconclusive>(r).live_cosets << " live cosets)\n";
  return kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized triangulations, their groups and Cappell-Shaneson comparisons", "gtri"};
  app.require_subcommand(1, 1);
  std::string input, deg, matrix, kill, out_dir;
  long max_cosets = 10000;
  int bound = 0;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "tri file or builtin:cs")->required();
    return sub;
  };
  add("validate", "check self-identifications and links");
  add("invariants", "face counts, Euler characteristic and homology");
  CLI::App* links = add("links", "vertex and edge link summaries");
  links->add_option("--out", out_dir, "directory for serialized links");
  add("group", "fundamental group presentations");
  CLI::App* alexander = add("alexander", "Alexander polynomial of the fundamental group");
  alexander->add_option("--deg", deg, "degrees, e.g. a=-1,b=1")->required();
  CLI::App* compare = add("cs-compare", "compare with the Cappell-Shaneson group of a matrix");
  compare->add_option("--matrix", matrix, "9 comma-separated integers, row-major")->required();
  CLI::Option* bound_opt = compare->add_option("--bound", bound, "fibre search bound for the epimorphism");
  CLI::App* trivialize = add("trivialize", "coset enumeration after killing words");
  trivialize->add_option("--kill", kill, "comma-separated words to kill")->required();
  trivialize->add_option("--max-cosets", max_cosets, "live coset budget");

  std::vector<const char*> argv{"gtri"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<Triangulation> loaded;
  try {
    loaded = load_triangulation(input);
  } catch (const ParseError& e) {
    err << "error: " << input << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const Triangulation& t = *loaded;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "validate") return cmd_validate(t, out);
    if (name == "invariants") return cmd_invariants(t, out);
    if (name == "links") return cmd_links(t, out_dir, out);
    if (name == "group") return cmd_group(t, out);
    if (name == "alexander") return cmd_alexander(t, deg, out);
    if (name == "cs-compare")
      return cmd_cs_compare(t, matrix, bound_opt->count() ? std::optional<int>(bound) : std::nullopt, out);
    return cmd_trivialize(t, kill, max_cosets, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace gtri
