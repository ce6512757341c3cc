#include "gtri/triangulation.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gtri {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Triangulation::Triangulation(int dimension, int simplex_count) : dim_(dimension) {
  if (dimension < 2 || dimension > 4)
    throw TriangulationError("dimension must be 2, 3 or 4");
  if (simplex_count < 0) throw TriangulationError("negative simplex count");
  table_.resize(static_cast<std::size_t>(simplex_count) * (dim_ + 1));
  pair_index_.assign(table_.size(), -1);
}

int Triangulation::add_simplices(int count) {
  const int first = size();
  table_.resize(table_.size() + static_cast<std::size_t>(count) * (dim_ + 1));
  pair_index_.resize(table_.size(), -1);
  return first;
}

std::size_t Triangulation::slot(FacetRef f) const {
  if (f.simplex < 0 || f.simplex >= size())
    throw TriangulationError("simplex index " + std::to_string(f.simplex) + " out of range");
  if (f.facet < 0 || f.facet > dim_)
    throw TriangulationError("facet index " + std::to_string(f.facet) + " out of range");
  return static_cast<std::size_t>(f.simplex) * (dim_ + 1) + f.facet;
}

void Triangulation::glue(FacetRef source, FacetRef target, const Perm& map) {
  const std::size_t a = slot(source);
  const std::size_t b = slot(target);
  if (source == target)
    throw TriangulationError("facet " + std::to_string(source.simplex) + ":" +
                             std::to_string(source.facet) + " glued to itself");
  if (map.size() != dim_ + 1 || !map.is_bijection())
    throw TriangulationError("vertex map is not a bijection");
  if (map[source.facet] != target.facet)
    throw TriangulationError("vertex map does not carry the source facet onto the target facet");
  if (table_[a] || table_[b])
    throw TriangulationError("gluing conflict: facet " +
                             std::to_string(table_[a] ? source.simplex : target.simplex) + ":" +
                             std::to_string(table_[a] ? source.facet : target.facet) +
                             " is already glued");
  table_[a] = FacetPartner{target, map};
  table_[b] = FacetPartner{source, map.inverse()};
  pair_index_[a] = pair_index_[b] = static_cast<int>(gluings_.size());
  gluings_.push_back(Gluing{source, target, map});
}

int Triangulation::boundary_facet_count() const {
  int n = 0;
  for (const auto& p : table_)
    if (!p) ++n;
  return n;
}

int Triangulation::glued_facet_count() const {
  return static_cast<int>(table_.size()) - boundary_facet_count();
}

bool Triangulation::same_table(const Triangulation& other) const {
  if (dim_ != other.dim_ || table_.size() != other.table_.size()) return false;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto& x = table_[i];
    const auto& y = other.table_[i];
    if (x.has_value() != y.has_value()) return false;
    if (x && (x->facet != y->facet || !(x->map == y->map))) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

FacetRef parse_facet(std::string_view tok, int line) {
  const auto colon = tok.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(line, "expected <simplex>:<facet>, got '" + std::string(tok) + "'");
  return {parse_int(tok.substr(0, colon), line), parse_int(tok.substr(colon + 1), line)};
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  std::optional<int> dim;
  std::optional<Triangulation> tri;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!dim) {
      if (tokens.size() != 2 || tokens[0] != "dim") throw ParseError(line_no, "expected 'dim <2|3|4>'");
      dim = parse_int(tokens[1], line_no);
      if (*dim < 2 || *dim > 4) throw ParseError(line_no, "dimension must be 2, 3 or 4");
      continue;
    }
    if (!tri) {
      if (tokens.size() != 2 || tokens[0] != "simplices")
        throw ParseError(line_no, "expected 'simplices <n>'");
      const int n = parse_int(tokens[1], line_no);
      if (n < 0) throw ParseError(line_no, "negative simplex count");
      tri.emplace(*dim, n);
      continue;
    }

    if (static_cast<int>(tokens.size()) != 2 + *dim)
      throw ParseError(line_no, "gluing line needs " + std::to_string(2 + *dim) + " fields");
    const FacetRef src = parse_facet(tokens[0], line_no);
    const FacetRef dst = parse_facet(tokens[1], line_no);
    for (const FacetRef& f : {src, dst}) {
      if (f.simplex < 0 || f.simplex >= tri->size())
        throw ParseError(line_no, "simplex index " + std::to_string(f.simplex) + " out of range");
      if (f.facet < 0 || f.facet > *dim)
        throw ParseError(line_no, "facet index " + std::to_string(f.facet) + " out of range");
    }
    Perm map(*dim + 1);
    map.set(src.facet, dst.facet);
    int k = 2;
    for (int label = 0; label <= *dim; ++label) {
      if (label == src.facet) continue;
      const int image = parse_int(tokens[k++], line_no);
      if (image < 0 || image > *dim || image == dst.facet)
        throw ParseError(line_no, "vertex map is not a bijection onto the target facet");
      map.set(label, image);
    }
    if (!map.is_bijection()) throw ParseError(line_no, "vertex map is not a bijection onto the target facet");
    try {
      tri->glue(src, dst, map);
    } catch (const TriangulationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!dim) throw ParseError(line_no, "missing 'dim' line");
  if (!tri) throw ParseError(line_no, "missing 'simplices' line");
  return std::move(*tri);
}

std::string serialize(const Triangulation& t) {
  std::ostringstream out;
  out << "dim " << t.dimension() << '\n' << "simplices " << t.size() << '\n';
  for (const Gluing& g : t.gluings()) {
    out << g.source.simplex << ':' << g.source.facet << ' ' << g.target.simplex << ':'
        << g.target.facet;
    for (int label = 0; label <= t.dimension(); ++label)
      if (label != g.source.facet) out << ' ' << g.map[label];
    out << '\n';
  }
  return out.str();
}

Triangulation load_triangulation(const std::string& path_or_builtin) {
  if (path_or_builtin == "builtin:cs") return builtin_cs_triangulation();
  std::ifstream in(path_or_builtin, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path_or_builtin + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

Triangulation builtin_cs_triangulation() {
  constexpr int kGreen = 0;
  constexpr int kRed = 1;
  // (source, target) facet pairs for e0..e4; every map is order-preserving.
  struct Pair {
    FacetRef source, target;
  };
  static constexpr Pair kPairs[] = {
      {{kGreen, 3}, {kGreen, 0}},  // e0: 0124 -> 1234
      {{kRed, 2}, {kGreen, 4}},    // e1: 0134 -> 0123
      {{kRed, 3}, {kGreen, 1}},    // e2: 0124 -> 0234
      {{kRed, 0}, {kGreen, 2}},    // e3: 1234 -> 0134
      {{kRed, 4}, {kRed, 1}},      // e4: 0123 -> 0234
  };
  Triangulation t(4, 2);
  for (const Pair& p : kPairs) {
    const auto from = static_cast<std::uint8_t>(0x1f & ~(1u << p.source.facet));
    const auto to = static_cast<std::uint8_t>(0x1f & ~(1u << p.target.facet));
    t.glue(p.source, p.target, order_preserving(5, from, to));
  }
  return t;
}

}  // namespace gtri
