#include "gtri/chain_complex.hpp"

#include <sstream>
#include <stdexcept>

#include "gtri/faces.hpp"

namespace gtri {

std::string HomologyGroup::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const Integer& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

IntegerChainComplex::IntegerChainComplex(std::vector<int> ranks, std::vector<IntegerMatrix> maps)
    : ranks_(std::move(ranks)), maps_(std::move(maps)) {
  if (ranks_.empty() || maps_.size() + 1 != ranks_.size())
    throw std::invalid_argument("chain complex: need one boundary map per positive degree");
  for (std::size_t k = 0; k < maps_.size(); ++k)
    if (maps_[k].rows() != ranks_[k] || maps_[k].cols() != ranks_[k + 1])
      throw std::invalid_argument("chain complex: boundary map d_" + std::to_string(k + 1) + " has the wrong shape");
}

bool IntegerChainComplex::is_complex() const {
  for (std::size_t k = 0; k + 1 < maps_.size(); ++k)
    if (!(maps_[k] * maps_[k + 1]).is_zero()) return false;
  return true;
}

HomologyGroup homology(const IntegerChainComplex& c, int k) {
  if (k < 0 || k > c.top_degree()) throw std::out_of_range("homology degree out of range");
  const int rank_dk = (k == 0) ? 0 : smith_normal_form(c.boundary(k)).rank();
  HomologyGroup h;
  int rank_next = 0;
  if (k < c.top_degree()) {
    const auto factors = smith_normal_form(c.boundary(k + 1)).invariant_factors();
    rank_next = static_cast<int>(factors.size());
    for (const Integer& f : factors)
      if (f > 1) h.torsion.push_back(f);
  }
  h.free_rank = c.rank(k) - rank_dk - rank_next;
  return h;
}

std::vector<HomologyGroup> homology(const IntegerChainComplex& c) {
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= c.top_degree(); ++k) out.push_back(homology(c, k));
  return out;
}

namespace {

// Parity of the sequence (labels, in order) relative to increasing order.
int sequence_parity(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

IntegerChainComplex chain_complex_of(const Triangulation& t) {
  std::vector<std::vector<FaceOrbit>> orbits;
  for (int d = 0; d <= t.dimension(); ++d) {
    orbits.push_back(face_orbits(t, d));
    for (const FaceOrbit& o : orbits.back())
      if (o.self_identified) throw TriangulationError("chain complex: a face is identified with itself");
  }

  std::vector<int> ranks;
  for (const auto& level : orbits) ranks.push_back(static_cast<int>(level.size()));

  std::vector<IntegerMatrix> maps;
  for (int k = 1; k <= t.dimension(); ++k) {
    IntegerMatrix d(ranks[k - 1], ranks[k]);
    for (int col = 0; col < ranks[k]; ++col) {
      const FaceKey& rep = orbits[k][col].representative();
      const auto labels = rep.sorted_labels();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        const FaceKey face{rep.simplex, static_cast<std::uint8_t>(rep.labels & ~(1u << labels[i]))};
        const auto [row, member] = locate(orbits[k - 1], face);
        const FaceOrbit& target = orbits[k - 1][row];
        std::vector<int> image;
        for (int label : target.representative().sorted_labels())
          image.push_back(target.connecting_maps[member][label]);
        const int simplicial_sign = (i % 2 == 0) ? 1 : -1;
        d(row, col) += simplicial_sign * sequence_parity(image);
      }
    }
    maps.push_back(std::move(d));
  }
  return IntegerChainComplex(std::move(ranks), std::move(maps));
}

}  // namespace gtri
