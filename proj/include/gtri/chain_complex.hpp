#pragma once

#include <string>
#include <vector>

#include "gtri/integer_matrix.hpp"
#include "gtri/triangulation.hpp"

namespace gtri {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... with
/// t_1 | t_2 | ... and every t_i > 1.
struct HomologyGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z/3", "Z + Z/2 + Z/4"
  std::string str() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Free chain groups C_0..C_n with boundary maps; boundary(k) is the
/// rank(k-1) x rank(k) matrix of d_k, whose column j is the boundary of
/// generator j.
class IntegerChainComplex {
 public:
  IntegerChainComplex() = default;
  /// ranks.size() == maps.size() + 1; maps[k-1] is d_k. Throws on a shape
  /// mismatch.
  IntegerChainComplex(std::vector<int> ranks, std::vector<IntegerMatrix> maps);

  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  int rank(int k) const { return ranks_.at(k); }
  const std::vector<int>& ranks() const { return ranks_; }
  /// d_k for 1 <= k <= top_degree().
  const IntegerMatrix& boundary(int k) const { return maps_.at(k - 1); }

  /// d_k * d_{k+1} == 0 for every consecutive pair.
  bool is_complex() const;

 private:
  std::vector<int> ranks_;
  std::vector<IntegerMatrix> maps_;
};

/// H_k from the Smith forms of d_k and d_{k+1}. Throws std::out_of_range for
/// k outside [0, top_degree()].
HomologyGroup homology(const IntegerChainComplex& c, int k);

/// All homology groups, degrees 0..top.
std::vector<HomologyGroup> homology(const IntegerChainComplex& c);

/// Cellular chains of a generalized triangulation: one generator per face
/// orbit, oriented by the representative's increasing label order. Incidence
/// signs combine the simplicial sign with the parity of the connecting map.
/// Throws TriangulationError when some face is identified with itself.
IntegerChainComplex chain_complex_of(const Triangulation& t);

}  // namespace gtri
