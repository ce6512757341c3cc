#include "gtri/isomorphism.hpp"

#include <algorithm>
#include <queue>

#include "gtri/faces.hpp"

namespace gtri {

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    Perm q(n);
    for (int i = 0; i < n; ++i) q.set(i, p[i]);
    out.push_back(q);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Triangulation& a, const Triangulation& b, int limit)
      : a_(a), b_(b), limit_(limit), comps_(components(a)), perms_(all_perms(a.vertices_per_simplex())) {
    image_.assign(a.size(), -1);
    relabel_.assign(a.size(), Perm(a.vertices_per_simplex()));
    used_.assign(b.size(), false);
  }

  std::vector<Isomorphism> run() {
    if (a_.dimension() != b_.dimension() || a_.size() != b_.size()) return {};
    if (a_.boundary_facet_count() != b_.boundary_facet_count()) return {};
    recurse(0);
    return std::move(found_);
  }

 private:
  bool done() const { return limit_ > 0 && static_cast<int>(found_.size()) >= limit_; }

  void recurse(std::size_t comp) {
    if (done()) return;
    if (comp == comps_.size()) {
      found_.push_back({image_, relabel_});
      return;
    }
    const int seed = comps_[comp].front();
    for (int target = 0; target < b_.size() && !done(); ++target) {
      if (used_[target]) continue;
      for (const Perm& rho : perms_) {
        std::vector<int> assigned;
        if (extend(seed, target, rho, assigned)) recurse(comp + 1);
        for (int s : assigned) {
          used_[image_[s]] = false;
          image_[s] = -1;
        }
        if (done()) return;
      }
    }
  }

  // Propagate the choice seed -> (target, rho) through the seed's component.
  bool extend(int seed, int target, const Perm& rho, std::vector<int>& assigned) {
    auto assign = [&](int s, int img, const Perm& r) {
      image_[s] = img;
      relabel_[s] = r;
      used_[img] = true;
      assigned.push_back(s);
    };
    assign(seed, target, rho);
    std::queue<int> q;
    q.push(seed);
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      for (int f = 0; f < a_.vertices_per_simplex(); ++f) {
        const auto& pa = a_.partner({s, f});
        const auto& pb = b_.partner({image_[s], relabel_[s][f]});
        if (pa.has_value() != pb.has_value()) return false;
        if (!pa) continue;
        const int s2 = pa->facet.simplex;
        // Forced relabelling of the neighbour.
        const Perm forced = pb->map * relabel_[s] * pa->map.inverse();
        if (image_[s2] < 0) {
          if (used_[pb->facet.simplex]) return false;
          assign(s2, pb->facet.simplex, forced);
          q.push(s2);
        } else if (image_[s2] != pb->facet.simplex || !(relabel_[s2] == forced)) {
          return false;
        }
      }
    }
    return true;
  }

  const Triangulation& a_;
  const Triangulation& b_;
  int limit_;
  std::vector<std::vector<int>> comps_;
  std::vector<Perm> perms_;
  std::vector<int> image_;
  std::vector<Perm> relabel_;
  std::vector<bool> used_;
  std::vector<Isomorphism> found_;
};

}  // namespace

Isomorphism Isomorphism::identity(const Triangulation& t) {
  Isomorphism iso;
  for (int i = 0; i < t.size(); ++i) {
    iso.simplex_bijection.push_back(i);
    iso.vertex_relabellings.push_back(Perm::identity(t.vertices_per_simplex()));
  }
  return iso;
}

Isomorphism Isomorphism::operator*(const Isomorphism& rhs) const {
  Isomorphism out;
  for (std::size_t i = 0; i < rhs.simplex_bijection.size(); ++i) {
    const int mid = rhs.simplex_bijection[i];
    out.simplex_bijection.push_back(simplex_bijection[mid]);
    out.vertex_relabellings.push_back(vertex_relabellings[mid] * rhs.vertex_relabellings[i]);
  }
  return out;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism out;
  out.simplex_bijection.resize(simplex_bijection.size());
  out.vertex_relabellings.resize(vertex_relabellings.size());
  for (std::size_t i = 0; i < simplex_bijection.size(); ++i) {
    out.simplex_bijection[simplex_bijection[i]] = static_cast<int>(i);
    out.vertex_relabellings[simplex_bijection[i]] = vertex_relabellings[i].inverse();
  }
  return out;
}

bool operator<(const Isomorphism& a, const Isomorphism& b) {
  if (a.simplex_bijection != b.simplex_bijection) return a.simplex_bijection < b.simplex_bijection;
  return std::lexicographical_compare(a.vertex_relabellings.begin(), a.vertex_relabellings.end(),
                                      b.vertex_relabellings.begin(), b.vertex_relabellings.end());
}

Triangulation apply(const Isomorphism& iso, const Triangulation& t) {
  Triangulation out(t.dimension(), t.size());
  for (const Gluing& g : t.gluings()) {
    const int i = g.source.simplex;
    const int j = g.target.simplex;
    const Perm& ri = iso.vertex_relabellings.at(i);
    const Perm& rj = iso.vertex_relabellings.at(j);
    out.glue({iso.simplex_bijection.at(i), ri[g.source.facet]}, {iso.simplex_bijection.at(j), rj[g.target.facet]},
             rj * g.map * ri.inverse());
  }
  return out;
}

std::vector<Isomorphism> isomorphisms(const Triangulation& a, const Triangulation& b, int limit) {
  return IsoSearch(a, b, limit).run();
}

std::optional<Isomorphism> find_isomorphism(const Triangulation& a, const Triangulation& b) {
  auto all = isomorphisms(a, b, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Isomorphism> automorphisms(const Triangulation& t) {
  auto all = isomorphisms(t, t);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace gtri
