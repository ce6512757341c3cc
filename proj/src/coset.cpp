#include "gtri/coset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gtri {

namespace {

// Felsch coset enumeration following the COINCIDENCE and SCAN procedures of
// Holt, Eick and O'Brien, Handbook of Computational Group Theory, ch. 5.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, const std::vector<Word>& extra, long max_cosets)
      : columns_(2 * p.generator_count()), max_(max_cosets) {
    std::set<std::vector<int>> cycles;
    auto add = [&](const Word& r) {
      const Word c = cyclic_reduce(r);
      for (const Word& w : {c, inverse(c)})
        for (std::size_t k = 0; k < w.size(); ++k) {
          std::vector<int> cols;
          for (const Letter& l : rotate(w, k)) cols.push_back(column(l));
          cycles.insert(std::move(cols));
        }
    };
    for (const Word& r : p.relators) add(r);
    for (const Word& r : extra) add(r);
    by_first_.resize(columns_);
    for (const auto& c : cycles) by_first_[c.front()].push_back(c);
    new_coset();
  }

  CosetResult run() {
    for (long c = 0; c < static_cast<long>(parent_.size()); ++c) {
      for (int x = 0; x < columns_ && alive(c); ++x) {
        if (entry(c, x) >= 0) continue;
        if (live_ >= max_ || static_cast<long>(parent_.size()) >= kTotalFactor * max_ + 1024)
          return Inconclusive{live_};
        const long d = new_coset();
        set(c, x, d);
        deductions_.push_back({c, x});
        process_deductions();
      }
    }
    return Index{live_};
  }

 private:
  static constexpr long kTotalFactor = 64;  // safety net on dead cosets

  static int column(const Letter& l) { return 2 * l.generator + (l.exponent > 0 ? 0 : 1); }
  static int inv(int x) { return x ^ 1; }

  long& entry(long c, int x) { return table_[static_cast<std::size_t>(c) * columns_ + x]; }
  bool alive(long c) const { return parent_[c] == c; }

  void set(long a, int x, long b) {
    entry(a, x) = b;
    entry(b, inv(x)) = a;
  }

  long new_coset() {
    const long id = static_cast<long>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + columns_, -1);
    ++live_;
    return id;
  }

  long rep(long c) {
    long r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const long next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(long k, long l, std::vector<long>& queue) {
    const long a = rep(k), b = rep(l);
    if (a == b) return;
    const long low = std::min(a, b), high = std::max(a, b);
    parent_[high] = low;
    queue.push_back(high);
    --live_;
  }

  void coincidence(long a, long b) {
    std::vector<long> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const long g = queue[i];
      for (int x = 0; x < columns_; ++x) {
        const long d = entry(g, x);
        if (d < 0) continue;
        entry(d, inv(x)) = -1;
        const long mu = rep(g), nu = rep(d);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inv(x)) >= 0) {
          merge(mu, entry(nu, inv(x)), queue);
        } else {
          set(mu, x, nu);
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  // Trace the relator cycle w at coset a from both ends; deduce a single
  // missing entry or record a coincidence.
  void scan(long a, const std::vector<int>& w) {
    long f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && entry(f, w[i]) >= 0) f = entry(f, w[i++]);
    if (i > j) {
      if (f != a) coincidence(f, a);
      return;
    }
    while (j >= i && entry(b, inv(w[j])) >= 0) b = entry(b, inv(w[j--]));
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      set(f, w[i], b);
      deductions_.push_back({f, w[i]});
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(a)) continue;
      for (const auto& w : by_first_[x]) {
        scan(a, w);
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      const long b = entry(a, x);
      if (b < 0 || !alive(b)) continue;
      for (const auto& w : by_first_[inv(x)]) {
        scan(b, w);
        if (!alive(b)) break;
      }
    }
  }

  int columns_;
  long max_;
  long live_ = 0;
  std::vector<long> table_;
  std::vector<long> parent_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<std::pair<long, int>> deductions_;
};

}  // namespace

CosetResult coset_enumeration(const GroupPresentation& p, const std::vector<Word>& extra_relators, long max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("coset_enumeration: max_cosets must be at least 1");
  return Enumerator(p, extra_relators, max_cosets).run();
}

}  // namespace gtri
