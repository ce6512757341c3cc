#include "gtri/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtri {

int GroupPresentation::total_length() const {
  int n = 0;
  for (const Word& r : relators) n += static_cast<int>(r.size());
  return n;
}

GroupPresentation GroupPresentation::free_group(int rank) {
  GroupPresentation p;
  for (int i = 0; i < rank; ++i) p.names.push_back("x" + std::to_string(i));
  return p;
}

std::string format_presentation(const GroupPresentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.names.size(); ++i) out += (i ? " " : "") + p.names[i];
  out += p.names.empty() ? "|" : " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? ", " : " ") + format_word(p.relators[i], p.names);
  return out;
}

GroupPresentation parse_presentation(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("presentation needs a '|'");
  GroupPresentation p;
  std::istringstream names{std::string(text.substr(0, bar))};
  for (std::string name; names >> name;) p.names.push_back(name);
  std::string_view rest = text.substr(bar + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view piece = rest.substr(0, comma);
    if (piece.find_first_not_of(' ') != std::string_view::npos) p.relators.push_back(parse_word(piece, p.names));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return p;
}

IntegerMatrix exponent_matrix(const GroupPresentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.generator_count());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const Letter& l : p.relators[i]) m(static_cast<int>(i), l.generator) += l.exponent;
  return m;
}

GroupPresentation cyclically_reduced(const GroupPresentation& p) {
  GroupPresentation out{p.names, {}};
  for (const Word& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (!c.empty()) out.relators.push_back(std::move(c));
  }
  return out;
}

namespace {

// Replace generator g by `value` everywhere, then drop g from the generator
// list and renumber.
GroupPresentation substitute(const GroupPresentation& p, int g, const Word& value, std::size_t skip_relator) {
  const Word value_inv = inverse(value);
  GroupPresentation out;
  for (int i = 0; i < p.generator_count(); ++i)
    if (i != g) out.names.push_back(p.names[i]);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == skip_relator) continue;
    Word w;
    for (const Letter& l : p.relators[i]) {
      if (l.generator == g) {
        const Word& piece = l.exponent > 0 ? value : value_inv;
        w.insert(w.end(), piece.begin(), piece.end());
      } else {
        w.push_back(l);
      }
    }
    for (Letter& l : w)
      if (l.generator > g) --l.generator;
    w = cyclic_reduce(w);
    if (!w.empty()) out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& input) {
  GroupPresentation p = cyclically_reduced(input);
  while (true) {
    bool found = false;
    GroupPresentation best;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const Word& r = p.relators[i];
      for (int g = 0; g < p.generator_count(); ++g) {
        if (occurrences(r, g) != 1) continue;
        const auto pos = static_cast<std::size_t>(
            std::find_if(r.begin(), r.end(), [g](const Letter& l) { return l.generator == g; }) - r.begin());
        const Word rotated = rotate(r, pos);
        // rotated = g^e u, so g = u^-1 when e = +1 and g = u when e = -1.
        const Word u(rotated.begin() + 1, rotated.end());
        const Word value = rotated.front().exponent > 0 ? inverse(u) : u;
        GroupPresentation candidate = substitute(p, g, value, i);
        if (!found || candidate.total_length() < best.total_length()) {
          best = std::move(candidate);
          found = true;
        }
      }
    }
    if (!found) return p;
    p = std::move(best);
  }
}

GroupPresentation relabel_alphabetic(const GroupPresentation& p) {
  GroupPresentation out = p;
  for (int i = 0; i < p.generator_count(); ++i)
    out.names[i] = i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i);
  return out;
}

HomologyGroup abelianization(const GroupPresentation& p) {
  HomologyGroup h;
  const auto factors = smith_normal_form(exponent_matrix(p)).invariant_factors();
  h.free_rank = p.generator_count() - static_cast<int>(factors.size());
  for (const Integer& f : factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

namespace {

bool match_relators(const std::vector<Word>& a, const std::vector<Word>& b, std::vector<bool>& used, std::size_t i,
                    bool allow_inverse) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    const bool same = allow_inverse ? cyclically_equal_up_to_inverse(a[i], b[j]) : cyclically_equal(a[i], b[j]);
    if (!same) continue;
    used[j] = true;
    if (match_relators(a, b, used, i + 1, allow_inverse)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool equivalent_relators(const GroupPresentation& a, const GroupPresentation& b, bool allow_inverse) {
  if (a.generator_count() != b.generator_count() || a.relators.size() != b.relators.size()) return false;
  std::vector<int> perm(a.generator_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Word> renamed;
    for (const Word& r : a.relators) {
      Word w = r;
      for (Letter& l : w) l.generator = perm[l.generator];
      renamed.push_back(std::move(w));
    }
    std::vector<bool> used(b.relators.size(), false);
    if (match_relators(renamed, b.relators, used, 0, allow_inverse)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gtri
