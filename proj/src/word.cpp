#include "gtri/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gtri {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out(w);
  std::rotate(out.begin(), out.begin() + static_cast<long>(k % w.size()), out.end());
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int exponent_sum(const Word& w, int g) {
  int s = 0;
  for (const Letter& l : w)
    if (l.generator == g) s += l.exponent;
  return s;
}

int occurrences(const Word& w, int g) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [g](const Letter& l) { return l.generator == g; }));
}

bool cyclically_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (rotate(a, k) == b) return true;
  return false;
}

bool cyclically_equal_up_to_inverse(const Word& a, const Word& b) {
  return cyclically_equal(a, b) || cyclically_equal(inverse(a), b);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long power = static_cast<long>(j - i) * w[i].exponent;
    if (!out.empty()) out += ' ';
    out += names.at(w[i].generator);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "1") continue;
    long power = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      std::string_view exp = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
      if (ec != std::errc() || ptr != exp.data() + exp.size())
        throw std::invalid_argument("bad exponent in '" + std::string(tok) + "'");
      tok = tok.substr(0, caret);
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw std::invalid_argument("unknown generator '" + std::string(tok) + "'");
    const int g = static_cast<int>(it - names.begin());
    for (long k = 0; k < (power < 0 ? -power : power); ++k) out.push_back({g, power < 0 ? -1 : 1});
  }
  return out;
}

}  // namespace gtri
