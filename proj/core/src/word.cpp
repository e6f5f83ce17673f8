#include "counit/word.hpp"

#include <set>

namespace counit {

Alphabet::Alphabet(std::vector<std::string> n) : names(std::move(n)) {
  std::set<std::string> seen;
  for (const auto& s : names)
    if (!seen.insert(s).second) fail(errc::validation_error, "duplicate generator name " + s);
  if (names.size() > 4096) fail(errc::validation_error, "alphabet too large");
}

Alphabet Alphabet::matrix_generators(int rows, int cols, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(rows) * cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      names.push_back(stem + std::to_string(i) + "_" + std::to_string(j));
  return Alphabet(std::move(names));
}

Word Word::concat(const Word& o) const {
  Word r;
  r.l.reserve(l.size() + o.l.size());
  r.l.insert(r.l.end(), l.begin(), l.end());
  r.l.insert(r.l.end(), o.l.begin(), o.l.end());
  return r;
}

Word Word::subword(int from, int len) const {
  Word r;
  r.l.assign(l.begin() + from, l.begin() + from + len);
  return r;
}

int deglex_compare(const Word& a, const Word& b) {
  if (a.l.size() != b.l.size()) return a.l.size() < b.l.size() ? -1 : 1;
  for (size_t i = 0; i < a.l.size(); ++i)
    if (a.l[i] != b.l[i]) return a.l[i] < b.l[i] ? -1 : 1;
  return 0;
}

int find_subword(const Word& w, const Word& pat) {
  if (pat.l.empty()) return 0;
  if (pat.l.size() > w.l.size()) return -1;
  for (size_t i = 0; i + pat.l.size() <= w.l.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < pat.l.size(); ++j)
      if (w.l[i + j] != pat.l[j]) {
        ok = false;
        break;
      }
    if (ok) return static_cast<int>(i);
  }
  return -1;
}

bool ends_with(const Word& w, const Word& pat) {
  if (pat.l.size() > w.l.size()) return false;
  size_t off = w.l.size() - pat.l.size();
  for (size_t j = 0; j < pat.l.size(); ++j)
    if (w.l[off + j] != pat.l[j]) return false;
  return true;
}

std::string word_to_string(const Word& w, const Alphabet& a) {
  if (w.is_empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.l.size(); ++i) {
    if (i) s += "*";
    s += a.names.at(w.l[i]);
  }
  return s;
}

}  // namespace counit
