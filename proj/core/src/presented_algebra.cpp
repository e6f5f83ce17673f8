#include "counit/presented_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace counit {

namespace {

struct RuleIndex {
  // rule indices by first / last letter of lhs
  std::vector<std::vector<int>> by_first, by_last;

  void rebuild(const std::vector<RewriteRule>& rules, size_t nletters) {
    by_first.assign(nletters, {});
    by_last.assign(nletters, {});
    for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
      by_first[rules[i].lhs.l.front()].push_back(i);
      by_last[rules[i].lhs.l.back()].push_back(i);
    }
  }
};

// One reduction step: find the leftmost rule occurrence in w (ties broken by
// rule order), or -1. Returns (position, rule index).
std::pair<int, int> find_occurrence(const Word& w, const std::vector<RewriteRule>& rules,
                                    const RuleIndex& idx) {
  for (size_t p = 0; p < w.l.size(); ++p) {
    int best = -1;
    for (int ri : idx.by_first[w.l[p]]) {
      const Word& lhs = rules[ri].lhs;
      if (p + lhs.l.size() > w.l.size()) continue;
      bool ok = true;
      for (size_t j = 1; j < lhs.l.size(); ++j)
        if (w.l[p + j] != lhs.l[j]) {
          ok = false;
          break;
        }
      if (ok) {
        best = ri;
        break;  // by_first lists are in rule order; first match wins
      }
    }
    if (best >= 0) return {static_cast<int>(p), best};
  }
  return {-1, -1};
}

NCPoly reduce_full(NCPoly p, const std::vector<RewriteRule>& rules, const RuleIndex& idx,
                   std::atomic<uint64_t>* steps) {
  NCPoly::Terms work(p.terms().begin(), p.terms().end(), DeglexLess{});
  NCPoly result(p.kind());
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    auto [pos, ri] = find_occurrence(w, rules, idx);
    if (ri < 0) {
      result.add_term(w, c);
      continue;
    }
    if (steps) steps->fetch_add(1, std::memory_order_relaxed);
    const RewriteRule& r = rules[ri];
    Word x = w.subword(0, pos);
    Word y = w.subword(pos + r.lhs.size(), w.size() - pos - r.lhs.size());
    for (const auto& [rw, rc] : r.rhs.terms()) {
      Word nw = x.concat(rw).concat(y);
      Scalar nc = c * rc;
      auto [jt, inserted] = work.try_emplace(nw, nc);
      if (!inserted) {
        jt->second += nc;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return result;
}

struct PendingLess {
  bool operator()(const NCPoly& a, const NCPoly& b) const { return ncpoly_compare(a, b) < 0; }
};

NCPoly rule_polynomial(const RewriteRule& r, FieldKind k) {
  NCPoly p = NCPoly::word(r.lhs, k);
  p -= r.rhs;
  return p;
}

}  // namespace

PresentedAlgebra& PresentedAlgebra::operator=(const PresentedAlgebra& o) {
  if (this == &o) return *this;
  alphabet_ = o.alphabet_;
  kind_ = o.kind_;
  relations_ = o.relations_;
  D_ = o.D_;
  certified_ = o.certified_;
  zero_algebra_ = o.zero_algebra_;
  rules_ = o.rules_;
  filtration_dims_ = o.filtration_dims_;
  rules_by_first_ = o.rules_by_first_;
  rules_by_last_ = o.rules_by_last_;
  reduction_steps_.store(o.reduction_steps_.load());
  return *this;
}

PresentedAlgebra& PresentedAlgebra::operator=(PresentedAlgebra&& o) noexcept {
  if (this == &o) return *this;
  alphabet_ = std::move(o.alphabet_);
  kind_ = o.kind_;
  relations_ = std::move(o.relations_);
  D_ = o.D_;
  certified_ = o.certified_;
  zero_algebra_ = o.zero_algebra_;
  rules_ = std::move(o.rules_);
  filtration_dims_ = std::move(o.filtration_dims_);
  rules_by_first_ = std::move(o.rules_by_first_);
  rules_by_last_ = std::move(o.rules_by_last_);
  reduction_steps_.store(o.reduction_steps_.load());
  return *this;
}

void PresentedAlgebra::index_rules() {
  RuleIndex idx;
  idx.rebuild(rules_, alphabet_.size());
  rules_by_first_ = std::move(idx.by_first);
  rules_by_last_ = std::move(idx.by_last);
}

PresentedAlgebra PresentedAlgebra::complete(Alphabet alphabet, std::vector<NCPoly> relations,
                                            int D) {
  PresentedAlgebra A;
  A.alphabet_ = std::move(alphabet);
  A.D_ = D;
  if (D < 1) fail(errc::validation_error, "truncation degree must be >= 1");
  A.kind_ = relations.empty() ? FieldKind::rationals : relations.front().kind();
  for (const auto& r : relations) {
    if (r.is_zero()) fail(errc::validation_error, "zero relation");
    if (r.kind() != A.kind_) fail(errc::field_mismatch, "relations over different fields");
    if (r.degree() > D) fail(errc::degree_out_of_range, "relation degree exceeds truncation");
    for (const auto& [w, c] : r.terms())
      for (Letter g : w.l)
        if (g >= A.alphabet_.size()) fail(errc::validation_error, "letter outside alphabet");
  }
  A.relations_ = relations;

  std::multiset<NCPoly, PendingLess> pending(relations.begin(), relations.end());
  std::vector<RewriteRule>& rules = A.rules_;
  RuleIndex idx;
  idx.rebuild(rules, A.alphabet_.size());

  auto enqueue_overlaps = [&](const RewriteRule& a, const RewriteRule& b) {
    // suffix of a.lhs == prefix of b.lhs, overlap word a.lhs + b.lhs - v
    int la = a.lhs.size(), lb = b.lhs.size();
    for (int v = 1; v <= std::min(la, lb); ++v) {
      if (la + lb - v > A.D_) continue;
      bool match = true;
      for (int j = 0; j < v; ++j)
        if (a.lhs.l[la - v + j] != b.lhs.l[j]) {
          match = false;
          break;
        }
      if (!match) continue;
      if (v == la && v == lb) continue;  // identical words, trivial ambiguity
      Word x = a.lhs.subword(0, la - v);
      Word y = b.lhs.subword(v, lb - v);
      NCPoly s = a.rhs.framed(Word::empty(), y);
      s -= b.rhs.framed(x, Word::empty());
      if (!s.is_zero()) pending.insert(std::move(s));
    }
  };

  auto process_pending = [&]() {
    while (!pending.empty() && !A.zero_algebra_) {
      NCPoly p = *pending.begin();
      pending.erase(pending.begin());
      p = reduce_full(std::move(p), rules, idx, &A.reduction_steps_);
      if (p.is_zero()) continue;
      if (p.degree() == 0) {
        A.zero_algebra_ = true;
        break;
      }
      p = p.scaled(p.leading_coeff().inv());
      RewriteRule nr;
      nr.lhs = p.leading_word();
      NCPoly rest = p;
      rest.add_term(nr.lhs, -Scalar::one(A.kind_));
      nr.rhs = -rest;

      // Evict rules whose lhs became reducible; their polynomials re-enter.
      for (size_t i = rules.size(); i-- > 0;) {
        if (find_subword(rules[i].lhs, nr.lhs) >= 0) {
          pending.insert(rule_polynomial(rules[i], A.kind_));
          rules.erase(rules.begin() + i);
        }
      }
      auto at = std::upper_bound(
          rules.begin(), rules.end(), nr,
          [](const RewriteRule& x, const RewriteRule& y) { return deglex_compare(x.lhs, y.lhs) < 0; });
      rules.insert(at, nr);
      idx.rebuild(rules, A.alphabet_.size());

      // Keep right-hand sides reduced w.r.t. the current set.
      for (auto& r : rules) {
        bool touch = false;
        for (const auto& [w, c] : r.rhs.terms())
          if (find_subword(w, nr.lhs) >= 0) {
            touch = true;
            break;
          }
        if (touch) r.rhs = reduce_full(r.rhs, rules, idx, &A.reduction_steps_);
      }

      for (const auto& r : rules) {
        enqueue_overlaps(r, nr);
        if (deglex_compare(r.lhs, nr.lhs) != 0) enqueue_overlaps(nr, r);
      }
      enqueue_overlaps(nr, nr);
    }
  };

  // Completion with a confluence sweep at the end; eviction during
  // inter-reduction can orphan previously resolved ambiguities, so the sweep
  // re-checks every overlap of the final set and feeds survivors back in.
  for (int round = 0; round < 64; ++round) {
    process_pending();
    if (A.zero_algebra_) break;
    std::multiset<NCPoly, PendingLess> leftovers;
    for (const auto& a : rules)
      for (const auto& b : rules) {
        int la = a.lhs.size(), lb = b.lhs.size();
        for (int v = 1; v <= std::min(la, lb); ++v) {
          if (la + lb - v > A.D_) continue;
          bool match = true;
          for (int j = 0; j < v; ++j)
            if (a.lhs.l[la - v + j] != b.lhs.l[j]) {
              match = false;
              break;
            }
          if (!match) continue;
          if (v == la && v == lb) continue;
          Word x = a.lhs.subword(0, la - v);
          Word y = b.lhs.subword(v, lb - v);
          NCPoly s = a.rhs.framed(Word::empty(), y);
          s -= b.rhs.framed(x, Word::empty());
          s = reduce_full(std::move(s), rules, idx, &A.reduction_steps_);
          if (!s.is_zero()) leftovers.insert(std::move(s));
        }
      }
    if (leftovers.empty()) break;
    for (auto& s : leftovers) pending.insert(s);
    if (round == 63) fail(errc::validation_error, "completion failed to stabilize");
  }

  A.certified_ = D;
  A.index_rules();

  // Slice dimensions by counting irreducible words degree by degree.
  A.filtration_dims_.assign(D + 1, 0);
  if (!A.zero_algebra_) {
    std::vector<Word> layer{Word::empty()};
    A.filtration_dims_[0] = 1;
    for (int d = 1; d <= D; ++d) {
      std::vector<Word> next;
      for (const auto& w : layer)
        for (Letter g = 0; g < A.alphabet_.size(); ++g) {
          Word e = w;
          e.l.push_back(g);
          bool reducible = false;
          for (int ri : A.rules_by_last_[g])
            if (ends_with(e, rules[ri].lhs)) {
              reducible = true;
              break;
            }
          if (!reducible) next.push_back(std::move(e));
        }
      A.filtration_dims_[d] = static_cast<long>(next.size());
      layer = std::move(next);
    }
  }
  return A;
}

int PresentedAlgebra::max_rule_degree() const {
  int m = 0;
  for (const auto& r : rules_) m = std::max(m, r.lhs.size());
  return m;
}

void PresentedAlgebra::check_degree(int d, const char* what) const {
  if (d > certified_)
    fail(errc::degree_out_of_range, std::string(what) + " needs degree " + std::to_string(d) +
                                        " but certified range is " + std::to_string(certified_));
}

NCPoly PresentedAlgebra::reduce(NCPoly p) const {
  RuleIndex idx;
  idx.by_first = rules_by_first_;
  idx.by_last = rules_by_last_;
  return reduce_full(std::move(p), rules_, idx, &reduction_steps_);
}

NCPoly PresentedAlgebra::normal_form(const NCPoly& p) const {
  if (p.kind() != kind_) fail(errc::field_mismatch, "normal form across fields");
  if (zero_algebra_) return NCPoly::zero(kind_);
  check_degree(p.degree(), "normal_form");
  return reduce(p);
}

bool PresentedAlgebra::is_normal_word(const Word& w) const {
  if (zero_algebra_) return false;
  for (size_t p = 0; p < w.l.size(); ++p)
    for (int ri : rules_by_first_[w.l[p]]) {
      const Word& lhs = rules_[ri].lhs;
      if (p + lhs.l.size() > w.l.size()) continue;
      bool ok = true;
      for (size_t j = 1; j < lhs.l.size(); ++j)
        if (w.l[p + j] != lhs.l[j]) {
          ok = false;
          break;
        }
      if (ok) return false;
    }
  return true;
}

std::vector<Word> PresentedAlgebra::filtration_basis(int d) const {
  check_degree(d, "filtration_basis");
  if (d < 0) fail(errc::degree_out_of_range, "negative degree");
  std::vector<Word> layer;
  if (zero_algebra_) return layer;
  layer.push_back(Word::empty());
  for (int k = 1; k <= d; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter g = 0; g < alphabet_.size(); ++g) {
        Word e = w;
        e.l.push_back(g);
        bool reducible = false;
        for (int ri : rules_by_last_[g])
          if (ends_with(e, rules_[ri].lhs)) {
            reducible = true;
            break;
          }
        if (!reducible) next.push_back(std::move(e));
      }
    layer = std::move(next);
  }
  return layer;
}

std::vector<Word> PresentedAlgebra::basis_upto(int d) const {
  std::vector<Word> all;
  for (int k = 0; k <= d; ++k) {
    auto layer = filtration_basis(k);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

long PresentedAlgebra::dim_upto(int d) const {
  check_degree(d, "dim_upto");
  long s = 0;
  for (int k = 0; k <= d && k < static_cast<int>(filtration_dims_.size()); ++k)
    s += filtration_dims_[k];
  return s;
}

NCPoly PresentedAlgebra::mul_nf(const NCPoly& a, const NCPoly& b) const {
  if (a.is_zero() || b.is_zero()) return NCPoly::zero(kind_);
  check_degree(a.degree() + b.degree(), "mul_nf");
  return normal_form(a * b);
}

// --- serialization ----------------------------------------------------------

namespace {

std::string poly_to_text(const NCPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) os << ";";
    first = false;
    os << c.str() << "|";
    if (w.is_empty())
      os << "-";
    else
      for (size_t i = 0; i < w.l.size(); ++i) {
        if (i) os << ".";
        os << w.l[i];
      }
  }
  return os.str();
}

NCPoly poly_from_text(const std::string& text, FieldKind k) {
  NCPoly p(k);
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, ';')) {
    auto bar = term.find('|');
    if (bar == std::string::npos) fail(errc::corrupt_cache, "bad polynomial term");
    Scalar c = Scalar::parse(term.substr(0, bar), k);
    std::string wtxt = term.substr(bar + 1);
    Word w;
    if (wtxt != "-") {
      std::stringstream ws(wtxt);
      std::string tok;
      while (std::getline(ws, tok, '.')) w.l.push_back(static_cast<Letter>(std::stoul(tok)));
    }
    p.add_term(w, c);
  }
  return p;
}

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

uint64_t PresentedAlgebra::relations_hash() const {
  std::ostringstream os;
  os << field_kind_name(kind_) << "\n";
  for (const auto& n : alphabet_.names) os << n << " ";
  os << "\nD " << D_ << "\n";
  for (const auto& r : relations_) os << poly_to_text(r) << "\n";
  return fnv1a(os.str());
}

std::string PresentedAlgebra::serialize() const {
  std::ostringstream os;
  os << "counit-gb 1\n";
  os << "field " << field_kind_name(kind_) << "\n";
  os << "alphabet " << alphabet_.size();
  for (const auto& n : alphabet_.names) os << " " << n;
  os << "\nD " << D_ << "\ncertified " << certified_ << "\nzero " << (zero_algebra_ ? 1 : 0)
     << "\ndims";
  for (long d : filtration_dims_) os << " " << d;
  os << "\nrelations " << relations_.size() << "\n";
  for (const auto& r : relations_) os << poly_to_text(r) << "\n";
  os << "rules " << rules_.size() << "\n";
  for (const auto& r : rules_) {
    for (size_t i = 0; i < r.lhs.l.size(); ++i) {
      if (i) os << ".";
      os << r.lhs.l[i];
    }
    os << " -> " << poly_to_text(r.rhs) << "\n";
  }
  return os.str();
}

PresentedAlgebra PresentedAlgebra::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "counit-gb") fail(errc::corrupt_cache, "bad cache header");
  if (version != 1) fail(errc::cache_version_mismatch, "cache version " + std::to_string(version));
  PresentedAlgebra A;
  std::string key, fieldname;
  is >> key >> fieldname;
  if (key != "field") fail(errc::corrupt_cache, "missing field");
  A.kind_ = field_kind_from_name(fieldname);
  size_t nletters = 0;
  is >> key >> nletters;
  if (key != "alphabet") fail(errc::corrupt_cache, "missing alphabet");
  std::vector<std::string> names(nletters);
  for (auto& n : names) is >> n;
  A.alphabet_ = Alphabet(std::move(names));
  int zero = 0;
  is >> key >> A.D_;
  if (key != "D") fail(errc::corrupt_cache, "missing D");
  is >> key >> A.certified_;
  if (key != "certified") fail(errc::corrupt_cache, "missing certified");
  is >> key >> zero;
  if (key != "zero") fail(errc::corrupt_cache, "missing zero flag");
  A.zero_algebra_ = zero != 0;
  is >> key;
  if (key != "dims") fail(errc::corrupt_cache, "missing dims");
  A.filtration_dims_.assign(A.D_ + 1, 0);
  for (auto& d : A.filtration_dims_) is >> d;
  size_t nrel = 0;
  is >> key >> nrel;
  if (key != "relations") fail(errc::corrupt_cache, "missing relations");
  is.ignore();
  for (size_t i = 0; i < nrel; ++i) {
    std::string line;
    std::getline(is, line);
    A.relations_.push_back(poly_from_text(line, A.kind_));
  }
  size_t nrules = 0;
  is >> key >> nrules;
  if (key != "rules") fail(errc::corrupt_cache, "missing rules");
  is.ignore();
  for (size_t i = 0; i < nrules; ++i) {
    std::string line;
    std::getline(is, line);
    auto arrow = line.find(" -> ");
    if (arrow == std::string::npos) fail(errc::corrupt_cache, "bad rule line");
    RewriteRule r;
    std::stringstream ws(line.substr(0, arrow));
    std::string tok;
    while (std::getline(ws, tok, '.')) r.lhs.l.push_back(static_cast<Letter>(std::stoul(tok)));
    r.rhs = poly_from_text(line.substr(arrow + 4), A.kind_);
    A.rules_.push_back(std::move(r));
  }
  A.index_rules();
  return A;
}

}  // namespace counit
