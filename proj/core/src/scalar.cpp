#include "counit/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace counit {

const char* field_kind_name(FieldKind k) {
  return k == FieldKind::rationals ? "rationals" : "rational-functions-in-q";
}

FieldKind field_kind_from_name(std::string_view name) {
  if (name == "rationals") return FieldKind::rationals;
  if (name == "rational-functions-in-q") return FieldKind::rational_functions_in_q;
  fail(errc::parse_error, "unknown field kind '" + std::string(name) + "'");
}

namespace poly {

static void normalize(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly zero() { return {}; }

IntPoly constant(const mpz_class& c) {
  if (c == 0) return {};
  return {c};
}

IntPoly monomial(const mpz_class& c, int deg) {
  if (c == 0) return {};
  IntPoly p(deg + 1, mpz_class(0));
  p[deg] = c;
  return p;
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const IntPoly& p) { return p.empty(); }

bool equal(const IntPoly& a, const IntPoly& b) { return a == b; }

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

IntPoly neg(const IntPoly& a) {
  IntPoly r(a);
  for (auto& c : r) c = -c;
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  normalize(r);
  return r;
}

mpz_class content(const IntPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly divexact_scalar(const IntPoly& a, const mpz_class& c) {
  IntPoly r(a);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) fail(errc::zero_inverse, "polynomial division by zero");
  if (a.empty()) return {};
  int da = degree(a), db = degree(b);
  if (da < db) fail(errc::parse_error, "inexact polynomial division");
  IntPoly rem(a);
  IntPoly quot(da - db + 1, mpz_class(0));
  const mpz_class& lb = b.back();
  for (int k = da - db; k >= 0; --k) {
    if (static_cast<int>(rem.size()) - 1 != k + db) continue;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
    quot[k] = c;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
    normalize(rem);
  }
  if (!rem.empty()) fail(errc::parse_error, "inexact polynomial division");
  normalize(quot);
  return quot;
}

// Pseudo-remainder of a by b (lead(b)^(da-db+1) * a mod b).
static IntPoly prem(IntPoly a, const IntPoly& b) {
  int db = degree(b);
  const mpz_class& lb = b.back();
  while (degree(a) >= db) {
    int k = degree(a) - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
    normalize(a);
    if (a.empty()) break;
  }
  return a;
}

static IntPoly primitive_part(const IntPoly& a) {
  if (a.empty()) return {};
  mpz_class c = content(a);
  IntPoly p = divexact_scalar(a, c);
  if (p.back() < 0) p = neg(p);
  return p;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.empty()) {
    if (b.empty()) return {};
    IntPoly r(b);
    if (r.back() < 0) r = neg(r);
    return r;
  }
  if (b.empty()) {
    IntPoly r(a);
    if (r.back() < 0) r = neg(r);
    return r;
  }
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  IntPoly u = primitive_part(a), v = primitive_part(b);
  if (degree(u) < degree(v)) std::swap(u, v);
  while (!v.empty()) {
    IntPoly r = prem(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  IntPoly g = primitive_part(u);
  for (auto& c : g) c *= cg;
  return g;
}

mpz_class eval_num_den(const IntPoly& p, const mpz_class& rn, const mpz_class& rd) {
  // Returns p(rn/rd) * rd^deg(p), an integer (rd-homogenized Horner).
  if (p.empty()) return 0;
  int d = degree(p);
  mpz_class acc = p[d], pw = 1;
  for (int i = d - 1; i >= 0; --i) {
    pw *= rd;
    acc = acc * rn + p[i] * pw;
  }
  return acc;
}

std::string to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (i != 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace poly

Scalar::Scalar(FieldKind k, IntPoly num, IntPoly den)
    : kind_(k), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void Scalar::canonicalize() {
  if (poly::is_zero(den_)) fail(errc::zero_inverse, "zero denominator");
  if (poly::is_zero(num_)) {
    den_ = poly::constant(1);
    return;
  }
  IntPoly g = poly::gcd(num_, den_);
  if (!(g.size() == 1 && g[0] == 1)) {
    num_ = poly::divexact(num_, g);
    den_ = poly::divexact(den_, g);
  }
  if (den_.back() < 0) {
    num_ = poly::neg(num_);
    den_ = poly::neg(den_);
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (kind_ != o.kind_)
    fail(errc::field_mismatch, "mixed-field arithmetic between " +
                                   std::string(field_kind_name(kind_)) + " and " +
                                   field_kind_name(o.kind_));
}

Scalar Scalar::zero(FieldKind k) { return Scalar(k, poly::zero(), poly::constant(1)); }
Scalar Scalar::one(FieldKind k) { return Scalar(k, poly::constant(1), poly::constant(1)); }

Scalar Scalar::integer(long v, FieldKind k) { return integer(mpz_class(v), k); }
Scalar Scalar::integer(const mpz_class& v, FieldKind k) {
  return Scalar(k, poly::constant(v), poly::constant(1));
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den, FieldKind k) {
  return Scalar(k, poly::constant(num), poly::constant(den));
}

Scalar Scalar::q() {
  return Scalar(FieldKind::rational_functions_in_q, poly::monomial(1, 1), poly::constant(1));
}

Scalar Scalar::q_power(int e) {
  if (e >= 0)
    return Scalar(FieldKind::rational_functions_in_q, poly::monomial(1, e), poly::constant(1));
  return Scalar(FieldKind::rational_functions_in_q, poly::constant(1), poly::monomial(1, -e));
}

Scalar Scalar::from_poly(IntPoly num, IntPoly den, FieldKind k) {
  if (k == FieldKind::rationals && (poly::degree(num) > 0 || poly::degree(den) > 0))
    fail(errc::field_mismatch, "nonconstant value over the rationals");
  return Scalar(k, std::move(num), std::move(den));
}

bool Scalar::is_one() const {
  return num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

bool Scalar::is_integer() const { return den_.size() == 1 && den_[0] == 1 && poly::degree(num_) <= 0; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (poly::equal(den_, o.den_))
    return Scalar(kind_, poly::add(num_, o.num_), den_);
  return Scalar(kind_, poly::add(poly::mul(num_, o.den_), poly::mul(o.num_, den_)),
                poly::mul(den_, o.den_));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (is_zero() || o.is_zero()) return zero(kind_);
  return Scalar(kind_, poly::mul(num_, o.num_), poly::mul(den_, o.den_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.num_ = poly::neg(r.num_);
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(errc::zero_inverse, "inverse of zero");
  return Scalar(kind_, den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return one(kind_);
  Scalar base = e < 0 ? inv() : *this;
  long n = e < 0 ? -e : e;
  Scalar acc = one(kind_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return poly::equal(num_, o.num_) && poly::equal(den_, o.den_);
}

Scalar Scalar::specialize(const Scalar& r) const {
  if (kind_ == FieldKind::rationals) return *this;
  if (r.kind() != FieldKind::rationals)
    fail(errc::field_mismatch, "specialization point must be rational");
  mpz_class rn = r.num().empty() ? mpz_class(0) : r.num()[0];
  mpz_class rd = r.den()[0];
  int dn = poly::degree(num_), dd = poly::degree(den_);
  mpz_class nv = poly::eval_num_den(num_, rn, rd);
  mpz_class dv = poly::eval_num_den(den_, rn, rd);
  if (dv == 0) fail(errc::zero_inverse, "denominator vanishes at specialization point");
  // num/den evaluated: (nv / rd^dn) / (dv / rd^dd) = nv * rd^dd / (dv * rd^dn)
  mpz_class a = nv, b = dv;
  for (int i = 0; i < dd; ++i) a *= rd;
  for (int i = 0; i < dn; ++i) b *= rd;
  return Scalar::fraction(a, b, FieldKind::rationals);
}

size_t Scalar::complexity() const {
  size_t s = 0;
  for (const auto& c : num_) s += mpz_size(c.get_mpz_t());
  for (const auto& c : den_) s += mpz_size(c.get_mpz_t());
  return s + 4 * (num_.size() + den_.size());
}

std::string Scalar::str() const {
  if (den_.size() == 1 && den_[0] == 1) return poly::to_string(num_);
  std::string n = poly::to_string(num_);
  std::string d = poly::to_string(den_);
  size_t nterms = 0;
  for (const auto& c : num_)
    if (c != 0) ++nterms;
  std::string out = nterms > 1 ? "(" + n + ")" : n;
  out += "/";
  // The denominator sits right of '/': anything that is not a single atomic
  // factor must be parenthesized to survive reparsing.
  bool atomic = d.find_first_of("+-*") == std::string::npos;
  out += atomic ? d : "(" + d + ")";
  return out;
}

// --- literal grammar parser -------------------------------------------------
//
// expr   := ['-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := base ['^' ['-'] integer]
// base   := integer | 'q' | '(' expr ')'

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;
  FieldKind kind;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void err(const std::string& msg) {
    fail(errc::parse_error, msg + " at offset " + std::to_string(pos) + " in scalar literal '" +
                                std::string(s) + "'");
  }

  Scalar parse_expr() {
    skip_ws();
    bool neg = eat('-');
    Scalar v = parse_term();
    if (neg) v = -v;
    for (;;) {
      skip_ws();
      if (eat('+'))
        v = v + parse_term();
      else if (eat('-'))
        v = v - parse_term();
      else
        return v;
    }
  }

  Scalar parse_term() {
    Scalar v = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        v = v * parse_factor();
      else if (eat('/')) {
        Scalar d = parse_factor();
        if (d.is_zero()) err("division by zero");
        v = v / d;
      } else
        return v;
    }
  }

  Scalar parse_factor() {
    Scalar b = parse_base();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      long e = parse_integer_digits();
      if (neg) e = -e;
      if (e < 0 && b.is_zero()) err("zero to a negative power");
      b = b.pow(e);
    }
    return b;
  }

  long parse_integer_digits() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected integer");
    return std::stol(std::string(s.substr(start, pos - start)));
  }

  Scalar parse_base() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar v = parse_expr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    if (c == 'q') {
      if (kind != FieldKind::rational_functions_in_q)
        err("'q' is not a value of the rational field");
      ++pos;
      return Scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Scalar::integer(mpz_class(std::string(s.substr(start, pos - start))), kind);
    }
    if (c == '-') {
      ++pos;
      return -parse_base();
    }
    err("unexpected character");
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text, FieldKind k) {
  Parser p{text, 0, k};
  Scalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing input");
  return v;
}

}  // namespace counit
