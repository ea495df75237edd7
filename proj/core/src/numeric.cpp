#include "tcs/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace tcs {

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) s += Rat(a[i]) * b[i];
  }
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scaled(const Int& c, const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

IntVec negated(const IntVec& v) { return scaled(-1, v); }

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

IntVec combine(const Int& a, const IntVec& x, const Int& b, const IntVec& y) {
  IntVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

IntVec primitive_of_rational(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) {
    Int d = x.get_den();
    Int g = gcd(lcm, d);
    lcm = lcm / g * d;
  }
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(lcm);
    r[i] = s.get_num();
  }
  make_primitive(r);
  return r;
}

RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

int compare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpq_class q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rat(q);
}

std::optional<Int> parse_integer(const std::string& s) {
  if (s.empty()) return std::nullopt;
  mpz_class z;
  if (z.set_str(s, 10) != 0) return std::nullopt;
  return Int(z);
}

std::optional<RatVec> parse_point(const std::string& s) {
  RatVec out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ',')) {
    // trim spaces
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) return std::nullopt;
    auto q = parse_rational(cur.substr(b, e - b + 1));
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  if (out.empty() && !s.empty()) return std::nullopt;
  return out;
}

}  // namespace tcs
