#include "mdm/numbers.hpp"

#include <cctype>
#include <sstream>

#include "mdm/errors.hpp"

namespace mdm {

std::string show(const Int& z) { return z.str(); }

std::string show(const Rat& q) { return q.str(); }  // mpq prints "p" or "p/q" canonically

std::string show_vec(const ZVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string show_vec(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Rat parse_rational(const std::string& s) {
  // shape: -?digits(/-?digits)?  with nonzero denominator
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(s)) throw ParseError("not a rational: '" + s + "'");
    return Rat(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!digits(p) || !digits(q)) throw ParseError("not a rational: '" + s + "'");
  Int den(q);
  if (den == 0) throw ParseError("zero denominator: '" + s + "'");
  return Rat(Int(p), den);
}

QVec to_rational(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

ZVec scale_to_integral(const QVec& v) {
  Int l = 1;
  for (const auto& q : v) l = lcm(l, denominator(q));
  ZVec out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(numerator(q) * (l / denominator(q)));
  return out;
}

Int content(const ZVec& v) {
  Int g = 0;
  for (const auto& z : v) g = gcd(g, z);
  return g < 0 ? Int(-g) : g;
}

ZVec primitive(const ZVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  ZVec out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z / g);
  return out;
}

ZVec primitive(const QVec& v) { return primitive(scale_to_integral(v)); }

bool is_zero_vec(const ZVec& v) {
  for (const auto& z : v)
    if (z != 0) return false;
  return true;
}

bool is_zero_vec(const QVec& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

Int dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const ZVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  QVec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

QVec scale(const QVec& a, const Rat& s) {
  QVec out(a);
  for (auto& q : out) q *= s;
  return out;
}

ZVec negate(const ZVec& v) {
  ZVec out(v);
  for (auto& z : out) z = -z;
  return out;
}

bool lex_less(const ZVec& a, const ZVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace mdm
