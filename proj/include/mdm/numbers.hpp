#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace mdm {

// Exact arithmetic only. Every quantity in the library is an mpz/mpq value;
// nothing is ever rounded.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Canonical rendering: integers as "p", proper fractions as "p/q" with q > 0
// and gcd(p, q) = 1 (the mpq canonical form).
std::string show(const Int& z);
std::string show(const Rat& q);
std::string show_vec(const ZVec& v);
std::string show_vec(const QVec& v);

// Accepts "p" and "p/q"; throws ParseError on anything else or q = 0.
Rat parse_rational(const std::string& s);

QVec to_rational(const ZVec& v);
ZVec scale_to_integral(const QVec& v);  // v * lcm(denominators)
Int content(const ZVec& v);             // gcd of entries, >= 0
ZVec primitive(const ZVec& v);          // v / content, zero vector unchanged
ZVec primitive(const QVec& v);          // integral direction of v, content 1

bool is_zero_vec(const ZVec& v);
bool is_zero_vec(const QVec& v);

Int dot(const ZVec& a, const ZVec& b);
Rat dot(const ZVec& a, const QVec& b);
Rat dot(const QVec& a, const QVec& b);

QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& s);
ZVec negate(const ZVec& v);

// Strict lexicographic order; vectors must have equal length.
bool lex_less(const ZVec& a, const ZVec& b);
bool lex_less(const QVec& a, const QVec& b);

}  // namespace mdm
