// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#include "relgt/scalar.hpp"

#include <cctype>

namespace relgt {

bool is_integer(const Rational& a) { return denominator(a) == 1; }

std::optional<Integer> integer_difference(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (denominator(d) != 1) return std::nullopt;
  return numerator(d);
}

Integer floor_of(const Rational& a) {
  Integer p = numerator(a);
  Integer q = denominator(a); // q > 0 in canonical form
  Integer quot = p / q;
  if (p % q != 0 && p < 0) --quot;
  return quot;
}

Rational fractional_part(const Rational& a) { return a - Rational(floor_of(a)); }

bool in_z(const Rational& a) { return is_integer(a); }

bool in_z_leq(const Rational& a, const Integer& m) {
  return is_integer(a) && numerator(a) <= m;
}

bool in_z_geq(const Rational& a, const Integer& m) {
  return is_integer(a) && numerator(a) >= m;
}

bool in_z_gt(const Rational& a, const Integer& m) {
  return is_integer(a) && numerator(a) > m;
}

bool in_z_lt(const Rational& a, const Integer& m) {
  return is_integer(a) && numerator(a) < m;
}

std::string to_string(const Rational& a) {
  std::string s = numerator(a).str();
  if (denominator(a) != 1) {
    s += '/';
    s += denominator(a).str();
  }
  return s;
}

namespace {

bool valid_integer_token(std::string_view t) {
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw parse_error("empty rational");
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  num = trim(num);
  if (!valid_integer_token(num))
    throw parse_error("malformed rational: '" + std::string(text) + "'");
  Integer p{std::string(num)};
  if (slash == std::string_view::npos) return Rational(p);
  std::string_view den = trim(s.substr(slash + 1));
  if (!valid_integer_token(den) || den.front() == '-' || den.front() == '+')
    throw parse_error("malformed rational: '" + std::string(text) + "'");
  Integer q{std::string(den)};
  if (q == 0) throw parse_error("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    std::string_view tok =
        comma == std::string_view::npos ? csv.substr(start) : csv.substr(start, comma - start);
    out.push_back(parse_rational(tok));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

} // namespace relgt
