// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace relgt {

/// Exact rational scalar. All tableau entries, action coefficients and
/// localization parameters live here; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Hypothesis-gate refusal (CLI exit code 1).
class domain_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (CLI exit code 2).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_integer(const Rational& a);

/// The integer a-b when a-b lies in Z, empty otherwise. Every arrow
/// condition on tableaux reduces to this primitive.
std::optional<Integer> integer_difference(const Rational& a, const Rational& b);

Integer floor_of(const Rational& a);

/// a - floor(a), in [0, 1). Two rationals differ by an integer exactly
/// when their fractional parts coincide.
Rational fractional_part(const Rational& a);

bool in_z(const Rational& a);
bool in_z_leq(const Rational& a, const Integer& m);
bool in_z_geq(const Rational& a, const Integer& m);
bool in_z_gt(const Rational& a, const Integer& m);
bool in_z_lt(const Rational& a, const Integer& m);

/// Canonical text form "p/q" with the "/q" omitted when q = 1.
std::string to_string(const Rational& a);

Rational parse_rational(std::string_view text);

/// Comma-separated rationals, e.g. "-1/6,-2/3,5/6".
std::vector<Rational> parse_rational_list(std::string_view csv);

} // namespace relgt
