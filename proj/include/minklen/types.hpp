#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace minklen {

using Integer = std::int64_t;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using LatticePoint = std::vector<Integer>;
using RationalPoint = std::vector<Rational>;

/// Thrown when a configured resource cap (lattice points, dilates, budget
/// size) would be exceeded. The CLI maps it to exit code 3.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer gcd(Integer a, Integer b);
Integer lcm(Integer a, Integer b);

Integer floor_to_integer(const Rational& q);
Integer ceil_to_integer(const Rational& q);
Integer numerator_int(const Rational& q);
Integer denominator_int(const Rational& q);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

RationalPoint to_rational(const LatticePoint& p);
bool is_integral(const RationalPoint& p);
LatticePoint to_lattice(const RationalPoint& p);

Integer dot(const LatticePoint& a, const LatticePoint& b);
LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint scale(const LatticePoint& a, Integer k);

std::string to_string(const LatticePoint& p);

}  // namespace minklen
