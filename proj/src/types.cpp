#include "minklen/types.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace minklen {

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

Integer lcm(Integer a, Integer b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

namespace {

Integer narrow(const BigInt& z) {
  if (z > std::numeric_limits<Integer>::max() ||
      z < std::numeric_limits<Integer>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits");
  }
  return z.convert_to<Integer>();
}

}  // namespace

Integer floor_to_integer(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return narrow(quot);
}

Integer ceil_to_integer(const Rational& q) { return -floor_to_integer(-q); }

Integer numerator_int(const Rational& q) {
  return narrow(boost::multiprecision::numerator(q));
}

Integer denominator_int(const Rational& q) {
  return narrow(boost::multiprecision::denominator(q));
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) {
    out << '/' << boost::multiprecision::denominator(q);
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

RationalPoint to_rational(const LatticePoint& p) {
  return RationalPoint(p.begin(), p.end());
}

bool is_integral(const RationalPoint& p) {
  for (const auto& x : p) {
    if (boost::multiprecision::denominator(x) != 1) return false;
  }
  return true;
}

LatticePoint to_lattice(const RationalPoint& p) {
  LatticePoint out;
  out.reserve(p.size());
  for (const auto& x : p) {
    if (boost::multiprecision::denominator(x) != 1) {
      throw std::invalid_argument("point is not integral");
    }
    out.push_back(numerator_int(x));
  }
  return out;
}

Integer dot(const LatticePoint& a, const LatticePoint& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint scale(const LatticePoint& a, Integer k) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace minklen
