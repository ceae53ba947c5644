#ifndef PENCILLAB_RATIONAL_HPP
#define PENCILLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "pencillab/error.hpp"

namespace pencillab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. The backend keeps values canonical: positive
/// denominator, gcd(|num|, den) = 1, zero stored as 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign(const Rat& x) { return x.sign(); }

inline Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// num/den with the sign moved into the numerator; den must be nonzero.
inline Rat make_rat(BigInt num, BigInt den) {
  if (den == 0) throw Error("bad-rational", "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

/// Parses "p", "p/q", with optional sign; q must be nonzero.
inline Rat parse_rat(std::string_view text) {
  const auto bad = [&] {
    return Error("bad-rational", "cannot parse rational from '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(BigInt(std::string(text)));
    }
    const BigInt num{std::string(text.substr(0, slash))};
    const BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw bad();
    return make_rat(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rat& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Exact square root when x is a perfect square of a rational; nullopt otherwise.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rat(0);
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn, rd);
}

}  // namespace pencillab

#endif
