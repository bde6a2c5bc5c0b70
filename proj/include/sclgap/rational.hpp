#ifndef SCLGAP_RATIONAL_HPP_
#define SCLGAP_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace boost {
  // Boost 1.74's mixed rational == int recurses through C++20 rewritten
  // comparisons when the int is not the exact IntType; an exact
  // non-template match breaks the cycle.
  inline constexpr bool operator==(rational<std::int64_t> const& a, int b) {
    return a.denominator() == 1 && a.numerator() == b;
  }
}  // namespace boost

namespace sclgap {

  using Rational = boost::rational<std::int64_t>;

  inline Rational abs(Rational const& r) {
    return r < 0 ? -r : r;
  }

  inline bool is_integral(Rational const& r) {
    return r.denominator() == 1;
  }

  // "p/q", or "p" when the denominator is one.
  inline std::string to_string(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

}  // namespace sclgap

#endif  // SCLGAP_RATIONAL_HPP_
