#ifndef HOMALG_RATIONAL_HPP
#define HOMALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homalg {

/// Exact rational scalar: arbitrary-precision integers, always kept in
/// lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" with q > 0. No decimals, no whitespace.
inline Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw parse_error("invalid rational '" + std::string(s) + "'"); };
  if (s.empty())
    bad();
  auto slash = s.find('/');
  auto check_int = [&](std::string_view t, bool allow_sign) {
    if (t.empty())
      bad();
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+'))
      i = 1;
    if (i == t.size())
      bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        bad();
  };
  if (slash == std::string_view::npos) {
    check_int(s, true);
    return Rational(Integer(std::string(s)));
  }
  auto num = s.substr(0, slash);
  auto den = s.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  Integer q{std::string(den)};
  if (q == 0)
    throw parse_error("zero denominator in '" + std::string(s) + "'");
  Integer p{std::string(num)};
  return Rational(p, q);
}

/// Formats as "p" or "p/q" with q > 0, lowest terms.
inline std::string format_rational(const Rational &r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1)
    s += "/" + denominator(r).str();
  return s;
}

} // namespace homalg

#endif
