#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace supergrade {

using Rational = mpq_class;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }
inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity flip(Parity p) { return is_odd(p) ? Parity::Even : Parity::Odd; }

// (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

inline const char* parity_name(Parity p) { return is_odd(p) ? "odd" : "even"; }

// Raised for violated preconditions and malformed input; carries a short
// machine-readable reason alongside the message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// mpq_class(num, den) does not canonicalize by itself.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "num/den", or "num" when den == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty scalar");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed scalar '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace supergrade
