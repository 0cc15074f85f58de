#include "modnet/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "modnet/errors.hpp"

namespace modnet {
namespace {

// GMP's string constructor takes no leading '+'; base 10 is forced so that
// leading zeros are not read as octal.
std::string strip_plus(const std::string& s) {
  return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Rational pow10(long e) {
  Rational r = 1;
  mpz_class ten = 10;
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational inv(1, p);
  inv.canonicalize();
  return inv;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  if (token.empty()) throw DataError("empty numeric token");

  if (auto slash = token.find('/'); slash != std::string::npos) {
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
      throw DataError("bad rational token: " + token);
    }
    const mpz_class den_z(strip_plus(den), 10);
    if (den_z == 0) throw DataError("zero denominator: " + token);
    Rational r{mpz_class(strip_plus(num), 10), den_z};
    r.canonicalize();
    return r;
  }

  std::string mantissa = token;
  long exponent = 0;
  if (auto e = token.find_first_of("eE"); e != std::string::npos) {
    mantissa = token.substr(0, e);
    const std::string exp_str = token.substr(e + 1);
    char* end = nullptr;
    exponent = std::strtol(exp_str.c_str(), &end, 10);
    if (end == exp_str.c_str() || *end != '\0') {
      throw DataError("bad exponent in token: " + token);
    }
  }

  std::string digits = mantissa;
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!is_integer_token(digits)) throw DataError("bad numeric token: " + token);

  Rational r = Rational(mpz_class(strip_plus(digits), 10)) * pow10(exponent);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace modnet
