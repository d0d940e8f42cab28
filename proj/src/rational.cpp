#include "tsym/rational.hpp"

#include <stdexcept>

namespace tsym {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(integer_from(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d = integer_from(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = Rational(integer_from(num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational frac_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm(l, v.get_den());
  return l;
}

Integer factorial(unsigned long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

Integer mod_floor(const Integer& a, const Integer& n) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& n) {
  Integer inv;
  if (n == 1) return 0;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw std::domain_error("no modular inverse");
  return inv;
}

bool fits_int64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

long long to_int64(const Integer& z) { return z.get_si(); }

}  // namespace tsym
