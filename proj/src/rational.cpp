#include "qbern/rational.hpp"

#include <stdexcept>

namespace qbern {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return make_rational(n, d);
}

Rational pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return pow(Rational(1) / x, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  // Powers of a reduced fraction stay reduced.
  return Rational(n, d);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool exact_root(const Rational& x, unsigned d, Rational& root) {
  if (x < 0 && d % 2 == 0) return false;
  Integer n, dn;
  const bool num_exact = mpz_root(n.get_mpz_t(), x.get_num_mpz_t(), d) != 0;
  const bool den_exact = mpz_root(dn.get_mpz_t(), x.get_den_mpz_t(), d) != 0;
  if (!num_exact || !den_exact) return false;
  root = Rational(n, dn);
  return true;
}

}  // namespace qbern
