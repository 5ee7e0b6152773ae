#include "qbern/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbern {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t precision) {
  if (text.find('/') != std::string::npos) return BigFloat(parse_rational(text), precision);
  BigFloat out(precision);
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0')
    throw std::invalid_argument("malformed number: '" + text + "'");
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid 2-bit zero; mpfr_swap exchanges precisions too.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(mpfr_prec_t precision) const {
  BigFloat out(precision);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target))
    mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

int BigFloat::decimal_digits() const {
  return static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
}

std::string BigFloat::to_decimal(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant[0] == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  // mant = d1 d2 ... with value 0.d1d2... * 10^exp10
  out.push_back(mant[0]);
  std::string frac = mant.substr(1);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) {
    out.push_back('.');
    out += frac;
  }
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

std::string BigFloat::to_tagged_string() const {
  return to_decimal(decimal_digits()) + "@" + std::to_string(precision()) + "b";
}

std::optional<long> BigFloat::exponent2() const {
  if (is_zero() || !is_finite()) return std::nullopt;
  return static_cast<long>(mpfr_get_exp(value_));
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat out(x.precision());
  mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, const BigFloat& e) {
  BigFloat out(std::max(x.precision(), e.precision()));
  mpfr_pow(out.get(), x.get(), e.get(), MPFR_RNDN);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat ldexp2(long e, mpfr_prec_t precision) {
  BigFloat out(1, precision);
  mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

std::optional<int> Enclosure::certain_sign() const {
  if (abs(mid) > rad) return mid.sign();
  return std::nullopt;
}

}  // namespace qbern
