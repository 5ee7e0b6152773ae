#include "qbern/context.hpp"

#include <stdexcept>
#include <string>

#include "qbern/errors.hpp"

namespace qbern {

QContext::QContext(Rational q, Rational root, unsigned root_index, Rational alpha, unsigned bits)
    : q_(std::move(q)),
      root_(std::move(root)),
      root_index_(root_index),
      alpha_(std::move(alpha)),
      precision_bits_(bits) {
  if (precision_bits_ < 16) throw std::invalid_argument("precision must be at least 16 bits");
}

namespace {

void check_parameters(const Rational& q, const Rational& alpha) {
  if (!(q > 0 && q < 1)) throw DomainError("q must satisfy 0 < q < 1, got " + to_string(q));
  if (!(alpha > -1)) throw DomainError("alpha must satisfy alpha > -1, got " + to_string(alpha));
}

}  // namespace

QContext QContext::from_q(const Rational& q, const Rational& alpha, unsigned precision_bits) {
  check_parameters(q, alpha);
  Rational root;
  if (exact_root(q, 4, root)) return QContext(q, root, 4, alpha, precision_bits);
  if (exact_root(q, 2, root)) return QContext(q, root, 2, alpha, precision_bits);
  return QContext(q, q, 1, alpha, precision_bits);
}

QContext QContext::from_quarter_root(const Rational& b, const Rational& alpha,
                                     unsigned precision_bits) {
  if (!(b > 0 && b < 1)) throw DomainError("q^(1/4) must satisfy 0 < b < 1, got " + to_string(b));
  const Rational q = qbern::pow(b, 4);
  check_parameters(q, alpha);
  return QContext(q, b, 4, alpha, precision_bits);
}

QContext QContext::reciprocal_base() const {
  return QContext(Rational(1) / q_, Rational(1) / root_, root_index_, alpha_, precision_bits_);
}

QContext QContext::with_alpha(const Rational& alpha) const {
  if (!(alpha > -1)) throw DomainError("alpha must satisfy alpha > -1, got " + to_string(alpha));
  return QContext(q_, root_, root_index_, alpha, precision_bits_);
}

QContext QContext::with_precision(unsigned precision_bits) const {
  return QContext(q_, root_, root_index_, alpha_, precision_bits);
}

bool QContext::exact_alpha() const { return is_integer(alpha_ * 4); }

void QContext::require_exact_alpha(const char* operation) const {
  if (!exact_alpha())
    throw ExactModeError(std::string(operation) + ": exact mode needs 4*alpha integral, alpha = " +
                         to_string(alpha_));
}

Rational QContext::pow_int(long n) const { return qbern::pow(q_, n); }

bool QContext::has_pow_quarters(long m) const {
  return (m * static_cast<long>(root_index_)) % 4 == 0;
}

Rational QContext::pow_quarters(long m) const {
  if (!has_pow_quarters(m))
    throw ExactModeError("q^(" + std::to_string(m) + "/4) is not rational for q = " + to_string(q_));
  return qbern::pow(root_, m * static_cast<long>(root_index_) / 4);
}

bool QContext::has_pow(const Rational& exponent) const {
  const Rational quarters = exponent * 4;
  return is_integer(quarters) && has_pow_quarters(quarters.get_num().get_si());
}

Rational QContext::pow(const Rational& exponent) const {
  const Rational quarters = exponent * 4;
  if (!is_integer(quarters))
    throw ExactModeError("q^(" + to_string(exponent) + ") needs a non-quarter power of q");
  return pow_quarters(quarters.get_num().get_si());
}

BigFloat QContext::pow_float(const Rational& exponent) const {
  const mpfr_prec_t wp = working_precision();
  if (has_pow(exponent)) return BigFloat(pow(exponent), wp);
  return qbern::pow(BigFloat(q_, wp), BigFloat(exponent, wp));
}

}  // namespace qbern
