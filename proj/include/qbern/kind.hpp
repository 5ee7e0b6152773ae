#pragma once

#include <stdexcept>
#include <string>

namespace qbern {

/// Which of the three generalized q-Bernoulli families: the generating
/// function uses e_q / E_q / exp_q and the first / second / third Jackson
/// q-Bessel function respectively.
enum class Kind : int { first = 1, second = 2, third = 3 };

/// The three q-exponentials.
enum class QExpFamily { e_q, E_q, exp_q };

inline Kind kind_from_int(int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("kind must be 1, 2 or 3, got " + std::to_string(k));
  return static_cast<Kind>(k);
}

inline int to_int(Kind k) { return static_cast<int>(k); }

inline QExpFamily exp_family(Kind k) {
  switch (k) {
    case Kind::first: return QExpFamily::e_q;
    case Kind::second: return QExpFamily::E_q;
    case Kind::third: return QExpFamily::exp_q;
  }
  throw std::invalid_argument("bad kind");
}

}  // namespace qbern
