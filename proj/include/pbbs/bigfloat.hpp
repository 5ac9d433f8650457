#ifndef PBBS_BIGFLOAT_HPP
#define PBBS_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>

namespace pbbs {

// MPFR-backed real with runtime precision.  Expression templates are off so
// every temporary carries the thread-local default precision.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

// Sets the default precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Recommended working precision for a state of size L at parameter eps:
// coefficients span a dynamic range of about e^{-L/eps}, kept with headroom.
inline unsigned recommended_prec(int64_t L, double eps, unsigned cap = 8192) {
  double bits = 4.0 * static_cast<double>(L) / (eps * std::log(2.0));
  unsigned p = static_cast<unsigned>(bits) + 64;
  if (p < 256) p = 256;
  if (cap && p > cap) p = cap;
  return p;
}

}  // namespace pbbs

#endif
