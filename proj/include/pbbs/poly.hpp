#ifndef PBBS_POLY_HPP
#define PBBS_POLY_HPP

#include <vector>

#include "pbbs/bigfloat.hpp"

namespace pbbs {

// Dense polynomial over BigFloat, coeffs[k] multiplying lambda^k.
struct Poly {
  std::vector<BigFloat> coeffs;

  Poly() = default;
  explicit Poly(std::vector<BigFloat> c) : coeffs(std::move(c)) {}
  static Poly constant(const BigFloat& c) { return Poly({c}); }

  int64_t degree() const { return static_cast<int64_t>(coeffs.size()) - 1; }
  BigFloat eval(const BigFloat& x) const;  // Horner
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const BigFloat& c);
// (lambda - a) * p
Poly shift_mul(const Poly& p, const BigFloat& a);
Poly add_constant(const Poly& p, const BigFloat& c);
Poly derivative(const Poly& p);

}  // namespace pbbs

#endif
