#ifndef PBBS_ROOTS_HPP
#define PBBS_ROOTS_HPP

#include <vector>

#include "pbbs/curve.hpp"
#include "pbbs/tropical.hpp"

namespace pbbs {

// Spectrum of the curve: roots of Delta (lam), of Delta^2 - 4m^2 split into
// the lower/upper band edges (lam_minus[j] < lam[j] < lam_plus[j]) and the
// auxiliary spectrum mu (roots of y_{N+1}).  All ascending.
struct RootSet {
  std::vector<BigFloat> lam;
  std::vector<BigFloat> lam_minus;
  std::vector<BigFloat> lam_plus;
  std::vector<BigFloat> mu;

  std::vector<BigFloat> lam_pm() const;  // interleaved ascending, size 2N
};

// Isolates all `vals.size()` positive simple roots of p.  `vals` are the
// predicted -eps*log valuations in descending order (ascending roots);
// they seed geometric bracketing windows.  Roots are refined to relative
// tolerance 2^-(prec/2) by bracketed bisection with Newton acceleration.
std::vector<BigFloat> isolate_positive_roots(const Poly& p, const std::vector<double>& vals,
                                             double eps, unsigned prec);

// Full spectrum with tropical seeding; asserts positivity, simplicity,
// interlacing and the alternating band-edge pattern.
RootSet find_roots(const SpectralCurve& c, const UltraInvariants& hint);

}  // namespace pbbs

#endif
