#ifndef PBBS_RATIONAL_HPP
#define PBBS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "pbbs/errors.hpp"

namespace pbbs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Least positive integer that is an integer multiple of every x_i > 0.
// For reduced x = p/q this is lcm of the numerators p.
inline Int lcm_of_rationals(const std::vector<Rat>& xs) {
  Int z = 1;
  for (const Rat& x : xs) {
    if (!(x > 0)) throw inconsistency_error("lcm over rationals needs positive entries");
    z = lcm(z, numerator(x));
  }
  return z;
}

}  // namespace pbbs

#endif
