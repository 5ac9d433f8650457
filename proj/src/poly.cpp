#include "pbbs/poly.hpp"

namespace pbbs {

BigFloat Poly::eval(const BigFloat& x) const {
  if (coeffs.empty()) return BigFloat(0);
  BigFloat acc = coeffs.back();
  for (int64_t k = static_cast<int64_t>(coeffs.size()) - 2; k >= 0; --k)
    acc = acc * x + coeffs[k];
  return acc;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), BigFloat(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), BigFloat(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

Poly scale(const Poly& a, const BigFloat& c) {
  Poly out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

Poly shift_mul(const Poly& p, const BigFloat& a) {
  Poly out;
  out.coeffs.assign(p.coeffs.size() + 1, BigFloat(0));
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    out.coeffs[i + 1] += p.coeffs[i];
    out.coeffs[i] -= a * p.coeffs[i];
  }
  return out;
}

Poly add_constant(const Poly& p, const BigFloat& c) {
  Poly out = p;
  if (out.coeffs.empty()) out.coeffs.emplace_back(0);
  out.coeffs[0] += c;
  return out;
}

Poly derivative(const Poly& p) {
  Poly out;
  if (p.coeffs.size() <= 1) {
    out.coeffs.emplace_back(0);
    return out;
  }
  out.coeffs.resize(p.coeffs.size() - 1);
  for (size_t i = 1; i < p.coeffs.size(); ++i)
    out.coeffs[i - 1] = p.coeffs[i] * static_cast<int64_t>(i);
  return out;
}

}  // namespace pbbs
