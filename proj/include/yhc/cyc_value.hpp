#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yhc/types.hpp"

namespace yhc {

// Element of Q[x]/(x^d - 1), x standing for a primitive d-th root of unity.
// Comparison goes through the image in Q(zeta_d), i.e. the remainder modulo
// the d-th cyclotomic polynomial, so that e.g. 1 + x^{d/2} == 0.
class CycValue {
 public:
  explicit CycValue(int d = 1);
  static CycValue from_rational(int d, const Rational& r);
  static CycValue monomial(int d, int e, const Rational& c = 1);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational& operator[](int e) { return coeffs_[e]; }

  CycValue& operator+=(const CycValue& o);
  CycValue& operator-=(const CycValue& o);
  CycValue& operator*=(const Rational& c);
  CycValue& operator/=(const Rational& c);
  friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
  friend CycValue operator*(CycValue a, const Rational& c) { return a *= c; }
  friend CycValue operator*(const CycValue& a, const CycValue& b);

  CycValue conj() const;

  // Coefficients of the remainder modulo Phi_d (length phi(d)).
  std::vector<Rational> canonical() const;
  bool operator==(const CycValue& o) const;
  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int d);

}  // namespace yhc
