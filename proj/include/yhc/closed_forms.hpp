#pragma once

#include <optional>
#include <string>

#include "yhc/partitions.hpp"
#include "yhc/symbolic.hpp"

namespace yhc {

// chi(w0~) or Unknown (type A* with n even).
struct W0ValueResult {
  std::optional<BigInt> value;
  bool unknown() const { return !value.has_value(); }
};

long long g_closed(const CharLabel& label);
long long k_closed(const CharLabel& label);
long long f_closed(const CharLabel& label);
BigInt degree(const CharLabel& label);
W0ValueResult w0_value(const CharLabel& label);

// chi(w0~) (-i)^g q^{-f/2}; nullopt when w0_value is Unknown.
std::optional<SymValue> hecke_value_at_Tw0(const CharLabel& label);

struct Tw0Squared {
  SymValue scalar;      // (-1)^g q^{k - l(w0)}
  SymValue char_value;  // degree * scalar
};
Tw0Squared hecke_value_at_Tw0_squared(const CharLabel& label);

struct Specialized {
  std::string re, im;  // decimal, `digits` significant digits
  std::optional<Rational> re_exact, im_exact;
  bool exact() const { return re_exact.has_value(); }
};

// Evaluates v at q > 0 with the positive square root.  Exact whenever
// q^{e/2} is rational.
Specialized specialize(const SymValue& v, const Rational& q, int digits = 64);

// Parses "4", "9/4" or "2.25".
Rational parse_rational(const std::string& text);

}  // namespace yhc
