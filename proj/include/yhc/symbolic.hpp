#pragma once

#include <string>
#include <string_view>

#include "yhc/types.hpp"

namespace yhc {

// (re + im i) * q^{q_half_exp / 2}; zero always has q_half_exp = 0.
class SymValue {
 public:
  SymValue() = default;
  SymValue(BigInt re, BigInt im, long long q_half_exp);

  static SymValue one() { return {1, 0, 0}; }

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }
  long long q_half_exp() const { return e_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  bool operator==(const SymValue&) const = default;

 private:
  BigInt re_ = 0, im_ = 0;
  long long e_ = 0;
};

SymValue sym_mul(const SymValue& a, const SymValue& b);
inline SymValue operator*(const SymValue& a, const SymValue& b) { return sym_mul(a, b); }

enum class SymFormat { Unicode, Latex, Json };

std::string sym_render(const SymValue& v, SymFormat format);
// Inverse of the Json rendering; integers may also arrive as decimal strings.
SymValue sym_parse_json(std::string_view text);

}  // namespace yhc
