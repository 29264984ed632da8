#include "yhc/symbolic.hpp"

#include <json.hpp>

namespace yhc {

SymValue::SymValue(BigInt re, BigInt im, long long q_half_exp)
    : re_(std::move(re)), im_(std::move(im)), e_(q_half_exp) {
  if (is_zero()) e_ = 0;
}

SymValue sym_mul(const SymValue& a, const SymValue& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re(),
          a.q_half_exp() + b.q_half_exp()};
}

namespace {

std::string coefficient(const BigInt& re, const BigInt& im) {
  if (im == 0) return re.str();
  std::string imag = im == 1 ? "i" : im == -1 ? "-i" : im.str() + "i";
  if (re == 0) return imag;
  std::string tail = im > 0 ? "+" + imag : imag;
  return "(" + re.str() + tail + ")";
}

std::string exponent(long long e) {
  if (e % 2 == 0) return std::to_string(e / 2);
  return std::to_string(e) + "/2";
}

nlohmann::ordered_json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidArgument("expected an integer");
}

}  // namespace

std::string sym_render(const SymValue& v, SymFormat format) {
  if (format == SymFormat::Json) {
    nlohmann::ordered_json j;
    j["re"] = big_to_json(v.re());
    j["im"] = big_to_json(v.im());
    j["q_half_exp"] = v.q_half_exp();
    return j.dump();
  }
  if (v.is_zero()) return "0";
  const long long e = v.q_half_exp();
  std::string c = coefficient(v.re(), v.im());
  if (e == 0) return c;
  const bool latex = format == SymFormat::Latex;
  std::string q = "q";
  if (e != 2) q += latex ? "^{" + exponent(e) + "}" : "^" + exponent(e);
  if (c == "1") return q;
  if (c == "-1") return "-" + q;
  return c + (latex ? "\\," : "·") + q;
}

SymValue sym_parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw InvalidArgument("malformed SymValue JSON");
  }
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.contains("q_half_exp"))
    throw InvalidArgument("SymValue JSON needs re, im and q_half_exp");
  if (!j["q_half_exp"].is_number_integer()) throw InvalidArgument("q_half_exp must be an integer");
  return {big_from_json(j["re"]), big_from_json(j["im"]), j["q_half_exp"].get<long long>()};
}

}  // namespace yhc
