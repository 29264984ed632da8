#include "yhc/closed_forms.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include "yhc/root_data.hpp"

namespace yhc {

namespace {

using Real = boost::multiprecision::mpfr_float;

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (a % b != 0) throw InternalInconsistency(std::string(what) + ": inexact division");
  return a / b;
}

long long n_gap(const Partition& la) { return n_invariant(transpose(la)) - n_invariant(la); }

BigInt dims(const std::vector<Partition>& blocks, std::size_t from = 0, std::size_t to = SIZE_MAX) {
  BigInt r = 1;
  for (std::size_t j = from; j < std::min(to, blocks.size()); ++j) r *= dim_specht(blocks[j]);
  return r;
}

BigInt degree_a(const CharLabel& l) {
  std::vector<int> sizes;
  for (const auto& b : l.blocks) sizes.push_back(b.size());
  return multinomial(sizes) * dims(l.blocks);
}

BigInt degree_b(const CharLabel& l) {
  const auto& b = l.blocks;
  const int n = l.n();
  const int n1 = b[0].size() + b[1].size(), n2 = b[2].size() + b[3].size();
  BigInt den = factorial(n1) * (BigInt(1) << n1) * factorial(n2) * (BigInt(1) << n2);
  for (std::size_t j = 4; j < b.size(); ++j) den *= factorial(b[j].size());
  const BigInt index = exact_div(factorial(n) * (BigInt(1) << n), den, "index");
  return index * binomial(n1, b[0].size()) * binomial(n2, b[2].size()) * dims(b);
}

bool higher_blocks_empty(const CharLabel& l) {
  for (std::size_t j = 4; j < l.blocks.size(); ++j)
    if (!l.blocks[j].empty()) return false;
  return true;
}

// Value at -Id in W_m for the first four blocks, m their total size.
BigInt minus_id_value(const std::vector<Partition>& b) {
  std::vector<int> sizes{b[0].size(), b[1].size(), b[2].size(), b[3].size()};
  BigInt v = multinomial(sizes) * dims(b, 0, 4);
  return (b[1].size() + b[3].size()) % 2 ? -v : v;
}

BigInt w0_a(const CharLabel& l) {
  const int n = l.n();
  int odd = 0;
  for (const auto& b : l.blocks) odd += b.size() % 2;
  if (odd != n % 2) return 0;
  std::vector<int> halves;
  BigInt prod = 1;
  for (const auto& b : l.blocks) {
    const int h = b.size() / 2;
    halves.push_back(h);
    std::vector<int> ct(h, 2);
    if (b.size() % 2) ct.push_back(1);
    prod *= mn_value(b, Partition(ct));
  }
  return multinomial(halves) * prod;
}

BigInt w0_d(const CharLabel& l) {
  const auto& b = l.blocks;
  const int n = l.n();
  if (n % 2 == 0) {
    if (!higher_blocks_empty(l)) return 0;
    return l.split ? exact_div(minus_id_value(b), 2, "split value") : minus_id_value(b);
  }
  if (higher_blocks_empty(l)) {
    // The single +1 of w0~ lands in one of the four signed blocks.
    BigInt den = 1;
    for (int j = 0; j < 4; ++j) den *= factorial(b[j].size());
    BigInt v = exact_div(factorial(n - 1) * dims(b, 0, 4) * alt_size({b[0], b[1], b[2], b[3]}), den, "w0 D");
    if ((b[1].size() + b[3].size()) % 2) v = -v;
    return l.split ? exact_div(v, 2, "split value") : v;
  }
  int higher = 0;
  for (std::size_t j = 4; j < b.size(); ++j) higher += b[j].size();
  if (higher != 1) return 0;
  // The +1 sits on the one higher-block coordinate; the rest is -Id on n-1 coordinates.
  const BigInt v = 2 * minus_id_value(b);
  return l.split ? v / 2 : v;
}

}  // namespace

long long g_closed(const CharLabel& label) {
  validate(label);
  auto [sq, nonsq] = square_counts(label);
  const long long m1 = sq, m2 = nonsq;
  switch (label.type) {
    case TypeTag::A:
    case TypeTag::AStar: return m1 * m2;
    case TypeTag::B:
    case TypeTag::D: return 2 * m1 * m2;
    case TypeTag::C: return 2 * m1 * m2 + m2;
  }
  return 0;
}

long long k_closed(const CharLabel& label) {
  validate(label);
  const auto& b = label.blocks;
  long long k = 0;
  if (is_type_a(label.type)) {
    for (const auto& p : b) k += n_gap(p);
    return k;
  }
  for (int j = 0; j < 4; ++j) k += 2 * n_gap(b[j]);
  for (std::size_t j = 4; j < b.size(); ++j) k += n_gap(b[j]);
  if (label.type == TypeTag::B) k += alt_size({b[0], b[1], b[2], b[3]});
  if (label.type == TypeTag::C) k += alt_size({b[0], b[1]});
  return k;
}

long long f_closed(const CharLabel& label) { return longest_length(label.type, label.n()) - k_closed(label); }

BigInt degree(const CharLabel& label) {
  validate(label);
  switch (label.type) {
    case TypeTag::A: return degree_a(label);
    case TypeTag::AStar:
      return exact_div(degree_a(label), multiplicity(label), "A* degree");
    case TypeTag::B:
    case TypeTag::C: return degree_b(label);
    case TypeTag::D: return label.split ? exact_div(degree_b(label), 2, "split degree") : degree_b(label);
  }
  return 0;
}

W0ValueResult w0_value(const CharLabel& label) {
  validate(label);
  switch (label.type) {
    case TypeTag::A: return {w0_a(label)};
    case TypeTag::AStar:
      if (label.n() % 2 == 0) return {};
      return {exact_div(w0_a(label), multiplicity(label), "A* w0 value")};
    case TypeTag::B:
    case TypeTag::C: return {higher_blocks_empty(label) ? minus_id_value(label.blocks) : BigInt(0)};
    case TypeTag::D: return {w0_d(label)};
  }
  return {};
}

std::optional<SymValue> hecke_value_at_Tw0(const CharLabel& label) {
  const auto w0 = w0_value(label);
  if (w0.unknown()) return std::nullopt;
  const BigInt& v = *w0.value;
  const long long e = -f_closed(label);
  switch (g_closed(label) % 4) {
    case 0: return SymValue(v, 0, e);
    case 1: return SymValue(0, -v, e);
    case 2: return SymValue(-v, 0, e);
    default: return SymValue(0, v, e);
  }
}

Tw0Squared hecke_value_at_Tw0_squared(const CharLabel& label) {
  const long long e = 2 * (k_closed(label) - longest_length(label.type, label.n()));
  const SymValue scalar(g_closed(label) % 2 ? -1 : 1, 0, e);
  return {scalar, sym_mul(SymValue(degree(label), 0, 0), scalar)};
}

namespace {

std::optional<BigInt> exact_sqrt(const BigInt& x) {
  if (x < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(x);
  if (r * r == x) return r;
  return std::nullopt;
}

Rational rational_pow(const Rational& q, long long e) {
  Rational r = 1;
  const Rational base = e < 0 ? 1 / q : q;
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

Real to_real(const Rational& r, unsigned prec) {
  Real num(numerator(r).str(), prec), den(denominator(r).str(), prec);
  Real out(0, prec);
  out = num / den;
  return out;
}

std::string decimal(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits);
}

}  // namespace

Specialized specialize(const SymValue& v, const Rational& q, int digits) {
  if (q <= 0) throw InvalidArgument("q must be positive");
  if (digits < 1) throw InvalidArgument("digits must be positive");
  const unsigned prec = static_cast<unsigned>(digits) + 20;
  const long long e = v.q_half_exp();
  const long long half = (e - (((e % 2) + 2) % 2)) / 2;  // floor(e/2)
  Rational scale = rational_pow(q, half);
  std::optional<Rational> exact_scale;
  Real real_scale(0, prec);
  if (e % 2 == 0) {
    exact_scale = scale;
  } else {
    auto sn = exact_sqrt(numerator(q)), sd = exact_sqrt(denominator(q));
    if (sn && sd) exact_scale = scale * Rational(*sn, *sd);
    else real_scale = to_real(scale, prec) * boost::multiprecision::sqrt(to_real(q, prec));
  }
  Specialized out;
  if (exact_scale) {
    out.re_exact = Rational(v.re()) * *exact_scale;
    out.im_exact = Rational(v.im()) * *exact_scale;
    out.re = decimal(to_real(*out.re_exact, prec), digits);
    out.im = decimal(to_real(*out.im_exact, prec), digits);
  } else {
    Real re(v.re().str(), prec), im(v.im().str(), prec);
    out.re = decimal(Real(re * real_scale, prec), digits);
    out.im = decimal(Real(im * real_scale, prec), digits);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw InvalidArgument("zero denominator");
      return Rational(BigInt(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string frac = text.substr(dot + 1);
      std::string whole = text.substr(0, dot);
      const bool neg = !whole.empty() && whole[0] == '-';
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      BigInt w(whole.empty() || whole == "-" ? "0" : whole);
      BigInt f(frac.empty() ? "0" : frac);
      return Rational(w, 1) + Rational(neg ? -f : f, scale);
    }
    return Rational(BigInt(text));
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
}

}  // namespace yhc
