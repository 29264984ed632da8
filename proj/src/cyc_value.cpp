#include "yhc/cyc_value.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace yhc {

namespace {

int mod(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

void check_order(const CycValue& a, const CycValue& b) {
  if (a.order() != b.order()) throw InvalidArgument("cyclotomic values of different order");
}

// Exact division of integer polynomials, b monic.
std::vector<long long> poly_div(std::vector<long long> a, const std::vector<long long>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  std::vector<long long> q(da - db + 1, 0);
  for (int i = da - db; i >= 0; --i) {
    q[i] = a[i + db];
    for (int j = 0; j <= db; ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::vector<long long> p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int m = 1; m < d; ++m) {
    if (d % m) continue;
    std::vector<long long> pm(m + 1, 0);
    pm[0] = -1;
    pm[m] = 1;
    for (int k = 1; k < m; ++k) {
      if (m % k) continue;
      pm = poly_div(pm, cache.at(k));
    }
    cache.emplace(m, pm);
    p = poly_div(p, cache.at(m));
  }
  return cache.emplace(d, p).first->second;
}

CycValue::CycValue(int d) : coeffs_(d, Rational(0)) {
  if (d < 1) throw InvalidArgument("cyclotomic order must be positive");
}

CycValue CycValue::from_rational(int d, const Rational& r) { return monomial(d, 0, r); }

CycValue CycValue::monomial(int d, int e, const Rational& c) {
  CycValue v(d);
  v.coeffs_[mod(e, d)] = c;
  return v;
}

CycValue& CycValue::operator+=(const CycValue& o) {
  check_order(*this, o);
  for (int i = 0; i < order(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycValue& CycValue::operator-=(const CycValue& o) {
  check_order(*this, o);
  for (int i = 0; i < order(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycValue& CycValue::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CycValue& CycValue::operator/=(const Rational& c) {
  for (auto& x : coeffs_) x /= c;
  return *this;
}

CycValue operator*(const CycValue& a, const CycValue& b) {
  check_order(a, b);
  const int d = a.order();
  CycValue r(d);
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b.coeffs_[j] != 0) r.coeffs_[(i + j) % d] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

CycValue CycValue::conj() const {
  const int d = order();
  CycValue r(d);
  for (int i = 0; i < d; ++i) r.coeffs_[mod(-i, d)] = coeffs_[i];
  return r;
}

std::vector<Rational> CycValue::canonical() const {
  const auto& phi = cyclotomic_polynomial(order());
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<Rational> r = coeffs_;
  for (int i = static_cast<int>(r.size()) - 1; i >= deg; --i) {
    if (r[i] == 0) continue;
    const Rational c = r[i];
    for (int j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  r.resize(deg);
  return r;
}

bool CycValue::operator==(const CycValue& o) const {
  return order() == o.order() && canonical() == o.canonical();
}

bool CycValue::is_zero() const {
  for (const auto& c : canonical())
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycValue::as_rational() const {
  auto c = canonical();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c.empty() ? Rational(0) : c[0];
}

std::string CycValue::str() const {
  auto c = canonical();
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (any) os << " + ";
    os << "(" << c[i] << ")";
    if (i) os << "*z^" << i;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace yhc
