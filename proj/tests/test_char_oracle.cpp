#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "yhc/char_oracle.hpp"
#include "yhc/closed_forms.hpp"
#include "yhc/group_model.hpp"
#include "yhc/label_text.hpp"
#include "yhc/root_data.hpp"

using namespace yhc;
using cplx = std::complex<double>;

namespace {

// ---- a slow second oracle in floating point -------------------------------
// Induces psi x chi_stab from C_d^n x| Stab(psi) by conjugating with every element
// of the ambient group.  Shares nothing with the library oracle beyond the
// group arithmetic and symmetric-group characters.

Partition cycle_type_of(const std::vector<int>& perm_on_block) {
  std::vector<int> lens;
  std::vector<char> seen(perm_on_block.size(), 0);
  for (std::size_t k = 0; k < perm_on_block.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (std::size_t j = k; !seen[j]; j = perm_on_block[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(lens);
}

// chi of S^la (x) (S^mu (x) eps) induced from W_a x W_b to W_{a+b}, naive.
double naive_hyp(const Partition& la, const Partition& mu, const std::vector<int>& perm, const std::vector<int>& signs) {
  const int a = la.size(), m = a + mu.size();
  const GroupElement w = GroupElement::weyl_element(2, perm, signs);
  double total = 0;
  for (const auto& x : enumerate_weyl(TypeTag::B, 2, m)) {
    const auto c = conjugate(w, x);
    bool keeps = true;
    for (int k = 0; k < m; ++k) keeps = keeps && ((k < a) == (c.perm[k] < a));
    if (!keeps) continue;
    std::vector<int> p1(c.perm.begin(), c.perm.begin() + a), p2;
    for (int k = a; k < m; ++k) p2.push_back(c.perm[k] - a);
    double v = static_cast<double>(mn_value(la, cycle_type_of(p1))) * static_cast<double>(mn_value(mu, cycle_type_of(p2)));
    for (int k = a; k < m; ++k) v *= c.signs[k];
    total += v;
  }
  return total / static_cast<double>(factorial(a) * (BigInt(1) << a) * factorial(m - a) * (BigInt(1) << (m - a)));
}

struct NaiveBlock {
  int start, size, exponent;
  bool signed_block;
  Partition la, mu;
};

std::vector<NaiveBlock> naive_blocks(const CharLabel& l) {
  std::vector<NaiveBlock> out;
  int at = 0;
  if (is_type_a(l.type)) {
    for (int j = 0; j < l.d; ++j) {
      out.push_back({at, l.blocks[j].size(), (j + 1) % l.d, false, l.blocks[j], {}});
      at += l.blocks[j].size();
    }
    return out;
  }
  out.push_back({at, l.blocks[0].size() + l.blocks[1].size(), 0, true, l.blocks[0], l.blocks[1]});
  at += out.back().size;
  out.push_back({at, l.blocks[2].size() + l.blocks[3].size(), l.d / 2, true, l.blocks[2], l.blocks[3]});
  at += out.back().size;
  for (std::size_t j = 4; j < l.blocks.size(); ++j) {
    out.push_back({at, l.blocks[j].size(), static_cast<int>(j) - 3, false, l.blocks[j], {}});
    at += l.blocks[j].size();
  }
  return out;
}

cplx naive_eval(const CharLabel& l, const GroupElement& g) {
  const int d = l.d, n = l.n();
  const auto blocks = naive_blocks(l);
  std::vector<int> psi(n);
  for (const auto& b : blocks)
    for (int k = 0; k < b.size; ++k) psi[b.start + k] = b.exponent;
  const TypeTag ambient = is_type_a(l.type) ? TypeTag::A : TypeTag::B;
  const cplx zeta = std::polar(1.0, 2 * std::numbers::pi / d);
  cplx total = 0;
  double stab = 1;
  for (const auto& b : blocks)
    stab *= static_cast<double>(factorial(b.size) * (b.signed_block ? BigInt(1) << b.size : BigInt(1)));
  for (const auto& x : enumerate_group(ambient, d, n)) {
    const auto c = conjugate(g, x);
    double inner = 1;
    for (const auto& b : blocks) {
      std::vector<int> p, s;
      for (int k = b.start; k < b.start + b.size; ++k) {
        if (c.perm[k] < b.start || c.perm[k] >= b.start + b.size) inner = 0;
        if (!b.signed_block && c.signs[k] < 0) inner = 0;
        p.push_back(c.perm[k] - b.start);
        s.push_back(c.signs[k]);
      }
      if (inner == 0) break;
      inner *= b.signed_block ? naive_hyp(b.la, b.mu, p, s) : static_cast<double>(mn_value(b.la, cycle_type_of(p)));
    }
    if (inner == 0) continue;
    int e = 0;
    for (int k = 0; k < n; ++k) e += psi[k] * c.torus[k];
    total += inner * std::pow(zeta, e % d);
  }
  return total / (std::pow(static_cast<double>(d), n) * stab);
}

cplx to_complex(const CycValue& v) {
  const cplx zeta = std::polar(1.0, 2 * std::numbers::pi / v.order());
  cplx s = 0;
  for (int j = 0; j < v.order(); ++j) s += v.coeffs()[j].convert_to<double>() * std::pow(zeta, j);
  return s;
}

CharLabel parent_of(CharLabel l) {
  if (l.type == TypeTag::D) l.type = TypeTag::B;
  if (l.type == TypeTag::AStar) l.type = TypeTag::A;
  l.split.reset();
  return l;
}

GroupElement random_element(TypeTag type, int d, int n, std::mt19937_64& rng) {
  const auto els = enumerate_group(type, d, n);
  return els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)];
}

Rational rat(const CycValue& v) {
  auto r = v.as_rational();
  REQUIRE(r.has_value());
  return *r;
}

constexpr TypeTag kTypes[] = {TypeTag::A, TypeTag::AStar, TypeTag::B, TypeTag::C, TypeTag::D};

}  // namespace

TEST_CASE("CycValue reduces modulo the cyclotomic polynomial") {
  for (int d : {2, 4, 6, 8}) {
    CHECK(CycValue::monomial(d, 0) + CycValue::monomial(d, d / 2) == CycValue(d));
    CycValue s(d);
    for (int j = 0; j < d; ++j) s += CycValue::monomial(d, j);
    CHECK(s.is_zero());
    CHECK(CycValue::monomial(d, 1).conj() == CycValue::monomial(d, d - 1));
    CHECK(CycValue::monomial(d, d / 2).as_rational() == Rational(-1));
    CHECK(CycValue::monomial(d, 1) * CycValue::monomial(d, d - 1) == CycValue::from_rational(d, 1));
  }
  CHECK(CycValue::monomial(4, 1).as_rational() == std::nullopt);
  // Phi_6 = x^2 - x + 1
  CHECK((CycValue::monomial(6, 2) - CycValue::monomial(6, 1) + CycValue::from_rational(6, 1)).is_zero());
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
}

TEST_CASE("eval_char examples") {
  const auto a = parse_label(TypeTag::A, 2, "[[1],[1]]");
  CHECK(eval_char(a, GroupElement::identity(2, 2)) == CycValue::from_rational(2, 2));
  CHECK(eval_char(a, GroupElement::torus_element(2, {1, 1})) == CycValue::from_rational(2, -2));
  const auto b = parse_label(TypeTag::B, 2, "[[],[1],[],[]]");
  CHECK(eval_char(b, w0_element(TypeTag::B, 2, 1)) == CycValue::from_rational(2, -1));
}

TEST_CASE("eval_char_combo examples") {
  const auto b = parse_label(TypeTag::B, 2, "[[1],[],[1],[]]");
  FormalCombo one;
  one.add(1, GroupElement::identity(2, 2));
  CHECK(eval_char_combo(b, one) == CycValue::from_rational(2, 2));
  // s1 (1/2)(1 + t1 t2)
  const auto s1 = GroupElement::weyl_element(2, {1, 0}, {});
  FormalCombo sc;
  sc.add(Rational(1, 2), s1);
  sc.add(Rational(1, 2), multiply(s1, GroupElement::torus_element(2, {1, 1})));
  CHECK(eval_char_combo(b, sc).is_zero());
  CHECK(eval_char_combo(b, letter_classes(TypeTag::B, 2, 2)[1].xi_e).is_zero());
  // t (1/2)(1 + t1)
  const auto c = parse_label(TypeTag::C, 2, "[[],[],[1],[]]");
  const auto t = GroupElement::weyl_element(2, {0}, {-1});
  FormalCombo tc;
  tc.add(Rational(1, 2), t);
  tc.add(Rational(1, 2), multiply(t, GroupElement::torus_element(2, {1})));
  CHECK(eval_char_combo(c, tc).is_zero());
}

TEST_CASE("g and k from the definition, examples") {
  CHECK(g_from_definition(parse_label(TypeTag::A, 2, "[[1],[1]]")) == 1);
  CHECK(g_from_definition(parse_label(TypeTag::A, 2, "[[2],[]]")) == 0);
  CHECK(g_from_definition(parse_label(TypeTag::C, 2, "[[],[],[1],[]]")) == 1);
  CHECK(k_from_definition(parse_label(TypeTag::A, 2, "[[2],[]]")) == 1);
  CHECK(k_from_definition(parse_label(TypeTag::B, 2, "[[],[1],[],[]]")) == -1);
  CHECK(k_from_definition(parse_label(TypeTag::B, 2, "[[1],[],[1],[]]")) == 2);
}

TEST_CASE("type B t-class needs the coroot 2H_1") {
  // Averaging over t_1^j instead of t_1^{2j} gives a k that is not the closed form.
  const auto l = parse_label(TypeTag::B, 4, "[[],[],[1],[],[]]");
  const Rational deg = degree_from_oracle(l);
  const auto t = GroupElement::weyl_element(4, {0}, {-1});
  FormalCombo naive;
  for (int j = 0; j < 4; ++j) naive.add(Rational(1, 4), multiply(t, GroupElement::torus_element(4, {j})));
  naive.canonicalize();
  const Rational k_naive = rat(eval_char_combo(l, naive)) / deg;
  CHECK(k_from_definition(l) == k_closed(l));
  CHECK(k_naive != Rational(k_closed(l)));
}

TEST_CASE("library oracle agrees with the floating-point oracle") {
  std::mt19937_64 rng(3);
  for (TypeTag t : kTypes)
    for (int d : {2, 4})
      for (int n = 0; n <= (d == 2 ? 3 : 2); ++n)
        for (const auto& l : enumerate_labels(t, d, n)) {
          for (int i = 0; i < 3; ++i) {
            const auto g = random_element(t, d, n, rng);
            const cplx want = naive_eval(parent_of(l), g);
            const cplx got = to_complex(eval_char(l, g));
            INFO(to_string(t) << " d=" << d << " " << label_to_text(l) << " at " << describe(g));
            CHECK(std::abs(want - got) < 1e-9);
          }
        }
}

TEST_CASE("characters are class functions") {
  std::mt19937_64 rng(5);
  for (TypeTag t : kTypes)
    for (int d : {2, 4})
      for (int n = 1; n <= 3; ++n) {
        const auto els = enumerate_group(t, d, n);
        std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
        for (const auto& l : enumerate_labels(t, d, n)) {
          const int samples = (d == 4 && n == 3) ? 10 : 100;
          for (int i = 0; i < samples; ++i) {
            const auto& g = els[pick(rng)];
            const auto& x = els[pick(rng)];
            CHECK(eval_char(l, conjugate(g, x)) == eval_char(l, g));
          }
        }
      }
}

TEST_CASE("identity evaluation matches the closed-form degree") {
  for (TypeTag t : kTypes)
    for (int d : {2, 4})
      for (int n = 0; n <= 3; ++n)
        for (const auto& l : enumerate_labels(t, d, n)) {
          INFO(to_string(t) << " d=" << d << " " << label_to_text(l));
          CHECK(degree_from_oracle(l) == Rational(degree(l)));
        }
}

TEST_CASE("values at h elements, w0 and xi e combos are rational") {
  for (TypeTag t : kTypes)
    for (int d : {2, 4})
      for (int n = 1; n <= 2; ++n)
        for (const auto& l : enumerate_labels(t, d, n)) {
          CHECK(eval_char(l, w0_element(t, d, n)).as_rational().has_value());
          for (const auto& lc : letter_classes(t, d, n)) {
            CHECK(eval_char(l, lc.h_element).as_rational().has_value());
            if (lc.count) CHECK(eval_char_combo(l, lc.xi_e).as_rational().has_value());
          }
        }
}

TEST_CASE("partitioning the sum across workers does not change the result") {
  OracleOptions many;
  many.workers = 5;
  std::mt19937_64 rng(9);
  for (const auto& l : enumerate_labels(TypeTag::B, 4, 2)) {
    const auto g = random_element(TypeTag::B, 4, 2, rng);
    CHECK(eval_char(l, g, many) == eval_char(l, g));
  }
}

TEST_CASE("budget is enforced") {
  OracleOptions tiny;
  tiny.budget = 10;
  const auto l = parse_label(TypeTag::B, 2, "[[1],[],[1],[]]");
  CHECK_THROWS_AS(eval_char(l, GroupElement::identity(2, 2), tiny), BudgetExceeded);
  CHECK_THROWS_AS(eval_char(l, GroupElement::identity(2, 3)), InvalidArgument);
  CHECK_THROWS_AS(eval_char(parse_label(TypeTag::D, 2, "[[],[1],[],[1]]"),
                            GroupElement::weyl_element(2, {0, 1}, {-1, 1})),
                  InvalidArgument);
}

TEST_CASE("hyperoctahedral characters are orthonormal") {
  for (int m = 0; m <= 3; ++m) {
    const auto w = enumerate_weyl(TypeTag::B, 2, m);
    std::vector<std::pair<Partition, Partition>> bip;
    for (int a = 0; a <= m; ++a)
      for (const auto& la : partitions_of(a))
        for (const auto& mu : partitions_of(m - a)) bip.emplace_back(la, mu);
    for (const auto& [l1, m1] : bip)
      for (const auto& [l2, m2] : bip) {
        BigInt s = 0;
        for (const auto& x : w) s += hyperoctahedral_char(l1, m1, x) * hyperoctahedral_char(l2, m2, x);
        CHECK(s == ((l1 == l2 && m1 == m2) ? BigInt(w.size()) : BigInt(0)));
      }
  }
  // W_1: chi_{(),(1)} is the sign
  CHECK(hyperoctahedral_char(Partition(), Partition{1}, GroupElement::weyl_element(2, {0}, {-1})) == -1);
  CHECK(hyperoctahedral_char(Partition{1}, Partition(), GroupElement::weyl_element(2, {0}, {-1})) == 1);
}

TEST_CASE("orthogonality_check examples") {
  auto a = orthogonality_check(TypeTag::A, 2, 2);
  CHECK(a.pass);
  CHECK(a.degree_square_sum == 8);
  CHECK(a.group_order == 8);
  auto b = orthogonality_check(TypeTag::B, 2, 1);
  CHECK(b.pass);
  CHECK(b.degree_square_sum == 4);
  auto z = orthogonality_check(TypeTag::A, 2, 0);
  CHECK(z.pass);
  CHECK(z.degree_square_sum == 1);
  for (TypeTag t : kTypes)
    for (int d : {2, 4})
      for (int n = 0; n <= 3; ++n) {
        auto r = orthogonality_check(t, d, n);
        INFO(to_string(t) << " d=" << d << " n=" << n << " " << r.failure);
        CHECK(r.pass);
        CHECK(r.degree_square_sum == r.group_order);
      }
}
