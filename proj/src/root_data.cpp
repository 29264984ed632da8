#include "yhc/root_data.hpp"

#include <algorithm>

namespace yhc {

void FormalCombo::add(const Rational& c, const GroupElement& g) { terms.emplace_back(c, g); }

void FormalCombo::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<std::pair<Rational, GroupElement>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().second == t.second) merged.back().first += t.first;
    else merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const auto& t) { return t.first == 0; });
  terms = std::move(merged);
}

long long longest_length(TypeTag type, int n) {
  const long long m = n;
  switch (type) {
    case TypeTag::A:
    case TypeTag::AStar: return m * (m - 1) / 2;
    case TypeTag::B:
    case TypeTag::C: return m * m;
    case TypeTag::D: return m * m - m;
  }
  return 0;
}

GroupElement w0_element(TypeTag type, int d, int n) {
  GroupElement g = GroupElement::identity(d, n);
  if (is_type_a(type)) {
    for (int i = 0; i < n; ++i) g.perm[i] = n - 1 - i;
    return g;
  }
  std::fill(g.signs.begin(), g.signs.end(), -1);
  if (type == TypeTag::D && n % 2 == 1) g.signs[0] = 1;
  return g;
}

GroupElement torus_monomial(int d, int n, const std::vector<std::pair<int, int>>& coord_exp) {
  std::vector<int> e(n, 0);
  for (auto [k, x] : coord_exp) e[k] += x;
  return GroupElement::torus_element(d, std::move(e));
}

namespace {

LetterClass s_class(int d, int n, long long count) {
  LetterClass c{"s", count, GroupElement::identity(d, n), {}};
  if (n < 2) return c;
  c.h_element = torus_monomial(d, n, {{0, d / 2}, {1, d / 2}});
  std::vector<int> swap(n);
  for (int k = 0; k < n; ++k) swap[k] = k;
  std::swap(swap[0], swap[1]);
  const auto s1 = GroupElement::weyl_element(d, swap, {});
  for (int j = 0; j < d; ++j)
    c.xi_e.add(Rational(1, d), multiply(s1, torus_monomial(d, n, {{0, j}, {1, -j}})));
  c.xi_e.canonicalize();
  return c;
}

// step = 2 for type B, where the coroot of the short simple root is 2H_1.
LetterClass t_class(int d, int n, long long count, int h_exp, int step) {
  LetterClass c{"t", count, GroupElement::identity(d, n), {}};
  if (n < 1) return c;
  c.h_element = torus_monomial(d, n, {{0, h_exp}});
  std::vector<int> signs(n, 1);
  signs[0] = -1;
  std::vector<int> id(n);
  for (int k = 0; k < n; ++k) id[k] = k;
  const auto t = GroupElement::weyl_element(d, id, signs);
  for (int j = 0; j < d; ++j)
    c.xi_e.add(Rational(1, d), multiply(t, torus_monomial(d, n, {{0, step * j}})));
  c.xi_e.canonicalize();
  return c;
}

}  // namespace

std::vector<LetterClass> letter_classes(TypeTag type, int d, int n) {
  const long long m = n;
  switch (type) {
    case TypeTag::A:
    case TypeTag::AStar: return {s_class(d, n, m * (m - 1) / 2)};
    case TypeTag::B: return {t_class(d, n, m, 0, 2), s_class(d, n, m * m - m)};
    case TypeTag::C: return {t_class(d, n, m, d / 2, 1), s_class(d, n, m * m - m)};
    case TypeTag::D: return {s_class(d, n, m * m - m)};
  }
  return {};
}

}  // namespace yhc
