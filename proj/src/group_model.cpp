#include "yhc/group_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "yhc/root_data.hpp"

namespace yhc {

namespace {

int mod(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

void check_same(const GroupElement& a, const GroupElement& b) {
  if (a.d != b.d || a.n() != b.n()) throw InvalidArgument("group elements with different (d, n)");
}

}  // namespace

GroupElement GroupElement::identity(int d, int n) {
  GroupElement g;
  g.d = d;
  g.torus.assign(n, 0);
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.signs.assign(n, 1);
  return g;
}

GroupElement GroupElement::torus_element(int d, std::vector<int> exps) {
  GroupElement g = identity(d, static_cast<int>(exps.size()));
  for (auto& e : exps) e = mod(e, d);
  g.torus = std::move(exps);
  return g;
}

GroupElement GroupElement::weyl_element(int d, std::vector<int> perm, std::vector<int> signs) {
  GroupElement g = identity(d, static_cast<int>(perm.size()));
  g.perm = std::move(perm);
  if (!signs.empty()) g.signs = std::move(signs);
  return g;
}

std::vector<int> act(const GroupElement& w, const std::vector<int>& xi) {
  std::vector<int> out(xi.size());
  for (int k = 0; k < w.n(); ++k) out[w.perm[k]] = mod(static_cast<long long>(w.signs[k]) * xi[k], w.d);
  return out;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same(a, b);
  GroupElement r;
  r.d = a.d;
  const int n = a.n();
  r.torus = act(a, b.torus);
  r.perm.resize(n);
  r.signs.resize(n);
  for (int k = 0; k < n; ++k) {
    r.torus[k] = mod(r.torus[k] + a.torus[k], a.d);
    r.perm[k] = a.perm[b.perm[k]];
    r.signs[k] = b.signs[k] * a.signs[b.perm[k]];
  }
  return r;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement w;
  w.d = g.d;
  const int n = g.n();
  w.torus.assign(n, 0);
  w.perm.resize(n);
  w.signs.resize(n);
  for (int k = 0; k < n; ++k) {
    w.perm[g.perm[k]] = k;
    w.signs[g.perm[k]] = g.signs[k];
  }
  auto t = act(w, g.torus);
  for (auto& e : t) e = mod(-e, g.d);
  w.torus = std::move(t);
  return w;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
  return multiply(multiply(x, g), inverse(x));
}

bool in_group(TypeTag type, const GroupElement& g) {
  const int n = g.n();
  if (static_cast<int>(g.torus.size()) != n || static_cast<int>(g.signs.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int k = 0; k < n; ++k) {
    if (g.perm[k] < 0 || g.perm[k] >= n || seen[g.perm[k]]) return false;
    seen[g.perm[k]] = 1;
    if (g.torus[k] < 0 || g.torus[k] >= g.d) return false;
    if (g.signs[k] != 1 && g.signs[k] != -1) return false;
  }
  if (is_type_a(type)) {
    if (std::any_of(g.signs.begin(), g.signs.end(), [](int s) { return s != 1; })) return false;
    if (type == TypeTag::AStar) {
      long long s = std::accumulate(g.torus.begin(), g.torus.end(), 0LL);
      return s % g.d == 0;
    }
    return true;
  }
  if (type == TypeTag::D) return std::count(g.signs.begin(), g.signs.end(), -1) % 2 == 0;
  return true;
}

BigInt group_order(TypeTag type, int d, int n) {
  BigInt torus = 1;
  for (int i = 0; i < n; ++i) torus *= d;
  BigInt w = factorial(n);
  switch (type) {
    case TypeTag::A: return torus * w;
    case TypeTag::AStar: return n == 0 ? BigInt(1) : torus / d * w;
    case TypeTag::B:
    case TypeTag::C: return torus * w * (BigInt(1) << n);
    case TypeTag::D: return n == 0 ? BigInt(1) : torus * w * (BigInt(1) << (n - 1));
  }
  return 0;
}

std::vector<GroupElement> enumerate_weyl(TypeTag type, int d, int n) {
  std::vector<GroupElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const bool signed_type = !is_type_a(type);
  const unsigned masks = signed_type ? (1u << n) : 1u;
  do {
    for (unsigned m = 0; m < masks; ++m) {
      if (type == TypeTag::D && __builtin_popcount(m) % 2) continue;
      std::vector<int> signs(n);
      for (int k = 0; k < n; ++k) signs[k] = (m >> k) & 1u ? -1 : 1;
      out.push_back(GroupElement::weyl_element(d, perm, std::move(signs)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void for_each_element(TypeTag type, int d, int n, std::uint64_t budget,
                      const std::function<void(const GroupElement&)>& fn) {
  const BigInt order = group_order(type, d, n);
  if (order > budget) throw BudgetExceeded(order, budget);
  const auto weyl = enumerate_weyl(type, d, n);
  // A*: the last torus coordinate is determined by the zero-sum condition.
  const int free = (type == TypeTag::AStar && n > 0) ? n - 1 : n;
  std::vector<int> t(n, 0);
  GroupElement g;
  while (true) {
    if (free < n) {
      long long s = 0;
      for (int k = 0; k < free; ++k) s += t[k];
      t[n - 1] = mod(-s, d);
    }
    for (const auto& w : weyl) {
      g = w;
      g.torus = t;
      fn(g);
    }
    int k = 0;
    while (k < free && ++t[k] == d) t[k++] = 0;
    if (k == free) break;
  }
}

std::vector<GroupElement> enumerate_group(TypeTag type, int d, int n, std::uint64_t budget) {
  std::vector<GroupElement> out;
  for_each_element(type, d, n, budget, [&](const GroupElement& g) { out.push_back(g); });
  return out;
}

TwoClassReport astar_w0_torus_classes(int d, int n, std::uint64_t budget) {
  const GroupElement w0 = w0_element(TypeTag::A, d, n);
  // conjugate -> set of det(t) square classes (0 = square) producing it
  std::map<GroupElement, std::set<int>> conj;
  std::vector<int> t(n, 0);
  while (true) {
    const auto c = conjugate(w0, GroupElement::torus_element(d, t));
    conj[c].insert(std::accumulate(t.begin(), t.end(), 0) % 2);
    int k = 0;
    while (k < n && ++t[k] == d) t[k++] = 0;
    if (k == n) break;
  }
  const auto group = enumerate_group(TypeTag::AStar, d, n, budget);
  std::map<GroupElement, int> cls;
  int classes = 0;
  for (const auto& [s, _] : conj) {
    if (cls.count(s)) continue;
    for (const auto& y : group) {
      auto c = conjugate(s, y);
      if (conj.count(c)) cls.emplace(std::move(c), classes);
    }
    ++classes;
  }
  std::vector<std::set<int>> parity(classes);
  bool separated = true;
  for (const auto& [s, p] : conj) {
    if (p.size() != 1) separated = false;
    parity[cls.at(s)].insert(p.begin(), p.end());
  }
  for (const auto& p : parity)
    if (p.size() != 1) separated = false;
  return {classes, separated, conj.size()};
}

std::string describe(const GroupElement& g) {
  std::ostringstream os;
  os << "torus(";
  for (int k = 0; k < g.n(); ++k) os << (k ? "," : "") << g.torus[k];
  os << ") perm(";
  for (int k = 0; k < g.n(); ++k) os << (k ? "," : "") << g.perm[k] + 1;
  os << ") signs(";
  for (int k = 0; k < g.n(); ++k) os << (k ? "," : "") << (g.signs[k] > 0 ? '+' : '-');
  os << ")";
  return os.str();
}

}  // namespace yhc
