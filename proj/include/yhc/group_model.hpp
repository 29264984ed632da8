#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "yhc/partitions.hpp"
#include "yhc/types.hpp"

namespace yhc {

// (torus, w) in C_d^n x| W.  The signed permutation w sends e_k to
// signs[k] * e_{perm[k]} (0-based); it acts on torus exponent vectors by
// (w.xi)[perm[k]] = signs[k] * xi[k] mod d.
struct GroupElement {
  int d = 2;
  std::vector<int> torus;
  std::vector<int> perm;
  std::vector<int> signs;

  int n() const { return static_cast<int>(perm.size()); }
  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;

  static GroupElement identity(int d, int n);
  static GroupElement torus_element(int d, std::vector<int> exps);
  static GroupElement weyl_element(int d, std::vector<int> perm, std::vector<int> signs);
};

std::vector<int> act(const GroupElement& w, const std::vector<int>& xi);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
// x g x^-1
GroupElement conjugate(const GroupElement& g, const GroupElement& x);

// Membership in S_{d,n} of the given type (A* and D are subgroups of A and B).
bool in_group(TypeTag type, const GroupElement& g);

BigInt group_order(TypeTag type, int d, int n);

// Calls fn once per element; throws BudgetExceeded first if the order exceeds budget.
void for_each_element(TypeTag type, int d, int n, std::uint64_t budget,
                      const std::function<void(const GroupElement&)>& fn);
std::vector<GroupElement> enumerate_group(TypeTag type, int d, int n,
                                          std::uint64_t budget = kDefaultBudget);

// Weyl part only (trivial torus).
std::vector<GroupElement> enumerate_weyl(TypeTag type, int d, int n);

// Result of the orbit computation for the A* two-class statement.
struct TwoClassReport {
  int classes = 0;
  // Every class contains only conjugates t w0 t^-1 with det(t) of one square class.
  bool separated_by_square_det = false;
  std::size_t conjugates = 0;
};

// Orbits of {t w0 t^-1 : t in C_d^n} under conjugation by S^{A*}_{d,n}.
TwoClassReport astar_w0_torus_classes(int d, int n, std::uint64_t budget = kDefaultBudget);

std::string describe(const GroupElement& g);

}  // namespace yhc
