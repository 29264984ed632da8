#pragma once

#include <string>
#include <utility>
#include <vector>

#include "yhc/group_model.hpp"

namespace yhc {

// Rational combination of group elements, kept sorted and merged.
struct FormalCombo {
  std::vector<std::pair<Rational, GroupElement>> terms;

  void add(const Rational& c, const GroupElement& g);
  void canonicalize();
  bool operator==(const FormalCombo&) const = default;
};

struct LetterClass {
  std::string name;  // "t" or "s"
  long long count = 0;
  GroupElement h_element;  // h_i(-1)
  FormalCombo xi_e;        // xi_i e_i
};

long long longest_length(TypeTag type, int n);

// Lift of w0 with trivial torus part.
GroupElement w0_element(TypeTag type, int d, int n);

std::vector<LetterClass> letter_classes(TypeTag type, int d, int n);

// Torus element prod_k t_k^{exps[k]} on n coordinates.
GroupElement torus_monomial(int d, int n, const std::vector<std::pair<int, int>>& coord_exp);

}  // namespace yhc
