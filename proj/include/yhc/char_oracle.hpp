#pragma once

#include <cstdint>
#include <string>

#include "yhc/cyc_value.hpp"
#include "yhc/group_model.hpp"
#include "yhc/partitions.hpp"
#include "yhc/root_data.hpp"

namespace yhc {

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
};

// Brute-force induced character of S_{d,n}.  A* labels evaluate the ambient
// type-A character (the sum of its d/o conjugate factors); type-D labels, split
// or not, evaluate the type-B parent, so a split pair shares one value and each
// factor accounts for half of it.
CycValue eval_char(const CharLabel& label, const GroupElement& g, const OracleOptions& opts = {});
CycValue eval_char_combo(const CharLabel& label, const FormalCombo& c,
                         const OracleOptions& opts = {});

long long g_from_definition(const CharLabel& label, const OracleOptions& opts = {});
long long k_from_definition(const CharLabel& label, const OracleOptions& opts = {});

// Degree of the irreducible factor itself, from the identity evaluation.
Rational degree_from_oracle(const CharLabel& label, const OracleOptions& opts = {});

// chi_{la,mu} of the hyperoctahedral group W_m (m = |la|+|mu|), induced from
// S^la (x) (S^mu (x) sgn) on W_|la| x W_|mu|, by summation over W_m.
BigInt hyperoctahedral_char(const Partition& la, const Partition& mu, const GroupElement& w);

struct OrthogonalityOptions {
  OracleOptions oracle;
  // Labels whose full value vectors are computed for the inner-product checks.
  std::size_t sample_labels = 6;
  std::uint64_t seed = 1;
};

struct OrthogonalityReport {
  bool pass = true;
  BigInt degree_square_sum = 0;
  BigInt group_order = 0;
  std::size_t labels = 0;
  std::size_t pairs_checked = 0;
  std::string failure;
};

OrthogonalityReport orthogonality_check(TypeTag type, int d, int n,
                                        const OrthogonalityOptions& opts = {});

}  // namespace yhc
