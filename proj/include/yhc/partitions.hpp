#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "yhc/types.hpp"

namespace yhc {

class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);

long long n_invariant(const Partition& la);
Partition transpose(const Partition& la);
BigInt dim_specht(const Partition& la);
// Character of the Specht module S^la at a permutation of the given cycle type.
BigInt mn_value(const Partition& la, const Partition& cycle_type);
// Number of permutations of |mu| with cycle type mu.
BigInt class_size(const Partition& mu);

BigInt factorial(int m);
BigInt binomial(int m, int k);
BigInt multinomial(const std::vector<int>& parts);

long long alt_size(const std::vector<Partition>& tuple);

enum class SplitSign { Plus, Minus };

// Irreducible character label of S_{d,n}.  For A/A* the blocks are the d-tuple
// (one partition per exponent 1..d); for B/C/D the blocks are
// (la1, mu1, la2, mu2, la3, ..., la_{(d+2)/2}).
struct CharLabel {
  TypeTag type = TypeTag::A;
  int d = 2;
  std::vector<Partition> blocks;
  std::optional<SplitSign> split;

  int n() const;
  bool operator==(const CharLabel&) const = default;
};

// Expected number of blocks for (type, d).
int block_count(TypeTag type, int d);

// Throws InvalidArgument when the label violates the CharLabel invariants.
void validate(const CharLabel& label);

// Rotation order o(Lambda) of a d-tuple.
int o_lambda(const std::vector<Partition>& tuple);

// Number of coordinates whose psi-entry is a square (M1/N1) and the rest.
std::pair<int, int> square_counts(const CharLabel& label);

// Exponent of the psi-entry carried by block j (0-based).
int block_exponent(TypeTag type, int d, int j);

// Coordinate block sizes in psi order; for B/C/D, blocks 1 and 2 have size
// |la_i| + |mu_i|.
std::vector<int> psi_block_sizes(const CharLabel& label);

// The D-swap partner (la1,la2) <-> (mu1,mu2).
std::vector<Partition> d_swap(const std::vector<Partition>& blocks);
bool d_is_equal_pair(const std::vector<Partition>& blocks);

// Number of conjugate factors an A* label stands for (d / o); 1 otherwise.
int multiplicity(const CharLabel& label);

std::vector<CharLabel> enumerate_labels(TypeTag type, int d, int n);

// All tuples of `count` partitions with total size n.
std::vector<std::vector<Partition>> partition_tuples(int count, int n);

}  // namespace yhc
