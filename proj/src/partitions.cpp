#include "yhc/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace yhc {

std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::A: return "A";
    case TypeTag::AStar: return "Astar";
    case TypeTag::B: return "B";
    case TypeTag::C: return "C";
    case TypeTag::D: return "D";
  }
  return "?";
}

std::optional<TypeTag> parse_type(std::string_view s) {
  if (s == "A") return TypeTag::A;
  if (s == "Astar" || s == "AStar" || s == "A*") return TypeTag::AStar;
  if (s == "B") return TypeTag::B;
  if (s == "C") return TypeTag::C;
  if (s == "D") return TypeTag::D;
  return std::nullopt;
}

BudgetExceeded::BudgetExceeded(const BigInt& required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + required.str() + " elements, budget is " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

namespace {

void partitions_rec(int rest, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(rest, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m < 0) return out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

long long n_invariant(const Partition& la) {
  long long s = 0;
  for (int i = 0; i < la.length(); ++i) s += static_cast<long long>(i) * la[i];
  return s;
}

Partition transpose(const Partition& la) {
  std::vector<int> cols;
  if (!la.empty()) {
    cols.assign(la[0], 0);
    for (int r : la.parts())
      for (int c = 0; c < r; ++c) ++cols[c];
  }
  return Partition(std::move(cols));
}

BigInt factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

BigInt binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= m - k + i;
    r /= i;
  }
  return r;
}

BigInt multinomial(const std::vector<int>& parts) {
  int total = 0;
  BigInt den = 1;
  for (int p : parts) {
    total += p;
    den *= factorial(p);
  }
  return factorial(total) / den;
}

BigInt dim_specht(const Partition& la) {
  Partition t = transpose(la);
  BigInt hooks = 1;
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la[i]; ++j) hooks *= (la[i] - j - 1) + (t[j] - i - 1) + 1;
  return factorial(la.size()) / hooks;
}

namespace {

using Beads = std::vector<int>;  // decreasing beta-set

BigInt mn_beads(const Beads& beads, const std::vector<int>& cycles, std::size_t at,
                std::map<std::pair<Beads, std::size_t>, BigInt>& memo) {
  if (at == cycles.size()) return 1;
  auto key = std::make_pair(beads, at);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = cycles[at];
  BigInt total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int b = beads[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int between = 0;
    for (int c : beads)
      if (c > target && c < b) ++between;
    Beads next = beads;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    BigInt v = mn_beads(next, cycles, at + 1, memo);
    if (between % 2) total -= v;
    else total += v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_value(const Partition& la, const Partition& cycle_type) {
  if (la.size() != cycle_type.size())
    throw InvalidArgument("mn_value: partition and cycle type have different sizes");
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  thread_local std::map<Key, BigInt> cache;
  Key key{la.parts(), cycle_type.parts()};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int len = la.length();
  Beads beads(len);
  for (int i = 0; i < len; ++i) beads[i] = la[i] + (len - 1 - i);
  // Largest cycle first; cycle_type is already weakly decreasing.
  std::map<std::pair<Beads, std::size_t>, BigInt> memo;
  BigInt v = mn_beads(beads, cycle_type.parts(), 0, memo);
  cache.emplace(std::move(key), v);
  return v;
}

BigInt class_size(const Partition& mu) {
  BigInt den = 1;
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  for (auto [p, m] : mult) {
    for (int i = 0; i < m; ++i) den *= p;
    den *= factorial(m);
  }
  return factorial(mu.size()) / den;
}

long long alt_size(const std::vector<Partition>& tuple) {
  long long s = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i % 2 ? -1 : 1) * tuple[i].size();
  return s;
}

int CharLabel::n() const {
  int s = 0;
  for (const auto& b : blocks) s += b.size();
  return s;
}

int block_count(TypeTag type, int d) { return is_type_a(type) ? d : d / 2 + 3; }

void validate(const CharLabel& label) {
  if (label.d < 2 || label.d % 2) throw InvalidArgument("d must be a positive even integer");
  if (static_cast<int>(label.blocks.size()) != block_count(label.type, label.d))
    throw InvalidArgument("label for type " + to_string(label.type) + " with d=" +
                          std::to_string(label.d) + " needs " +
                          std::to_string(block_count(label.type, label.d)) + " partitions");
  if (label.type == TypeTag::D) {
    const bool equal = d_is_equal_pair(label.blocks);
    if (equal != label.split.has_value())
      throw InvalidArgument(equal ? "type D label with equal pairs needs a split sign"
                                  : "split sign only allowed when (la1,la2) = (mu1,mu2)");
    if (d_swap(label.blocks) < label.blocks)
      throw InvalidArgument("type D label is not the canonical swap representative");
  } else if (label.split) {
    throw InvalidArgument("split sign only allowed for type D");
  }
  if (label.type == TypeTag::AStar) {
    auto rotated = label.blocks;
    for (int r = 1; r < label.d; ++r) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      if (rotated < label.blocks)
        throw InvalidArgument("type Astar label is not the canonical rotation representative");
    }
  }
}

int o_lambda(const std::vector<Partition>& tuple) {
  const int d = static_cast<int>(tuple.size());
  for (int r = 1; r < d; ++r) {
    if (d % r) continue;
    bool fixed = true;
    for (int j = 0; j < d && fixed; ++j) fixed = tuple[j] == tuple[(j + r) % d];
    if (fixed) return r;
  }
  return std::max(d, 1);
}

int block_exponent(TypeTag type, int d, int j) {
  if (is_type_a(type)) return (j + 1) % d;
  if (j == 0) return 0;
  if (j == 1) return d / 2;
  return j - 1;
}

std::vector<int> psi_block_sizes(const CharLabel& label) {
  std::vector<int> sizes;
  if (is_type_a(label.type)) {
    for (const auto& b : label.blocks) sizes.push_back(b.size());
  } else {
    sizes.push_back(label.blocks[0].size() + label.blocks[1].size());
    sizes.push_back(label.blocks[2].size() + label.blocks[3].size());
    for (std::size_t j = 4; j < label.blocks.size(); ++j) sizes.push_back(label.blocks[j].size());
  }
  return sizes;
}

std::pair<int, int> square_counts(const CharLabel& label) {
  const auto sizes = psi_block_sizes(label);
  int sq = 0, nonsq = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (block_exponent(label.type, label.d, static_cast<int>(j)) % 2 == 0) sq += sizes[j];
    else nonsq += sizes[j];
  }
  return {sq, nonsq};
}

std::vector<Partition> d_swap(const std::vector<Partition>& blocks) {
  auto s = blocks;
  std::swap(s[0], s[1]);
  std::swap(s[2], s[3]);
  return s;
}

bool d_is_equal_pair(const std::vector<Partition>& blocks) {
  int total = 0;
  for (const auto& b : blocks) total += b.size();
  // n = 0: S^D_{d,0} = S^B_{d,0} is trivial and nothing splits
  return total > 0 && blocks[0] == blocks[1] && blocks[2] == blocks[3];
}

int multiplicity(const CharLabel& label) {
  if (label.type != TypeTag::AStar || label.n() == 0) return 1;
  return label.d / o_lambda(label.blocks);
}

namespace {

void tuples_rec(int count, int rest, std::vector<Partition>& cur,
                std::vector<std::vector<Partition>>& out) {
  if (count == 0) {
    if (rest == 0) out.push_back(cur);
    return;
  }
  for (int s = 0; s <= rest; ++s) {
    for (auto& p : partitions_of(s)) {
      cur.push_back(std::move(p));
      tuples_rec(count - 1, rest - s, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<Partition>> partition_tuples(int count, int n) {
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  tuples_rec(count, n, cur, out);
  return out;
}

std::vector<CharLabel> enumerate_labels(TypeTag type, int d, int n) {
  if (d < 2 || d % 2) throw InvalidArgument("d must be a positive even integer");
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<CharLabel> out;
  for (auto& t : partition_tuples(block_count(type, d), n)) {
    if (type == TypeTag::AStar) {
      auto rotated = t;
      bool minimal = true;
      for (int r = 1; r < d && minimal; ++r) {
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        minimal = !(rotated < t);
      }
      if (!minimal) continue;
    }
    if (type == TypeTag::D) {
      if (d_swap(t) < t) continue;
      if (d_is_equal_pair(t)) {
        out.push_back({type, d, t, SplitSign::Plus});
        out.push_back({type, d, std::move(t), SplitSign::Minus});
        continue;
      }
    }
    out.push_back({type, d, std::move(t), std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const CharLabel& a, const CharLabel& b) {
    if (a.blocks != b.blocks) return a.blocks < b.blocks;
    return a.split < b.split;
  });
  return out;
}

}  // namespace yhc
