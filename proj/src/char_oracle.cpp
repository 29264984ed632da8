#include "yhc/char_oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "yhc/label_text.hpp"

namespace yhc {

namespace {

int mod(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

struct Block {
  int start = 0;
  int size = 0;
  bool weyl = false;  // hyperoctahedral block (B/C/D blocks 1 and 2)
  Partition la, mu;
};

// Cycle lengths of w on [start, start+size), which w must preserve.  For
// signed blocks the negative cycles follow a -1 separator.
std::vector<int> cycle_key(const GroupElement& w, int start, int size, bool signed_cycles) {
  std::vector<int> pos, neg;
  std::vector<char> seen(size, 0);
  for (int k = 0; k < size; ++k) {
    if (seen[k]) continue;
    int len = 0, sign = 1, j = k;
    while (!seen[j]) {
      seen[j] = 1;
      sign *= w.signs[start + j];
      j = w.perm[start + j] - start;
      ++len;
    }
    (signed_cycles && sign < 0 ? neg : pos).push_back(len);
  }
  std::sort(pos.begin(), pos.end(), std::greater<>());
  if (signed_cycles) {
    std::sort(neg.begin(), neg.end(), std::greater<>());
    pos.push_back(-1);
    pos.insert(pos.end(), neg.begin(), neg.end());
  }
  return pos;
}

bool preserves(const GroupElement& w, int start, int size) {
  for (int k = start; k < start + size; ++k)
    if (w.perm[k] < start || w.perm[k] >= start + size) return false;
  return true;
}

BigInt specht_at(const Partition& la, const GroupElement& w, int start, int size) {
  return mn_value(la, Partition(cycle_key(w, start, size, false)));
}

struct HypKey {
  std::vector<int> la, mu, cycles;
  auto operator<=>(const HypKey&) const = default;
};

std::mutex hyp_mu;
std::map<HypKey, BigInt> hyp_cache;
std::map<int, std::vector<GroupElement>> hyp_weyl;

const std::vector<GroupElement>& weyl_b(int m) {
  // caller holds hyp_mu
  auto it = hyp_weyl.find(m);
  if (it == hyp_weyl.end()) it = hyp_weyl.emplace(m, enumerate_weyl(TypeTag::B, 2, m)).first;
  return it->second;
}

class Induced {
 public:
  explicit Induced(const CharLabel& label) : label_(label), d_(label.d), n_(label.n()) {
    ambient_ = is_type_a(label.type) ? TypeTag::A : TypeTag::B;
    const auto sizes = psi_block_sizes(label);
    int at = 0;
    stab_order_ = 1;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      Block b;
      b.start = at;
      b.size = sizes[j];
      b.weyl = !is_type_a(label.type) && j < 2;
      if (b.weyl) {
        b.la = label.blocks[2 * j];
        b.mu = label.blocks[2 * j + 1];
        stab_order_ *= factorial(b.size) * (BigInt(1) << b.size);
      } else {
        b.la = is_type_a(label.type) ? label.blocks[j] : label.blocks[j + 2];
        stab_order_ *= factorial(b.size);
      }
      const int e = block_exponent(label.type, d_, static_cast<int>(j));
      for (int k = 0; k < b.size; ++k) exps_.push_back(e);
      blocks_.push_back(std::move(b));
      at += sizes[j];
    }
    weyl_ = enumerate_weyl(ambient_, d_, n_);
  }

  TypeTag ambient() const { return ambient_; }

  // Sum over x = (v, s) in the ambient group of the extended inner character
  // at x g x^-1, bucketed by the exponent of the psi-value.
  std::vector<BigInt> sum(const GroupElement& g, unsigned workers) const {
    const std::size_t total = weyl_.size();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));
    std::vector<std::vector<BigInt>> parts(workers, std::vector<BigInt>(d_, 0));
    auto run = [&](unsigned w) {
      const std::size_t lo = total * w / workers, hi = total * (w + 1) / workers;
      accumulate(g, lo, hi, parts[w]);
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    std::vector<BigInt> acc(d_, 0);
    for (const auto& p : parts)
      for (int r = 0; r < d_; ++r) acc[r] += p[r];
    return acc;
  }

  // |N(psi)| = d^n |Stab(psi)|
  BigInt normalizer_order() const {
    BigInt t = 1;
    for (int k = 0; k < n_; ++k) t *= d_;
    return t * stab_order_;
  }

 private:
  bool in_stab(const GroupElement& w) const {
    for (int k = 0; k < n_; ++k)
      if (mod(static_cast<long long>(exps_[w.perm[k]]) * w.signs[k] - exps_[k], d_) != 0) return false;
    return true;
  }

  BigInt block_value(const GroupElement& w, std::map<std::pair<int, std::vector<int>>, BigInt>& cache) const {
    BigInt v = 1;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      const auto& b = blocks_[j];
      if (b.size == 0) continue;
      auto key = std::make_pair(static_cast<int>(j), cycle_key(w, b.start, b.size, b.weyl));
      auto it = cache.find(key);
      if (it == cache.end()) {
        BigInt x;
        if (b.weyl) {
          GroupElement r = GroupElement::identity(2, b.size);
          for (int k = 0; k < b.size; ++k) {
            r.perm[k] = w.perm[b.start + k] - b.start;
            r.signs[k] = w.signs[b.start + k];
          }
          x = hyperoctahedral_char(b.la, b.mu, r);
        } else {
          x = specht_at(b.la, w, b.start, b.size);
        }
        it = cache.emplace(std::move(key), x).first;
      }
      v *= it->second;
      if (v == 0) break;
    }
    return v;
  }

  void accumulate(const GroupElement& g, std::size_t lo, std::size_t hi, std::vector<BigInt>& acc) const {
    std::map<std::pair<int, std::vector<int>>, BigInt> cache;
    GroupElement wc = GroupElement::identity(d_, n_);
    std::vector<int> st(n_);
    std::vector<long long> dist(d_), next(d_);
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& s = weyl_[i];
      // Weyl part of x g x^-1 is s w s^-1; the torus part is v + s.tau - (s w s^-1).v
      for (int k = 0; k < n_; ++k) {
        wc.perm[s.perm[k]] = s.perm[g.perm[k]];
        wc.signs[s.perm[k]] = s.signs[k] * g.signs[k] * s.signs[g.perm[k]];
        st[s.perm[k]] = mod(static_cast<long long>(s.signs[k]) * g.torus[k], d_);
      }
      if (!in_stab(wc)) continue;
      const BigInt bv = block_value(wc, cache);
      if (bv == 0) continue;
      long long base = 0;
      for (int k = 0; k < n_; ++k) base += static_cast<long long>(exps_[k]) * st[k];
      // Distribution of sum_k e_k (v - wc.v)_k over all v in C_d^n.
      std::fill(dist.begin(), dist.end(), 0);
      dist[0] = 1;
      for (int k = 0; k < n_; ++k) {
        const int c = mod(exps_[k] - static_cast<long long>(exps_[wc.perm[k]]) * wc.signs[k], d_);
        std::fill(next.begin(), next.end(), 0);
        for (int r = 0; r < d_; ++r)
          for (int v = 0; v < d_; ++v) next[mod(r + static_cast<long long>(c) * v, d_)] += dist[r];
        dist.swap(next);
      }
      for (int r = 0; r < d_; ++r)
        if (dist[r]) acc[mod(base + r, d_)] += bv * dist[r];
    }
  }

  CharLabel label_;
  int d_, n_;
  TypeTag ambient_;
  std::vector<int> exps_;
  std::vector<Block> blocks_;
  BigInt stab_order_;
  std::vector<GroupElement> weyl_;
};

void check_element(const CharLabel& label, const GroupElement& g) {
  if (g.d != label.d || g.n() != label.n())
    throw InvalidArgument("element and label have different (d, n)");
  if (!in_group(label.type, g))
    throw InvalidArgument("element " + describe(g) + " is not in S_{d,n} of type " + to_string(label.type));
}

CycValue eval_with(const Induced& ind, const CharLabel& label, const GroupElement& g, unsigned workers) {
  check_element(label, g);
  const auto acc = ind.sum(g, workers);
  CycValue v(label.d);
  for (int r = 0; r < label.d; ++r) v[r] = Rational(acc[r]);
  v /= Rational(ind.normalizer_order());
  return v;
}

Induced make_induced(const CharLabel& label, const OracleOptions& opts) {
  validate(label);
  const TypeTag ambient = is_type_a(label.type) ? TypeTag::A : TypeTag::B;
  const BigInt order = group_order(ambient, label.d, label.n());
  if (order > opts.budget) throw BudgetExceeded(order, opts.budget);
  return Induced(label);
}

Rational rational_or_throw(const CycValue& v, const std::string& what) {
  auto r = v.as_rational();
  if (!r) throw InternalInconsistency(what + " is not rational: " + v.str());
  return *r;
}

long long integer_or_throw(const Rational& r, const std::string& what) {
  if (denominator(r) != 1)
    throw InternalInconsistency(what + " is not an integer: " + r.str());
  return static_cast<long long>(numerator(r));
}

}  // namespace

BigInt hyperoctahedral_char(const Partition& la, const Partition& mu, const GroupElement& w) {
  const int k1 = la.size(), m = la.size() + mu.size();
  if (w.n() != m) throw InvalidArgument("hyperoctahedral_char: element size mismatch");
  HypKey key{la.parts(), mu.parts(), cycle_key(w, 0, m, true)};
  std::vector<GroupElement> all;
  {
    std::lock_guard lock(hyp_mu);
    if (auto it = hyp_cache.find(key); it != hyp_cache.end()) return it->second;
    all = weyl_b(m);
  }
  GroupElement y = w;
  y.d = 2;
  std::fill(y.torus.begin(), y.torus.end(), 0);
  BigInt total = 0;
  for (const auto& x : all) {
    const auto c = conjugate(y, x);
    if (!preserves(c, 0, k1)) continue;
    BigInt v = specht_at(la, c, 0, k1) * specht_at(mu, c, k1, m - k1);
    for (int k = k1; k < m; ++k) v *= c.signs[k];
    total += v;
  }
  const BigInt h = factorial(k1) * (BigInt(1) << k1) * factorial(m - k1) * (BigInt(1) << (m - k1));
  if (total % h != 0) throw InternalInconsistency("hyperoctahedral character sum not divisible");
  total /= h;
  std::lock_guard lock(hyp_mu);
  hyp_cache.emplace(std::move(key), total);
  return total;
}

CycValue eval_char(const CharLabel& label, const GroupElement& g, const OracleOptions& opts) {
  auto ind = make_induced(label, opts);
  return eval_with(ind, label, g, opts.workers);
}

CycValue eval_char_combo(const CharLabel& label, const FormalCombo& c, const OracleOptions& opts) {
  auto ind = make_induced(label, opts);
  CycValue total(label.d);
  for (const auto& [coef, g] : c.terms) total += eval_with(ind, label, g, opts.workers) * coef;
  return total;
}

Rational degree_from_oracle(const CharLabel& label, const OracleOptions& opts) {
  const auto v = eval_char(label, GroupElement::identity(label.d, label.n()), opts);
  Rational r = rational_or_throw(v, "degree");
  if (label.split) r /= 2;
  if (label.type == TypeTag::AStar) r /= multiplicity(label);
  return r;
}

long long g_from_definition(const CharLabel& label, const OracleOptions& opts) {
  auto ind = make_induced(label, opts);
  const int n = label.n();
  const Rational deg = rational_or_throw(eval_with(ind, label, GroupElement::identity(label.d, n), opts.workers), "degree");
  Rational g = 0;
  for (const auto& lc : letter_classes(label.type, label.d, n)) {
    if (lc.count == 0) continue;
    const Rational h = rational_or_throw(eval_with(ind, label, lc.h_element, opts.workers), "value at h");
    g += Rational(lc.count) * (deg - h) / (2 * deg);
  }
  return integer_or_throw(g, "g");
}

long long k_from_definition(const CharLabel& label, const OracleOptions& opts) {
  auto ind = make_induced(label, opts);
  const int n = label.n();
  const Rational deg = rational_or_throw(eval_with(ind, label, GroupElement::identity(label.d, n), opts.workers), "degree");
  Rational k = 0;
  for (const auto& lc : letter_classes(label.type, label.d, n)) {
    if (lc.count == 0) continue;
    CycValue v(label.d);
    for (const auto& [coef, g] : lc.xi_e.terms) v += eval_with(ind, label, g, opts.workers) * coef;
    k += Rational(lc.count) * rational_or_throw(v, "value at xi e") / deg;
  }
  return integer_or_throw(k, "k");
}

OrthogonalityReport orthogonality_check(TypeTag type, int d, int n, const OrthogonalityOptions& opts) {
  OrthogonalityReport rep;
  rep.group_order = group_order(type, d, n);
  const auto labels = enumerate_labels(type, d, n);
  rep.labels = labels.size();
  for (const auto& l : labels) {
    const Rational deg = degree_from_oracle(l, opts.oracle);
    rep.degree_square_sum += numerator(Rational(deg * deg * multiplicity(l)));
    if (denominator(deg) != 1) {
      rep.pass = false;
      rep.failure = "non-integer degree for " + label_to_text(l);
    }
  }
  if (rep.degree_square_sum != rep.group_order) {
    rep.pass = false;
    rep.failure = "sum of squared degrees " + rep.degree_square_sum.str() + " != group order " +
                  rep.group_order.str();
    return rep;
  }
  if (opts.sample_labels == 0) return rep;

  std::vector<CharLabel> parents;
  for (const auto& l : labels)
    if (l.split != SplitSign::Minus) parents.push_back(l);
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = parents.size(); i > 1; --i) std::swap(parents[i - 1], parents[rng() % i]);
  if (parents.size() > opts.sample_labels) parents.resize(opts.sample_labels);

  const auto elements = enumerate_group(type, d, n, opts.oracle.budget);
  std::vector<std::vector<CycValue>> values;
  for (const auto& l : parents) {
    auto ind = make_induced(l, opts.oracle);
    std::vector<CycValue> row;
    row.reserve(elements.size());
    for (const auto& g : elements) row.push_back(eval_with(ind, l, g, opts.oracle.workers));
    values.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < parents.size(); ++i) {
    for (std::size_t j = i; j < parents.size(); ++j) {
      CycValue ip(d);
      for (std::size_t e = 0; e < elements.size(); ++e) ip += values[i][e] * values[j][e].conj();
      ip /= Rational(rep.group_order);
      Rational expected = 0;
      if (i == j) expected = parents[i].split ? 2 : multiplicity(parents[i]);
      ++rep.pairs_checked;
      if (!(ip == CycValue::from_rational(d, expected))) {
        rep.pass = false;
        rep.failure = "<" + label_to_text(parents[i]) + ", " + label_to_text(parents[j]) +
                      "> = " + ip.str() + ", expected " + expected.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace yhc
