#include "yhc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "yhc/label_text.hpp"
#include "yhc/root_data.hpp"

namespace yhc {

namespace {

struct LabelOutcome {
  std::vector<Mismatch> mismatches;
  std::vector<std::string> ran;
  bool witness = false;
};

std::string str(const Rational& r) { return r.str(); }

void expect(LabelOutcome& out, const CharLabel& l, const std::string& check, const std::string& closed,
            const std::string& oracle, bool ok) {
  out.ran.push_back(check);
  if (!ok) out.mismatches.push_back({label_to_text(l), check, closed, oracle});
}

LabelOutcome check_label(const CharLabel& l, const VerifyOptions& opts) {
  LabelOutcome out;
  const int n = l.n();
  const auto& oo = opts.oracle;
  try {
    const long long gc = g_closed(l), gd = g_from_definition(l, oo);
    expect(out, l, "g", std::to_string(gc), std::to_string(gd), gc == gd);
    const long long kc = k_closed(l), kd = k_from_definition(l, oo);
    expect(out, l, "k", std::to_string(kc), std::to_string(kd), kc == kd);
    const BigInt deg = degree(l);
    const Rational dd = degree_from_oracle(l, oo);
    expect(out, l, "degree", deg.str(), str(dd), Rational(deg) == dd);

    const auto w0 = w0_value(l);
    const TypeTag ambient = is_type_a(l.type) ? TypeTag::A : TypeTag::B;
    const GroupElement w0e = w0_element(l.type == TypeTag::AStar ? ambient : l.type, l.d, n);
    if (l.type == TypeTag::AStar && n % 2 == 0) {
      expect(out, l, "w0", w0.unknown() ? "unknown" : w0.value->str(), "unknown", w0.unknown());
    } else {
      const CycValue ev = eval_char(l, w0e, oo);
      const auto evr = ev.as_rational();
      Rational closed = w0.unknown() ? Rational(0) : Rational(*w0.value);
      std::string what = "w0";
      if (l.type == TypeTag::AStar) {
        closed *= multiplicity(l);
        what = "w0 (times d/o)";
      } else if (l.split) {
        CharLabel partner = l;
        partner.split = *l.split == SplitSign::Plus ? SplitSign::Minus : SplitSign::Plus;
        closed += Rational(*w0_value(partner).value);
        what = "w0 (split pair sum)";
      }
      expect(out, l, what, str(closed), ev.str(), !w0.unknown() && evr && *evr == closed);
    }

    const long long len = longest_length(l.type, n), f = f_closed(l);
    expect(out, l, "f range", std::to_string(f), "[0," + std::to_string(2 * len) + "]", f >= 0 && f <= 2 * len);
    if (!w0.unknown()) {
      expect(out, l, "|w0| <= degree", w0.value->str(), deg.str(), abs(*w0.value) <= deg);
      if (l.type == TypeTag::B)
        expect(out, l, "parity l-k", std::to_string(len - kc), "even", (len - kc) % 2 == 0);
      if ((l.type == TypeTag::A || l.type == TypeTag::D) && *w0.value != 0)
        expect(out, l, "parity f,g", "f=" + std::to_string(f) + " g=" + std::to_string(gc), "both even",
               f % 2 == 0 && gc % 2 == 0);
      const auto t = *hecke_value_at_Tw0(l);
      if (t.q_half_exp() % 2 != 0 || (t.re() == 0 && t.im() != 0)) out.witness = true;
      if (deg == 1) {
        const auto sq = hecke_value_at_Tw0_squared(l);
        expect(out, l, "degree-1 square", sym_render(t * t, SymFormat::Unicode),
               sym_render(sq.scalar, SymFormat::Unicode), t * t == sq.scalar);
      }
    }
  } catch (const InternalInconsistency& e) {
    out.mismatches.push_back({label_to_text(l), "internal", "", e.what()});
  }
  return out;
}

}  // namespace

VerifyReport verify_n(TypeTag type, int d, int n, const VerifyOptions& opts) {
  VerifyReport rep;
  rep.type = type;
  rep.d = d;
  rep.n = n;
  const TypeTag ambient = is_type_a(type) ? TypeTag::A : TypeTag::B;
  const BigInt order = group_order(ambient, d, n);
  if (order > opts.oracle.budget) {
    rep.skipped = true;
    rep.skip_reason = "group order " + order.str() + " exceeds budget " + std::to_string(opts.oracle.budget);
    return rep;
  }
  const auto labels = enumerate_labels(type, d, n);
  rep.labels = labels.size();
  rep.orthogonality = orthogonality_check(type, d, n, {opts.oracle, opts.sample_labels, opts.seed});

  std::vector<LabelOutcome> outcomes(labels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < labels.size();) outcomes[i] = check_label(labels[i], opts);
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::pair<std::string, std::size_t>> counts;
  for (const auto& o : outcomes) {
    for (const auto& c : o.ran) {
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& p) { return p.first == c; });
      if (it == counts.end()) counts.emplace_back(c, 1);
      else ++it->second;
    }
    rep.mismatches.insert(rep.mismatches.end(), o.mismatches.begin(), o.mismatches.end());
    rep.nonsplit_witness = rep.nonsplit_witness || o.witness;
  }
  rep.checks = std::move(counts);
  std::stable_sort(rep.mismatches.begin(), rep.mismatches.end(), [](const Mismatch& a, const Mismatch& b) {
    return std::tie(a.label, a.check) < std::tie(b.label, b.check);
  });
  if (type == TypeTag::C && n >= 1 && !rep.nonsplit_witness)
    rep.mismatches.push_back({"*", "type C non-split witness", "none found", "expected one"});
  return rep;
}

std::vector<VerifyReport> verify(TypeTag type, int d, int max_n, const VerifyOptions& opts) {
  std::vector<VerifyReport> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(verify_n(type, d, n, opts));
  return out;
}

}  // namespace yhc
