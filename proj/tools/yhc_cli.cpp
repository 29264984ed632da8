// yhc: labels, closed-form values and oracle verification for the characters
// of S_{d,n} and the Yokonuma-Hecke algebra.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "yhc/closed_forms.hpp"
#include "yhc/label_text.hpp"
#include "yhc/verify.hpp"

using namespace yhc;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kMismatch = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type_text;
  int d = 0;
  int n = -1;
  int max_n = -1;
  std::string format = "pretty";
  std::string q_text;
  bool hecke = false;
  int digits = 20;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  std::string out_path;
  unsigned jobs = 1;
  std::size_t sample_labels = 6;
  std::string label_text;

  TypeTag type() const {
    auto t = parse_type(type_text);
    if (!t) throw UsageError("unknown type '" + type_text + "' (expected A, Astar, B, C or D)");
    return *t;
  }

  std::uint64_t oracle_budget() const {
    if (budget) return *budget;
    if (const char* env = std::getenv("YHC_BUDGET")) {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("YHC_BUDGET is not a nonnegative integer: '") + env + "'");
    }
    return kDefaultBudget;
  }

  std::optional<Rational> q() const {
    if (q_text.empty()) return std::nullopt;
    Rational q;
    try {
      q = parse_rational(q_text);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
    if (q <= 0) throw UsageError("--q must be positive");
    return q;
  }

  void check_d() const {
    if (d < 2 || d % 2) throw UsageError("--d must be a positive even integer, got " + std::to_string(d));
  }
};

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json sym_json(const SymValue& v) { return Json::parse(sym_render(v, SymFormat::Json)); }

// All values reported for one label.
struct Row {
  CharLabel label;
  std::string text;
  BigInt degree;
  long long k, g, f;
  W0ValueResult w0;
  std::optional<SymValue> tw0;
  Tw0Squared tw0sq;
};

Row make_row(const CharLabel& l) {
  return {l, label_to_text(l), degree(l), k_closed(l), g_closed(l), f_closed(l), w0_value(l), hecke_value_at_Tw0(l),
          hecke_value_at_Tw0_squared(l)};
}

void warn_hecke(const Config& c, const std::optional<Rational>& q) {
  if (c.hecke && !q) std::cerr << "warning: --hecke without --q has no effect\n";
  if (c.hecke && q && *q != Rational(c.d + 1))
    std::cerr << "warning: Hecke semantics tie d = q-1, but d=" << c.d << " and q=" << q->str() << "\n";
}

Json specialized_json(const SymValue& v, const Rational& q, int digits) {
  const auto s = specialize(v, q, digits);
  Json j;
  j["re"] = s.re;
  j["im"] = s.im;
  if (s.exact()) {
    j["re_exact"] = s.re_exact->str();
    j["im_exact"] = s.im_exact->str();
  }
  return j;
}

Json row_json(const Row& r, const std::optional<Rational>& q, int digits) {
  Json j;
  j["label"] = r.text;
  j["degree"] = big_json(r.degree);
  j["k"] = r.k;
  j["g"] = r.g;
  j["f"] = r.f;
  j["w0_value"] = r.w0.unknown() ? Json("unknown") : big_json(*r.w0.value);
  j["T_w0"] = r.tw0 ? sym_json(*r.tw0) : Json("unknown");
  j["T_w0_sq_scalar"] = sym_json(r.tw0sq.scalar);
  j["T_w0_sq_value"] = sym_json(r.tw0sq.char_value);
  if (q) {
    Json s;
    s["q"] = q->str();
    s["T_w0"] = r.tw0 ? specialized_json(*r.tw0, *q, digits) : Json("unknown");
    s["T_w0_sq_scalar"] = specialized_json(r.tw0sq.scalar, *q, digits);
    s["T_w0_sq_value"] = specialized_json(r.tw0sq.char_value, *q, digits);
    j["specialized"] = s;
  }
  return j;
}

const char* kCsvHeader = "type,d,n,label,degree,k,g,f,w0_value,tw0_re,tw0_im,tw0_qhalf,tw0sq_re,tw0sq_im,tw0sq_qhalf";

std::string csv_row(const Config& c, TypeTag t, const Row& r, const std::optional<Rational>& q) {
  std::ostringstream os;
  os << to_string(t) << ',' << c.d << ',' << r.label.n() << ",\"" << r.text << "\"," << r.degree << ',' << r.k << ','
     << r.g << ',' << r.f << ',';
  if (r.w0.unknown()) os << "unknown,unknown,unknown,unknown,";
  else os << *r.w0.value << ',' << r.tw0->re() << ',' << r.tw0->im() << ',' << r.tw0->q_half_exp() << ',';
  const auto& v = r.tw0sq.char_value;
  os << v.re() << ',' << v.im() << ',' << v.q_half_exp();
  if (q) {
    if (r.tw0) {
      const auto s = specialize(*r.tw0, *q, c.digits);
      os << ',' << s.re << ',' << s.im;
    } else {
      os << ",unknown,unknown";
    }
    const auto s = specialize(v, *q, c.digits);
    os << ',' << s.re << ',' << s.im;
  }
  return os.str();
}

std::string pretty_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  // widths counted in code points so the middle dot does not skew the columns
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s) w += (ch & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = width(header[i]);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], width(r[i]));
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << r[i];
      if (i + 1 < r.size()) os << std::string(w[i] - width(r[i]) + 2, ' ');
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::vector<Row> rows_for(TypeTag t, int d, int n) {
  std::vector<Row> rows;
  for (const auto& l : enumerate_labels(t, d, n)) rows.push_back(make_row(l));
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.text < b.text; });
  return rows;
}

void require_n(const Config& c) {
  if (c.n < 0) throw UsageError("--n is required");
}

std::string cmd_labels(const Config& c) {
  const TypeTag t = c.type();
  c.check_d();
  require_n(c);
  const auto rows = rows_for(t, c.d, c.n);
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"label", r.text}, {"degree", big_json(r.degree)}});
    return arr.dump(2) + "\n";
  }
  if (c.format == "csv") {
    std::string s = "type,d,n,label,degree\n";
    for (const auto& r : rows)
      s += to_string(t) + "," + std::to_string(c.d) + "," + std::to_string(c.n) + ",\"" + r.text + "\"," +
           r.degree.str() + "\n";
    return s;
  }
  std::vector<std::vector<std::string>> body;
  for (const auto& r : rows) body.push_back({r.text, r.degree.str()});
  return pretty_table({"label", "degree"}, body);
}

std::vector<std::string> pretty_row(const Row& r) {
  return {r.text,
          r.degree.str(),
          std::to_string(r.k),
          std::to_string(r.g),
          std::to_string(r.f),
          r.w0.unknown() ? "unknown" : r.w0.value->str(),
          r.tw0 ? sym_render(*r.tw0, SymFormat::Unicode) : "unknown",
          sym_render(r.tw0sq.scalar, SymFormat::Unicode),
          sym_render(r.tw0sq.char_value, SymFormat::Unicode)};
}

std::string complex_text(const Specialized& s) {
  if (s.im == "0") return s.re;
  if (s.re == "0") return s.im + "i";
  if (s.im[0] == '-') return s.re + " - " + s.im.substr(1) + "i";
  return s.re + " + " + s.im + "i";
}

const std::vector<std::string> kPrettyHeader{"label", "degree", "k", "g", "f", "w0", "T_w0", "T_w0^2 scalar",
                                             "T_w0^2 value"};

std::string emit_rows(const Config& c, TypeTag t, const std::vector<Row>& rows, const std::optional<Rational>& q,
                      bool single) {
  if (c.format == "json") {
    if (single) return row_json(rows.front(), q, c.digits).dump(2) + "\n";
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(row_json(r, q, c.digits));
    return arr.dump(2) + "\n";
  }
  if (c.format == "csv") {
    std::string s = kCsvHeader;
    if (q) s += ",tw0_val_re,tw0_val_im,tw0sq_val_re,tw0sq_val_im";
    s += "\n";
    for (const auto& r : rows) s += csv_row(c, t, r, q) + "\n";
    return s;
  }
  std::vector<std::vector<std::string>> body;
  auto header = kPrettyHeader;
  if (q) {
    header.push_back("T_w0 at q=" + q->str());
    header.push_back("T_w0^2 value at q=" + q->str());
  }
  for (const auto& r : rows) {
    auto line = pretty_row(r);
    if (q) {
      if (r.tw0) {
        line.push_back(complex_text(specialize(*r.tw0, *q, c.digits)));
      } else {
        line.push_back("unknown");
      }
      line.push_back(complex_text(specialize(r.tw0sq.char_value, *q, c.digits)));
    }
    body.push_back(std::move(line));
  }
  return pretty_table(header, body);
}

std::string cmd_eval(const Config& c) {
  const TypeTag t = c.type();
  c.check_d();
  CharLabel l;
  try {
    l = parse_label(t, c.d, c.label_text);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (c.n >= 0 && l.n() != c.n)
    throw UsageError("label has total size " + std::to_string(l.n()) + ", but --n is " + std::to_string(c.n));
  const auto q = c.q();
  warn_hecke(c, q);
  return emit_rows(c, t, {make_row(l)}, q, true);
}

std::string cmd_table(const Config& c) {
  const TypeTag t = c.type();
  c.check_d();
  require_n(c);
  const auto q = c.q();
  warn_hecke(c, q);
  return emit_rows(c, t, rows_for(t, c.d, c.n), q, false);
}

Json report_json(const VerifyReport& r) {
  Json j;
  j["type"] = to_string(r.type);
  j["d"] = r.d;
  j["n"] = r.n;
  j["status"] = r.skipped ? "skipped" : r.pass() ? "pass" : "fail";
  if (r.skipped) {
    j["skip_reason"] = r.skip_reason;
    return j;
  }
  j["labels"] = r.labels;
  j["orthogonality"] = {{"pass", r.orthogonality.pass},
                        {"degree_square_sum", big_json(r.orthogonality.degree_square_sum)},
                        {"group_order", big_json(r.orthogonality.group_order)},
                        {"pairs_checked", r.orthogonality.pairs_checked},
                        {"failure", r.orthogonality.failure}};
  Json checks = Json::object();
  for (const auto& [name, count] : r.checks) checks[name] = count;
  j["checks"] = checks;
  Json mm = Json::array();
  for (const auto& m : r.mismatches)
    mm.push_back({{"label", m.label}, {"check", m.check}, {"closed", m.closed}, {"oracle", m.oracle}});
  j["mismatches"] = mm;
  if (r.type == TypeTag::C) j["nonsplit_witness"] = r.nonsplit_witness;
  return j;
}

std::string report_pretty(const VerifyReport& r) {
  std::ostringstream os;
  os << to_string(r.type) << " d=" << r.d << " n=" << r.n << ": ";
  if (r.skipped) {
    os << "SKIP (" << r.skip_reason << ")\n";
    return os.str();
  }
  os << (r.pass() ? "PASS" : "FAIL") << "  labels=" << r.labels << "  sum deg^2=" << r.orthogonality.degree_square_sum
     << "/" << r.orthogonality.group_order << "  pairs=" << r.orthogonality.pairs_checked;
  for (const auto& [name, count] : r.checks) os << "  " << name << ":" << count;
  if (r.type == TypeTag::C) os << "  nonsplit-witness=" << (r.nonsplit_witness ? "yes" : "no");
  os << '\n';
  if (!r.orthogonality.pass) os << "  orthogonality: " << r.orthogonality.failure << '\n';
  for (const auto& m : r.mismatches)
    os << "  MISMATCH " << m.label << " [" << m.check << "] closed=" << m.closed << " oracle=" << m.oracle << '\n';
  return os.str();
}

std::pair<std::string, int> cmd_verify(const Config& c) {
  const TypeTag t = c.type();
  c.check_d();
  if (c.max_n < 0) throw UsageError("--max-n is required");
  VerifyOptions opts;
  opts.oracle.budget = c.oracle_budget();
  opts.seed = c.seed;
  opts.jobs = std::max(1u, c.jobs);
  opts.sample_labels = c.sample_labels;
  const auto reps = verify(t, c.d, c.max_n, opts);
  bool mismatch = false, skipped = false;
  for (const auto& r : reps) {
    skipped = skipped || r.skipped;
    mismatch = mismatch || (!r.skipped && !r.pass());
  }
  const int code = mismatch ? kMismatch : skipped ? kBudget : kOk;
  const std::string status = mismatch ? "FAIL" : skipped ? "SKIPPED" : "PASS";
  std::ostringstream os;
  if (c.format == "json") {
    Json j;
    j["status"] = status;
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(report_json(r));
    j["reports"] = arr;
    os << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << "type,d,n,status,labels,degree_square_sum,group_order,mismatches\n";
    for (const auto& r : reps)
      os << to_string(r.type) << ',' << r.d << ',' << r.n << ','
         << (r.skipped ? "skipped" : r.pass() ? "pass" : "fail") << ',' << r.labels << ','
         << r.orthogonality.degree_square_sum << ',' << r.orthogonality.group_order << ',' << r.mismatches.size()
         << '\n';
  } else {
    for (const auto& r : reps) os << report_pretty(r);
    os << "overall: " << status << '\n';
  }
  return {os.str(), code};
}

void emit(const Config& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open --out file '" + c.out_path + "'");
  f << text;
}

void add_common(CLI::App* sub, Config& c, bool with_n) {
  sub->add_option("--type", c.type_text, "A, Astar, B, C or D")->required();
  sub->add_option("--d", c.d, "torus order, even")->required();
  if (with_n) sub->add_option("--n", c.n, "rank");
  sub->add_option("--format", c.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--out", c.out_path, "write output to this file");
  sub->add_option("--budget", c.budget, "oracle element budget (overrides YHC_BUDGET)");
  sub->add_option("--seed", c.seed, "seed for sampled checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of S_{d,n} and Yokonuma-Hecke values at T_w0"};
  app.require_subcommand(1);
  Config c;

  auto* labels = app.add_subcommand("labels", "list irreducible character labels with degrees");
  add_common(labels, c, true);

  auto* eval = app.add_subcommand("eval", "all closed-form values for one label");
  add_common(eval, c, true);
  eval->add_option("label", c.label_text, "label, e.g. [[1],[],[1],[]] or [[1],[1],[],[]]:+")->required();
  eval->add_option("--q", c.q_text, "specialize q (rational, e.g. 4 or 9/4)");
  eval->add_flag("--hecke", c.hecke, "Hecke-algebra semantics: warn unless d = q-1");
  eval->add_option("--digits", c.digits, "significant digits for --q")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "closed-form values for every label");
  add_common(table, c, true);
  table->add_option("--q", c.q_text, "specialize q");
  table->add_flag("--hecke", c.hecke, "Hecke-algebra semantics: warn unless d = q-1");
  table->add_option("--digits", c.digits, "significant digits for --q")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "check closed forms against the brute-force oracle");
  add_common(ver, c, false);
  ver->add_option("--max-n", c.max_n, "largest rank checked")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", c.jobs, "worker threads");
  ver->add_option("--sample-labels", c.sample_labels, "labels used for inner-product checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*labels) emit(c, cmd_labels(c));
    else if (*eval) emit(c, cmd_eval(c));
    else if (*table) emit(c, cmd_table(c));
    else {
      auto [text, code] = cmd_verify(c);
      emit(c, text);
      return code;
    }
    return kOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}
