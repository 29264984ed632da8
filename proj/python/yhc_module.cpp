#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "yhc/char_oracle.hpp"
#include "yhc/closed_forms.hpp"
#include "yhc/label_text.hpp"
#include "yhc/root_data.hpp"
#include "yhc/verify.hpp"

namespace py = pybind11;
using namespace yhc;

namespace {

// Python ints are unbounded; go through the decimal string.
py::object to_py(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::object to_py(const Rational& r) {
  if (denominator(r) == 1) return to_py(numerator(r));
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(r)), to_py(denominator(r)));
}

TypeTag type_of(const std::string& s) {
  auto t = parse_type(s);
  if (!t) throw InvalidArgument("unknown type '" + s + "'");
  return *t;
}

CharLabel label_of(const std::string& type, int d, const std::string& text) {
  return parse_label(type_of(type), d, text);
}

py::dict sym_dict(const SymValue& v) {
  py::dict d;
  d["re"] = to_py(v.re());
  d["im"] = to_py(v.im());
  d["q_half_exp"] = v.q_half_exp();
  return d;
}

py::dict evaluate(const std::string& type, int d, const std::string& text) {
  const auto l = label_of(type, d, text);
  py::dict out;
  out["label"] = label_to_text(l);
  out["degree"] = to_py(degree(l));
  out["k"] = k_closed(l);
  out["g"] = g_closed(l);
  out["f"] = f_closed(l);
  const auto w = w0_value(l);
  out["w0_value"] = w.unknown() ? py::object(py::none()) : to_py(*w.value);
  const auto t = hecke_value_at_Tw0(l);
  out["T_w0"] = t ? py::object(sym_dict(*t)) : py::object(py::none());
  const auto sq = hecke_value_at_Tw0_squared(l);
  out["T_w0_sq_scalar"] = sym_dict(sq.scalar);
  out["T_w0_sq_value"] = sym_dict(sq.char_value);
  return out;
}

py::list verify_py(const std::string& type, int d, int max_n, std::uint64_t budget, unsigned jobs) {
  VerifyOptions o;
  o.oracle.budget = budget;
  o.jobs = jobs;
  py::list out;
  for (const auto& r : verify(type_of(type), d, max_n, o)) {
    py::dict x;
    x["n"] = r.n;
    x["skipped"] = r.skipped;
    x["pass"] = r.pass();
    x["labels"] = r.labels;
    x["degree_square_sum"] = to_py(r.orthogonality.degree_square_sum);
    x["group_order"] = to_py(r.orthogonality.group_order);
    py::list mm;
    for (const auto& m : r.mismatches) mm.append(py::make_tuple(m.label, m.check, m.closed, m.oracle));
    x["mismatches"] = mm;
    out.append(x);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(yhc, m) {
  m.doc() = "Characters of S_{d,n} and Yokonuma-Hecke values at T_w0";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_ArithmeticError);

  m.def("labels", [](const std::string& type, int d, int n) {
    std::vector<std::string> out;
    for (const auto& l : enumerate_labels(type_of(type), d, n)) out.push_back(label_to_text(l));
    return out;
  }, py::arg("type"), py::arg("d"), py::arg("n"));

  m.def("evaluate", &evaluate, py::arg("type"), py::arg("d"), py::arg("label"),
        "closed-form degree, k, g, f, w0 value and Hecke values");

  m.def("degree", [](const std::string& t, int d, const std::string& l) { return to_py(degree(label_of(t, d, l))); },
        py::arg("type"), py::arg("d"), py::arg("label"));

  m.def("oracle", [](const std::string& t, int d, const std::string& text, std::uint64_t budget) {
    const auto l = label_of(t, d, text);
    OracleOptions o;
    o.budget = budget;
    py::dict out;
    out["degree"] = to_py(degree_from_oracle(l, o));
    out["k"] = k_from_definition(l, o);
    out["g"] = g_from_definition(l, o);
    const auto v = eval_char(l, w0_element(l.type, d, l.n()), o);
    auto r = v.as_rational();
    out["w0_value"] = r ? to_py(*r) : py::object(py::str(v.str()));
    return out;
  }, py::arg("type"), py::arg("d"), py::arg("label"), py::arg("budget") = kDefaultBudget,
     "brute-force values; w0_value is the ambient or parent value for Astar and split D labels");

  m.def("specialize", [](const std::string& t, int d, const std::string& text, const std::string& q, int digits) {
    const auto l = label_of(t, d, text);
    const auto v = hecke_value_at_Tw0(l);
    if (!v) return py::object(py::none());
    const auto s = specialize(*v, parse_rational(q), digits);
    return py::object(py::make_tuple(s.re, s.im));
  }, py::arg("type"), py::arg("d"), py::arg("label"), py::arg("q"), py::arg("digits") = 30);

  m.def("verify", &verify_py, py::arg("type"), py::arg("d"), py::arg("max_n"),
        py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1);

  m.def("astar_two_classes", [](int d, int n) {
    const auto r = astar_w0_torus_classes(d, n);
    return py::make_tuple(r.classes, r.separated_by_square_det);
  }, py::arg("d"), py::arg("n"));

  m.def("mn_value", [](std::vector<int> la, std::vector<int> ct) {
    return to_py(mn_value(Partition(std::move(la)), Partition(std::move(ct))));
  }, py::arg("partition"), py::arg("cycle_type"));
  m.def("dim_specht", [](std::vector<int> la) { return to_py(dim_specht(Partition(std::move(la)))); });
}
