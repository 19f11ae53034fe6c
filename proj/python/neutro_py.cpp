#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "neutro/connectives.hpp"
#include "neutro/dempster.hpp"
#include "neutro/errors.hpp"
#include "neutro/eval.hpp"
#include "neutro/expr.hpp"
#include "neutro/probability.hpp"
#include "neutro/value.hpp"

namespace py = pybind11;
using namespace neutro;

namespace {

eval_config make_config(const std::string& family,
                        const std::string& normalization,
                        const std::string& negation) {
  eval_config cfg;
  if (family == "algebraic")
    cfg.family = eval_family::algebraic_sets;
  else if (family == "product-tif")
    cfg.family = eval_family::product_tif;
  else if (family == "product-itf")
    cfg.family = eval_family::product_itf;
  else if (family == "minmax")
    cfg.family = eval_family::minmax;
  else
    throw eval_error("unknown family '" + family + "'");

  if (normalization == "none")
    cfg.normalization = normalization_mode::none;
  else if (normalization == "sum")
    cfg.normalization = normalization_mode::sum_to_one;
  else if (normalization == "product")
    cfg.normalization = normalization_mode::vector_norm_product;
  else if (normalization == "average")
    cfg.normalization = normalization_mode::vector_norm_average;
  else
    throw eval_error("unknown normalization '" + normalization + "'");

  if (negation == "complement")
    cfg.negation = negation_variant::complement;
  else if (negation == "swap")
    cfg.negation = negation_variant::swap;
  else
    throw eval_error("unknown negation '" + negation + "'");
  return cfg;
}

component_order order_from(const std::string& name) {
  if (name == "TIF")
    return component_order::tif;
  if (name == "ITF")
    return component_order::itf;
  if (name == "FIT")
    return component_order::fit;
  if (name == "FTI")
    return component_order::fti;
  throw eval_error("unknown component order '" + name + "'");
}

std::vector<std::string> classify_strings(const neutrosophic_value& v) {
  std::vector<std::string> out;
  for (regime_label l : classify(v))
    out.push_back(to_string(l));
  return out;
}

mass_function mass_from_dict(const std::vector<std::string>& frame,
                             const py::dict& masses) {
  std::map<hypothesis_set, double> m;
  for (const auto& item : masses) {
    hypothesis_set subset;
    for (const auto& h : item.first.cast<py::iterable>())
      subset.insert(h.cast<std::string>());
    m.emplace(std::move(subset), item.second.cast<double>());
  }
  return mass_function(frame, std::move(m));
}

} // namespace

PYBIND11_MODULE(_neutro, m) {
  m.doc() = "subset-valued neutrosophic logic core";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<eval_error>(m, "EvalError", PyExc_ValueError);

  py::class_<subunitary_set>(m, "SubunitarySet")
      .def(py::init(&parse_set), py::arg("text"))
      .def_static("point", &subunitary_set::point)
      .def_static("interval",
                  [](double lo, double hi) { return subunitary_set(lo, hi); })
      .def_property_readonly("inf", &subunitary_set::inf)
      .def_property_readonly("sup", &subunitary_set::sup)
      .def("is_point", &subunitary_set::is_point)
      .def("contains", &subunitary_set::contains, py::arg("x"),
           py::arg("tol") = 0.0)
      .def("oplus", &oplus)
      .def("ominus", &ominus)
      .def("odot", &odot)
      .def("oslash", &oslash)
      .def("clamp_unit", &clamp_unit)
      .def("__eq__", [](const subunitary_set& a,
                        const subunitary_set& b) { return a == b; })
      .def("__str__", &format_set)
      .def("__repr__", [](const subunitary_set& s) {
        return "SubunitarySet('" + format_set(s) + "')";
      });

  py::class_<neutrosophic_value>(m, "NeutrosophicValue")
      .def(py::init(&parse_value), py::arg("text"))
      .def(py::init([](double t, double i, double f) {
             return make_crisp(t, i, f);
           }),
           py::arg("t"), py::arg("i"), py::arg("f"))
      .def(py::init([](const subunitary_set& t, const subunitary_set& i,
                       const subunitary_set& f) {
             return neutrosophic_value{t, i, f};
           }),
           py::arg("truth"), py::arg("indet"), py::arg("falsity"))
      .def_readonly("truth", &neutrosophic_value::truth)
      .def_readonly("indet", &neutrosophic_value::indet)
      .def_readonly("falsity", &neutrosophic_value::falsity)
      .def("is_crisp", &neutrosophic_value::is_crisp)
      .def("sup_sum", [](const neutrosophic_value& v) { return sup_sum(v); })
      .def("inf_sum", [](const neutrosophic_value& v) { return inf_sum(v); })
      .def("vector_norm",
           [](const neutrosophic_value& v) { return vector_norm(v); })
      .def("classify", &classify_strings)
      .def("__eq__", [](const neutrosophic_value& a,
                        const neutrosophic_value& b) { return a == b; })
      .def("__str__", &format_value)
      .def("__repr__", [](const neutrosophic_value& v) {
        return "NeutrosophicValue('" + format_value(v) + "')";
      });

  m.def("compare", [](const neutrosophic_value& x, const neutrosophic_value& y) {
    const auto c = compare_values(x, y);
    if (c == std::partial_ordering::less)
      return "less";
    if (c == std::partial_ordering::greater)
      return "greater";
    if (c == std::partial_ordering::equivalent)
      return "equal";
    return "incomparable";
  });
  m.def("normalize",
        [](const neutrosophic_value& v, const std::string& mode,
           std::optional<double> target) {
          normalization_mode nm = normalization_mode::none;
          if (mode == "sum")
            nm = normalization_mode::sum_to_one;
          else if (mode == "product")
            nm = normalization_mode::vector_norm_product;
          else if (mode == "average")
            nm = normalization_mode::vector_norm_average;
          else if (mode != "none")
            throw eval_error("unknown normalization '" + mode + "'");
          return normalize(v, nm, target);
        },
        py::arg("value"), py::arg("mode"), py::arg("target") = std::nullopt);
  m.def("possibly_true", &possibly_true);
  m.def("necessarily_true", &necessarily_true);

  m.def("conj_min_max", &conj_min_max);
  m.def("disj_min_max", &disj_min_max);
  m.def("neg_swap", &neg_swap);
  m.def("n_swap", &n_swap);
  m.def("alg_not", &alg_not);
  m.def("alg_and", &alg_and);
  m.def("alg_or_weak", &alg_or_weak);
  m.def("alg_or_strong", &alg_or_strong);
  m.def("alg_implies", &alg_implies);
  m.def("alg_iff", &alg_iff);
  m.def("alg_sheffer", &alg_sheffer);
  m.def("alg_sheffer_literal", &alg_sheffer_literal);
  m.def("alg_peirce", &alg_peirce);
  m.def("conj_product",
        [](const neutrosophic_value& x, const neutrosophic_value& y,
           const std::string& order) {
          return conj_product(order_from(order), x, y);
        },
        py::arg("x"), py::arg("y"), py::arg("order") = "TIF");
  m.def("disj_product",
        [](const neutrosophic_value& x, const neutrosophic_value& y,
           const std::string& order) {
          return disj_product(order_from(order), x, y);
        },
        py::arg("x"), py::arg("y"), py::arg("order") = "FIT");
  m.def("conj3_product", &conj3_product);
  m.def("disj3_product", &disj3_product);
  m.def("nnorm", [](const std::string& family, double x, double y) {
    const norm_family f = family == "algebraic" ? norm_family::algebraic
                          : family == "bounded" ? norm_family::bounded
                                                : norm_family::minmax;
    return nnorm(f, x, y);
  });
  m.def("nconorm", [](const std::string& family, double x, double y) {
    const norm_family f = family == "algebraic" ? norm_family::algebraic
                          : family == "bounded" ? norm_family::bounded
                                                : norm_family::minmax;
    return nconorm(f, x, y);
  });

  py::class_<mass_function>(m, "MassFunction")
      .def(py::init(&mass_from_dict), py::arg("frame"), py::arg("masses"))
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return load_mass_file(in, "<text>");
                  })
      .def_property_readonly("frame", &mass_function::frame)
      .def("mass",
           [](const mass_function& m, const std::vector<std::string>& subset) {
             return m.mass(hypothesis_set(subset.begin(), subset.end()));
           })
      .def("combine", &dempster_combine)
      .def("conflict", &conflict)
      .def("belief_plausibility",
           [](const mass_function& m, const std::vector<std::string>& h) {
             const auto bp =
                 belief_plausibility(m, hypothesis_set(h.begin(), h.end()));
             return py::make_tuple(bp.belief, bp.plausibility);
           })
      .def("to_neutrosophic",
           [](const mass_function& m, const std::vector<std::string>& h) {
             return to_neutrosophic(m, hypothesis_set(h.begin(), h.end()));
           });
  m.def("increment_jump", &increment_jump);

  m.def("parse_format", [](const std::string& text) {
    return format_expr(parse_expr(text));
  });
  m.def("evaluate",
        [](const std::string& expr_text,
           const std::map<std::string, neutrosophic_value>& env,
           const std::string& family, const std::string& normalization,
           const std::string& negation) {
          return evaluate(parse_expr(expr_text), env,
                          make_config(family, normalization, negation));
        },
        py::arg("expr"), py::arg("bindings"), py::arg("family") = "algebraic",
        py::arg("normalization") = "none", py::arg("negation") = "complement");
}
