#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "neutro/connectives.hpp"
#include "neutro/expr.hpp"
#include "neutro/probability.hpp"
#include "neutro/value.hpp"

namespace neutro {

/// Which connective suite the evaluator dispatches to.
enum class eval_family {
  algebraic_sets, // full eight-connective suite on subset components
  product_tif,    // crisp product connectives, order T < I < F (disj F < I < T)
  product_itf,    // crisp product connectives, order I < T < F (disj F < T < I)
  minmax,         // interval min/max connectives
};

struct eval_config {
  eval_family family = eval_family::algebraic_sets;
  normalization_mode normalization = normalization_mode::none;
  negation_variant negation = negation_variant::complement;
};

using bindings = std::map<std::string, neutrosophic_value>;

/// Bottom-up evaluation over bound atoms; normalization, when configured,
/// is applied after each binary operation (crisp results required).
neutrosophic_value evaluate(const expr_ptr& e, const bindings& env,
                            const eval_config& cfg = {});

/// Lines `name = (T; I; F)`, `#` comments; duplicate atoms are an error.
bindings load_bindings(std::istream& in,
                       const std::string& name = "<bindings>");

} // namespace neutro
