#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>

#include "neutro/monad.hpp"
#include "neutro/subunitary.hpp"

namespace neutro {

/// The truth object of the whole system: a (T, I, F) triple of subunitary
/// sets for truth, indeterminacy and falsity.
struct neutrosophic_value {
  subunitary_set truth;
  subunitary_set indet;
  subunitary_set falsity;

  bool is_crisp() const {
    return truth.is_point() && indet.is_point() && falsity.is_point();
  }

  bool operator==(const neutrosophic_value&) const = default;
};

neutrosophic_value make_crisp(double t, double i, double f);

double sup_sum(const neutrosophic_value& v);
double inf_sum(const neutrosophic_value& v);

/// T+I+F for a crisp triple; throws eval_error otherwise.
double vector_norm(const neutrosophic_value& v);

/// x <= y iff inf/sup of T rise while inf/sup of I and F fall; `less`/
/// `greater`/`equivalent` when one direction holds, `unordered` otherwise.
std::partial_ordering compare_values(const neutrosophic_value& x,
                                     const neutrosophic_value& y);

enum class normalization_mode {
  none,
  sum_to_one,
  vector_norm_product,
  vector_norm_average,
};

/// Rescale a crisp triple so its vector norm becomes S: S = 1 for
/// sum_to_one, S = target for the product/average modes (the connective
/// layer supplies the target).  Throws eval_error on norm 0 or non-crisp
/// input when mode != none.
neutrosophic_value normalize(const neutrosophic_value& v,
                             normalization_mode mode,
                             std::optional<double> target = std::nullopt);

enum class regime_label {
  boolean_,
  fuzzy,
  intuitionistic,
  paraconsistent,
  paradoxist,
  pseudo_paradoxist,
  dialetheist,
  tautological,
  nihilist,
  trivialist_compatible,
  faillibilist,
  overtrue,
  overindeterminate,
  overfalse,
  undertrue,
  underindeterminate,
  underfalse,
  general_neutrosophic,
};

std::string to_string(regime_label label);

/// Optional non-standard markers riding along a triple; used to flag
/// absolute (all-worlds) truth values like 1+ that the numeric components
/// cannot carry.
struct monad_markers {
  std::optional<monad_value> truth;
  std::optional<monad_value> indet;
  std::optional<monad_value> falsity;
};

/// Every regime label whose condition holds; never empty (the
/// general_neutrosophic catch-all applies when nothing else does).
std::set<regime_label> classify(const neutrosophic_value& v,
                                const monad_markers* markers = nullptr);

/// inf T > 0 -- the literal predicate reading of the diamond operator.
bool possibly_true(const neutrosophic_value& v);
/// not (possibly true of the T/F-swapped value), i.e. []A = !<>!A.
bool necessarily_true(const neutrosophic_value& v);

/// `(Tset; Iset; Fset)` using the subunitary-set syntax.
neutrosophic_value parse_value(const std::string& text);
std::string format_value(const neutrosophic_value& v);

/// Triple whose components may additionally be monad-marked points
/// (`1+`, `0-`, `0.5-+`); classifier input only.
struct marked_value {
  neutrosophic_value value;
  monad_markers markers;
};
marked_value parse_marked_value(const std::string& text);

} // namespace neutro
