#pragma once

#include <set>
#include <string>
#include <vector>

#include "neutro/value.hpp"

namespace neutro {

/// Neutrosophic probability of an event: T = chance it occurs, I =
/// indeterminate chance, F = chance it does not occur.
struct event_probability {
  neutrosophic_value value;

  bool operator==(const event_probability&) const = default;
};

/// Componentwise set addition / subtraction / multiplication.
event_probability box_plus(const event_probability& p,
                           const event_probability& q);
event_probability box_minus(const event_probability& p,
                            const event_probability& q);
event_probability box_times(const event_probability& p,
                            const event_probability& q);

/// NP(A and B) = NP(A) boxtimes NP(B).
event_probability np_and(const event_probability& p,
                         const event_probability& q);
/// NP(A or B) = NP(A) boxplus NP(B) boxminus NP(A) boxtimes NP(B).
event_probability np_or(const event_probability& p,
                        const event_probability& q);

enum class negation_variant { complement, swap };

/// complement: {1} boxminus NP(A); swap: (F, I, T).
event_probability np_not(const event_probability& p,
                         negation_variant variant = negation_variant::complement);

enum class event_label {
  impossible,
  sure,
  totally_indeterminate,
  absolute_impossible,
  absolute_sure,
  absolute_indeterminate,
};
std::string to_string(event_label label);

struct event_classification {
  std::vector<event_label> events;
  std::set<regime_label> regimes;
};

event_classification classify_event(const event_probability& p,
                                    const monad_markers* markers = nullptr);

/// True when sup T + sup I + sup F exceeds 3 (allowed, but worth flagging).
bool exceeds_max_sum(const event_probability& p);

enum class additivity_label { additive, sub_additive, super_additive, mixed };
std::string to_string(additivity_label label);

/// Compares t(A or B) against t(A) + t(B); crisp truth components required.
additivity_label additivity(const event_probability& a,
                            const event_probability& b,
                            const event_probability& a_or_b);

/// Imprecise-probability reduction: the truth subset with I dropped and F
/// ignored.
subunitary_set imprecise_projection(const event_probability& p);

} // namespace neutro
