#include "neutro/probability.hpp"

#include <cmath>

#include "neutro/errors.hpp"

namespace neutro {

namespace {

template <typename F>
event_probability componentwise(F&& f, const event_probability& p,
                                const event_probability& q) {
  return {{f(p.value.truth, q.value.truth), f(p.value.indet, q.value.indet),
           f(p.value.falsity, q.value.falsity)}};
}

} // namespace

event_probability box_plus(const event_probability& p,
                           const event_probability& q) {
  return componentwise([](const auto& a, const auto& b) { return oplus(a, b); },
                       p, q);
}

event_probability box_minus(const event_probability& p,
                            const event_probability& q) {
  return componentwise(
      [](const auto& a, const auto& b) { return ominus(a, b); }, p, q);
}

event_probability box_times(const event_probability& p,
                            const event_probability& q) {
  return componentwise([](const auto& a, const auto& b) { return odot(a, b); },
                       p, q);
}

event_probability np_and(const event_probability& p,
                         const event_probability& q) {
  return box_times(p, q);
}

event_probability np_or(const event_probability& p,
                        const event_probability& q) {
  return box_minus(box_plus(p, q), box_times(p, q));
}

event_probability np_not(const event_probability& p,
                         negation_variant variant) {
  if (variant == negation_variant::swap)
    return {{p.value.falsity, p.value.indet, p.value.truth}};
  const event_probability ones{make_crisp(1, 1, 1)};
  return box_minus(ones, p);
}

std::string to_string(event_label label) {
  switch (label) {
  case event_label::impossible: return "impossible";
  case event_label::sure: return "sure";
  case event_label::totally_indeterminate: return "totally-indeterminate";
  case event_label::absolute_impossible: return "absolute-impossible";
  case event_label::absolute_sure: return "absolute-sure";
  case event_label::absolute_indeterminate: return "absolute-indeterminate";
  }
  return "?";
}

event_classification classify_event(const event_probability& p,
                                    const monad_markers* markers) {
  event_classification out;
  const auto& v = p.value;
  const bool impossible = v.truth.sup() <= 0.0 && v.falsity.inf() >= 1.0;
  const bool sure = v.truth.inf() >= 1.0 && v.falsity.sup() <= 0.0;
  const bool indet = v.indet.inf() >= 1.0;
  if (impossible)
    out.events.push_back(event_label::impossible);
  if (sure)
    out.events.push_back(event_label::sure);
  if (indet)
    out.events.push_back(event_label::totally_indeterminate);
  if (markers) {
    auto is = [](const std::optional<monad_value>& m, double s, monad_kind k) {
      return m && m->standard == s && m->kind == k;
    };
    if (sure && is(markers->truth, 1.0, monad_kind::right))
      out.events.push_back(event_label::absolute_sure);
    if (impossible && is(markers->falsity, 1.0, monad_kind::right))
      out.events.push_back(event_label::absolute_impossible);
    if (indet && is(markers->indet, 1.0, monad_kind::right))
      out.events.push_back(event_label::absolute_indeterminate);
  }
  out.regimes = classify(v, markers);
  return out;
}

bool exceeds_max_sum(const event_probability& p) {
  return sup_sum(p.value) > 3.0;
}

std::string to_string(additivity_label label) {
  switch (label) {
  case additivity_label::additive: return "additive";
  case additivity_label::sub_additive: return "sub-additive";
  case additivity_label::super_additive: return "super-additive";
  case additivity_label::mixed: return "mixed";
  }
  return "?";
}

additivity_label additivity(const event_probability& a,
                            const event_probability& b,
                            const event_probability& a_or_b) {
  if (!a.value.truth.is_point() || !b.value.truth.is_point() ||
      !a_or_b.value.truth.is_point())
    throw eval_error("additivity comparison requires crisp truth components");
  const double lhs = a_or_b.value.truth.value();
  const double rhs = a.value.truth.value() + b.value.truth.value();
  if (std::fabs(lhs - rhs) <= 1e-12)
    return additivity_label::additive;
  return lhs < rhs ? additivity_label::sub_additive
                   : additivity_label::super_additive;
}

subunitary_set imprecise_projection(const event_probability& p) {
  return p.value.truth;
}

} // namespace neutro
