#include "neutro/value.hpp"

#include <cctype>
#include <cmath>

#include "neutro/errors.hpp"

namespace neutro {

neutrosophic_value make_crisp(double t, double i, double f) {
  return {subunitary_set(t), subunitary_set(i), subunitary_set(f)};
}

double sup_sum(const neutrosophic_value& v) {
  return v.truth.sup() + v.indet.sup() + v.falsity.sup();
}

double inf_sum(const neutrosophic_value& v) {
  return v.truth.inf() + v.indet.inf() + v.falsity.inf();
}

double vector_norm(const neutrosophic_value& v) {
  if (!v.is_crisp())
    throw eval_error("vector norm requires a crisp triple");
  return v.truth.value() + v.indet.value() + v.falsity.value();
}

std::partial_ordering compare_values(const neutrosophic_value& x,
                                     const neutrosophic_value& y) {
  const bool le = x.truth.inf() <= y.truth.inf() &&
                  x.truth.sup() <= y.truth.sup() &&
                  x.indet.inf() >= y.indet.inf() &&
                  x.indet.sup() >= y.indet.sup() &&
                  x.falsity.inf() >= y.falsity.inf() &&
                  x.falsity.sup() >= y.falsity.sup();
  const bool ge = y.truth.inf() <= x.truth.inf() &&
                  y.truth.sup() <= x.truth.sup() &&
                  y.indet.inf() >= x.indet.inf() &&
                  y.indet.sup() >= x.indet.sup() &&
                  y.falsity.inf() >= x.falsity.inf() &&
                  y.falsity.sup() >= x.falsity.sup();
  if (le && ge)
    return std::partial_ordering::equivalent;
  if (le)
    return std::partial_ordering::less;
  if (ge)
    return std::partial_ordering::greater;
  return std::partial_ordering::unordered;
}

neutrosophic_value normalize(const neutrosophic_value& v,
                             normalization_mode mode,
                             std::optional<double> target) {
  if (mode == normalization_mode::none)
    return v;
  const double norm = vector_norm(v);
  if (norm == 0.0)
    throw eval_error("cannot normalize a triple with vector norm 0");
  double s = 1.0;
  if (mode != normalization_mode::sum_to_one) {
    if (!target)
      throw eval_error("normalization mode requires a target norm");
    s = *target;
  }
  const double scale = s / norm;
  return make_crisp(v.truth.value() * scale, v.indet.value() * scale,
                    v.falsity.value() * scale);
}

std::string to_string(regime_label label) {
  switch (label) {
  case regime_label::boolean_: return "boolean";
  case regime_label::fuzzy: return "fuzzy";
  case regime_label::intuitionistic: return "intuitionistic";
  case regime_label::paraconsistent: return "paraconsistent";
  case regime_label::paradoxist: return "paradoxist";
  case regime_label::pseudo_paradoxist: return "pseudo-paradoxist";
  case regime_label::dialetheist: return "dialetheist";
  case regime_label::tautological: return "tautological";
  case regime_label::nihilist: return "nihilist";
  case regime_label::trivialist_compatible: return "trivialist-compatible";
  case regime_label::faillibilist: return "faillibilist";
  case regime_label::overtrue: return "overtrue";
  case regime_label::overindeterminate: return "overindeterminate";
  case regime_label::overfalse: return "overfalse";
  case regime_label::undertrue: return "undertrue";
  case regime_label::underindeterminate: return "underindeterminate";
  case regime_label::underfalse: return "underfalse";
  case regime_label::general_neutrosophic: return "general-neutrosophic";
  }
  return "?";
}

namespace {

bool marker_is(const std::optional<monad_value>& m, double standard,
               monad_kind kind) {
  return m && m->standard == standard && m->kind == kind;
}

} // namespace

std::set<regime_label> classify(const neutrosophic_value& v,
                                const monad_markers* markers) {
  std::set<regime_label> out;
  const subunitary_set &T = v.truth, &I = v.indet, &F = v.falsity;
  const double nsup = sup_sum(v);

  const bool t_is_one = T.is_point() && T.value() == 1.0;
  const bool f_is_one = F.is_point() && F.value() == 1.0;

  if (v.is_crisp()) {
    const double t = T.value(), i = I.value(), f = F.value();
    if (i == 0.0 && std::fabs(t + f - 1.0) <= 1e-12 && t >= 0.0 && t <= 1.0) {
      out.insert(regime_label::fuzzy);
      if (t == 0.0 || t == 1.0)
        out.insert(regime_label::boolean_);
    }
  }
  if (nsup < 1.0)
    out.insert(regime_label::intuitionistic);
  if (nsup > 1.0 && T.sup() <= 1.0 && I.sup() <= 1.0 && F.sup() <= 1.0)
    out.insert(regime_label::paraconsistent);
  if (t_is_one && f_is_one) {
    out.insert(regime_label::paradoxist);
    out.insert(regime_label::dialetheist);
    out.insert(regime_label::trivialist_compatible);
  }
  if (I.inf() > 0.0 &&
      ((t_is_one && F.inf() > 0.0 && F.sup() < 1.0) ||
       (f_is_one && T.inf() > 0.0 && T.sup() < 1.0)))
    out.insert(regime_label::pseudo_paradoxist);
  if (I.inf() > 0.0)
    out.insert(regime_label::faillibilist);

  const bool marker_taut =
      markers && marker_is(markers->truth, 1.0, monad_kind::right) &&
      marker_is(markers->falsity, 0.0, monad_kind::left);
  if (marker_taut || (T.inf() > 1.0 && I.sup() < 0.0 && F.sup() < 0.0))
    out.insert(regime_label::tautological);

  const bool marker_nihil =
      markers && marker_is(markers->falsity, 1.0, monad_kind::right) &&
      marker_is(markers->truth, 0.0, monad_kind::left);
  if (marker_nihil || (F.inf() > 1.0 && T.sup() < 0.0))
    out.insert(regime_label::nihilist);

  if (T.sup() > 1.0)
    out.insert(regime_label::overtrue);
  if (I.sup() > 1.0)
    out.insert(regime_label::overindeterminate);
  if (F.sup() > 1.0)
    out.insert(regime_label::overfalse);
  if (T.inf() < 0.0)
    out.insert(regime_label::undertrue);
  if (I.inf() < 0.0)
    out.insert(regime_label::underindeterminate);
  if (F.inf() < 0.0)
    out.insert(regime_label::underfalse);

  if (out.empty())
    out.insert(regime_label::general_neutrosophic);
  return out;
}

bool possibly_true(const neutrosophic_value& v) { return v.truth.inf() > 0.0; }

bool necessarily_true(const neutrosophic_value& v) {
  const neutrosophic_value swapped{v.falsity, v.indet, v.truth};
  return !possibly_true(swapped);
}

namespace {

std::vector<std::string> split_triple(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos >= text.size() || text[pos] != '(')
    throw parse_error("triple must start with '('", 0,
                      static_cast<int>(pos) + 1);
  std::size_t end = text.find_last_of(')');
  if (end == std::string::npos)
    throw parse_error("triple missing ')'");
  for (std::size_t i = end + 1; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("trailing input after triple");
  const std::string inner = text.substr(pos + 1, end - pos - 1);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ';') {
      parts.push_back(inner.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3)
    throw parse_error("triple must have three ';'-separated components");
  return parts;
}

bool looks_marked(const std::string& part, monad_value& out) {
  std::string trimmed;
  for (char c : part)
    if (!std::isspace(static_cast<unsigned char>(c)))
      trimmed += c;
  if (trimmed.empty())
    return false;
  const char last = trimmed.back();
  if (last != '+' && last != '-')
    return false;
  try {
    out = parse_monad(trimmed);
    return out.kind != monad_kind::plain;
  } catch (const parse_error&) {
    return false;
  }
}

} // namespace

neutrosophic_value parse_value(const std::string& text) {
  const auto parts = split_triple(text);
  return {parse_set(parts[0]), parse_set(parts[1]), parse_set(parts[2])};
}

std::string format_value(const neutrosophic_value& v) {
  return "(" + format_set(v.truth) + "; " + format_set(v.indet) + "; " +
         format_set(v.falsity) + ")";
}

marked_value parse_marked_value(const std::string& text) {
  const auto parts = split_triple(text);
  marked_value out{{subunitary_set(0.0), subunitary_set(0.0), subunitary_set(0.0)},
                   {}};
  subunitary_set* sets[3] = {&out.value.truth, &out.value.indet,
                             &out.value.falsity};
  std::optional<monad_value>* marks[3] = {&out.markers.truth,
                                          &out.markers.indet,
                                          &out.markers.falsity};
  for (int c = 0; c < 3; ++c) {
    monad_value m;
    if (looks_marked(parts[c], m)) {
      *sets[c] = subunitary_set(m.standard);
      *marks[c] = m;
    } else {
      *sets[c] = parse_set(parts[c]);
    }
  }
  return out;
}

} // namespace neutro
