#pragma once

#include <compare>
#include <string>

namespace neutro {

/// Kind of a symbolic hyper-real: plain real, left monad a-, right monad a+,
/// or two-sided binad a-+.  The infinitesimal is never materialized.
enum class monad_kind { plain, left, right, binad };

/// Symbolic non-standard real: a standard part plus a monad kind.
struct monad_value {
  double standard = 0.0;
  monad_kind kind = monad_kind::plain;

  bool operator==(const monad_value&) const = default;
};

/// Standard parts add; kinds combine: plain is absorbed, equal monads absorb
/// themselves, left+right and anything involving a binad give a binad.
monad_value ns_add(const monad_value& x, const monad_value& y);

/// Standard part negates; left and right mirror, plain and binad are fixed.
monad_value ns_negate(const monad_value& x);

inline monad_value ns_sub(const monad_value& x, const monad_value& y) {
  return ns_add(x, ns_negate(y));
}

/// Order by standard part; at equal standard parts left < plain < right,
/// while a binad is unordered against the other kinds.
std::partial_ordering ns_compare(const monad_value& x, const monad_value& y);

/// `0.5-` (left), `0.5+` (right), `0.5-+` (binad), `0.5` (plain).
monad_value parse_monad(const std::string& text);
std::string format_monad(const monad_value& v);

} // namespace neutro
