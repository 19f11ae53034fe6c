#include "neutro/monad.hpp"

#include <cstdio>
#include <stdexcept>

#include "neutro/errors.hpp"

namespace neutro {

monad_value ns_add(const monad_value& x, const monad_value& y) {
  monad_kind k;
  if (x.kind == monad_kind::plain)
    k = y.kind;
  else if (y.kind == monad_kind::plain)
    k = x.kind;
  else if (x.kind == y.kind && x.kind != monad_kind::binad)
    k = x.kind; // monads of one side absorb themselves
  else
    k = monad_kind::binad; // left+right, or any binad involvement
  return {x.standard + y.standard, k};
}

monad_value ns_negate(const monad_value& x) {
  monad_kind k = x.kind;
  if (x.kind == monad_kind::left)
    k = monad_kind::right;
  else if (x.kind == monad_kind::right)
    k = monad_kind::left;
  return {-x.standard, k};
}

std::partial_ordering ns_compare(const monad_value& x, const monad_value& y) {
  if (x.standard < y.standard)
    return std::partial_ordering::less;
  if (x.standard > y.standard)
    return std::partial_ordering::greater;
  if (x.kind == monad_kind::binad || y.kind == monad_kind::binad) {
    return x.kind == y.kind ? std::partial_ordering::equivalent
                            : std::partial_ordering::unordered;
  }
  auto rank = [](monad_kind k) {
    return k == monad_kind::left ? -1 : k == monad_kind::right ? 1 : 0;
  };
  const int rx = rank(x.kind), ry = rank(y.kind);
  if (rx < ry)
    return std::partial_ordering::less;
  if (rx > ry)
    return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

monad_value parse_monad(const std::string& text) {
  std::size_t end = text.size();
  monad_kind kind = monad_kind::plain;
  if (end >= 2 && text.compare(end - 2, 2, "-+") == 0) {
    kind = monad_kind::binad;
    end -= 2;
  } else if (end >= 1 && text[end - 1] == '-') {
    kind = monad_kind::left;
    end -= 1;
  } else if (end >= 1 && text[end - 1] == '+') {
    kind = monad_kind::right;
    end -= 1;
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(text.substr(0, end), &used);
    if (used != end)
      throw parse_error("bad monad literal: " + text);
    return {v, kind};
  } catch (const std::invalid_argument&) {
    throw parse_error("bad monad literal: " + text);
  }
}

std::string format_monad(const monad_value& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v.standard);
  std::string out = buf;
  switch (v.kind) {
  case monad_kind::plain:
    break;
  case monad_kind::left:
    out += '-';
    break;
  case monad_kind::right:
    out += '+';
    break;
  case monad_kind::binad:
    out += "-+";
    break;
  }
  return out;
}

} // namespace neutro
